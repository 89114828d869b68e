#include <doctest.h>

#include <algorithm>
#include <set>

#include "spg/ids.hpp"
#include "spg/multigraph.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace spg;

namespace {

Multigraph theta() { return Multigraph({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "u", "v"}}); }

Multigraph handcuff() { return Multigraph({"u", "v"}, {{"lu", "u", "u"}, {"lv", "v", "v"}, {"uv", "u", "v"}}); }

}  // namespace

TEST_CASE("ids order numbers numerically") {
  CHECK(natural_less("v2", "v10"));
  CHECK_FALSE(natural_less("v10", "v2"));
  CHECK(natural_less("v10", "x1"));
  CHECK(fresh_id("v", IdSet{"v1", "v2", "v4"}) == "v3");
  CHECK(fresh_id("v", IdSet{"x1"}) == "v1");
}

TEST_CASE("multigraph rejects broken incidence") {
  CHECK_THROWS_AS(Multigraph({"u"}, {{"e", "u", "w"}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph({"u", "u"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph({"u"}, {{"e", "u", "u"}, {"e", "u", "u"}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph({"u"}, {{"e", "u", "u"}}, {"e"}), std::invalid_argument);
}

TEST_CASE("degree counts loops twice") {
  const auto g = handcuff();
  CHECK(g.degree("u") == 3);
  CHECK(g.degree("v") == 3);
}

TEST_CASE("components") {
  CHECK(components(Multigraph({"u"}, {})).size() == 1);
  const auto two = components(Multigraph({"u", "v"}, {{"e", "u", "v"}}, {"c"}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].vertices == std::vector<std::string>{"u", "v"});
  CHECK(two[1].circles == std::vector<std::string>{"c"});
  CHECK(components(handcuff()).size() == 1);
}

TEST_CASE("cut points of the standard small graphs") {
  const auto t = cut_points(theta());
  CHECK(t.connected);
  CHECK(t.empty());

  const auto h = cut_points(handcuff());
  CHECK(h.cut_vertices == std::vector<std::string>{"u", "v"});
  CHECK(h.bridge_edges == std::vector<std::string>{"uv"});
  CHECK(h.loops_at_branch_vertices ==
        std::vector<std::pair<std::string, std::string>>{{"u", "lu"}, {"v", "lv"}});
  CHECK(h == spgtest::brute_force_cut_points(handcuff()));

  const auto circle = cut_points(Multigraph({}, {}, {"c"}));
  CHECK(circle.connected);
  CHECK(circle.empty());

  const auto k2 = cut_points(Multigraph({"u", "v"}, {{"e", "u", "v"}}));
  CHECK(k2.bridge_edges == std::vector<std::string>{"e"});
  CHECK(k2.cut_vertices.empty());

  // a lone loop is a circle through a point: nothing separates it
  CHECK(cut_points(Multigraph({"u"}, {{"l", "u", "u"}})).empty());
}

TEST_CASE("base criterion") {
  CHECK(is_base_irreducible(Multigraph({"u"}, {})));
  CHECK(is_base_irreducible(Multigraph({}, {}, {"c"})));
  CHECK(is_base_irreducible(theta()));
  CHECK_FALSE(is_base_irreducible(handcuff()));
  CHECK_FALSE(is_base_irreducible(Multigraph({}, {}, {"a", "b"})));
  CHECK_FALSE(is_base_irreducible(Multigraph{}));

  // last graph of the Borromean chain: four parallel edges between two vertices
  CHECK(is_base_irreducible(Multigraph({"v1", "v2"}, {{"a", "v1", "v2"}, {"b", "v1", "v2"}, {"c", "v1", "v2"},
                                                      {"d", "v1", "v2"}})));
  // C0: three parallel edges
  CHECK(is_base_irreducible(theta()));
}

TEST_CASE("trivial embedding reducibility") {
  // C_n for n > 0 has the handcuff as its abstract graph
  CHECK(trivial_embedding_reducible(handcuff()));
  CHECK_FALSE(trivial_embedding_reducible(theta()));
  CHECK(trivial_embedding_reducible(Multigraph({}, {}, {"a", "b"})));
}

TEST_CASE("abstract contraction examples") {
  const Multigraph two({}, {}, {"A", "B"});
  const auto one = contract_abstract(two, {"A"}, {{"B", 0}});
  CHECK(one.vertices() == std::vector<std::string>{"v1"});
  REQUIRE(one.edges().size() == 1);
  CHECK(one.edges()[0].is_loop());
  CHECK(one.circles().empty());

  const auto isolated = contract_abstract(two, {"A"}, {});
  CHECK(isolated.vertices() == std::vector<std::string>{"v1"});
  CHECK(isolated.edges().empty());
  CHECK(isolated.circles() == std::vector<std::string>{"B"});

  const auto three = contract_abstract(Multigraph({}, {}, {"A", "B", "C"}), {"A"}, {{"B", 0}, {"C", 0}});
  CHECK(three.vertices() == std::vector<std::string>{"v1"});
  CHECK(three.edges().size() == 2);
  for (const auto& e : three.edges()) CHECK(e.is_loop());

  // a punctured edge splits into pieces named by position
  const auto split = contract_abstract(Multigraph({"p", "q"}, {{"e", "p", "q"}}, {"A"}), {"A"}, {{"e", 0}});
  CHECK(split.vertices() == std::vector<std::string>{"p", "q", "v1"});
  REQUIRE(split.edges().size() == 2);
  CHECK(split.find_edge("e/0")->head == "v1");
  CHECK(split.find_edge("e/1")->tail == "v1");
}

TEST_CASE("abstract contraction errors") {
  const auto g = theta();
  CHECK_THROWS_AS(contract_abstract(g, {"e1"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(contract_abstract(g, {"e1", "e2"}, {{"e1", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(contract_abstract(g, {"e1", "e2"}, {{"e3", 0}, {"e3", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(contract_abstract(g, {"zz"}, {}), std::invalid_argument);
  CHECK_NOTHROW(contract_abstract(g, {"e1", "e2"}, {{"e3", 0}}));
}

TEST_CASE("cut points agree with the brute-force oracle on random graphs") {
  spgtest::Rng rng(20261016);
  int with_cuts = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = spgtest::random_multigraph(rng, 7, 12, 2);
    REQUIRE(g.edges().size() <= 12);
    const auto fast = cut_points(g);
    const auto slow = spgtest::brute_force_cut_points(g);
    INFO(summarize(g));
    REQUIRE(fast == slow);
    if (!fast.empty()) ++with_cuts;
    CHECK(is_base_irreducible(g) == (!g.empty() && slow.connected && slow.empty()));
    // revalidating changes nothing
    CHECK(Multigraph(g.vertices(), g.edges(), g.circles()) == g);
  }
  CHECK(with_cuts > 100);
  CHECK(with_cuts < 1000);
}

TEST_CASE("abstract contraction element counts") {
  spgtest::Rng rng(77);
  int done = 0;
  for (int i = 0; i < 600; ++i) {
    const auto g = spgtest::random_multigraph(rng, 5, 9, 2);
    // cycle: a circle, a loop or two parallel edges, whichever is available first
    std::vector<std::string> cycle;
    std::set<std::string> cycle_vertices;
    if (!g.circles().empty()) {
      cycle = {g.circles().front()};
    } else {
      for (std::size_t a = 0; a < g.edges().size() && cycle.empty(); ++a) {
        const auto& e = g.edges()[a];
        if (e.is_loop()) {
          cycle = {e.id};
          cycle_vertices = {e.tail};
          break;
        }
        for (std::size_t b = a + 1; b < g.edges().size(); ++b) {
          const auto& f = g.edges()[b];
          if (!f.is_loop() && std::minmax(e.tail, e.head) == std::minmax(f.tail, f.head)) {
            cycle = {e.id, f.id};
            cycle_vertices = {e.tail, e.head};
            break;
          }
        }
      }
    }
    if (cycle.empty()) continue;
    std::vector<Puncture> punctures;
    std::vector<std::string> others;
    for (const auto& e : g.edges())
      if (std::find(cycle.begin(), cycle.end(), e.id) == cycle.end()) others.push_back(e.id);
    for (const auto& c : g.circles())
      if (std::find(cycle.begin(), cycle.end(), c) == cycle.end()) others.push_back(c);
    for (const auto& id : others) {
      const int k = static_cast<int>(rng() % 3);
      for (int p = 0; p < k; ++p) punctures.push_back({id, p});
    }
    const auto r = contract_abstract(g, cycle, punctures);
    ++done;
    const auto before = g.edges().size() + g.circles().size();
    const auto after = r.edges().size() + r.circles().size();
    // a circle cut at k points becomes k edges, an edge cut at k points k + 1
    std::set<std::string> cut_circles;
    for (const auto& p : punctures)
      if (g.has_circle(p.edge)) cut_circles.insert(p.edge);
    CHECK(after == before - cycle.size() + punctures.size() - cut_circles.size());
    CHECK(r.vertices().size() == g.vertices().size() - cycle_vertices.size() + 1);
    IdSet survivors;
    std::size_t attached = 0;
    for (const auto& v : g.vertices())
      if (!cycle_vertices.contains(v)) survivors.insert(v);
    for (const auto& e : g.edges()) {
      if (std::find(cycle.begin(), cycle.end(), e.id) != cycle.end()) continue;
      attached += cycle_vertices.count(e.tail) + cycle_vertices.count(e.head);
    }
    CHECK(r.degree(fresh_id("v", survivors)) == 2 * punctures.size() + attached);
  }
  CHECK(done > 200);
}
