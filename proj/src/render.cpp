#include "spg/render.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace spg {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Points: nodes first, then two subdivision points per arc (near end 0, near end 1), then
// one hidden point per face tied to its whole boundary so parallel paths do not coincide.
std::vector<Eigen::Vector2d> tutte_layout(const Diagram& d, const std::vector<int>& arcs,
                                          const std::map<int, std::size_t>& arc_index, double radius) {
  const std::size_t n = d.nodes().size();
  const auto fs = faces(d);
  const std::size_t total = n + 2 * arcs.size() + fs.size();
  auto sub = [&](ArcEnd e) { return n + 2 * arc_index.at(e.arc) + static_cast<std::size_t>(e.end); };

  std::vector<std::vector<std::size_t>> adj(total);
  auto link = [&adj](std::size_t x, std::size_t y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  for (int a : arcs) {
    const ArcEnd e0{a, 0}, e1{a, 1};
    link(d.where(e0).node, sub(e0));
    link(sub(e0), sub(e1));
    link(sub(e1), d.where(e1).node);
  }

  std::vector<Eigen::Vector2d> pos(total, Eigen::Vector2d::Zero());
  if (arcs.empty()) return pos;

  std::size_t outer = 0;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i].boundary.size() > fs[outer].boundary.size()) outer = i;
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::size_t centre = n + 2 * arcs.size() + i;
    if (i == outer) continue;
    for (const auto& h : fs[i].boundary) {
      link(centre, d.where(h).node);
      link(centre, sub(h));
      link(centre, sub(h.other()));
    }
  }
  std::vector<std::size_t> ring;
  std::vector<bool> fixed(total, false);
  fixed[n + 2 * arcs.size() + outer] = true;
  for (const auto& h : fs[outer].boundary) {
    for (std::size_t p : {d.where(h).node, sub(h), sub(h.other())}) {
      if (!fixed[p]) {
        fixed[p] = true;
        ring.push_back(p);
      }
    }
  }
  // the outer face lies to the right of its darts, so the ring runs counterclockwise
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ring.size());
    pos[ring[k]] = radius * Eigen::Vector2d(std::cos(t), std::sin(t));
  }

  std::vector<std::size_t> free_index(total, total);
  std::size_t free_count = 0;
  for (std::size_t p = 0; p < total; ++p) {
    if (!fixed[p]) free_index[p] = free_count++;
  }
  if (free_count == 0) return pos;

  std::vector<Eigen::Triplet<double>> entries;
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(free_count), 2);
  for (std::size_t p = 0; p < total; ++p) {
    if (fixed[p]) continue;
    const auto row = static_cast<Eigen::Index>(free_index[p]);
    entries.emplace_back(row, row, static_cast<double>(adj[p].size()));
    for (std::size_t q : adj[p]) {
      if (fixed[q]) {
        rhs.row(row) += pos[q].transpose();
      } else {
        entries.emplace_back(row, static_cast<Eigen::Index>(free_index[q]), -1.0);
      }
    }
  }
  Eigen::SparseMatrix<double> laplacian(static_cast<Eigen::Index>(free_count),
                                        static_cast<Eigen::Index>(free_count));
  laplacian.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(laplacian);
  if (solver.info() != Eigen::Success) throw std::runtime_error("layout system is singular");
  const Eigen::MatrixXd x = solver.solve(rhs);
  for (std::size_t p = 0; p < total; ++p) {
    if (!fixed[p]) pos[p] = x.row(static_cast<Eigen::Index>(free_index[p])).transpose();
  }
  return pos;
}

}  // namespace

std::string render_svg(const Diagram& d, const RenderOptions& options) {
  if (!validate(d).ok()) throw std::invalid_argument("cannot render an invalid diagram");
  const auto arcs = d.arcs();
  std::map<int, std::size_t> arc_index;
  for (std::size_t i = 0; i < arcs.size(); ++i) arc_index[arcs[i]] = i;
  const double half = options.size / 2.0;
  const auto pos = tutte_layout(d, arcs, arc_index, 0.9 * half);
  const std::size_t n = d.nodes().size();

  // layout is in y-up coordinates; flip so counterclockwise stays counterclockwise on screen
  auto screen = [half](const Eigen::Vector2d& p) { return Eigen::Vector2d(half + p.x(), half - p.y()); };
  auto point = [](std::ostringstream& os, const Eigen::Vector2d& p) { os << p.x() << ',' << p.y(); };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
     << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n"
     << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (int a : arcs) {
    const ArcEnd e0{a, 0}, e1{a, 1};
    const SlotRef s0 = d.where(e0), s1 = d.where(e1);
    std::vector<Eigen::Vector2d> pts = {screen(pos[s0.node]), screen(pos[n + 2 * arc_index[a]]),
                                        screen(pos[n + 2 * arc_index[a] + 1]), screen(pos[s1.node])};
    auto trim = [&options](Eigen::Vector2d& end, const Eigen::Vector2d& toward) {
      const Eigen::Vector2d dir = toward - end;
      const double len = dir.norm();
      if (len > 0) end += dir * (std::min(options.gap, 0.45 * len) / len);
    };
    if (d.node(s0.node).is_crossing() && !d.node(s0.node).slot_is_over(s0.slot)) trim(pts[0], pts[1]);
    if (d.node(s1.node).is_crossing() && !d.node(s1.node).slot_is_over(s1.slot)) trim(pts[3], pts[2]);
    os << "<polyline class=\"arc\" data-arc=\"a" << a << "\" data-from=\"" << escape(d.node(s0.node).id)
       << "\" data-to=\"" << escape(d.node(s1.node).id) << '"';
    if (auto it = d.labels().find(a); it != d.labels().end()) os << " data-label=\"" << escape(it->second) << '"';
    os << " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k > 0) os << ' ';
      point(os, pts[k]);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Node& node = d.node(i);
    const Eigen::Vector2d p = screen(pos[i]);
    os << "<circle class=\"" << (node.is_crossing() ? "crossing" : "vertex") << "\" data-node=\""
       << escape(node.id) << "\" cx=\"" << p.x() << "\" cy=\"" << p.y() << "\" r=\""
       << (node.is_crossing() ? 0.0 : 4.0) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace spg
