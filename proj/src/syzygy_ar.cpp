#include "sbc/syzygy_ar.hpp"

#include "sbc/biserial.hpp"
#include "sbc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sbc {

OrbitCoord orbit_of(const ComoduleLabel& x, int ell) {
  const auto l = localize(x, ell);
  switch (l.family) {
    case Family::simple: return {l.block, 0, l.t};
    case Family::m: return {l.block, (l.t - l.s) / 2, (l.t + l.s) / 2};
    case Family::m_prime: return {l.block, -(l.t - l.s) / 2, (l.t + l.s) / 2};
    case Family::n: return {l.block, (l.t + l.s + 1) / 2, (l.t - l.s - 1) / 2};
    case Family::n_prime: return {l.block, -(l.t + l.s + 1) / 2, (l.t - l.s - 1) / 2};
    default: break;
  }
  throw DomainError(render_label(x) + " is injective and has no orbit coordinate");
}

ComoduleLabel label_of(const OrbitCoord& c, int ell) {
  if (c.n < 0) throw DomainError("orbit coordinate n must be nonnegative");
  if (c.k == 0) return simple_label(vertex_weight(c.block, c.n, ell));
  const int k = std::abs(c.k);
  const bool direct = c.k > 0;
  if (k <= c.n) return string_label(direct ? Family::m : Family::m_prime, c.block, c.n + k, c.n - k, ell);
  return string_label(direct ? Family::n : Family::n_prime, c.block, k + c.n, k - c.n - 1, ell);
}

ComoduleLabel omega_power(const ComoduleLabel& x, int j, int ell) {
  auto c = orbit_of(x, ell);
  c.k -= j;
  return label_of(c, ell);
}

ComoduleLabel omega(const ComoduleLabel& x, int ell) { return omega_power(x, 1, ell); }
ComoduleLabel omega_inv(const ComoduleLabel& x, int ell) { return omega_power(x, -1, ell); }

namespace {

// Solves sum_i c_i A_i = T for the coefficient vector c, where each A_i and T
// are lists of equally shaped matrices.
std::optional<QVector> solve_combination(const std::vector<std::vector<QMatrix>>& a, const std::vector<QMatrix>& target) {
  Eigen::Index rows = 0;
  for (const auto& t : target) rows += t.size();
  QMatrix sys(rows, static_cast<Eigen::Index>(a.size()));
  QVector rhs(rows);
  Eigen::Index at = 0;
  for (std::size_t v = 0; v < target.size(); ++v) {
    const auto& t = target[v];
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      for (Eigen::Index i = 0; i < t.rows(); ++i, ++at) {
        for (std::size_t c = 0; c < a.size(); ++c) sys(at, static_cast<Eigen::Index>(c)) = a[c][v](i, j);
        rhs(at) = t(i, j);
      }
    }
  }
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  return QVector(x->col(0));
}

}  // namespace

Representation omega_inv_oracle(const Representation& m, const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  validate(q, m);
  if (m.is_zero()) return Representation::zero(q);
  const Subspace soc = rep_socle(q, m);

  std::vector<Representation> parts;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const int mult = static_cast<int>(soc.basis[static_cast<std::size_t>(v)].cols());
    if (mult == 0) continue;
    if (b.on_boundary(v)) throw WindowOverflow("socle at boundary vertex " + q.vertex_name(v));
    const auto inj = injective_module(b, v);
    for (int i = 0; i < mult; ++i) parts.push_back(inj);
  }
  const Representation hull = direct_sum(q, parts);
  const Subspace hull_soc = rep_socle(q, hull);

  // An embedding is any homomorphism restricting to an isomorphism of socles.
  const auto basis = hom_basis(q, m, hull);
  std::vector<std::vector<QMatrix>> restricted;
  for (const auto& f : basis) {
    std::vector<QMatrix> r;
    for (int v = 0; v < q.vertex_count(); ++v)
      r.push_back(f[static_cast<std::size_t>(v)] * soc.basis[static_cast<std::size_t>(v)]);
    restricted.push_back(std::move(r));
  }
  const auto c = solve_combination(restricted, hull_soc.basis);
  if (!c) throw DomainError("no embedding into the injective hull; the presentation and module disagree");
  const Homomorphism f = combine(basis, *c);
  return quotient(q, hull, Subspace{f}).rep;
}

Representation omega_oracle(const Representation& m, const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  validate(q, m);
  if (m.is_zero()) return Representation::zero(q);
  const Quotient top = rep_top(q, m);

  // Projective covers of simples: projective injectives with simple top.
  std::map<int, Representation> cover;
  for (int g : projective_injective_vertices(b)) {
    if (b.on_boundary(g)) continue;
    auto inj = injective_module(b, g);
    const auto t = rep_top(q, inj).rep;
    const int h = static_cast<int>(std::find(t.dims.begin(), t.dims.end(), 1) - t.dims.begin());
    cover.emplace(h, std::move(inj));
  }

  std::vector<Representation> parts;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const int mult = top.rep.dims[static_cast<std::size_t>(v)];
    if (mult == 0) continue;
    auto it = cover.find(v);
    if (it == cover.end()) throw WindowOverflow("no projective cover of the simple at " + q.vertex_name(v) + " in the window");
    for (int i = 0; i < mult; ++i) parts.push_back(it->second);
  }
  const Representation p = direct_sum(q, parts);
  const Quotient ptop = rep_top(q, p);

  // A cover is any homomorphism inducing an isomorphism of tops.
  const auto basis = hom_basis(q, p, m);
  std::vector<std::vector<QMatrix>> induced;
  for (const auto& f : basis) {
    std::vector<QMatrix> r;
    for (int v = 0; v < q.vertex_count(); ++v) {
      const auto vi = static_cast<std::size_t>(v);
      r.push_back(top.projection[vi] * f[vi] * ptop.section[vi]);
    }
    induced.push_back(std::move(r));
  }
  std::vector<QMatrix> identity;
  for (int d : top.rep.dims) identity.push_back(QMatrix::Identity(d, d));
  const auto c = solve_combination(induced, identity);
  if (!c) throw DomainError("no projective cover found; the presentation and module disagree");
  const Homomorphism f = combine(basis, *c);

  Subspace kernel;
  for (const auto& fv : f) kernel.basis.push_back(nullspace(fv));
  return restrict(q, p, kernel);
}

AlmostSplitSeq almost_split(const ComoduleLabel& right, int ell) {
  const auto c = orbit_of(right, ell);
  AlmostSplitSeq seq;
  seq.right = right;
  seq.left = label_of({c.block, c.k - 2, c.n}, ell);
  if (c.n >= 1) seq.middle.push_back(label_of({c.block, c.k - 1, c.n - 1}, ell));
  seq.middle.push_back(label_of({c.block, c.k - 1, c.n + 1}, ell));
  if (c.k == 1) seq.middle.push_back(injective_label(vertex_weight(c.block, c.n, ell)));
  return seq;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

ARWindowGraph ar_window(int block, int kmin, int kmax, int nmax, int ell) {
  require_ell(ell);
  vertex_weight(block, 0, ell);
  ARWindowGraph g;
  g.ell = ell;
  g.block = block;

  std::map<std::pair<int, int>, int> at;
  for (int k = kmin; k <= kmax; ++k) {
    for (int n = 0; n <= nmax; ++n) {
      at[{k, n}] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({render_label(label_of({block, k, n}, ell)), k, n, false, 0});
    }
  }
  std::map<int, int> injective_at;
  if (kmin <= 0 && 0 <= kmax) {
    for (int n = 0; n <= nmax; ++n) {
      injective_at[n] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({render_label(injective_label(vertex_weight(block, n, ell))), 0, n, true, 0});
    }
  }

  for (const auto& [kn, from] : at) {
    const auto [k, n] = kn;
    for (int dn : {-1, 1}) {
      auto it = at.find({k + 1, n + dn});
      if (it != at.end()) g.edges.emplace_back(from, it->second);
    }
  }
  for (const auto& [n, i] : injective_at) {
    if (auto it = at.find({-1, n}); it != at.end()) g.edges.emplace_back(it->second, i);
    if (auto it = at.find({1, n}); it != at.end()) g.edges.emplace_back(i, it->second);
  }
  std::sort(g.edges.begin(), g.edges.end());

  UnionFind uf(g.nodes.size());
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::map<int, int> component;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const int root = uf.find(static_cast<int>(i));
    auto [it, inserted] = component.try_emplace(root, static_cast<int>(component.size()));
    g.nodes[i].component = it->second;
  }
  return g;
}

std::string export_dot(const ARWindowGraph& g) {
  std::ostringstream os;
  os << "digraph AR {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    os << "  n" << i << " [label=\"" << n.label << "\", group=\"c" << n.component << "\"";
    if (n.injective) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const ARWindowGraph& g) {
  nlohmann::ordered_json j;
  j["ell"] = g.ell;
  j["block"] = g.block;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes) {
    j["nodes"].push_back({{"label", n.label}, {"k", n.k}, {"n", n.n}, {"injective", n.injective}, {"component", n.component}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j.dump(2) + "\n";
}

ARWindowGraph parse_ar_json(const std::string& text) {
  ARWindowGraph g;
  try {
    const auto j = nlohmann::json::parse(text);
    g.ell = j.at("ell").get<int>();
    g.block = j.at("block").get<int>();
    for (const auto& n : j.at("nodes")) {
      g.nodes.push_back({n.at("label").get<std::string>(), n.at("k").get<int>(), n.at("n").get<int>(),
                         n.at("injective").get<bool>(), n.at("component").get<int>()});
    }
    for (const auto& e : j.at("edges")) {
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      const int count = static_cast<int>(g.nodes.size());
      if (a < 0 || b < 0 || a >= count || b >= count) throw ParseError("edge refers to a missing node");
      g.edges.emplace_back(a, b);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed AR window JSON: ") + e.what());
  }
  return g;
}

}  // namespace sbc
