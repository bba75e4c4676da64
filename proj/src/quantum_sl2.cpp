#include "sbc/quantum_sl2.hpp"

#include "sbc/errors.hpp"

#include <algorithm>

namespace sbc {

void require_ell(int ell) {
  if (ell < 3 || ell % 2 == 0) throw DomainError("ell must be odd and at least 3, got " + std::to_string(ell));
}

namespace {

void require_weight(int r) {
  if (r < 0) throw DomainError("weights are nonnegative, got " + std::to_string(r));
}

void require_block(int block, int ell) {
  if (block < 0 || block > ell - 2)
    throw DomainError("block base must lie in [0, " + std::to_string(ell - 2) + "], got " + std::to_string(block));
}

}  // namespace

WeightParts decompose_weight(int r, int ell) {
  require_ell(ell);
  require_weight(r);
  return {r / ell, r % ell};
}

bool is_steinberg(int r, int ell) { return decompose_weight(r, ell).r0 == ell - 1; }

int tau(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  if (r0 == ell - 1) return r;
  return (r1 + 1) * ell + ell - r0 - 2;
}

int sigma(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  if (r < ell || r0 == ell - 1) throw DomainError("sigma is undefined at " + std::to_string(r));
  return (r1 - 1) * ell + ell - r0 - 2;
}

int vertex_weight(int block, int n, int ell) {
  require_ell(ell);
  require_block(block, ell);
  if (n < 0) throw DomainError("block vertices are nonnegative");
  return n % 2 == 0 ? block + n * ell : ell - block - 2 + n * ell;
}

std::optional<BlockVertex> weight_vertex(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  if (r0 == ell - 1) return std::nullopt;
  // Even vertices carry the base r0, odd ones its reflection ell - r0 - 2.
  if (r1 % 2 == 0) return BlockVertex{r0, r1};
  return BlockVertex{ell - r0 - 2, r1};
}

ComoduleLabel simple_label(int r) {
  require_weight(r);
  return {Family::simple, r, 0, 0, 0};
}

ComoduleLabel weyl_label(int r) {
  require_weight(r);
  return {Family::weyl, r, 0, 0, 0};
}

ComoduleLabel dual_weyl_label(int r) {
  require_weight(r);
  return {Family::dual_weyl, r, 0, 0, 0};
}

ComoduleLabel injective_label(int r) {
  require_weight(r);
  return {Family::injective, r, 0, 0, 0};
}

bool is_string_family(Family f) {
  return f == Family::m || f == Family::m_prime || f == Family::n || f == Family::n_prime;
}

ComoduleLabel string_label(Family f, int block, int t, int s, int ell) {
  require_ell(ell);
  require_block(block, ell);
  if (!is_string_family(f)) throw DomainError("not a string family");
  if (s < 0 || t < s) throw DomainError("string labels need 0 <= s <= t");
  const bool even = (t - s) % 2 == 0;
  if ((f == Family::m || f == Family::m_prime) && !even)
    throw DomainError("M and M' need t - s even, got t=" + std::to_string(t) + ", s=" + std::to_string(s));
  if ((f == Family::n || f == Family::n_prime) && even)
    throw DomainError("N and N' need t - s odd, got t=" + std::to_string(t) + ", s=" + std::to_string(s));
  if (t == s) return simple_label(vertex_weight(block, t, ell));
  return {f, 0, block, t, s};
}

bool is_injective(const ComoduleLabel& x, int ell) {
  if (x.family == Family::injective) return true;
  if (is_string_family(x.family)) return false;
  return is_steinberg(x.weight, ell);
}

std::string render_label(const ComoduleLabel& x) {
  const auto pair = [&](const char* name) {
    return std::string(name) + "(" + std::to_string(x.t) + "," + std::to_string(x.s) + ")@b" + std::to_string(x.block);
  };
  switch (x.family) {
    case Family::simple: return "L(" + std::to_string(x.weight) + ")";
    case Family::weyl: return "V(" + std::to_string(x.weight) + ")";
    case Family::dual_weyl: return "coV(" + std::to_string(x.weight) + ")";
    case Family::injective: return "I(" + std::to_string(x.weight) + ")";
    case Family::m: return pair("M");
    case Family::m_prime: return pair("M'");
    case Family::n: return pair("N");
    case Family::n_prime: return pair("N'");
  }
  return "?";
}

LocalLabel localize(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  if (is_string_family(x.family)) return {x.family, x.block, x.t, x.s};
  const auto bv = weight_vertex(x.weight, ell);
  if (!bv) throw DomainError(render_label(x) + " lies in a Steinberg block");
  switch (x.family) {
    case Family::simple: return {Family::simple, bv->block, bv->vertex, bv->vertex};
    case Family::injective: return {Family::injective, bv->block, bv->vertex, bv->vertex};
    case Family::weyl:
      if (bv->vertex == 0) return {Family::simple, bv->block, 0, 0};
      return {Family::n_prime, bv->block, bv->vertex, bv->vertex - 1};
    case Family::dual_weyl:
      if (bv->vertex == 0) return {Family::simple, bv->block, 0, 0};
      return {Family::n, bv->block, bv->vertex, bv->vertex - 1};
    default: break;
  }
  throw DomainError("unreachable label family");
}

ComoduleLabel globalize(const LocalLabel& x, int ell) {
  switch (x.family) {
    case Family::simple: return simple_label(vertex_weight(x.block, x.t, ell));
    case Family::injective: return injective_label(vertex_weight(x.block, x.t, ell));
    default: return string_label(x.family, x.block, x.t, x.s, ell);
  }
}

std::vector<std::vector<int>> socle_layers(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  const int r = x.weight;
  switch (x.family) {
    case Family::simple: return {{r}};
    case Family::weyl:
    case Family::dual_weyl: {
      if (r < ell || is_steinberg(r, ell)) return {{r}};
      std::vector<std::vector<int>> layers{{sigma(r, ell)}, {r}};
      if (x.family == Family::dual_weyl) std::reverse(layers.begin(), layers.end());
      return layers;
    }
    case Family::injective: {
      if (is_steinberg(r, ell)) return {{r}};
      std::vector<int> middle;
      if (r >= ell) middle.push_back(sigma(r, ell));
      middle.push_back(tau(r, ell));
      std::sort(middle.begin(), middle.end());
      return {{r}, middle, {r}};
    }
    default: break;
  }
  throw DomainError("socle layers are tabulated for simple, Weyl and injective labels only");
}

int simple_dim(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  return (r0 + 1) * (r1 + 1);
}

std::vector<int> composition_factors(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  std::vector<int> out;
  if (is_string_family(x.family)) {
    for (int i = x.s; i <= x.t; ++i) out.push_back(vertex_weight(x.block, i, ell));
  } else {
    for (const auto& layer : socle_layers(x, ell)) out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dim(const ComoduleLabel& x, int ell) {
  int total = 0;
  for (int r : composition_factors(x, ell)) total += simple_dim(r, ell);
  return total;
}

int arrow_a(int j, int) { return j; }
int arrow_b(int j, int n) { return n + j; }

namespace {

Quiver block_quiver(int n) {
  if (n < 0) throw DomainError("window size must be nonnegative");
  std::vector<std::string> vertices;
  for (int i = 0; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<ArrowSpec> arrows;
  for (int j = 0; j < n; ++j) arrows.push_back({"a" + std::to_string(j), std::to_string(j), std::to_string(j + 1)});
  for (int j = 0; j < n; ++j) arrows.push_back({"b" + std::to_string(j), std::to_string(j + 1), std::to_string(j)});
  return Quiver(std::move(vertices), arrows);
}

}  // namespace

CoalgebraPresentation basic_block(int n) {
  CoalgebraPresentation b{block_quiver(n), {}, {n}};
  if (n >= 1) b.elements.emplace_back(Path{0, 0, {arrow_a(0, n), arrow_b(0, n)}});
  for (int j = 1; j <= n - 1; ++j) {
    PathVector d(Path{j, j, {arrow_b(j - 1, n), arrow_a(j - 1, n)}});
    d.add(Path{j, j, {arrow_a(j, n), arrow_b(j, n)}}, 1);
    b.elements.push_back(std::move(d));
  }
  return b;
}

CoalgebraPresentation basic_block_string(int n) { return CoalgebraPresentation{block_quiver(n), {}, {n}}; }

int max_support(const ComoduleLabel& x, int ell) {
  const auto l = localize(x, ell);
  return l.family == Family::injective ? l.t + 1 : l.t;
}

Word string_word(const ComoduleLabel& x, int ell, int n) {
  const auto l = localize(x, ell);
  if (l.family == Family::injective) throw DomainError(render_label(x) + " is injective and has no defining word");
  if (l.t > n) throw WindowOverflow(render_label(x) + " does not fit in the window [0, " + std::to_string(n) + "]");
  Word w{l.s, {}};
  // Edge j joins vertices j and j+1; the letter alternates starting from s.
  const bool b_first = l.family == Family::m || l.family == Family::n_prime;
  for (int j = l.s; j < l.t; ++j) {
    const bool use_b = ((j - l.s) % 2 == 0) == b_first;
    w.letters.push_back(use_b ? Letter{arrow_b(j, n), true} : Letter{arrow_a(j, n), false});
  }
  return w;
}

std::vector<int> label_dimension_vector(const ComoduleLabel& x, int ell, int n) {
  const auto l = localize(x, ell);
  if (max_support(x, ell) > n) throw WindowOverflow(render_label(x) + " does not fit in the window");
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  if (l.family == Family::injective) {
    if (l.t >= 1) v[static_cast<std::size_t>(l.t - 1)] += 1;
    v[static_cast<std::size_t>(l.t)] += 2;
    v[static_cast<std::size_t>(l.t + 1)] += 1;
  } else {
    for (int i = l.s; i <= l.t; ++i) v[static_cast<std::size_t>(i)] = 1;
  }
  return v;
}

Representation realize_injective(int m, int n) {
  if (m < 0 || m >= n) throw WindowOverflow("the injective at " + std::to_string(m) + " needs a window larger than " + std::to_string(n));
  return injective_module(basic_block(n), m);
}

Representation realize(const ComoduleLabel& x, int ell, int n) {
  const auto l = localize(x, ell);
  if (max_support(x, ell) > n - 2)
    throw WindowOverflow(render_label(x) + " needs a window of at least " + std::to_string(max_support(x, ell) + 2));
  if (l.family == Family::injective) return realize_injective(l.t, n);
  return string_module(basic_block(n).quiver, string_word(x, ell, n));
}

ComoduleLabel duality(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  ComoduleLabel out = x;
  switch (x.family) {
    case Family::m: out.family = Family::m_prime; break;
    case Family::m_prime: out.family = Family::m; break;
    case Family::n: out.family = Family::n_prime; break;
    case Family::n_prime: out.family = Family::n; break;
    case Family::weyl: out.family = Family::dual_weyl; break;
    case Family::dual_weyl: out.family = Family::weyl; break;
    default: break;
  }
  return out;
}

std::vector<ComoduleLabel> indecomposables_with_dimension_vector(int block, const std::vector<int>& v, int ell, int n) {
  require_ell(ell);
  require_block(block, ell);
  if (static_cast<int>(v.size()) != n + 1) throw DomainError("dimension vector length must be n + 1");
  std::vector<ComoduleLabel> out;
  const auto consider = [&](const ComoduleLabel& x) {
    if (max_support(x, ell) > n) return;
    if (label_dimension_vector(x, ell, n) == v) out.push_back(x);
  };
  for (int s = 0; s <= n; ++s) {
    consider(simple_label(vertex_weight(block, s, ell)));
    for (int t = s + 1; t <= n; ++t) {
      if ((t - s) % 2 == 0) {
        consider(string_label(Family::m, block, t, s, ell));
        consider(string_label(Family::m_prime, block, t, s, ell));
      } else {
        consider(string_label(Family::n, block, t, s, ell));
        consider(string_label(Family::n_prime, block, t, s, ell));
      }
    }
  }
  for (int m = 0; m + 1 <= n; ++m) consider(injective_label(vertex_weight(block, m, ell)));
  return out;
}

std::vector<int> weights(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  std::vector<int> out;
  for (int w1 = r0; w1 >= -r0; w1 -= 2)
    for (int w2 = r1; w2 >= -r1; w2 -= 2) out.push_back(w1 + ell * w2);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace sbc
