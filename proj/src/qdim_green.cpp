#include "sbc/qdim_green.hpp"

#include "sbc/errors.hpp"
#include "sbc/syzygy_ar.hpp"

#include <algorithm>
#include <sstream>

namespace sbc {

Cyclotomic qdim_simple(int r, int ell) {
  const auto bv = weight_vertex(r, ell);
  if (!bv) return Cyclotomic(ell, 0);
  const std::int64_t sign = bv->vertex % 2 == 0 ? 1 : -1;
  return q_int(bv->block + 1, ell) * (sign * (bv->vertex + 1));
}

Cyclotomic qdim(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  if (is_string_family(x.family)) {
    std::int64_t sum = 0;
    for (int i = x.s; i <= x.t; ++i) sum += (i % 2 == 0 ? 1 : -1) * (i + 1);
    return q_int(x.block + 1, ell) * sum;
  }
  Cyclotomic out(ell, 0);
  for (int r : composition_factors(x, ell)) out += qdim_simple(r, ell);
  return out;
}

Cyclotomic qdim_trace_oracle(const ComoduleLabel& x, int ell) {
  Cyclotomic out(ell, 0);
  for (int r : composition_factors(x, ell))
    for (int mu : weights(r, ell)) out += Cyclotomic::zeta_power(ell, mu);
  return out;
}

IntPoly chebyshev_u(int n) {
  if (n < 0) throw DomainError("Chebyshev index must be nonnegative");
  IntPoly prev{1};
  if (n == 0) return prev;
  IntPoly cur{0, 2};
  for (int k = 2; k <= n; ++k) {
    IntPoly next(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly rescaled_relation(int ell) {
  require_ell(ell);
  IntPoly u = chebyshev_u(ell - 1);
  for (std::size_t k = 0; k < u.size(); ++k) {
    const std::int64_t scale = std::int64_t{1} << k;
    if (u[k] % scale != 0) throw DomainError("Chebyshev coefficient not divisible by 2^k");
    u[k] /= scale;
  }
  return u;
}

std::vector<ComoduleLabel> decompose_tensor(int a, int b, int ell) {
  require_ell(ell);
  if (a < 0 || b < 0 || a >= ell || b >= ell)
    throw DomainError("tensor factors must be restricted weights in [0, " + std::to_string(ell - 1) + "]");
  if (a < b) std::swap(a, b);
  std::vector<ComoduleLabel> out;
  if (a + b <= ell - 1) {
    for (int t = a - b; t <= a + b; t += 2) out.push_back(simple_label(t));
    return out;
  }
  const int ap = ell - a - 2;
  const int bp = ell - b - 2;
  for (int t = a - b; t <= ap + bp; t += 2) out.push_back(simple_label(t));
  for (int t = ell - 1; t <= a + b; ++t) {
    if ((a + b - t) % 2 != 0) continue;
    out.push_back(injective_label(t == ell - 1 ? t : ell - (t - ell) - 2));
  }
  return out;
}

InjectiveFactorization injective_tensor_factorization(int r, int ell) {
  const auto [r1, r0] = decompose_weight(r, ell);
  if (r0 == ell - 1) throw DomainError("Steinberg weight " + std::to_string(r) + " has no such factorization");
  InjectiveFactorization f{r0, r1, dim(injective_label(r), ell), dim(injective_label(r0), ell), r1 + 1};
  if (f.dim_injective != f.dim_base * f.dim_twist) throw DomainError("dimension certificate failed");
  return f;
}

GreenElem::GreenElem(int ell) : ell_(ell) {}

GreenElem::GreenElem(int ell, const Monomial& mono, std::int64_t coeff) : ell_(ell) {
  *this = green_reduce(ell, {{mono, coeff}});
}

void GreenElem::add(const Monomial& mono, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GreenElem& GreenElem::operator+=(const GreenElem& o) {
  if (ell_ != o.ell_) throw DomainError("Green ring elements for different ell");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GreenElem& GreenElem::operator-=(const GreenElem& o) {
  if (ell_ != o.ell_) throw DomainError("Green ring elements for different ell");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GreenElem& GreenElem::operator*=(std::int64_t c) {
  if (c == 0) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

GreenElem green_reduce(int ell, const std::map<Monomial, std::int64_t>& raw) {
  const IntPoly rel = rescaled_relation(ell);
  const int deg = ell - 1;
  // Bucket by (m, j) so each x-polynomial is reduced on its own.
  std::map<std::pair<int, int>, std::vector<std::int64_t>> polys;
  for (const auto& [mono, c] : raw) {
    if (mono.i < 0 || mono.j < 0) throw DomainError("x and y exponents must be nonnegative");
    auto& p = polys[{mono.m, mono.j}];
    if (p.size() <= static_cast<std::size_t>(mono.i)) p.resize(static_cast<std::size_t>(mono.i) + 1, 0);
    p[static_cast<std::size_t>(mono.i)] += c;
  }
  GreenElem out(ell);
  for (auto& [mj, p] : polys) {
    for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(deg);) {
      const std::int64_t c = p[i];
      if (c == 0) continue;
      for (std::size_t k = 0; k < rel.size(); ++k) p[i - static_cast<std::size_t>(deg) + k] -= c * rel[k];
    }
    for (std::size_t i = 0; i < p.size() && i < static_cast<std::size_t>(deg); ++i)
      out.add(Monomial{mj.first, static_cast<int>(i), mj.second}, p[i]);
  }
  return out;
}

GreenElem green_mul(const GreenElem& u, const GreenElem& v) {
  if (u.ell() != v.ell()) throw DomainError("Green ring elements for different ell");
  std::map<Monomial, std::int64_t> raw;
  for (const auto& [a, c] : u.terms())
    for (const auto& [b, d] : v.terms()) raw[Monomial{a.m + b.m, a.i + b.i, a.j + b.j}] += c * d;
  return green_reduce(u.ell(), raw);
}

GreenElem green_one(int ell) { return GreenElem(ell, Monomial{0, 0, 0}); }
GreenElem green_x(int ell) { return GreenElem(ell, Monomial{0, 1, 0}); }
GreenElem green_y(int ell) { return GreenElem(ell, Monomial{0, 0, 1}); }
GreenElem green_w(int ell, int power) { return GreenElem(ell, Monomial{power, 0, 0}); }

namespace {

GreenElem recursion(int n, const GreenElem& gen, int ell) {
  if (n < 0) throw DomainError("index must be nonnegative");
  GreenElem prev = green_one(ell);
  if (n == 0) return prev;
  GreenElem cur = gen;
  for (int k = 2; k <= n; ++k) {
    GreenElem next = gen * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

GreenElem green_x_n(int n, int ell) { return recursion(n, green_x(ell), ell); }
GreenElem green_y_n(int n, int ell) { return recursion(n, green_y(ell), ell); }

GreenElem green_class(const ComoduleLabel& x, int ell) {
  require_ell(ell);
  if (is_injective(x, ell)) return GreenElem(ell);
  if (x.family == Family::simple) {
    const auto [r1, r0] = decompose_weight(x.weight, ell);
    return green_x_n(r0, ell) * green_y_n(r1, ell);
  }
  const auto c = orbit_of(x, ell);
  return green_w(ell, -c.k) * green_class(simple_label(vertex_weight(c.block, c.n, ell)), ell);
}

std::string render(const GreenElem& g) {
  if (g.is_zero()) return "0";
  std::vector<std::pair<Monomial, std::int64_t>> terms(g.terms().begin(), g.terms().end());
  // Highest total x, y degree first, then by w exponent.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto ka = std::make_tuple(-(a.first.i + a.first.j), -a.first.i, a.first.m);
    const auto kb = std::make_tuple(-(b.first.i + b.first.j), -b.first.i, b.first.m);
    return ka < kb;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    std::vector<std::string> parts;
    const auto power = [](const char* v, int e) {
      return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    if (mono.m != 0) parts.push_back(power("w", mono.m));
    if (mono.i != 0) parts.push_back(power("x", mono.i));
    if (mono.j != 0) parts.push_back(power("y", mono.j));
    if (parts.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "·";
      for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "·" : "") << parts[k];
    }
    first = false;
  }
  return os.str();
}

}  // namespace sbc
