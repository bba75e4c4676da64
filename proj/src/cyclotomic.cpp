#include "sbc/cyclotomic.hpp"

#include "sbc/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace sbc {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by a monic divisor b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw DomainError("cyclotomic division left a remainder");
  return q;
}

Poly compute_cyclotomic(int n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, compute_cyclotomic(d));
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int ell) {
  if (ell < 2) throw DomainError("cyclotomic rings need ell >= 2");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ell);
  if (it == cache.end()) it = cache.emplace(ell, compute_cyclotomic(ell)).first;
  return it->second;
}

Cyclotomic Cyclotomic::reduce(int ell, std::vector<std::int64_t> raw) {
  // zeta^ell = 1 first, then the monic cyclotomic polynomial.
  Poly folded(static_cast<std::size_t>(ell), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) folded[i % static_cast<std::size_t>(ell)] += raw[i];
  const Poly& phi = cyclotomic_polynomial(ell);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    const std::int64_t c = folded[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) folded[i - deg + k] -= c * phi[k];
  }
  folded.resize(deg);
  Cyclotomic out;
  out.ell_ = ell;
  out.coeffs_ = std::move(folded);
  return out;
}

Cyclotomic::Cyclotomic(int ell, std::int64_t value) {
  const std::size_t deg = cyclotomic_polynomial(ell).size() - 1;
  ell_ = ell;
  coeffs_.assign(deg, 0);
  coeffs_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(int ell, long long exponent) {
  long long e = exponent % ell;
  if (e < 0) e += ell;
  Poly raw(static_cast<std::size_t>(e) + 1, 0);
  raw[static_cast<std::size_t>(e)] = 1;
  return reduce(ell, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (ell_ != o.ell_) throw DomainError("cyclotomic values over different roots of unity");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same(b);
  Poly raw(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Cyclotomic::reduce(a.ell_, std::move(raw));
}

Cyclotomic q_int(int n, int ell) {
  if (n < 0) throw DomainError("quantum integers are defined for n >= 0");
  Cyclotomic out(ell, 0);
  for (int k = 0; k < n; ++k) out += Cyclotomic::zeta_power(ell, n - 1 - 2 * k);
  return out;
}

std::string render_coefficients(const Cyclotomic& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
    if (i) os << ", ";
    os << c.coefficients()[i];
  }
  os << ']';
  return os.str();
}

std::optional<std::string> render_qint_multiple(const Cyclotomic& c) {
  if (c.is_zero()) return "0";
  const int ell = c.ell();
  for (int m = 1; m <= (ell - 1) / 2; ++m) {
    const Cyclotomic base = q_int(m, ell);
    const auto& bc = base.coefficients();
    const auto& cc = c.coefficients();
    std::size_t lead = 0;
    while (lead < bc.size() && bc[lead] == 0) ++lead;
    if (lead == bc.size() || cc[lead] % bc[lead] != 0) continue;
    const std::int64_t a = cc[lead] / bc[lead];
    if (!(base * a == c)) continue;
    if (m == 1) return std::to_string(a);
    const std::string q = "[" + std::to_string(m) + "]_ζ";
    if (a == 1) return q;
    if (a == -1) return "-" + q;
    return std::to_string(a) + "·" + q;
  }
  return std::nullopt;
}

std::string render(const Cyclotomic& c) {
  if (auto pretty = render_qint_multiple(c)) return *pretty;
  std::ostringstream os;
  bool first = true;
  const auto& cc = c.coefficients();
  for (std::size_t i = 0; i < cc.size(); ++i) {
    const std::int64_t a = cc[i];
    if (a == 0) continue;
    const std::int64_t mag = a < 0 ? -a : a;
    if (first) os << (a < 0 ? "-" : "");
    else os << (a < 0 ? " - " : " + ");
    if (i == 0) os << mag;
    else {
      if (mag != 1) os << mag << "·";
      os << "ζ";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sbc
