#pragma once

// Integers extended by a primitive ell-th root of unity zeta.
//
// Values are integer polynomials in zeta reduced modulo the ell-th cyclotomic
// polynomial, so equality is coefficient equality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbc {

/// Coefficients of the ell-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int ell);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(3, 0) {}
  Cyclotomic(int ell, std::int64_t value);

  static Cyclotomic zeta_power(int ell, long long exponent);

  int ell() const { return ell_; }
  /// Reduced coefficients, constant term first; length is the degree of the
  /// cyclotomic polynomial.
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t c);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t c) { return a *= c; }
  friend Cyclotomic operator*(std::int64_t c, Cyclotomic a) { return a *= c; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

 private:
  static Cyclotomic reduce(int ell, std::vector<std::int64_t> raw);
  void require_same(const Cyclotomic& o) const;

  int ell_ = 3;
  std::vector<std::int64_t> coeffs_;
};

/// The balanced quantum integer [n] = zeta^{n-1} + zeta^{n-3} + ... + zeta^{1-n}.
Cyclotomic q_int(int n, int ell);

/// "[c0, c1, ...]".
std::string render_coefficients(const Cyclotomic& c);
/// "a·[m]_ζ" (or a plain integer) when c is an integer multiple of a single
/// quantum integer [m] with 1 <= m <= (ell-1)/2.
std::optional<std::string> render_qint_multiple(const Cyclotomic& c);
/// The pretty form when available, else a sum of powers of zeta.
std::string render(const Cyclotomic& c);

}  // namespace sbc
