#pragma once

// Quantum dimensions, Clebsch-Gordan decompositions and the stable Green ring.

#include "sbc/cyclotomic.hpp"
#include "sbc/quantum_sl2.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sbc {

/// (-1)^j (j+1) [r0+1] for the simple at vertex j of block r0; 0 for
/// Steinberg weights.
Cyclotomic qdim_simple(int r, int ell);
/// Closed form: [r0+1] times the alternating sum over the support of a string
/// label, the sum over composition factors otherwise.
Cyclotomic qdim(const ComoduleLabel& x, int ell);
/// Trace of K: the sum of zeta^mu over all weights mu of all composition factors.
Cyclotomic qdim_trace_oracle(const ComoduleLabel& x, int ell);

/// Integer polynomial, constant term first.
using IntPoly = std::vector<std::int64_t>;

/// Chebyshev polynomial of the second kind, U_n(t).
IntPoly chebyshev_u(int n);
/// U_{ell-1}(x/2), a monic integer polynomial of degree ell-1.
IntPoly rescaled_relation(int ell);

/// L(a) (x) L(b) for restricted a, b, simple summands ascending, then injectives in generation order.
std::vector<ComoduleLabel> decompose_tensor(int a, int b, int ell);

struct InjectiveFactorization {
  int r0 = 0;
  int r1 = 0;
  int dim_injective = 0;  // dim I(r)
  int dim_base = 0;       // dim I(r0)
  int dim_twist = 0;      // dim L(r1 ell) = r1 + 1
};
/// I(r) = I(r0) (x) L(r1 ell) with the dimension certificate checked. Throws
/// DomainError for Steinberg weights.
InjectiveFactorization injective_tensor_factorization(int r, int ell);

/// Exponents of a monomial w^m x^i y^j.
struct Monomial {
  int m = 0;
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// An element of Z[x, y, w, w^-1] with x reduced modulo rescaled_relation(ell).
class GreenElem {
 public:
  explicit GreenElem(int ell = 3);
  GreenElem(int ell, const Monomial& mono, std::int64_t coeff = 1);

  int ell() const { return ell_; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GreenElem& operator+=(const GreenElem& o);
  GreenElem& operator-=(const GreenElem& o);
  GreenElem& operator*=(std::int64_t c);

  friend GreenElem operator+(GreenElem a, const GreenElem& b) { return a += b; }
  friend GreenElem operator-(GreenElem a, const GreenElem& b) { return a -= b; }
  friend bool operator==(const GreenElem&, const GreenElem&) = default;

  friend GreenElem green_reduce(int ell, const std::map<Monomial, std::int64_t>& raw);

 private:
  void add(const Monomial& mono, std::int64_t c);

  int ell_;
  std::map<Monomial, std::int64_t> terms_;
};

/// Reduces an arbitrary polynomial: x-degrees are brought below ell-1.
GreenElem green_reduce(int ell, const std::map<Monomial, std::int64_t>& raw);
GreenElem green_mul(const GreenElem& u, const GreenElem& v);
inline GreenElem operator*(const GreenElem& u, const GreenElem& v) { return green_mul(u, v); }

GreenElem green_one(int ell);
GreenElem green_x(int ell);
GreenElem green_y(int ell);
GreenElem green_w(int ell, int power = 1);

/// x_n: x_0 = 1, x_1 = x, x_{n+1} = x x_n - x_{n-1}, reduced.
GreenElem green_x_n(int n, int ell);
/// The classical recursion in y: y_0 = 1, y_1 = y, y_{n+1} = y y_n - y_{n-1}.
GreenElem green_y_n(int n, int ell);

/// Stable class: simples map to x_{r0} y_{r1}, injectives to 0, and the other
/// indecomposables at orbit coordinate (k, n) to w^{-k} times the simple at n.
GreenElem green_class(const ComoduleLabel& x, int ell);

/// Sorted monomial sum, e.g. "x^2·y - y"; "0" for zero.
std::string render(const GreenElem& g);

}  // namespace sbc
