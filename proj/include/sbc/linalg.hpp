#pragma once

// Exact dense linear algebra over Eigen matrices.
//
// Every routine here is templated on the scalar type and assumes an exact
// field: pivots are located by comparison with zero, never by magnitude.
// The artifact instantiates them with GMP rationals.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace sbc {

using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using QRowVector = RowVector<Rational>;

/// Reduced row echelon form of a matrix together with its pivot columns.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  std::vector<Eigen::Index> pivots;
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) {
        if (m(row, c) != Scalar(0)) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rref(a).rank();
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != Scalar(0)) return false;
  return true;
}

/// Basis of the right kernel {x : a x = 0}, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - e.rank());
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, out) = Scalar(1);
    for (Eigen::Index i = 0; i < e.rank(); ++i) basis(e.pivots[static_cast<std::size_t>(i)], out) = -e.reduced(i, f);
    ++out;
  }
  return basis;
}

/// A maximal linearly independent subset of the columns of a, in order.
template <typename Derived>
Matrix<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(a);
  Matrix<Scalar> out(a.rows(), e.rank());
  for (Eigen::Index i = 0; i < e.rank(); ++i) out.col(i) = a.col(e.pivots[static_cast<std::size_t>(i)]);
  return out;
}

/// A particular solution of a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Matrix<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto e = rref(aug);
  Matrix<Scalar> x = Matrix<Scalar>::Zero(a.cols(), b.cols());
  for (Eigen::Index i = 0; i < e.rank(); ++i) {
    const auto p = e.pivots[static_cast<std::size_t>(i)];
    if (p >= a.cols()) return std::nullopt;
    x.row(p) = e.reduced.row(i).tail(b.cols());
  }
  return x;
}

/// Standard basis columns completing the independent columns of u to a basis of
/// the ambient space.
template <typename Derived>
Matrix<typename Derived::Scalar> complete_basis(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = u.rows();
  Matrix<Scalar> aug(n, u.cols() + n);
  aug << u, Matrix<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  std::vector<Eigen::Index> picked;
  for (auto p : e.pivots)
    if (p >= u.cols()) picked.push_back(p - u.cols());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, static_cast<Eigen::Index>(picked.size()));
  for (std::size_t j = 0; j < picked.size(); ++j) out(picked[j], static_cast<Eigen::Index>(j)) = Scalar(1);
  return out;
}

/// Decimal rendering "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace sbc
