#include "sbc/representation.hpp"

#include "sbc/errors.hpp"

#include <algorithm>
#include <random>

namespace sbc {

namespace {

Eigen::Index idx(int i) { return static_cast<Eigen::Index>(i); }

QMatrix hstack(const std::vector<QMatrix>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  QMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

QMatrix vstack(const std::vector<QMatrix>& blocks, Eigen::Index cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  QMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  auto x = solve(m, QMatrix::Identity(m.rows(), m.cols()));
  if (!x) throw DomainError("matrix is singular");
  return *x;
}

}  // namespace

Representation Representation::zero(const Quiver& q) {
  Representation m;
  m.dims.assign(static_cast<std::size_t>(q.vertex_count()), 0);
  m.maps.assign(static_cast<std::size_t>(q.arrow_count()), QMatrix(0, 0));
  return m;
}

int Representation::total_dimension() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

void validate(const Quiver& q, const Representation& m) {
  if (static_cast<int>(m.dims.size()) != q.vertex_count()) throw DomainError("dimension list does not match vertices");
  if (static_cast<int>(m.maps.size()) != q.arrow_count()) throw DomainError("matrix list does not match arrows");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& x = m.maps[static_cast<std::size_t>(a)];
    if (x.rows() != idx(m.dims[static_cast<std::size_t>(arr.target)]) ||
        x.cols() != idx(m.dims[static_cast<std::size_t>(arr.source)]))
      throw DomainError("matrix for arrow '" + arr.name + "' has the wrong shape");
  }
}

std::vector<int> dimension_vector(const Representation& m) { return m.dims; }

QMatrix path_action(const Quiver& q, const Representation& m, const Path& p) {
  const auto d = [&](int v) { return idx(m.dims[static_cast<std::size_t>(v)]); };
  QMatrix out = QMatrix::Identity(d(p.source), d(p.source));
  for (int a : p.arrows) out = (m.maps[static_cast<std::size_t>(a)] * out).eval();
  (void)q;
  return out;
}

std::vector<int> Subspace::dims() const {
  std::vector<int> out;
  for (const auto& b : basis) out.push_back(static_cast<int>(b.cols()));
  return out;
}

Subspace rep_socle(const Quiver& q, const Representation& m) {
  Subspace s;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Eigen::Index dv = idx(m.dims[static_cast<std::size_t>(v)]);
    std::vector<QMatrix> parts;
    for (int a : q.arrows_from(v)) parts.push_back(m.maps[static_cast<std::size_t>(a)]);
    if (parts.empty()) {
      s.basis.push_back(QMatrix::Identity(dv, dv));
    } else {
      s.basis.push_back(nullspace(vstack(parts, dv)));
    }
  }
  return s;
}

Subspace rep_radical(const Quiver& q, const Representation& m) {
  Subspace s;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Eigen::Index dv = idx(m.dims[static_cast<std::size_t>(v)]);
    std::vector<QMatrix> parts;
    for (int a : q.arrows_into(v)) parts.push_back(m.maps[static_cast<std::size_t>(a)]);
    s.basis.push_back(parts.empty() ? QMatrix(dv, 0) : column_basis(hstack(parts, dv)));
  }
  return s;
}

Representation restrict(const Quiver& q, const Representation& m, const Subspace& sub) {
  Representation r;
  r.dims = sub.dims();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& st = sub.basis[static_cast<std::size_t>(arr.target)];
    const auto& ss = sub.basis[static_cast<std::size_t>(arr.source)];
    auto x = solve(st, (m.maps[static_cast<std::size_t>(a)] * ss).eval());
    if (!x) throw DomainError("subspace is not invariant under arrow '" + arr.name + "'");
    r.maps.push_back(std::move(*x));
  }
  return r;
}

Quotient quotient(const Quiver& q, const Representation& m, const Subspace& sub) {
  Quotient out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto& s = sub.basis[static_cast<std::size_t>(v)];
    QMatrix c = complete_basis(s);
    QMatrix t(s.rows(), s.cols() + c.cols());
    t << s, c;
    QMatrix inv = inverse(t);
    out.projection.push_back(inv.bottomRows(c.cols()));
    out.section.push_back(std::move(c));
    out.rep.dims.push_back(static_cast<int>(out.section.back().cols()));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    out.rep.maps.push_back(out.projection[static_cast<std::size_t>(arr.target)] *
                           m.maps[static_cast<std::size_t>(a)] * out.section[static_cast<std::size_t>(arr.source)]);
  }
  return out;
}

Quotient rep_top(const Quiver& q, const Representation& m) { return quotient(q, m, rep_radical(q, m)); }

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  Representation out = Representation::zero(q);
  for (int v = 0; v < q.vertex_count(); ++v)
    for (const auto& p : parts) out.dims[static_cast<std::size_t>(v)] += p.dims[static_cast<std::size_t>(v)];
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    QMatrix x = QMatrix::Zero(idx(out.dims[static_cast<std::size_t>(arr.target)]),
                              idx(out.dims[static_cast<std::size_t>(arr.source)]));
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    for (const auto& p : parts) {
      const auto& y = p.maps[static_cast<std::size_t>(a)];
      x.block(r, c, y.rows(), y.cols()) = y;
      r += idx(p.dims[static_cast<std::size_t>(arr.target)]);
      c += idx(p.dims[static_cast<std::size_t>(arr.source)]);
    }
    out.maps[static_cast<std::size_t>(a)] = std::move(x);
  }
  return out;
}

std::vector<Homomorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n) {
  const int nv = q.vertex_count();
  std::vector<Eigen::Index> offset(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[static_cast<std::size_t>(v) + 1] =
        offset[static_cast<std::size_t>(v)] + idx(n.dims[static_cast<std::size_t>(v)] * m.dims[static_cast<std::size_t>(v)]);
  const Eigen::Index unknowns = offset.back();
  // F_v(i, j) lives at offset[v] + j * dn[v] + i.
  const auto var = [&](int v, Eigen::Index i, Eigen::Index j) {
    return offset[static_cast<std::size_t>(v)] + j * idx(n.dims[static_cast<std::size_t>(v)]) + i;
  };

  Eigen::Index equations = 0;
  for (const auto& arr : q.arrows())
    equations += idx(n.dims[static_cast<std::size_t>(arr.target)] * m.dims[static_cast<std::size_t>(arr.source)]);
  QMatrix sys = QMatrix::Zero(equations, unknowns);

  // N(a) F_s - F_t M(a) = 0 for each arrow a: s -> t.
  Eigen::Index row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& na = n.maps[static_cast<std::size_t>(a)];
    const auto& ma = m.maps[static_cast<std::size_t>(a)];
    const Eigen::Index nt = idx(n.dims[static_cast<std::size_t>(arr.target)]);
    const Eigen::Index ns = idx(n.dims[static_cast<std::size_t>(arr.source)]);
    const Eigen::Index mt = idx(m.dims[static_cast<std::size_t>(arr.target)]);
    const Eigen::Index ms = idx(m.dims[static_cast<std::size_t>(arr.source)]);
    for (Eigen::Index j = 0; j < ms; ++j) {
      for (Eigen::Index i = 0; i < nt; ++i, ++row) {
        for (Eigen::Index k = 0; k < ns; ++k)
          if (na(i, k) != 0) sys(row, var(arr.source, k, j)) += na(i, k);
        for (Eigen::Index k = 0; k < mt; ++k)
          if (ma(k, j) != 0) sys(row, var(arr.target, i, k)) -= ma(k, j);
      }
    }
  }

  const QMatrix kernel = nullspace(sys);
  std::vector<Homomorphism> out;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    Homomorphism f;
    for (int v = 0; v < nv; ++v) {
      const Eigen::Index rows = idx(n.dims[static_cast<std::size_t>(v)]);
      const Eigen::Index cols = idx(m.dims[static_cast<std::size_t>(v)]);
      QMatrix x(rows, cols);
      for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = kernel(var(v, i, j), c);
      f.push_back(std::move(x));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Homomorphism combine(const std::vector<Homomorphism>& basis, const QVector& coefficients) {
  if (basis.empty()) return {};
  Homomorphism f;
  for (const auto& x : basis.front()) f.push_back(QMatrix::Zero(x.rows(), x.cols()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = coefficients(static_cast<Eigen::Index>(i));
    if (c == 0) continue;
    for (std::size_t v = 0; v < f.size(); ++v) f[v] += c * basis[i][v];
  }
  return f;
}

bool is_invertible(const Homomorphism& f) {
  for (const auto& x : f) {
    if (x.rows() != x.cols()) return false;
    if (rank(x) != x.rows()) return false;
  }
  return true;
}

bool is_isomorphic(const Quiver& q, const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return false;
  if (m.total_dimension() == 0) return true;
  const auto basis = hom_basis(q, m, n);
  if (basis.empty()) return false;
  // The set of non-invertible members is a proper hypersurface when an
  // invertible member exists, so a few random integer points find one.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-64, 64);
  for (int attempt = 0; attempt < 12; ++attempt) {
    QVector c(static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coeff(rng);
    if (is_invertible(combine(basis, c))) return true;
  }
  return false;
}

RelationSet dual_relations(const CoalgebraPresentation& b, int degree_bound) {
  const Quiver& q = b.quiver;
  RelationSet out;
  out.vanish_above = q.arrow_count() > 0 ? 1 : 0;
  for (const auto& e : b.elements) out.vanish_above = std::max(out.vanish_above, e.max_length());
  const int top = std::min(degree_bound, out.vanish_above + 1);

  const auto spanning = b.spanning_set();
  for (int len = 2; len <= top; ++len) {
    for (int s = 0; s < q.vertex_count(); ++s) {
      for (int t = 0; t < q.vertex_count(); ++t) {
        std::vector<Path> paths;
        for (auto& p : paths_from(q, s, len))
          if (p.target == t) paths.push_back(std::move(p));
        if (paths.empty()) continue;
        std::map<Path, Eigen::Index> col;
        for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = static_cast<Eigen::Index>(i);
        // Rows: homogeneous components of B on these paths. A relation is a
        // functional vanishing on all of them.
        std::vector<QRowVector> rows;
        for (const auto& g : spanning) {
          QRowVector r = QRowVector::Zero(static_cast<Eigen::Index>(paths.size()));
          bool any = false;
          for (const auto& [p, c] : g.terms()) {
            auto it = col.find(p);
            if (it == col.end()) continue;
            r(it->second) = c;
            any = true;
          }
          if (any) rows.push_back(std::move(r));
        }
        QMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(paths.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i];
        const QMatrix kernel = nullspace(a);
        for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
          PathVector rel;
          for (Eigen::Index i = 0; i < kernel.rows(); ++i) rel.add(paths[static_cast<std::size_t>(i)], kernel(i, c));
          out.relations.push_back(std::move(rel));
        }
      }
    }
  }
  return out;
}

RelationSet dual_relations(const CoalgebraPresentation& b) {
  int longest = b.quiver.arrow_count() > 0 ? 1 : 0;
  for (const auto& e : b.elements) longest = std::max(longest, e.max_length());
  return dual_relations(b, longest + 1);
}

bool satisfies(const Quiver& q, const Representation& m, const RelationSet& rels) {
  for (const auto& rel : rels.relations) {
    if (rel.empty()) continue;
    const Path& first = rel.terms().begin()->first;
    QMatrix acc = QMatrix::Zero(idx(m.dims[static_cast<std::size_t>(first.target)]),
                                idx(m.dims[static_cast<std::size_t>(first.source)]));
    for (const auto& [p, c] : rel.terms()) acc += c * path_action(q, m, p);
    if (!is_zero(acc)) return false;
  }
  for (const auto& p : all_paths(q, rels.vanish_above + 1))
    if (!is_zero(path_action(q, m, p))) return false;
  return true;
}

Representation injective_module(const CoalgebraPresentation& b, int g) {
  const Quiver& q = b.quiver;
  if (g < 0 || g >= q.vertex_count()) throw DomainError("vertex out of range");
  std::vector<GradedPiece> pieces;
  Representation m = Representation::zero(q);
  for (int s = 0; s < q.vertex_count(); ++s) {
    pieces.push_back(graded_piece(b, s, g));
    m.dims[static_cast<std::size_t>(s)] = static_cast<int>(pieces.back().basis.rows());
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& from = pieces[static_cast<std::size_t>(arr.source)];
    const auto& to = pieces[static_cast<std::size_t>(arr.target)];
    std::map<Path, Eigen::Index> col;
    for (std::size_t i = 0; i < to.paths.size(); ++i) col[to.paths[i]] = static_cast<Eigen::Index>(i);

    // Image of each basis vector, in path coordinates of the target piece.
    QMatrix images = QMatrix::Zero(from.basis.rows(), static_cast<Eigen::Index>(to.paths.size()));
    for (Eigen::Index r = 0; r < from.basis.rows(); ++r) {
      for (std::size_t j = 0; j < from.paths.size(); ++j) {
        const Rational& c = from.basis(r, static_cast<Eigen::Index>(j));
        const Path& p = from.paths[j];
        if (c == 0 || p.is_trivial() || p.arrows.front() != a) continue;
        Path rest{arr.target, p.target, {p.arrows.begin() + 1, p.arrows.end()}};
        auto it = col.find(rest);
        if (it == col.end()) throw DomainError("presentation is not closed under coproduct components");
        images(r, it->second) += c;
      }
    }
    // Express images in the basis of the target piece: x^T * basis = images.
    QMatrix x = QMatrix::Zero(to.basis.rows(), from.basis.rows());
    if (from.basis.rows() > 0 && to.basis.rows() > 0) {
      auto sol = solve(to.basis.transpose().eval(), images.transpose().eval());
      if (!sol) throw DomainError("presentation is not closed under coproduct components");
      x = *sol;
    } else if (!is_zero(images)) {
      throw DomainError("presentation is not closed under coproduct components");
    }
    m.maps[static_cast<std::size_t>(a)] = std::move(x);
  }
  return m;
}

}  // namespace sbc
