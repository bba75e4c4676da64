#include "sbc/biserial.hpp"

#include "sbc/errors.hpp"
#include "sbc/representation.hpp"

#include <algorithm>
#include <set>

namespace sbc {

BiserialReport check_special_biserial(const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  BiserialReport r;

  for (int v = 0; v < q.vertex_count() && r.s1; ++v) {
    const auto out = q.arrows_from(v).size();
    const auto in = q.arrows_into(v).size();
    if (out > 2) {
      r.s1 = false;
      r.s1_witness = std::to_string(out) + " arrows start at vertex " + q.vertex_name(v);
    } else if (in > 2) {
      r.s1 = false;
      r.s1_witness = std::to_string(in) + " arrows end at vertex " + q.vertex_name(v);
    }
  }

  for (int beta = 0; beta < q.arrow_count() && r.s2; ++beta) {
    const auto& arr = q.arrow(beta);
    std::vector<int> after;
    for (int alpha : q.arrows_from(arr.target))
      if (appears(Path{arr.source, q.arrow(alpha).target, {beta, alpha}}, b)) after.push_back(alpha);
    std::vector<int> before;
    for (int gamma : q.arrows_into(arr.source))
      if (appears(Path{q.arrow(gamma).source, arr.target, {gamma, beta}}, b)) before.push_back(gamma);
    if (after.size() > 1) {
      r.s2 = false;
      r.s2_witness = q.arrow(after[0]).name + arr.name + " and " + q.arrow(after[1]).name + arr.name + " both appear";
    } else if (before.size() > 1) {
      r.s2 = false;
      r.s2_witness = arr.name + q.arrow(before[0]).name + " and " + arr.name + q.arrow(before[1]).name + " both appear";
    }
  }

  const auto gens = b.spanning_set();
  const PathSpan span(gens);
  std::set<Path> seen;
  for (const auto& e : b.elements) {
    for (const auto& [p, c] : e.terms()) {
      if (!seen.insert(p).second) continue;
      if (!span.contains(PathVector(p))) {
        r.s3 = false;
        r.s3_witness = path_word(q, p) + " appears but is not in the span";
        return r;
      }
    }
  }
  return r;
}

char case_letter(InjectiveCase c) {
  switch (c) {
    case InjectiveCase::a: return 'a';
    case InjectiveCase::b: return 'b';
    case InjectiveCase::c: return 'c';
    case InjectiveCase::d: return 'd';
  }
  return '?';
}

namespace {

// Extend a path backwards while the longer path still appears in B.
Path maximal_path_into(const CoalgebraPresentation& b, int arrow) {
  const Quiver& q = b.quiver;
  Path p = arrow_path(q, arrow);
  for (;;) {
    bool extended = false;
    for (int a : q.arrows_into(p.source)) {
      Path longer{q.arrow(a).source, p.target, {a}};
      longer.arrows.insert(longer.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (appears(longer, b)) {
        p = std::move(longer);
        extended = true;
        break;
      }
    }
    if (!extended) return p;
  }
}

PathVector row_vector(const GradedPiece& piece, const QVector& coords) {
  PathVector v;
  for (Eigen::Index r = 0; r < piece.basis.rows(); ++r) {
    if (coords(r) == 0) continue;
    for (std::size_t j = 0; j < piece.paths.size(); ++j)
      v.add(piece.paths[j], coords(r) * piece.basis(r, static_cast<Eigen::Index>(j)));
  }
  return v;
}

}  // namespace

InjectiveForm injective_form(const CoalgebraPresentation& b, int g) {
  const Quiver& q = b.quiver;
  if (g < 0 || g >= q.vertex_count()) throw DomainError("vertex out of range");
  if (b.on_boundary(g)) throw WindowOverflow("I(" + q.vertex_name(g) + ") is cut off by the truncation window");
  if (!check_special_biserial(b).special_biserial()) throw DomainError("presentation is not special biserial");

  InjectiveForm f;
  const auto into = q.arrows_into(g);
  if (into.empty()) {
    f.maximal_paths.push_back(Path::trivial(g));
    return f;
  }
  for (int a : into) f.maximal_paths.push_back(maximal_path_into(b, a));
  if (into.size() == 1) return f;

  const Path& p = f.maximal_paths[0];
  const Path& pq = f.maximal_paths[1];
  const auto gens = b.spanning_set();
  const PathSpan span(gens);
  if (p.source == pq.source && !span.contains(PathVector(p)) && !span.contains(PathVector(pq))) {
    const auto piece = graded_piece(b, p.source, g);
    for (Eigen::Index r = 0; r < piece.basis.rows(); ++r) {
      QVector e = QVector::Zero(piece.basis.rows());
      e(r) = 1;
      PathVector v = row_vector(piece, e);
      if (v.size() == 2 && v.coefficient(p) != 0 && v.coefficient(pq) != 0) {
        v *= Rational(1) / v.coefficient(p);
        f.kind = InjectiveCase::d;
        f.generator = std::move(v);
        return f;
      }
    }
  }
  f.kind = p.source == pq.source ? InjectiveCase::c : InjectiveCase::b;
  return f;
}

std::vector<int> projective_injective_vertices(const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  std::vector<int> out;
  for (int g = 0; g < q.vertex_count(); ++g) {
    const auto m = injective_module(b, g);
    if (m.total_dimension() <= 1) continue;
    const auto top = rep_top(q, m).rep;
    if (top.total_dimension() != 1) continue;
    const int h = static_cast<int>(std::find(top.dims.begin(), top.dims.end(), 1) - top.dims.begin());
    int projective_dim = 0;
    for (int t = 0; t < q.vertex_count(); ++t) projective_dim += static_cast<int>(graded_piece(b, h, t).basis.rows());
    if (projective_dim == m.total_dimension()) out.push_back(g);
  }
  return out;
}

CoalgebraPresentation associated_string_coalgebra(const CoalgebraPresentation& b) {
  if (!check_special_biserial(b).special_biserial()) throw DomainError("presentation is not special biserial");
  const Quiver& q = b.quiver;
  const auto special = projective_injective_vertices(b);

  std::vector<PathVector> kept;
  for (int g = 0; g < q.vertex_count(); ++g) {
    std::vector<GradedPiece> pieces;
    for (int s = 0; s < q.vertex_count(); ++s) pieces.push_back(graded_piece(b, s, g));
    const bool shrink = std::find(special.begin(), special.end(), g) != special.end();
    std::optional<Subspace> rad;
    if (shrink) rad = rep_radical(q, injective_module(b, g));
    for (int s = 0; s < q.vertex_count(); ++s) {
      const auto& piece = pieces[static_cast<std::size_t>(s)];
      const Eigen::Index d = piece.basis.rows();
      const QMatrix coords = rad ? rad->basis[static_cast<std::size_t>(s)] : QMatrix(QMatrix::Identity(d, d));
      for (Eigen::Index c = 0; c < coords.cols(); ++c) kept.push_back(row_vector(piece, coords.col(c)));
    }
  }

  CoalgebraPresentation out{q, {}, b.boundary};
  const PathSpan span(kept);
  for (auto& v : span.basis())
    if (v.max_length() >= 2) out.elements.push_back(std::move(v));
  return out;
}

}  // namespace sbc
