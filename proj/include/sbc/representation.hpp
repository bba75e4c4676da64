#pragma once

// Finite-dimensional quiver representations over the rationals.
//
// Convention: a right comodule over B is the representation graded by the
// source vertex of each basis element, with an arrow acting from its source
// space to its target space. On the injective B e_g an arrow acts by deleting
// itself from the start of a path. Path products compose in traversal order,
// so for the path a then b the action is M(b) * M(a).

#include "sbc/linalg.hpp"
#include "sbc/quiver.hpp"

#include <vector>

namespace sbc {

struct Representation {
  std::vector<int> dims;      // per vertex
  std::vector<QMatrix> maps;  // per arrow: dims[target] x dims[source]

  static Representation zero(const Quiver& q);

  int total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws DomainError if the matrix shapes do not match the quiver.
void validate(const Quiver& q, const Representation& m);

std::vector<int> dimension_vector(const Representation& m);

/// Action of a path: product of the arrow matrices along it.
QMatrix path_action(const Quiver& q, const Representation& m, const Path& p);

/// Per-vertex column bases of a subrepresentation.
struct Subspace {
  std::vector<QMatrix> basis;  // per vertex: dims[v] x k_v, full column rank

  std::vector<int> dims() const;
};

/// Socle: joint kernel of all arrow actions.
Subspace rep_socle(const Quiver& q, const Representation& m);
/// Radical: sum of the images of all arrow actions.
Subspace rep_radical(const Quiver& q, const Representation& m);

/// Restriction of m to an invariant subspace.
Representation restrict(const Quiver& q, const Representation& m, const Subspace& sub);

/// Quotient of m by an invariant subspace, with the projection and a section.
struct Quotient {
  Representation rep;
  std::vector<QMatrix> projection;  // per vertex: quotient dim x dims[v]
  std::vector<QMatrix> section;     // per vertex: dims[v] x quotient dim, projection*section = I
};
Quotient quotient(const Quiver& q, const Representation& m, const Subspace& sub);

/// Top: m modulo its radical.
Quotient rep_top(const Quiver& q, const Representation& m);

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts);

/// A homomorphism: one matrix per vertex, dims_n[v] x dims_m[v].
using Homomorphism = std::vector<QMatrix>;

/// Basis of Hom(m, n): all vertex-wise maps commuting with every arrow.
std::vector<Homomorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n);

/// Sum of c_i * basis_i.
Homomorphism combine(const std::vector<Homomorphism>& basis, const QVector& coefficients);

bool is_invertible(const Homomorphism& f);

/// Exact isomorphism test. Searches the homomorphism space for an invertible
/// member; a positive answer is certified by an explicit invertible map.
bool is_isomorphic(const Quiver& q, const Representation& m, const Representation& n);

/// Relations of the dual algebra of a presentation, graded by path length.
struct RelationSet {
  std::vector<PathVector> relations;
  int vanish_above = 0;  // every path longer than this is a relation
};

/// Annihilator of B inside the path algebra, computed degreewise by exact
/// kernel computation up to min(degree_bound, longest path in B).
RelationSet dual_relations(const CoalgebraPresentation& b, int degree_bound);
RelationSet dual_relations(const CoalgebraPresentation& b);

/// Whether every relation acts as zero on m.
bool satisfies(const Quiver& q, const Representation& m, const RelationSet& rels);

/// The injective comodule B e_g as a representation: paths ending at g, graded
/// by source vertex, arrows deleting themselves from the start of a path.
Representation injective_module(const CoalgebraPresentation& b, int g);

}  // namespace sbc
