#pragma once

// Block data for quantum SL(2) at a root of unity of odd order ell.
//
// A nontrivial block is named by its base weight r0 in [0, ell-2]; its
// vertices are the weights r0, tau(r0), tau^2(r0), ... numbered 0, 1, 2, ...
// Weights with r0 = ell-1 (Steinberg type) form singleton blocks.

#include "sbc/quiver.hpp"
#include "sbc/representation.hpp"
#include "sbc/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbc {

/// Throws DomainError unless ell is odd and at least 3.
void require_ell(int ell);

struct WeightParts {
  int r1 = 0;
  int r0 = 0;
  friend bool operator==(const WeightParts&, const WeightParts&) = default;
};

WeightParts decompose_weight(int r, int ell);
bool is_steinberg(int r, int ell);

int tau(int r, int ell);
/// Inverse of tau; throws DomainError for r < ell or Steinberg r.
int sigma(int r, int ell);

int vertex_weight(int block, int n, int ell);

struct BlockVertex {
  int block = 0;
  int vertex = 0;
  friend bool operator==(const BlockVertex&, const BlockVertex&) = default;
};
/// nullopt for Steinberg weights.
std::optional<BlockVertex> weight_vertex(int r, int ell);

enum class Family { simple, weyl, dual_weyl, injective, m, m_prime, n, n_prime };

/// Simple, Weyl, DualWeyl and Injective carry a global weight; the string
/// families carry a block and vertices t >= s.
struct ComoduleLabel {
  Family family = Family::simple;
  int weight = 0;
  int block = 0;
  int t = 0;
  int s = 0;

  friend bool operator==(const ComoduleLabel&, const ComoduleLabel&) = default;
};

ComoduleLabel simple_label(int r);
ComoduleLabel weyl_label(int r);
ComoduleLabel dual_weyl_label(int r);
ComoduleLabel injective_label(int r);
/// Validates the parity rule and normalizes M(i,i), M'(i,i) to the simple at i.
ComoduleLabel string_label(Family f, int block, int t, int s, int ell);

bool is_string_family(Family f);
bool is_injective(const ComoduleLabel& x, int ell);

/// Text form, e.g. "L(7)", "I(3)", "M'(3,1)@b1".
std::string render_label(const ComoduleLabel& x);

/// Block-local view of a label in a nontrivial block.
struct LocalLabel {
  Family family = Family::simple;  // simple, injective or a string family
  int block = 0;
  int t = 0;  // vertex for simple and injective
  int s = 0;
};
/// Weyl modules become N'(t,t-1), dual Weyl modules N(t,t-1); Weyl modules
/// that are simple become simples. Throws DomainError for Steinberg weights.
LocalLabel localize(const ComoduleLabel& x, int ell);
/// Inverse of localize, preferring Simple and Injective over string names.
ComoduleLabel globalize(const LocalLabel& x, int ell);

/// Socle series, bottom layer first; weights in a layer ascending.
std::vector<std::vector<int>> socle_layers(const ComoduleLabel& x, int ell);

int dim(const ComoduleLabel& x, int ell);
int simple_dim(int r, int ell);

/// Composition factors as a sorted multiset of weights.
std::vector<int> composition_factors(const ComoduleLabel& x, int ell);

/// The presentation B_n on the quiver 0 <-> 1 <-> ... <-> n with arrows
/// a_j: j -> j+1, b_j: j+1 -> j and elements d_0 = b0a0,
/// d_j = a_{j-1}b_{j-1} + b_j a_j. Vertex n is marked as a boundary.
/// The presentation is the same for every nontrivial block.
CoalgebraPresentation basic_block(int n);
/// B'_n: the same quiver with no elements beyond vertices and arrows.
CoalgebraPresentation basic_block_string(int n);

int arrow_a(int j, int n);
int arrow_b(int j, int n);

/// The defining word over B'_n of a simple or string label. Throws DomainError
/// for injective labels and WindowOverflow if the label leaves [0, n].
Word string_word(const ComoduleLabel& x, int ell, int n);

/// Largest block vertex touched by the label (m+1 for the injective at m).
int max_support(const ComoduleLabel& x, int ell);

/// Dimension vector over B_n.
std::vector<int> label_dimension_vector(const ComoduleLabel& x, int ell, int n);

/// A representation over basic_block(n). Requires max_support <= n - 2.
Representation realize(const ComoduleLabel& x, int ell, int n);

/// The injective at block vertex m as a representation over basic_block(n).
Representation realize_injective(int m, int n);

/// Interchanges M and M', N and N'; fixes simples and injectives; Weyl and
/// dual Weyl modules are interchanged.
ComoduleLabel duality(const ComoduleLabel& x, int ell);

/// Every indecomposable of the block with dimension vector v inside the window
/// [0, n]: strings supported on an interval, plus injectives.
std::vector<ComoduleLabel> indecomposables_with_dimension_vector(int block, const std::vector<int>& v, int ell, int n);

/// Weights of L(r) with multiplicity, descending.
std::vector<int> weights(int r, int ell);

}  // namespace sbc
