#pragma once

// Syzygies, almost split sequences and Auslander-Reiten quiver windows for the
// nontrivial quantum SL(2) blocks.
//
// Every non-injective indecomposable of a block is Omega^{-k} S(n) for a unique
// orbit coordinate (k, n) with n >= 0. Omega and its inverse shift k.

#include "sbc/quantum_sl2.hpp"
#include "sbc/representation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sbc {

struct OrbitCoord {
  int block = 0;
  int k = 0;
  int n = 0;
  friend bool operator==(const OrbitCoord&, const OrbitCoord&) = default;
};

/// Throws DomainError for injective labels.
OrbitCoord orbit_of(const ComoduleLabel& x, int ell);
ComoduleLabel label_of(const OrbitCoord& c, int ell);

ComoduleLabel omega(const ComoduleLabel& x, int ell);
ComoduleLabel omega_inv(const ComoduleLabel& x, int ell);
/// Omega^j; negative j applies the inverse.
ComoduleLabel omega_power(const ComoduleLabel& x, int j, int ell);

/// Cokernel of an injective hull built from realized injectives of b. Throws
/// WindowOverflow when a socle vertex sits on the truncation boundary.
Representation omega_inv_oracle(const Representation& m, const CoalgebraPresentation& b);
/// Kernel of a projective cover built from the projective injectives of b.
Representation omega_oracle(const Representation& m, const CoalgebraPresentation& b);

struct AlmostSplitSeq {
  ComoduleLabel left;
  std::vector<ComoduleLabel> middle;
  ComoduleLabel right;
};

/// The almost split sequence ending in a non-injective indecomposable.
AlmostSplitSeq almost_split(const ComoduleLabel& right, int ell);

struct ARNode {
  std::string label;
  int k = 0;  // orbit coordinate; 0 for injective nodes
  int n = 0;  // orbit coordinate, or the block vertex of an injective
  bool injective = false;
  int component = 0;

  friend bool operator==(const ARNode&, const ARNode&) = default;
};

struct ARWindowGraph {
  int ell = 0;
  int block = 0;
  std::vector<ARNode> nodes;
  std::vector<std::pair<int, int>> edges;  // node indices, sorted

  friend bool operator==(const ARWindowGraph&, const ARWindowGraph&) = default;
};

/// Nodes Omega^{-k} S(n) for k in [kmin, kmax], 0 <= n <= nmax, plus I_n
/// (n <= nmax) when 0 lies in [kmin, kmax]. Components are numbered in order
/// of first appearance.
ARWindowGraph ar_window(int block, int kmin, int kmax, int nmax, int ell);

std::string export_dot(const ARWindowGraph& g);
std::string export_json(const ARWindowGraph& g);
/// Throws ParseError on malformed input.
ARWindowGraph parse_ar_json(const std::string& text);

}  // namespace sbc
