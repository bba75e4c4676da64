#pragma once

// Special biserial and string conditions, the shape of indecomposable
// injectives, and reduction to the associated string coalgebra.

#include "sbc/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbc {

struct BiserialReport {
  bool s1 = true;  // at most two arrows start and at most two end at each vertex
  bool s2 = true;  // each arrow has at most one continuation on either side within B
  bool s3 = true;  // B is spanned by paths
  std::optional<std::string> s1_witness;
  std::optional<std::string> s2_witness;
  std::optional<std::string> s3_witness;

  bool special_biserial() const { return s1 && s2; }
  bool string_coalgebra() const { return s1 && s2 && s3; }
};

BiserialReport check_special_biserial(const CoalgebraPresentation& b);

enum class InjectiveCase { a, b, c, d };

char case_letter(InjectiveCase c);

/// Shape of I(g):
///   a  uniserial, generated by one path (or e_g);
///   b  two maximal paths ending at g with different starting vertices;
///   c  two maximal paths ending at g with a common starting vertex;
///   d  generated by a reduced element p + lambda q of two maximal paths.
struct InjectiveForm {
  InjectiveCase kind = InjectiveCase::a;
  std::vector<Path> maximal_paths;
  std::optional<PathVector> generator;  // case d only
};

/// Throws WindowOverflow when g is a truncation boundary vertex and
/// DomainError when B is not special biserial.
InjectiveForm injective_form(const CoalgebraPresentation& b, int g);

/// Vertices whose injective is projective and not simple.
std::vector<int> projective_injective_vertices(const CoalgebraPresentation& b);

/// Replaces I(g) by rad I(g) for every projective-injective non-simple I(g).
/// Throws DomainError when B is not special biserial.
CoalgebraPresentation associated_string_coalgebra(const CoalgebraPresentation& b);

}  // namespace sbc
