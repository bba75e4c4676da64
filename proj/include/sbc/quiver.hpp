#pragma once

// Quivers, paths and admissible subcoalgebras of path coalgebras.
//
// A path is stored in traversal order: arrows[0] is applied first. In the
// usual right-to-left notation the path b0 a0 (a0 then b0) is stored as
// {a0, b0}. Text rendering is always left-to-right in traversal order with
// the endpoints spelled out, e.g. "0 -a0-> 1 -b0-> 0".

#include "sbc/linalg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sbc {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct ArrowSpec {
  std::string name;
  std::string from;
  std::string to;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;
  int vertex_index(const std::string& name) const;  // throws DomainError
  int arrow_index(const std::string& name) const;   // throws DomainError

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // traversal order

  static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path from arrow names in traversal order; validates composability.
Path make_path(const Quiver& q, int source, const std::vector<std::string>& arrow_names);
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names);
Path arrow_path(const Quiver& q, int arrow);

/// Concatenation p q (q traversed first). Requires t(q) = s(p).
Path compose_paths(const Quiver& q, const Path& p, const Path& first);

/// Coproduct of a path as (left, right) tensor factors, ordered by the length
/// of the left factor, ascending: (t(p), p), ..., (p, s(p)).
std::vector<std::pair<Path, Path>> coproduct_terms(const Quiver& q, const Path& p);

/// All paths of exactly `length` arrows starting at `source`.
std::vector<Path> paths_from(const Quiver& q, int source, int length);
/// All paths of exactly `length` arrows in the quiver.
std::vector<Path> all_paths(const Quiver& q, int length);

std::string render_path(const Quiver& q, const Path& p);
/// Right-to-left concatenation notation, e.g. "b0a0"; vertices render as "e_<v>".
std::string path_word(const Quiver& q, const Path& p);

/// A reduced element: a finite combination of distinct paths with nonzero
/// rational coefficients.
class PathVector {
 public:
  PathVector() = default;
  explicit PathVector(const Path& p, const Rational& c = Rational(1)) { add(p, c); }

  void add(const Path& p, const Rational& c);
  PathVector& operator+=(const PathVector& other);
  PathVector& operator*=(const Rational& c);

  const std::map<Path, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Path& p) const;
  std::vector<Path> support() const;
  int max_length() const;

  friend bool operator==(const PathVector&, const PathVector&) = default;

 private:
  std::map<Path, Rational> terms_;
};

std::string render_path_vector(const Quiver& q, const PathVector& v);

/// Span of a set of path vectors, with exact membership tests.
class PathSpan {
 public:
  PathSpan() = default;
  explicit PathSpan(std::span<const PathVector> generators);

  bool contains(const PathVector& v) const;
  Eigen::Index dimension() const { return basis_.rows(); }
  /// Reduced echelon basis, one path vector per pivot row.
  std::vector<PathVector> basis() const;

 private:
  std::vector<Path> index_;
  std::map<Path, Eigen::Index> column_;
  QMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

/// A finite admissible subcoalgebra of a path coalgebra. Vertices and arrows are
/// implicitly in the span; `elements` lists the further spanning elements.
/// `boundary` marks vertices where a finite window truncates an infinite
/// coalgebra, so injectives there are not the true ones.
struct CoalgebraPresentation {
  Quiver quiver;
  std::vector<PathVector> elements;
  std::vector<int> boundary;

  /// Vertices, arrows, then `elements`.
  std::vector<PathVector> spanning_set() const;
  bool on_boundary(int vertex) const;
};

/// p appears in B: p lies in the support of some element of B.
bool appears(const Path& p, const CoalgebraPresentation& b);

/// Whether span(generators) is closed under every left and right coproduct
/// component, i.e. Delta(B) lies in B (x) B.
bool is_subcoalgebra(const Quiver& q, std::span<const PathVector> generators);
bool check_subcoalgebra(const CoalgebraPresentation& b);

/// Same quiver and same span.
bool same_span(const CoalgebraPresentation& a, const CoalgebraPresentation& b);

/// The subcoalgebra spanned by all paths of length at most `max_length`.
CoalgebraPresentation path_coalgebra_truncation(const Quiver& q, int max_length);

/// Components of the elements of B grouped by (source, target): all paths of
/// every length from `source` to `target` that appear, plus an echelon basis of
/// the projections of B's spanning set onto their span.
struct GradedPiece {
  std::vector<Path> paths;
  QMatrix basis;  // rows: basis vectors over `paths`
};
GradedPiece graded_piece(const CoalgebraPresentation& b, int source, int target);

}  // namespace sbc
