#include "sbc/quiver.hpp"

#include "sbc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sbc {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw DomainError("duplicate vertex '" + v + "'");
  }
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw DomainError("duplicate arrow '" + a.name + "'");
    auto s = find_vertex(a.from);
    auto t = find_vertex(a.to);
    if (!s || !t) throw DomainError("arrow '" + a.name + "' has an endpoint that is not a vertex");
    arrows_.push_back(Arrow{a.name, *s, *t});
  }
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Quiver::vertex_index(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  if (auto a = find_arrow(name)) return *a;
  throw DomainError("unknown arrow '" + name + "'");
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrow(a).source == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrow(a).target == v) out.push_back(a);
  return out;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path make_path(const Quiver& q, int source, const std::vector<std::string>& arrow_names) {
  if (source < 0 || source >= q.vertex_count()) throw DomainError("path source out of range");
  Path p = Path::trivial(source);
  for (const auto& name : arrow_names) {
    const int a = q.arrow_index(name);
    if (q.arrow(a).source != p.target)
      throw CompositionError("arrow '" + name + "' does not start at " + q.vertex_name(p.target));
    p.arrows.push_back(a);
    p.target = q.arrow(a).target;
  }
  return p;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names) {
  if (arrow_names.empty()) throw DomainError("a trivial path needs an explicit vertex");
  return make_path(q, q.arrow(q.arrow_index(arrow_names.front())).source, arrow_names);
}

Path arrow_path(const Quiver& q, int arrow) {
  const auto& a = q.arrow(arrow);
  return Path{a.source, a.target, {arrow}};
}

Path compose_paths(const Quiver& q, const Path& p, const Path& first) {
  if (first.target != p.source) {
    throw CompositionError("cannot compose: " + render_path(q, first) + " ends at " +
                           q.vertex_name(first.target) + " but " + render_path(q, p) + " starts at " +
                           q.vertex_name(p.source));
  }
  Path out{first.source, p.target, first.arrows};
  out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

std::vector<std::pair<Path, Path>> coproduct_terms(const Quiver& q, const Path& p) {
  std::vector<std::pair<Path, Path>> out;
  const std::size_t n = p.arrows.size();
  for (std::size_t left_len = 0; left_len <= n; ++left_len) {
    // The right factor is the first k arrows traversed, the left factor the rest.
    const std::size_t k = n - left_len;
    const int junction = k == n ? p.target : q.arrow(p.arrows[k]).source;
    Path right{p.source, junction, {p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(k)}};
    Path left{junction, p.target, {p.arrows.begin() + static_cast<std::ptrdiff_t>(k), p.arrows.end()}};
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

namespace {

void extend_paths(const Quiver& q, Path& current, int remaining, std::vector<Path>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int a : q.arrows_from(current.target)) {
    const int saved = current.target;
    current.arrows.push_back(a);
    current.target = q.arrow(a).target;
    extend_paths(q, current, remaining - 1, out);
    current.arrows.pop_back();
    current.target = saved;
  }
}

}  // namespace

std::vector<Path> paths_from(const Quiver& q, int source, int length) {
  std::vector<Path> out;
  Path p = Path::trivial(source);
  extend_paths(q, p, length, out);
  return out;
}

std::vector<Path> all_paths(const Quiver& q, int length) {
  std::vector<Path> out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto more = paths_from(q, v, length);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::string render_path(const Quiver& q, const Path& p) {
  std::ostringstream os;
  os << q.vertex_name(p.source);
  for (int a : p.arrows) os << " -" << q.arrow(a).name << "-> " << q.vertex_name(q.arrow(a).target);
  return os.str();
}

std::string path_word(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out += q.arrow(*it).name;
  return out;
}

void PathVector::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PathVector& PathVector::operator+=(const PathVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PathVector& PathVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

Rational PathVector::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Path> PathVector::support() const {
  std::vector<Path> out;
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

int PathVector::max_length() const {
  int m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

std::string render_path_vector(const Quiver& q, const PathVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << path_word(q, p);
    first = false;
  }
  return os.str();
}

PathSpan::PathSpan(std::span<const PathVector> generators) {
  std::set<Path> paths;
  for (const auto& g : generators)
    for (const auto& [p, c] : g.terms()) paths.insert(p);
  index_.assign(paths.begin(), paths.end());
  for (std::size_t i = 0; i < index_.size(); ++i) column_[index_[i]] = static_cast<Eigen::Index>(i);

  QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(generators.size()), static_cast<Eigen::Index>(index_.size()));
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (const auto& [p, c] : generators[r].terms()) m(static_cast<Eigen::Index>(r), column_.at(p)) = c;
  auto e = rref(m);
  basis_ = e.reduced.topRows(e.rank());
  pivots_ = std::move(e.pivots);
}

bool PathSpan::contains(const PathVector& v) const {
  QRowVector r = QRowVector::Zero(static_cast<Eigen::Index>(index_.size()));
  for (const auto& [p, c] : v.terms()) {
    auto it = column_.find(p);
    if (it == column_.end()) return false;
    r(it->second) = c;
  }
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r(pivots_[i]);
    if (f != 0) r -= f * basis_.row(static_cast<Eigen::Index>(i));
  }
  return is_zero(r);
}

std::vector<PathVector> PathSpan::basis() const {
  std::vector<PathVector> out;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    PathVector v;
    for (Eigen::Index j = 0; j < basis_.cols(); ++j) v.add(index_[static_cast<std::size_t>(j)], basis_(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<PathVector> CoalgebraPresentation::spanning_set() const {
  std::vector<PathVector> out;
  for (int v = 0; v < quiver.vertex_count(); ++v) out.emplace_back(Path::trivial(v));
  for (int a = 0; a < quiver.arrow_count(); ++a) out.emplace_back(arrow_path(quiver, a));
  out.insert(out.end(), elements.begin(), elements.end());
  return out;
}

bool CoalgebraPresentation::on_boundary(int vertex) const {
  return std::find(boundary.begin(), boundary.end(), vertex) != boundary.end();
}

bool appears(const Path& p, const CoalgebraPresentation& b) {
  if (p.length() <= 1) return true;
  for (const auto& e : b.elements)
    if (e.terms().count(p)) return true;
  return false;
}

bool is_subcoalgebra(const Quiver& q, std::span<const PathVector> generators) {
  const PathSpan span(generators);
  for (const auto& g : generators) {
    std::map<Path, PathVector> left_by_right;
    std::map<Path, PathVector> right_by_left;
    for (const auto& [p, c] : g.terms()) {
      for (const auto& [left, right] : coproduct_terms(q, p)) {
        left_by_right[right].add(left, c);
        right_by_left[left].add(right, c);
      }
    }
    for (const auto& [k, v] : left_by_right)
      if (!span.contains(v)) return false;
    for (const auto& [k, v] : right_by_left)
      if (!span.contains(v)) return false;
  }
  return true;
}

bool check_subcoalgebra(const CoalgebraPresentation& b) {
  const auto gens = b.spanning_set();
  return is_subcoalgebra(b.quiver, gens);
}

bool same_span(const CoalgebraPresentation& a, const CoalgebraPresentation& b) {
  if (!(a.quiver == b.quiver)) return false;
  const auto ga = a.spanning_set();
  const auto gb = b.spanning_set();
  const PathSpan sa(ga);
  const PathSpan sb(gb);
  if (sa.dimension() != sb.dimension()) return false;
  for (const auto& v : gb)
    if (!sa.contains(v)) return false;
  return true;
}

CoalgebraPresentation path_coalgebra_truncation(const Quiver& q, int max_length) {
  CoalgebraPresentation b{q, {}, {}};
  for (int len = 2; len <= max_length; ++len)
    for (auto& p : all_paths(q, len)) b.elements.emplace_back(p);
  return b;
}

GradedPiece graded_piece(const CoalgebraPresentation& b, int source, int target) {
  std::vector<PathVector> projected;
  std::set<Path> paths;
  for (const auto& g : b.spanning_set()) {
    PathVector part;
    for (const auto& [p, c] : g.terms())
      if (p.source == source && p.target == target) part.add(p, c);
    if (part.empty()) continue;
    for (const auto& [p, c] : part.terms()) paths.insert(p);
    projected.push_back(std::move(part));
  }
  GradedPiece piece;
  piece.paths.assign(paths.begin(), paths.end());
  std::map<Path, Eigen::Index> col;
  for (std::size_t i = 0; i < piece.paths.size(); ++i) col[piece.paths[i]] = static_cast<Eigen::Index>(i);
  QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(projected.size()), static_cast<Eigen::Index>(piece.paths.size()));
  for (std::size_t r = 0; r < projected.size(); ++r)
    for (const auto& [p, c] : projected[r].terms()) m(static_cast<Eigen::Index>(r), col.at(p)) = c;
  auto e = rref(m);
  piece.basis = e.reduced.topRows(e.rank());
  return piece;
}

}  // namespace sbc
