#include "sbc/words.hpp"

#include "sbc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sbc {

int letter_source(const Quiver& q, const Letter& l) {
  const auto& a = q.arrow(l.arrow);
  return l.inverse ? a.target : a.source;
}

int letter_target(const Quiver& q, const Letter& l) {
  const auto& a = q.arrow(l.arrow);
  return l.inverse ? a.source : a.target;
}

Word make_word(const Quiver& q, std::vector<Letter> letters, std::optional<int> base) {
  for (const auto& l : letters)
    if (l.arrow < 0 || l.arrow >= q.arrow_count()) throw DomainError("letter refers to an unknown arrow");
  if (letters.empty()) {
    if (!base) throw DomainError("an empty word needs a base vertex");
    if (*base < 0 || *base >= q.vertex_count()) throw DomainError("base vertex out of range");
    return Word{*base, {}};
  }
  const int start = letter_source(q, letters.front());
  if (base && *base != start) throw DomainError("base vertex does not match the first letter");
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letter_target(q, letters[i - 1]) != letter_source(q, letters[i]))
      throw DomainError("letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not compose");
    if (letters[i] == letters[i - 1].inverted())
      throw DomainError("letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " cancel");
  }
  return Word{start, std::move(letters)};
}

int word_start(const Quiver&, const Word& w) { return w.base; }

int word_end(const Quiver& q, const Word& w) { return w.empty() ? w.base : letter_target(q, w.letters.back()); }

Word inverse(const Quiver& q, const Word& w) {
  Word out{word_end(q, w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverted());
  return out;
}

bool word_less(const Quiver& q, const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.empty()) return q.vertex_name(a.base) < q.vertex_name(b.base);
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    const auto& x = a.letters[i];
    const auto& y = b.letters[i];
    const auto& nx = q.arrow(x.arrow).name;
    const auto& ny = q.arrow(y.arrow).name;
    if (nx != ny) return nx < ny;
    if (x.inverse != y.inverse) return !x.inverse;
  }
  return false;
}

Word canonical(const Quiver& q, const Word& w) {
  Word inv = inverse(q, w);
  return word_less(q, inv, w) ? inv : w;
}

namespace {

// Every subpath of length >= 2 of a path must appear.
bool subpaths_appear(const Quiver& q, const std::vector<int>& arrows, const CoalgebraPresentation& b) {
  const std::size_t n = arrows.size();
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      Path p{q.arrow(arrows[i]).source, q.arrow(arrows[i + len - 1]).target,
             {arrows.begin() + static_cast<std::ptrdiff_t>(i), arrows.begin() + static_cast<std::ptrdiff_t>(i + len)}};
      if (!appears(p, b)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_string(const Word& w, const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j].inverse == w.letters[i].inverse) ++j;
    std::vector<int> run;
    for (std::size_t k = i; k < j; ++k) run.push_back(w.letters[k].arrow);
    // An inverse run walks a path backwards.
    if (w.letters[i].inverse) std::reverse(run.begin(), run.end());
    if (!subpaths_appear(q, run, b)) return false;
    i = j;
  }
  return true;
}

Representation string_module(const Quiver& q, const Word& w) {
  Representation m = Representation::zero(q);
  const std::size_t n = w.letters.size();
  std::vector<int> vertex(n + 1);
  std::vector<int> slot(n + 1);
  vertex[0] = w.base;
  for (std::size_t i = 1; i <= n; ++i) vertex[i] = letter_target(q, w.letters[i - 1]);
  for (std::size_t i = 0; i <= n; ++i) slot[i] = m.dims[static_cast<std::size_t>(vertex[i])]++;

  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    m.maps[static_cast<std::size_t>(a)] = QMatrix::Zero(m.dims[static_cast<std::size_t>(arr.target)],
                                                        m.dims[static_cast<std::size_t>(arr.source)]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Letter& l = w.letters[i - 1];
    const std::size_t from = l.inverse ? i : i - 1;
    const std::size_t to = l.inverse ? i - 1 : i;
    m.maps[static_cast<std::size_t>(l.arrow)](slot[to], slot[from]) = 1;
  }
  return m;
}

namespace {

struct WordOrder {
  const Quiver* q;
  bool operator()(const Word& a, const Word& b) const { return word_less(*q, a, b); }
};

void extend_strings(const CoalgebraPresentation& b, Word& w, int remaining, std::set<Word, WordOrder>& out) {
  out.insert(canonical(b.quiver, w));
  if (remaining == 0) return;
  const Quiver& q = b.quiver;
  const int end = word_end(q, w);
  for (int a = 0; a < q.arrow_count(); ++a) {
    for (bool inv : {false, true}) {
      const Letter l{a, inv};
      if (letter_source(q, l) != end) continue;
      if (!w.letters.empty() && l == w.letters.back().inverted()) continue;
      w.letters.push_back(l);
      if (is_string(w, b)) extend_strings(b, w, remaining - 1, out);
      w.letters.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> enumerate_strings(const CoalgebraPresentation& b, int max_letters) {
  std::set<Word, WordOrder> found(WordOrder{&b.quiver});
  for (int v = 0; v < b.quiver.vertex_count(); ++v) {
    Word w{v, {}};
    extend_strings(b, w, max_letters, found);
  }
  return {found.begin(), found.end()};
}

std::string render_word(const Quiver& q, const Word& w) {
  if (w.empty()) return "e_" + q.vertex_name(w.base);
  std::ostringstream os;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it != w.letters.rbegin()) os << ' ';
    os << q.arrow(it->arrow).name;
    if (it->inverse) os << "^-1";
  }
  return os.str();
}

Word parse_word(const Quiver& q, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  if (tokens.empty()) throw ParseError("empty word text", 0);
  if (tokens.size() == 1 && tokens[0].rfind("e_", 0) == 0) {
    auto v = q.find_vertex(tokens[0].substr(2));
    if (!v) throw ParseError("unknown vertex in '" + tokens[0] + "'", text.find(tokens[0]));
    return Word{*v, {}};
  }
  std::vector<Letter> letters;
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    pos = text.find(t, pos);
    std::string name = t;
    bool inv = false;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      name.resize(name.size() - 3);
      inv = true;
    }
    auto a = q.find_arrow(name);
    if (!a) throw ParseError("unknown arrow '" + name + "'", pos);
    letters.push_back(Letter{*a, inv});
    pos += t.size();
  }
  std::reverse(letters.begin(), letters.end());
  return make_word(q, std::move(letters));
}

}  // namespace sbc
