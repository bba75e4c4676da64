#include "sbc/serialize.hpp"

#include "sbc/errors.hpp"

#include <cctype>

namespace sbc {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  const std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  const std::size_t slash = text.find('/');
  const std::size_t end = slash == std::string::npos ? text.size() : slash;
  if (!digits(start, end)) throw ParseError("malformed rational '" + text + "'", start);
  boost::multiprecision::mpz_int num(text.substr(start, end - start));
  if (start == 1 && text[0] == '-') num = -num;
  if (slash == std::string::npos) return Rational(num);
  if (!digits(slash + 1, text.size())) throw ParseError("malformed denominator in '" + text + "'", slash + 1);
  boost::multiprecision::mpz_int den(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'", slash + 1);
  return Rational(num, den);
}

namespace {

Json path_to_json(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return Json{{"vertex", q.vertex_name(p.source)}};
  Json names = Json::array();
  for (int a : p.arrows) names.push_back(q.arrow(a).name);
  return names;
}

Path path_from_json(const Quiver& q, const Json& j) {
  if (j.is_object()) return Path::trivial(q.vertex_index(j.at("vertex").get<std::string>()));
  if (!j.is_array() || j.empty()) throw ParseError("a path is a nonempty arrow-name list or {\"vertex\": v}");
  std::vector<std::string> names;
  for (const auto& n : j) names.push_back(n.get<std::string>());
  return make_path(q, names);
}

std::string coeff_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("coefficients are decimal strings of rationals");
}

template <typename F>
auto wrap_json(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const CoalgebraPresentation& b) {
  const Quiver& q = b.quiver;
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"name", a.name}, {"from", q.vertex_name(a.source)}, {"to", q.vertex_name(a.target)}});
  j["elements"] = Json::array();
  for (const auto& e : b.elements) {
    Json terms = Json::array();
    for (const auto& [p, c] : e.terms()) terms.push_back({{"path", path_to_json(q, p)}, {"coeff", to_string(c)}});
    j["elements"].push_back(std::move(terms));
  }
  if (!b.boundary.empty()) {
    j["boundary"] = Json::array();
    for (int v : b.boundary) j["boundary"].push_back(q.vertex_name(v));
  }
  return j;
}

CoalgebraPresentation presentation_from_json(const Json& j) {
  return wrap_json([&] {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<ArrowSpec> arrows;
    const auto name = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& a : j.at("arrows")) arrows.push_back({a.at("name").get<std::string>(), name(a.at("from")), name(a.at("to"))});
    CoalgebraPresentation b{Quiver(std::move(vertices), arrows), {}, {}};
    if (j.contains("elements")) {
      for (const auto& e : j.at("elements")) {
        PathVector v;
        for (const auto& t : e) v.add(path_from_json(b.quiver, t.at("path")), parse_rational(coeff_text(t.at("coeff"))));
        if (v.empty()) throw ParseError("an element reduced to zero");
        b.elements.push_back(std::move(v));
      }
    }
    if (j.contains("boundary"))
      for (const auto& v : j.at("boundary")) b.boundary.push_back(b.quiver.vertex_index(name(v)));
    return b;
  });
}

CoalgebraPresentation parse_presentation(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  return presentation_from_json(j);
}

Json to_json(const Quiver& q, const Word& w) {
  Json j = Json::array();
  for (const auto& l : w.letters) j.push_back({{"arrow", q.arrow(l.arrow).name}, {"dir", l.inverse ? "-" : "+"}});
  return j;
}

Word word_from_json(const Quiver& q, const Json& j, std::optional<int> base) {
  return wrap_json([&] {
    std::vector<Letter> letters;
    for (const auto& l : j) {
      const auto dir = l.at("dir").get<std::string>();
      if (dir != "+" && dir != "-") throw ParseError("letter direction must be \"+\" or \"-\"");
      letters.push_back(Letter{q.arrow_index(l.at("arrow").get<std::string>()), dir == "-"});
    }
    return make_word(q, std::move(letters), base);
  });
}

Json to_json(const Quiver& q, const Representation& m) {
  Json j;
  j["dims"] = Json::object();
  for (int v = 0; v < q.vertex_count(); ++v) j["dims"][q.vertex_name(v)] = m.dims[static_cast<std::size_t>(v)];
  j["matrices"] = Json::object();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& x = m.maps[static_cast<std::size_t>(a)];
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < x.cols(); ++c) row.push_back(to_string(x(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrices"][q.arrow(a).name] = std::move(rows);
  }
  return j;
}

Representation representation_from_json(const Quiver& q, const Json& j) {
  return wrap_json([&] {
    Representation m = Representation::zero(q);
    for (int v = 0; v < q.vertex_count(); ++v) m.dims[static_cast<std::size_t>(v)] = j.at("dims").at(q.vertex_name(v)).get<int>();
    for (int a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      const Eigen::Index rows = m.dims[static_cast<std::size_t>(arr.target)];
      const Eigen::Index cols = m.dims[static_cast<std::size_t>(arr.source)];
      QMatrix x = QMatrix::Zero(rows, cols);
      const auto& jm = j.at("matrices").at(arr.name);
      if (static_cast<Eigen::Index>(jm.size()) != rows) throw ParseError("matrix for '" + arr.name + "' has the wrong row count");
      for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& jr = jm.at(static_cast<std::size_t>(r));
        if (static_cast<Eigen::Index>(jr.size()) != cols) throw ParseError("matrix for '" + arr.name + "' has the wrong column count");
        for (Eigen::Index c = 0; c < cols; ++c) x(r, c) = parse_rational(coeff_text(jr.at(static_cast<std::size_t>(c))));
      }
      m.maps[static_cast<std::size_t>(a)] = std::move(x);
    }
    validate(q, m);
    return m;
  });
}

Json to_json(const Cyclotomic& c) {
  Json j;
  j["ell"] = c.ell();
  j["coefficients"] = c.coefficients();
  j["pretty"] = render(c);
  return j;
}

Json to_json(const GreenElem& g) {
  Json j;
  j["ell"] = g.ell();
  j["terms"] = Json::array();
  for (const auto& [m, c] : g.terms()) j["terms"].push_back({{"w", m.m}, {"x", m.i}, {"y", m.j}, {"coeff", c}});
  j["pretty"] = render(g);
  return j;
}

}  // namespace sbc
