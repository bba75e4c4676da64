#include "sbc/cli_io.hpp"

#include "sbc/biserial.hpp"
#include "sbc/qdim_green.hpp"
#include "sbc/serialize.hpp"
#include "sbc/syzygy_ar.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sbc {

namespace {

class LabelParser {
 public:
  LabelParser(const std::string& text, int ell) : text_(text), ell_(ell) {}

  ComoduleLabel parse() {
    skip_space();
    ComoduleLabel out;
    if (accept("coV")) out = dual_weyl_label(weight());
    else if (accept("L")) out = simple_label(weight());
    else if (accept("V")) out = weyl_label(weight());
    else if (accept("I")) out = injective_label(weight());
    else if (peek('M') || peek('N')) out = string_family();
    else fail("expected one of L, V, coV, I, M, M', N, N'");
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool accept(const std::string& token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    skip_space();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip_space();
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(text_.substr(start, pos_ - start));
  }

  int weight() {
    expect('(');
    const int r = integer();
    expect(')');
    return r;
  }

  ComoduleLabel string_family() {
    Family f = Family::m;
    if (accept("M'")) f = Family::m_prime;
    else if (accept("M")) f = Family::m;
    else if (accept("N'")) f = Family::n_prime;
    else if (accept("N")) f = Family::n;
    expect('(');
    const std::size_t at = pos_;
    const int t = integer();
    expect(',');
    const int s = integer();
    expect(')');
    if (!accept("@b")) fail("expected '@b<block>' after a string label");
    const std::size_t block_at = pos_;
    const int block = integer();
    if (block > ell_ - 2) {
      pos_ = block_at;
      fail("block base must lie in [0, " + std::to_string(ell_ - 2) + "]");
    }
    try {
      return string_label(f, block, t, s, ell_);
    } catch (const DomainError& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  const std::string& text_;
  int ell_;
  std::size_t pos_ = 0;
};

std::string join_labels(const std::vector<ComoduleLabel>& labels, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? sep : "") + render_label(labels[i]);
  return out;
}

Json labels_json(const std::vector<ComoduleLabel>& labels) {
  Json j = Json::array();
  for (const auto& x : labels) j.push_back(render_label(x));
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  int ell = 0;
  int block = -1;
  int window = -1;
  bool json = false;
  bool dot = false;
  bool oracle = false;
  bool associated = false;
  std::string presentation;
  int kmin = -1;
  int kmax = 1;
  int nmax = 2;
  int max_letters = 2;
  std::string label;
  std::vector<int> numbers;
};

CoalgebraPresentation input_presentation(const Options& o, bool string_default) {
  if (!o.presentation.empty()) return parse_presentation(read_file(o.presentation));
  const int n = o.window < 0 ? 2 : o.window;
  return string_default ? basic_block_string(n) : basic_block(n);
}

int label_window(const Options& o, const std::vector<ComoduleLabel>& labels) {
  int need = 0;
  for (const auto& x : labels) need = std::max(need, max_support(x, o.ell) + 2);
  return o.window < 0 ? need : o.window;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_check_biserial(const Options& o, std::ostream& out) {
  CoalgebraPresentation b = input_presentation(o, false);
  if (o.associated) b = associated_string_coalgebra(b);
  const auto r = check_special_biserial(b);
  Json forms = Json::array();
  std::vector<std::string> lines;
  if (r.special_biserial()) {
    for (int g = 0; g < b.quiver.vertex_count(); ++g) {
      if (b.on_boundary(g)) continue;
      const auto f = injective_form(b, g);
      Json paths = Json::array();
      std::string text;
      for (const auto& p : f.maximal_paths) {
        paths.push_back(path_word(b.quiver, p));
        text += (text.empty() ? "" : ", ") + path_word(b.quiver, p);
      }
      Json jf{{"vertex", b.quiver.vertex_name(g)}, {"case", std::string(1, case_letter(f.kind))}, {"paths", paths}};
      if (f.generator) {
        jf["generator"] = render_path_vector(b.quiver, *f.generator);
        text = render_path_vector(b.quiver, *f.generator);
      }
      forms.push_back(std::move(jf));
      lines.push_back("I_" + b.quiver.vertex_name(g) + ": case " + case_letter(f.kind) + ", " + text);
    }
  }
  if (o.json) {
    Json j;
    j["S1"] = r.s1;
    j["S2"] = r.s2;
    j["S3"] = r.s3;
    Json w = Json::object();
    if (r.s1_witness) w["S1"] = *r.s1_witness;
    if (r.s2_witness) w["S2"] = *r.s2_witness;
    if (r.s3_witness) w["S3"] = *r.s3_witness;
    j["witnesses"] = w;
    j["injective_forms"] = forms;
    if (o.associated) j["presentation"] = to_json(b);
    print(out, j);
    return;
  }
  const auto line = [&](const char* name, bool ok, const std::optional<std::string>& w) {
    out << name << " " << (ok ? "true" : "false");
    if (w) out << "  (" << *w << ")";
    out << "\n";
  };
  line("S1", r.s1, r.s1_witness);
  line("S2", r.s2, r.s2_witness);
  line("S3", r.s3, r.s3_witness);
  for (const auto& l : lines) out << l << "\n";
  if (o.associated) out << to_json(b).dump() << "\n";
}

void cmd_strings(const Options& o, std::ostream& out) {
  const auto b = input_presentation(o, true);
  const auto words = enumerate_strings(b, o.max_letters);
  if (o.json) {
    Json j = Json::array();
    for (const auto& w : words)
      j.push_back({{"start", b.quiver.vertex_name(w.base)}, {"letters", to_json(b.quiver, w)}, {"text", render_word(b.quiver, w)}});
    print(out, j);
    return;
  }
  for (const auto& w : words) out << render_word(b.quiver, w) << "\n";
}

void cmd_realize(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const int n = label_window(o, {x});
  const auto b = basic_block(n);
  const auto m = realize(x, o.ell, n);
  if (o.json) {
    Json j;
    j["label"] = render_label(x);
    j["window"] = n;
    j["representation"] = to_json(b.quiver, m);
    print(out, j);
    return;
  }
  out << render_label(x) << " over B_" << n << "\n";
  out << "dims";
  for (int d : m.dims) out << " " << d;
  out << "\n";
  for (int a = 0; a < b.quiver.arrow_count(); ++a) {
    const auto& x_a = m.maps[static_cast<std::size_t>(a)];
    if (x_a.size() == 0 || is_zero(x_a)) continue;
    out << b.quiver.arrow(a).name << ":";
    for (Eigen::Index r = 0; r < x_a.rows(); ++r) {
      out << (r ? " |" : "");
      for (Eigen::Index c = 0; c < x_a.cols(); ++c) out << " " << to_string(x_a(r, c));
    }
    out << "\n";
  }
}

void cmd_omega(const Options& o, const ComoduleLabel& x, bool inverse, std::ostream& out) {
  const ComoduleLabel y = inverse ? omega_inv(x, o.ell) : omega(x, o.ell);
  const char* name = inverse ? "omega-inv" : "omega";
  std::optional<bool> agrees;
  if (o.oracle) {
    const int n = label_window(o, {x, y});
    const auto b = basic_block(n);
    const auto m = realize(x, o.ell, n);
    const auto z = inverse ? omega_inv_oracle(m, b) : omega_oracle(m, b);
    agrees = is_isomorphic(b.quiver, z, realize(y, o.ell, n));
  }
  if (o.json) {
    Json j{{"input", render_label(x)}, {"result", render_label(y)}};
    if (agrees) j["oracle_agrees"] = *agrees;
    print(out, j);
    return;
  }
  out << name << "(" << render_label(x) << ") = " << render_label(y) << "\n";
  if (agrees) out << "oracle " << (*agrees ? "agrees" : "DISAGREES") << "\n";
}

void cmd_orbit(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const auto c = orbit_of(x, o.ell);
  if (o.json) {
    print(out, Json{{"label", render_label(x)}, {"block", c.block}, {"k", c.k}, {"n", c.n}});
    return;
  }
  out << render_label(x) << " = Omega^" << -c.k << " S(" << c.n << ") in block " << c.block << "  (k=" << c.k
      << ", n=" << c.n << ")\n";
}

void cmd_ass(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const auto s = almost_split(x, o.ell);
  if (o.json) {
    print(out, Json{{"left", render_label(s.left)}, {"middle", labels_json(s.middle)}, {"right", render_label(s.right)}});
    return;
  }
  out << "0 -> " << render_label(s.left) << " -> " << join_labels(s.middle, " + ") << " -> " << render_label(s.right)
      << " -> 0\n";
}

void cmd_ar_quiver(const Options& o, std::ostream& out) {
  if (o.block < 0) throw DomainError("ar-quiver needs --block");
  const auto g = ar_window(o.block, o.kmin, o.kmax, o.nmax, o.ell);
  out << (o.json ? export_json(g) : export_dot(g));
}

void cmd_qdim(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const auto q = qdim(x, o.ell);
  std::optional<bool> agrees;
  if (o.oracle) agrees = q == qdim_trace_oracle(x, o.ell);
  if (o.json) {
    Json j{{"label", render_label(x)}, {"qdim", to_json(q)}};
    if (agrees) j["oracle_agrees"] = *agrees;
    print(out, j);
    return;
  }
  out << render(q) << "\n";
  out << "coefficients " << render_coefficients(q) << "\n";
  if (agrees) out << "trace " << (*agrees ? "agrees" : "DISAGREES") << "\n";
}

void cmd_tensor(const Options& o, std::ostream& out) {
  if (o.numbers.size() != 2) throw DomainError("tensor takes two weights");
  const auto parts = decompose_tensor(o.numbers[0], o.numbers[1], o.ell);
  if (o.json) {
    print(out, Json{{"a", o.numbers[0]}, {"b", o.numbers[1]}, {"summands", labels_json(parts)}});
    return;
  }
  out << join_labels(parts, " ⊕ ") << "\n";
}

void cmd_green(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const auto g = green_class(x, o.ell);
  if (o.json) {
    print(out, Json{{"label", render_label(x)}, {"class", to_json(g)}});
    return;
  }
  out << render(g) << "\n";
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.block < 0) throw DomainError("enumerate needs --block");
  if (o.numbers.empty()) throw DomainError("enumerate needs a dimension vector");
  const int n = static_cast<int>(o.numbers.size()) - 1;
  const auto labels = indecomposables_with_dimension_vector(o.block, o.numbers, o.ell, n);
  if (o.json) {
    print(out, Json{{"block", o.block}, {"dimension_vector", o.numbers}, {"labels", labels_json(labels)}});
    return;
  }
  for (const auto& x : labels) out << render_label(x) << "\n";
}

void cmd_dims(const Options& o, const ComoduleLabel& x, std::ostream& out) {
  const int d = dim(x, o.ell);
  const auto factors = composition_factors(x, o.ell);
  std::optional<std::vector<std::vector<int>>> layers;
  if (!is_string_family(x.family)) layers = socle_layers(x, o.ell);
  if (o.json) {
    Json j{{"label", render_label(x)}, {"dim", d}, {"composition_factors", factors}};
    if (layers) j["socle_layers"] = *layers;
    print(out, j);
    return;
  }
  out << "dim " << d << "\n";
  out << "composition factors";
  for (int r : factors) out << " L(" << r << ")";
  out << "\n";
  if (layers) {
    out << "socle layers";
    for (const auto& layer : *layers) {
      out << " [";
      for (std::size_t i = 0; i < layer.size(); ++i) out << (i ? " " : "") << "L(" << layer[i] << ")";
      out << "]";
    }
    out << "\n";
  }
}

void report(std::ostream& out, std::ostream& err, bool json, const std::string& kind, const std::string& message,
            const std::string& detail = {}, std::optional<std::size_t> position = std::nullopt) {
  if (json) {
    Json j{{"error", message}, {"kind", kind}};
    if (position) j["position"] = *position;
    print(out, j);
    return;
  }
  err << "error: " << message << "\n";
  if (!detail.empty()) err << detail;
}

}  // namespace

ComoduleLabel parse_label(const std::string& text, int ell) {
  require_ell(ell);
  return LabelParser(text, ell).parse();
}

std::string caret_diagnostic(const std::string& text, const ParseError& e) {
  if (e.position() == ParseError::npos) return text + "\n";
  return "  " + text + "\n  " + std::string(std::min(e.position(), text.size()), ' ') + "^\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comodules of quantum SL(2) blocks and special biserial coalgebras", "sbc"};
  app.require_subcommand(1, 1);
  Options o;

  const auto common = [&](CLI::App* sub, bool needs_ell) {
    auto* e = sub->add_option("--ell", o.ell, "odd order of the root of unity");
    if (needs_ell) e->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    return sub;
  };
  const auto with_label = [&](CLI::App* sub) {
    sub->add_option("label", o.label, "comodule label")->required();
    return sub;
  };

  auto* check = common(app.add_subcommand("check-biserial", "special biserial conditions and injective shapes"), false);
  check->add_option("--presentation", o.presentation, "presentation JSON file");
  check->add_option("--window", o.window, "use the basic block B_n");
  check->add_flag("--associated", o.associated, "reduce to the associated string coalgebra first");

  auto* strings = common(app.add_subcommand("strings", "enumerate canonical strings"), false);
  strings->add_option("--presentation", o.presentation, "presentation JSON file");
  strings->add_option("--window", o.window, "use the string block B'_n");
  strings->add_option("--max-letters", o.max_letters, "maximum word length");

  auto* realize_cmd = with_label(common(app.add_subcommand("realize", "representation of a label"), true));
  realize_cmd->add_option("--window", o.window, "window size n");

  auto* omega_cmd = with_label(common(app.add_subcommand("omega", "syzygy"), true));
  auto* omega_inv_cmd = with_label(common(app.add_subcommand("omega-inv", "cosyzygy"), true));
  for (auto* sub : {omega_cmd, omega_inv_cmd}) {
    sub->add_flag("--oracle", o.oracle, "cross-check by linear algebra");
    sub->add_option("--window", o.window, "window size for the oracle");
  }
  auto* orbit_cmd = with_label(common(app.add_subcommand("orbit", "orbit coordinate"), true));
  auto* ass_cmd = with_label(common(app.add_subcommand("ass", "almost split sequence ending in a label"), true));

  auto* ar = common(app.add_subcommand("ar-quiver", "Auslander-Reiten quiver window"), true);
  ar->add_option("--block", o.block, "block base weight")->required();
  ar->add_option("--kmin", o.kmin, "smallest k");
  ar->add_option("--kmax", o.kmax, "largest k");
  ar->add_option("--nmax", o.nmax, "largest n");
  ar->add_flag("--dot", o.dot, "DOT output (default)");

  auto* qdim_cmd = with_label(common(app.add_subcommand("qdim", "quantum dimension"), true));
  qdim_cmd->add_flag("--oracle", o.oracle, "cross-check against the trace of K");

  auto* tensor = common(app.add_subcommand("tensor", "decompose L(a) (x) L(b)"), true);
  tensor->add_option("weights", o.numbers, "a b")->required()->expected(2);

  auto* green = with_label(common(app.add_subcommand("green", "stable Green ring class"), true));

  auto* enumerate = common(app.add_subcommand("enumerate", "indecomposables with a dimension vector"), true);
  enumerate->add_option("--block", o.block, "block base weight")->required();
  enumerate->add_option("dimvec", o.numbers, "dimension vector over vertices 0..n")->required();

  auto* dims = with_label(common(app.add_subcommand("dims", "dimension, composition factors, socle layers"), true));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    report(out, err, o.json, "parse", e.what());
    return exit_parse;
  }

  std::optional<ComoduleLabel> label;
  try {
    if (!o.label.empty()) label = parse_label(o.label, o.ell);
    if (*check) cmd_check_biserial(o, out);
    else if (*strings) cmd_strings(o, out);
    else if (*realize_cmd) cmd_realize(o, *label, out);
    else if (*omega_cmd) cmd_omega(o, *label, false, out);
    else if (*omega_inv_cmd) cmd_omega(o, *label, true, out);
    else if (*orbit_cmd) cmd_orbit(o, *label, out);
    else if (*ass_cmd) cmd_ass(o, *label, out);
    else if (*ar) cmd_ar_quiver(o, out);
    else if (*qdim_cmd) cmd_qdim(o, *label, out);
    else if (*tensor) cmd_tensor(o, out);
    else if (*green) cmd_green(o, *label, out);
    else if (*enumerate) cmd_enumerate(o, out);
    else if (*dims) cmd_dims(o, *label, out);
  } catch (const ParseError& e) {
    const bool in_label = !o.label.empty() && !label;
    report(out, err, o.json, "parse", e.what(), in_label ? caret_diagnostic(o.label, e) : std::string{},
           e.position() == ParseError::npos ? std::nullopt : std::optional<std::size_t>(e.position()));
    return exit_parse;
  } catch (const WindowOverflow& e) {
    report(out, err, o.json, "window", e.what());
    return exit_window;
  } catch (const Error& e) {
    report(out, err, o.json, "domain", e.what());
    return exit_domain;
  }
  return exit_ok;
}

}  // namespace sbc
