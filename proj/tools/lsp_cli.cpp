// lsp: command-line front end.
// Exit status: 0 success (negative answers included), 2 malformed or rejected
// input, 1 internal error or a failed self-check.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsp/io.hpp"
#include "lsp/lsp.hpp"
#include "lsp/parallel.hpp"
#include "lsp/sweep.hpp"

using namespace lsp;
using io::json;

namespace {

struct Config {
  std::string type;
  std::string weight;
  std::string shapes;
  std::string path;
  std::string word;
  std::string tau;
  std::string op = "f";
  std::string at;
  int index = 0;
  Int m = -1, l = -1, n = -1;
  bool json = false;
  bool parallel = false;
  std::size_t cap = kDefaultWeylCap;
};

Config cfg;

[[noreturn]] void usage(const std::string& msg) { throw Error(Errc::Parse, msg); }

RootSystemPtr root_system(const std::string& fallback = "") {
  std::string t = cfg.type.empty() ? fallback : cfg.type;
  if (t.empty()) usage("--type is required");
  return build_root_system(io::parse_cartan(t), cfg.cap);
}

Weight weight(const RootSystem& rs) {
  if (cfg.weight.empty()) usage("--weight is required");
  return io::parse_weight(cfg.weight, rs.rank());
}

std::optional<Weight> weight_if_given(const RootSystem& rs) {
  if (cfg.weight.empty()) return std::nullopt;
  return io::parse_weight(cfg.weight, rs.rank());
}

ShapeVector shapes(const RootSystem& rs) {
  if (cfg.shapes.empty()) usage("--shapes is required");
  return io::parse_shapes(cfg.shapes, rs.rank());
}

// --path takes JSON text, or @file.
json path_json() {
  if (cfg.path.empty()) usage("--path is required");
  std::string text = cfg.path;
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) usage("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return io::detail::parse_json(text);
}

LSPath single_path(const RootSystem& rs, std::optional<Weight> lambda) {
  json j = path_json();
  if (!j.is_object()) usage("--path must be a single path object here");
  return io::path_from_json(rs, j, lambda);
}

// A path object is read as a one-element tuple.
PathTuple tuple_input(const RootSystem& rs) {
  json j = path_json();
  std::optional<ShapeVector> sv;
  if (!cfg.shapes.empty()) sv = shapes(rs);
  if (j.is_object()) {
    std::optional<Weight> lam = weight_if_given(rs);
    if (sv) {
      if (sv->size() != 1) usage("one path given but --shapes lists " + std::to_string(sv->size()));
      lam = sv->front();
    }
    return {io::path_from_json(rs, j, lam)};
  }
  return io::tuple_from_json(rs, j, sv ? &*sv : nullptr);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string tuple_str(const RootSystem& rs, const PathTuple& t) {
  std::string s;
  for (const LSPath& p : t) s += (s.empty() ? "" : " ") + io::path_str(rs, p);
  return s;
}

std::string character_table(const Character& left, const Character& right, const char* lname, const char* rname) {
  std::set<Weight> keys;
  for (const auto& [w, k] : left) keys.insert(w);
  for (const auto& [w, k] : right) keys.insert(w);
  std::size_t width = 6;
  for (const Weight& w : keys) width = std::max(width, w.str().size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width + 2)) << "weight" << std::setw(8) << lname << rname << '\n';
  for (const Weight& w : keys) {
    auto get = [&](const Character& c) { auto it = c.find(w); return it == c.end() ? Int{0} : it->second; };
    os << std::left << std::setw(static_cast<int>(width + 2)) << w.str() << std::setw(8) << get(left) << get(right) << '\n';
  }
  return os.str();
}

// ---- paths ----

int paths_enum() {
  auto rs = root_system();
  const Weight lam = weight(*rs);
  const auto all = enumerate_B(*rs, lam);
  if (cfg.json) {
    json out = json::array();
    for (const LSPath& p : all) out.push_back(io::path_to_json(*rs, p));
    emit(out);
  } else {
    for (const LSPath& p : all) std::cout << io::path_str(*rs, p) << "  weight " << path_weight(p).str() << '\n';
    std::cout << "count " << all.size() << '\n';
  }
  return 0;
}

int paths_weight() {
  auto rs = root_system();
  const LSPath p = single_path(*rs, weight_if_given(*rs));
  const Weight w = path_weight(p);
  if (cfg.json)
    emit({{"weight", io::weight_to_json(w)}});
  else
    std::cout << w.str() << '\n';
  return 0;
}

int paths_validate() {
  auto rs = root_system();
  try {
    const LSPath p = single_path(*rs, weight_if_given(*rs));
    if (cfg.json)
      emit({{"valid", true}, {"path", io::path_to_json(*rs, p)}});
    else
      std::cout << "valid " << io::path_str(*rs, p) << '\n';
    return 0;
  } catch (const NotLSPathError& e) {
    if (cfg.json) emit({{"valid", false}, {"segment", e.segment()}, {"error", e.what()}});
    std::cerr << "invalid: segment " << e.segment() << ": " << e.what() << '\n';
    return 2;
  }
}

int paths_rootop() {
  auto rs = root_system();
  const LSPath p = single_path(*rs, weight_if_given(*rs));
  if (cfg.index < 1 || static_cast<std::size_t>(cfg.index) > rs->rank()) usage("--index must be in 1.." + std::to_string(rs->rank()));
  std::optional<LSPath> q;
  if (cfg.op == "f")
    q = root_op_f(*rs, p, cfg.index - 1);
  else if (cfg.op == "e")
    q = root_op_e(*rs, p, cfg.index - 1);
  else
    usage("--op must be f or e");
  if (cfg.json)
    emit(q ? io::path_to_json(*rs, *q) : json(nullptr));
  else
    std::cout << (q ? io::path_str(*rs, *q) : "none") << '\n';
  return 0;
}

int paths_string() {
  auto rs = root_system();
  const LSPath p = single_path(*rs, weight_if_given(*rs));
  if (cfg.word.empty()) usage("--word is required");
  Word w = parse_word(cfg.word);
  for (int i : w)
    if (static_cast<std::size_t>(i) >= rs->rank()) usage("letter out of range in --word");
  const auto s = crystal_string(*rs, p, w);
  if (cfg.json) {
    emit({{"string", s}});
  } else {
    std::string out;
    for (Int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    std::cout << out << '\n';
  }
  return 0;
}

// ---- characters ----

int char_compare() {
  auto rs = root_system();
  const Weight lam = weight(*rs);
  const Character paths = path_character(enumerate_B(*rs, lam));
  const Character fr = freudenthal_character(*rs, lam);
  const bool match = paths == fr;
  if (cfg.json) {
    emit({{"verdict", match ? "MATCH" : "MISMATCH"}, {"dimension", character_total(paths)},
          {"paths", io::character_to_json(paths)}, {"freudenthal", io::character_to_json(fr)}});
  } else {
    std::cout << character_table(paths, fr, "paths", "freudenthal");
    std::cout << (match ? "MATCH" : "MISMATCH") << " dimension " << character_total(paths) << '\n';
  }
  return match ? 0 : 1;
}

int char_demazure() {
  auto rs = root_system();
  const Weight lam = weight(*rs);
  const WeylElement tau = io::parse_element(*rs, cfg.tau);
  const Character paths = path_character(demazure_subset(*rs, lam, tau));
  const Character op = demazure_character(*rs, lam, tau);
  const bool match = paths == op;
  if (cfg.json) {
    emit({{"verdict", match ? "MATCH" : "MISMATCH"}, {"weights", paths.size()}, {"dimension", character_total(paths)},
          {"paths", io::character_to_json(paths)}, {"operator", io::character_to_json(op)}});
  } else {
    std::cout << character_table(paths, op, "paths", "operator");
    std::cout << (match ? "MATCH" : "MISMATCH") << " weights " << paths.size() << " dimension " << character_total(paths)
              << '\n';
  }
  return match ? 0 : 1;
}

// ---- standard monomials ----

int smt_count() {
  auto rs = root_system();
  const Int c = count_standard(*rs, shapes(*rs));
  if (cfg.json)
    emit({{"count", c}});
  else
    std::cout << c << '\n';
  return 0;
}

int smt_standard() {
  auto rs = root_system();
  if (!cfg.path.empty()) {
    const bool ok = is_standard(*rs, tuple_input(*rs));
    if (cfg.json)
      emit({{"standard", ok}});
    else
      std::cout << (ok ? "true" : "false") << '\n';
    return 0;
  }
  const auto all = standard_tuples(*rs, shapes(*rs));
  if (cfg.json) {
    json out = json::array();
    for (const PathTuple& t : all) out.push_back(io::tuple_to_json(*rs, t));
    emit(out);
  } else {
    for (const PathTuple& t : all) std::cout << tuple_str(*rs, t) << '\n';
    std::cout << "count " << all.size() << '\n';
  }
  return 0;
}

int smt_chain() {
  auto rs = root_system();
  const auto dc = find_defining_chain(*rs, tuple_input(*rs));
  if (cfg.json) {
    emit({{"chain", dc ? io::chain_to_json(*rs, *dc) : json(nullptr)}});
  } else if (!dc) {
    std::cout << "none\n";
  } else {
    std::string s;
    for (const auto& lifts : dc->lifts) {
      s += s.empty() ? "[" : " [";
      for (std::size_t k = 0; k < lifts.size(); ++k) {
        std::string w = io::element_str(*rs, lifts[k]);
        s += (k ? ", " : "") + (w.empty() ? std::string("id") : w);
      }
      s += "]";
    }
    std::cout << s << '\n';
  }
  return 0;
}

int smt_compatible() {
  auto rs = root_system();
  const PathTuple t = tuple_input(*rs);
  if (!cfg.word.empty()) {
    const Word w = io::parse_reduced_w0(*rs, cfg.word);
    bool ok = true;
    for (const LSPath& p : t) ok = ok && is_compatible_path(*rs, p, w);
    if (cfg.json)
      emit({{"compatible", ok}});
    else
      std::cout << (ok ? "true" : "false") << '\n';
    return 0;
  }
  std::optional<CompatibilityCertificate> cert =
      t.size() == 1 ? exists_compatible_word(*rs, t.front()) : exists_compatible_word(*rs, t);
  if (cfg.json) {
    emit(cert ? io::certificate_to_json(*rs, *cert) : json(nullptr));
  } else if (!cert) {
    std::cout << "none\n";
  } else {
    std::string chain;
    for (WeylElement w : cert->chain) {
      std::string s = io::element_str(*rs, w);
      chain += (chain.empty() ? "" : ", ") + (s.empty() ? std::string("id") : s);
    }
    std::cout << "word " << word_str(cert->word) << " chain (" << chain << ")\n";
  }
  return 0;
}

// ---- A2 ----

RootSystemPtr a2_system() {
  auto rs = root_system("A2");
  a2::require_a2(*rs);
  return rs;
}

Int require_m() {
  if (cfg.m < 0) usage("--m is required and must be nonnegative");
  return cfg.m;
}

int a2_pathvector() {
  auto rs = a2_system();
  std::optional<Weight> lam = weight_if_given(*rs);
  if (cfg.m >= 0) {
    const Weight mm{cfg.m, cfg.m};
    if (lam && *lam != mm) usage("--m and --weight disagree");
    lam = mm;
  }
  const LSPath p = single_path(*rs, lam);
  const a2::A2Poly v = a2::path_vector(*rs, p);
  if (cfg.json)
    emit(io::poly_to_json(v));
  else
    std::cout << v.str() << '\n';
  return 0;
}

// Diagonal term first, then the others in path order.
std::string expansion_str(const RootSystem& rs, const a2::TransitionRow& row) {
  std::vector<std::pair<LSPath, Int>> entries;
  for (const auto& e : row.entries)
    if (e.first == row.source) entries.push_back(e);
  for (const auto& e : row.entries)
    if (!(e.first == row.source)) entries.push_back(e);
  std::string s;
  for (const auto& [q, c] : entries) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag) + " ";
    s += "b" + io::path_str(rs, q);
  }
  return s.empty() ? "0" : s;
}

int a2_transition() {
  auto rs = a2_system();
  const Int m = require_m();
  std::vector<LSPath> paths = enumerate_B(*rs, Weight{m, m});
  if (!cfg.at.empty()) {
    const Weight at = io::parse_weight(cfg.at, 2);
    std::erase_if(paths, [&](const LSPath& p) { return path_weight(p) != at; });
  }
  const auto rows = parallel_map(paths, [&](const LSPath& p) { return a2::transition_row(*rs, p, m); }, cfg.parallel);
  if (cfg.json) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(io::transition_row_to_json(*rs, r));
    emit(out);
    return 0;
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, io::path_str(*rs, r.source).size() + 1);
  for (const auto& r : rows)
    std::cout << "p" << std::left << std::setw(static_cast<int>(width)) << io::path_str(*rs, r.source) << " = "
              << expansion_str(*rs, r) << '\n';
  return 0;
}

int a2_example11() {
  auto rs = a2_system();
  if (cfg.l < 0 || cfg.m < 0 || cfg.n < 0) usage("--l, --m and --n are required");
  const a2::Example11 ex = a2::example11_standard_monomial(*rs, cfg.l, cfg.m, cfg.n);
  if (cfg.json) {
    json sh = json::array();
    for (const Weight& w : ex.shapes) sh.push_back(io::weight_to_json(w));
    emit({{"shapes", sh}, {"tuple", io::tuple_to_json(*rs, ex.tuple)}, {"product", io::poly_to_json(ex.product)}});
  } else {
    std::string sh;
    for (const Weight& w : ex.shapes) sh += (sh.empty() ? "" : " : ") + w.str();
    std::cout << "shape   " << (sh.empty() ? "-" : sh) << '\n';
    std::cout << "tuple   " << (ex.tuple.empty() ? "-" : tuple_str(*rs, ex.tuple)) << '\n';
    std::cout << "product " << ex.product.str() << '\n';
  }
  return 0;
}

int seed_sweep() {
  sweep::Options o;
  o.parallel = cfg.parallel;
  bool all = true;
  json out = json::array();
  for (const auto& criterion : sweep::criteria()) {
    const sweep::Result r = criterion(o);
    all = all && r.pass;
    if (cfg.json)
      out.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << sweep::format_line(r) << std::endl;
  }
  if (cfg.json)
    emit(out);
  else
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littelmann paths, standard monomials and the A2 dual canonical basis"};
  app.set_help_all_flag("--help-all");
  bool sweep_flag = false;
  app.add_flag("--seed-sweep", sweep_flag, "run the acceptance sweep and print a summary table");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_flag("--parallel", cfg.parallel, "use several threads; output order is unchanged");

  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> fn) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->add_option("--type", cfg.type, "Cartan type name, matrix \"2,-1;-1,2\", or JSON rows");
    c->add_flag("--json", cfg.json, "JSON output");
    c->add_flag("--parallel", cfg.parallel, "use several threads; output order is unchanged");
    c->add_option("--cap", cfg.cap, "largest Weyl group order accepted")->check(CLI::PositiveNumber);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto weight_opt = [](CLI::App* c) { c->add_option("--weight", cfg.weight, "dominant weight, e.g. 2,2"); };
  auto path_opt = [](CLI::App* c) { c->add_option("--path", cfg.path, "path JSON (or tuple array), or @file"); };

  CLI::App* paths = app.add_subcommand("paths", "LS paths")->require_subcommand(1);
  for (auto* c : {leaf(paths, "enum", "list B(lambda)", paths_enum)}) weight_opt(c);
  for (auto* c : {leaf(paths, "weight", "end point of a path", paths_weight),
                  leaf(paths, "validate", "check the LS conditions", paths_validate)}) {
    weight_opt(c);
    path_opt(c);
  }
  {
    auto* c = leaf(paths, "rootop", "apply f_i or e_i", paths_rootop);
    weight_opt(c);
    path_opt(c);
    c->add_option("--op", cfg.op, "f or e");
    c->add_option("--index", cfg.index, "simple root, 1-based")->required();
  }
  {
    auto* c = leaf(paths, "string", "string of a path along a word", paths_string);
    weight_opt(c);
    path_opt(c);
    c->add_option("--word", cfg.word, "directions, e.g. 121");
  }

  CLI::App* chars = app.add_subcommand("char", "characters")->require_subcommand(1);
  weight_opt(leaf(chars, "compare", "path character against Freudenthal", char_compare));
  {
    auto* c = leaf(chars, "demazure", "Demazure subset against Demazure operators", char_demazure);
    weight_opt(c);
    c->add_option("--tau", cfg.tau, "Weyl group element as a word; empty for the identity");
  }

  CLI::App* smt = app.add_subcommand("smt", "standard monomials")->require_subcommand(1);
  leaf(smt, "count", "number of standard tuples", smt_count)->add_option("--shapes", cfg.shapes, "shape vector, e.g. 1,0:0,1");
  for (auto* c : {leaf(smt, "standard", "list standard tuples, or test one given by --path", smt_standard),
                  leaf(smt, "chain", "canonical defining chain", smt_chain),
                  leaf(smt, "compatible", "compatible reduced word of w0", smt_compatible)}) {
    c->add_option("--shapes", cfg.shapes, "shape vector, e.g. 1,0:0,1");
    weight_opt(c);
    path_opt(c);
  }
  smt->get_subcommand("compatible")->add_option("--word", cfg.word, "test this reduced word of w0 only");

  CLI::App* a2 = app.add_subcommand("a2", "dual canonical basis in type A2")->require_subcommand(1);
  {
    auto* c = leaf(a2, "pathvector", "path vector p_pi", a2_pathvector);
    c->add_option("--m", cfg.m, "shape (m,m)");
    weight_opt(c);
    path_opt(c);
  }
  {
    auto* c = leaf(a2, "transition", "path vectors in the dual canonical basis", a2_transition);
    c->add_option("--m", cfg.m, "shape (m,m)");
    c->add_option("--at", cfg.at, "only rows whose path has this weight");
  }
  {
    auto* c = leaf(a2, "example11", "standard monomial for f1^l f2^m f1^n", a2_example11);
    c->add_option("--l", cfg.l);
    c->add_option("--m", cfg.m);
    c->add_option("--n", cfg.n);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep_flag) return seed_sweep();
    if (!action) {
      std::cerr << app.help();
      return 2;
    }
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
