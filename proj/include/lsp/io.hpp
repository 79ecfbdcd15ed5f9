#pragma once
// Text and JSON encodings shared by the CLI and the tests.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lsp/a2/dual_basis.hpp"
#include "lsp/character.hpp"
#include "lsp/ls_path.hpp"
#include "lsp/smt.hpp"

namespace lsp::io {

using json = nlohmann::json;

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

inline Int parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw Error(Errc::Parse, "empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw Error(Errc::Parse, "bad integer '" + t + "'");
  Int v = 0;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw Error(Errc::Parse, "bad integer '" + t + "'");
    v = checked::add(checked::mul(v, 10), t[i] - '0');
  }
  return t[0] == '-' ? checked::neg(v) : v;
}

inline json parse_json(std::string_view s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
}

inline Int json_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::Parse, std::string(what) + " must be an integer");
  return j.get<Int>();
}

}  // namespace detail

// ---- Cartan data ----

/// A type name ("A2", "G2"), a matrix "2,-1;-1,2", or JSON [[2,-1],[-1,2]].
inline CartanMatrix parse_cartan(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw Error(Errc::Parse, "empty Cartan type");
  std::vector<std::vector<Int>> rows;
  if (s.front() == '[') {
    json j = detail::parse_json(s);
    if (!j.is_array()) throw Error(Errc::Parse, "Cartan JSON must be an array of rows");
    for (const json& r : j) {
      if (!r.is_array()) throw Error(Errc::Parse, "Cartan JSON must be an array of rows");
      std::vector<Int> row;
      for (const json& x : r) row.push_back(detail::json_int(x, "Cartan entry"));
      rows.push_back(std::move(row));
    }
  } else if (s.find(',') != std::string::npos || s.find(';') != std::string::npos) {
    for (const std::string& r : detail::split(s, ';')) {
      std::vector<Int> row;
      for (const std::string& x : detail::split(r, ',')) row.push_back(detail::parse_int(x));
      rows.push_back(std::move(row));
    }
  } else {
    return cartan_from_name(s);
  }
  std::vector<Int> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(Errc::MalformedCartan, "Cartan matrix must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return CartanMatrix(rows.size(), std::move(entries));
}

inline json cartan_to_json(const CartanMatrix& c) {
  json rows = json::array();
  for (std::size_t i = 0; i < c.n; ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < c.n; ++j) r.push_back(c(i, j));
    rows.push_back(r);
  }
  return rows;
}

// ---- weights and shapes ----

inline Weight parse_weight(std::string_view s, std::size_t rank) {
  std::vector<Int> c;
  for (const std::string& x : detail::split(s, ',')) c.push_back(detail::parse_int(x));
  if (c.size() != rank)
    throw Error(Errc::Parse, "weight '" + std::string(s) + "' has " + std::to_string(c.size()) + " coordinates, rank is " +
                                 std::to_string(rank));
  return Weight(std::move(c));
}

/// "1,0:0,1" -> (w1, w2).
inline ShapeVector parse_shapes(std::string_view s, std::size_t rank) {
  ShapeVector out;
  for (const std::string& part : detail::split(s, ':')) out.push_back(parse_weight(part, rank));
  return out;
}

inline json weight_to_json(const Weight& w) { return json(w.coords()); }

inline Weight weight_from_json(const json& j, std::size_t rank) {
  if (!j.is_array()) throw Error(Errc::Parse, "weight must be an array of integers");
  std::vector<Int> c;
  for (const json& x : j) c.push_back(detail::json_int(x, "weight coordinate"));
  if (c.size() != rank) throw Error(Errc::Parse, "weight has wrong rank");
  return Weight(std::move(c));
}

inline json character_to_json(const Character& ch) {
  json out = json::array();
  for (const auto& [w, k] : ch) out.push_back({{"weight", weight_to_json(w)}, {"mult", k}});
  return out;
}

// ---- Weyl group elements ----

/// Letters must be simple reflections of the given rank.
inline WeylElement parse_element(const RootSystem& rs, std::string_view s) {
  Word w = parse_word(detail::trim(s));
  for (int i : w)
    if (static_cast<std::size_t>(i) >= rs.rank()) throw Error(Errc::Parse, "letter out of range in '" + std::string(s) + "'");
  return rs.from_word(w);
}

inline std::string element_str(const RootSystem& rs, WeylElement w) { return word_str(rs.word(w)); }

inline Word parse_reduced_w0(const RootSystem& rs, std::string_view s) {
  Word w = parse_word(detail::trim(s));
  require_reduced_w0(rs, w);
  return w;
}

// ---- paths ----
// {"lambda":[2,2],"chain":["21","1"],"a":["1/2"]}; "lambda" may be omitted
// when the caller supplies the shape.

inline json path_to_json(const RootSystem& rs, const LSPath& p) {
  json chain = json::array(), a = json::array();
  for (const Coset& c : p.chain) chain.push_back(element_str(rs, c.min_rep));
  for (const Rational& r : p.a) a.push_back(r.str());
  return {{"lambda", weight_to_json(p.lambda)}, {"chain", chain}, {"a", a}};
}

/// Parses and validates. A lambda in the object must agree with the default.
inline LSPath path_from_json(const RootSystem& rs, const json& j, const std::optional<Weight>& lambda_default = {}) {
  if (!j.is_object()) throw Error(Errc::Parse, "path must be a JSON object");
  std::optional<Weight> lambda = lambda_default;
  if (j.contains("lambda")) {
    Weight l = weight_from_json(j.at("lambda"), rs.rank());
    if (lambda && *lambda != l)
      throw Error(Errc::LambdaMismatch, "path shape " + l.str() + " differs from --weight " + lambda->str());
    lambda = l;
  }
  if (!lambda) throw Error(Errc::Parse, "path has no \"lambda\" and no shape was given");
  if (!j.contains("chain") || !j.at("chain").is_array()) throw Error(Errc::Parse, "path needs a \"chain\" array");
  std::vector<WeylElement> chain;
  for (const json& w : j.at("chain")) {
    if (!w.is_string()) throw Error(Errc::Parse, "chain entries are words such as \"21\"");
    chain.push_back(parse_element(rs, w.get<std::string>()));
  }
  std::vector<Rational> a;
  if (j.contains("a")) {
    if (!j.at("a").is_array()) throw Error(Errc::Parse, "\"a\" must be an array");
    for (const json& r : j.at("a")) {
      if (r.is_string())
        a.push_back(Rational::parse(r.get<std::string>()));
      else if (r.is_number_integer())
        a.push_back(Rational(r.get<Int>()));
      else
        throw Error(Errc::Parse, "turning points are strings \"p/q\"");
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "lambda" && k != "chain" && k != "a") throw Error(Errc::Parse, "unknown path field \"" + k + "\"");
  }
  return validate_ls(rs, *lambda, chain, std::move(a));
}

inline json tuple_to_json(const RootSystem& rs, const PathTuple& t) {
  json out = json::array();
  for (const LSPath& p : t) out.push_back(path_to_json(rs, p));
  return out;
}

/// Array of path objects; entry k takes its shape from shapes[k] when given.
inline PathTuple tuple_from_json(const RootSystem& rs, const json& j, const ShapeVector* shapes = nullptr) {
  if (!j.is_array()) throw Error(Errc::Parse, "tuple must be a JSON array of paths");
  if (shapes && shapes->size() != j.size()) throw Error(Errc::Parse, "tuple length differs from --shapes");
  PathTuple t;
  for (std::size_t k = 0; k < j.size(); ++k)
    t.push_back(path_from_json(rs, j[k], shapes ? std::optional<Weight>((*shapes)[k]) : std::nullopt));
  return t;
}

// ---- smt results ----

inline json chain_to_json(const RootSystem& rs, const DefiningChain& c) {
  json out = json::array();
  for (const auto& lifts : c.lifts) {
    json l = json::array();
    for (WeylElement w : lifts) l.push_back(element_str(rs, w));
    out.push_back(l);
  }
  return out;
}

inline json certificate_to_json(const RootSystem& rs, const CompatibilityCertificate& c) {
  json chain = json::array();
  for (WeylElement w : c.chain) chain.push_back(element_str(rs, w));
  return {{"word", word_str(c.word)}, {"chain", chain}};
}

inline CompatibilityCertificate certificate_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_object() || !j.contains("word") || !j.at("word").is_string())
    throw Error(Errc::Parse, "certificate needs a \"word\" string");
  CompatibilityCertificate c;
  c.word = parse_reduced_w0(rs, j.at("word").get<std::string>());
  if (j.contains("chain"))
    for (const json& w : j.at("chain")) {
      if (!w.is_string()) throw Error(Errc::Parse, "certificate chain entries are words");
      c.chain.push_back(parse_element(rs, w.get<std::string>()));
    }
  return c;
}

// ---- A2 polynomials ----
// {"terms":[{"e":[0,0,2,0],"c":1}, ...]}, exponents in the order a, b, c, d.

inline json poly_to_json(const a2::A2Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c}});
  return {{"terms", terms}};
}

/// Terms are added as given and the result is normalized.
inline a2::A2Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw Error(Errc::Parse, "polynomial needs a \"terms\" array");
  a2::A2Poly p;
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c") || !t.at("e").is_array() || t.at("e").size() != 4)
      throw Error(Errc::Parse, "term needs \"e\" (four exponents) and \"c\"");
    a2::Exponents e{};
    for (std::size_t k = 0; k < 4; ++k) {
      e[k] = detail::json_int(t.at("e")[k], "exponent");
      if (e[k] < 0) throw Error(Errc::Parse, "negative exponent");
    }
    p.add_raw(e, detail::json_int(t.at("c"), "coefficient"));
  }
  return p.normalized();
}

inline json transition_row_to_json(const RootSystem& rs, const a2::TransitionRow& row) {
  json entries = json::array();
  for (const auto& [q, c] : row.entries) entries.push_back({{"path", path_to_json(rs, q)}, {"c", c}});
  return {{"source", path_to_json(rs, row.source)}, {"entries", entries}};
}

inline a2::TransitionRow transition_row_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("entries") || !j.at("entries").is_array())
    throw Error(Errc::Parse, "transition row needs \"source\" and \"entries\"");
  a2::TransitionRow row{path_from_json(rs, j.at("source")), {}};
  for (const json& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("path") || !e.contains("c")) throw Error(Errc::Parse, "entry needs \"path\" and \"c\"");
    row.entries.emplace_back(path_from_json(rs, e.at("path")), detail::json_int(e.at("c"), "coefficient"));
  }
  return row;
}

/// Short text form, e.g. (21, 1; 1/2).
inline std::string path_str(const RootSystem& rs, const LSPath& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.chain.size(); ++k) {
    if (k) s += ", ";
    std::string w = element_str(rs, p.chain[k].min_rep);
    s += w.empty() ? "id" : w;
  }
  if (!p.a.empty()) {
    s += "; ";
    for (std::size_t k = 0; k < p.a.size(); ++k) {
      if (k) s += ", ";
      s += p.a[k].str();
    }
  }
  return s + ")";
}

}  // namespace lsp::io
