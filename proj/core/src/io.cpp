#include "nlh/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "nlh/errors.hpp"
#include "nlh/freealg.hpp"

namespace nlh {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& key, const std::string& message) {
  throw SpecError(key.empty() ? message : "at '" + key + "': " + message);
}

void reject_unknown_keys(const json& obj, const std::string& key,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      fail(key, "unknown key '" + k + "'");
}

Rational read_rational(const json& value, const std::string& key) {
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  if (!value.is_string()) fail(key, "coefficient must be a string \"p/q\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(key, "bad rational literal '" + value.get<std::string>() + "'");
  }
}

std::size_t lookup(const AlgebraSpec& spec, std::string_view name, const std::string& key) {
  auto it = std::find(spec.generators.begin(), spec.generators.end(), name);
  if (it == spec.generators.end()) fail(key, "unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - spec.generators.begin());
}

Vec read_vector(const AlgebraSpec& spec, const json& value, const std::string& key) {
  if (!value.is_object()) fail(key, "expected an object mapping generators to coefficients");
  Vec v = spec.zero();
  for (const auto& [name, c] : value.items()) v[lookup(spec, name, key)] = read_rational(c, key + "." + name);
  return v;
}

json write_vector(const AlgebraSpec& spec, const Vec& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[spec.generators[i]] = to_string(v[i]);
  return out;
}

}  // namespace

AlgebraSpec parse_algebra_json(const json& doc) {
  if (!doc.is_object()) fail("", "algebra file must be a JSON object");
  reject_unknown_keys(doc, "", {"generators", "bracket", "nijenhuis", "subalgebra", "derivation", "options"});
  AlgebraSpec spec;

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    fail("generators", "expected a nonempty list of names");
  std::set<std::string> seen;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) fail("generators", "names must be strings");
    auto name = g.get<std::string>();
    if (name == "t") fail("generators", "'t' is reserved for the HNN letter");
    if (!is_valid_letter_name(name)) fail("generators", "invalid generator name '" + name + "'");
    if (!seen.insert(name).second) fail("generators", "duplicate generator '" + name + "'");
    spec.generators.push_back(std::move(name));
  }
  const std::size_t n = spec.dimension();

  if (doc.contains("bracket")) {
    const auto& b = doc["bracket"];
    if (!b.is_object()) fail("bracket", "expected an object");
    for (const auto& [pair, value] : b.items()) {
      const std::string key = "bracket." + pair;
      auto comma = pair.find(',');
      if (comma == std::string::npos) fail(key, "key must have the form \"x,y\"");
      auto trim = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        return s;
      };
      std::size_t i = lookup(spec, trim(pair.substr(0, comma)), key);
      std::size_t j = lookup(spec, trim(pair.substr(comma + 1)), key);
      if (spec.bracket.count({i, j})) fail(key, "duplicate bracket entry");
      spec.bracket[{i, j}] = read_vector(spec, value, key);
    }
  }

  spec.nijenhuis.assign(n, spec.zero());
  if (doc.contains("nijenhuis")) {
    const auto& m = doc["nijenhuis"];
    if (!m.is_object()) fail("nijenhuis", "expected an object");
    for (const auto& [name, value] : m.items())
      spec.nijenhuis[lookup(spec, name, "nijenhuis")] = read_vector(spec, value, "nijenhuis." + name);
  }

  if (doc.contains("subalgebra")) {
    const auto& y = doc["subalgebra"];
    if (!y.is_array()) fail("subalgebra", "expected a list of generators");
    for (const auto& g : y) {
      if (!g.is_string()) fail("subalgebra", "names must be strings");
      auto i = lookup(spec, g.get<std::string>(), "subalgebra");
      if (spec.in_subalgebra(i)) fail("subalgebra", "duplicate generator '" + g.get<std::string>() + "'");
      spec.subalgebra.insert(std::upper_bound(spec.subalgebra.begin(), spec.subalgebra.end(), i), i);
    }
  }

  if (doc.contains("derivation")) {
    const auto& d = doc["derivation"];
    if (!d.is_object()) fail("derivation", "expected an object");
    for (const auto& [name, value] : d.items()) {
      auto i = lookup(spec, name, "derivation");
      if (!spec.in_subalgebra(i)) fail("derivation." + name, "derivation is defined on the subalgebra only");
      spec.derivation[i] = read_vector(spec, value, "derivation." + name);
    }
  }

  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) fail("options", "expected an object");
    reject_unknown_keys(o, "options", {"include_nt", "max_deg"});
    if (o.contains("include_nt")) {
      if (!o["include_nt"].is_boolean()) fail("options.include_nt", "expected a boolean");
      spec.options.include_nt = o["include_nt"].get<bool>();
    }
    if (o.contains("max_deg")) {
      if (!o["max_deg"].is_number_unsigned() || o["max_deg"].get<std::size_t>() == 0)
        fail("options.max_deg", "expected a positive integer");
      spec.options.max_deg = o["max_deg"].get<std::size_t>();
    }
  }
  return spec;
}

AlgebraSpec parse_algebra_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecError(std::string(source) + ": " + e.what());
  }
  try {
    return parse_algebra_json(doc);
  } catch (const SpecError& e) {
    throw SpecError(std::string(source) + ": " + e.what());
  }
}

AlgebraSpec parse_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), path.string());
}

json to_json(const AlgebraSpec& spec) {
  json out;
  out["generators"] = spec.generators;
  json b = json::object();
  for (const auto& [key, v] : spec.bracket)
    b[spec.generators[key.first] + "," + spec.generators[key.second]] = write_vector(spec, v);
  out["bracket"] = std::move(b);
  json n = json::object();
  for (std::size_t i = 0; i < spec.nijenhuis.size(); ++i)
    if (std::any_of(spec.nijenhuis[i].begin(), spec.nijenhuis[i].end(), [](const Rational& c) { return c != 0; }))
      n[spec.generators[i]] = write_vector(spec, spec.nijenhuis[i]);
  out["nijenhuis"] = std::move(n);
  json y = json::array();
  for (auto i : spec.subalgebra) y.push_back(spec.generators[i]);
  out["subalgebra"] = std::move(y);
  json d = json::object();
  for (const auto& [i, v] : spec.derivation) d[spec.generators[i]] = write_vector(spec, v);
  out["derivation"] = std::move(d);
  out["options"] = {{"include_nt", spec.options.include_nt}, {"max_deg", spec.options.max_deg}};
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Alphabet& alphabet, PrimeOrder order)
      : text_(text), alphabet_(alphabet), order_(order) {}

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  NTerm term_all() {
    NTerm t = term();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly sum(order_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    while (true) {
      Poly t = signed_term();
      if (negate) t *= -1;
      sum += t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        return sum;
    }
  }

  Poly signed_term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      Rational c;
      try {
        c = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        error("bad rational literal");
      }
      if (!accept('*')) {
        if (c == 0) return Poly(order_);
        pos_ = start;
        error("a bare scalar is not an element of the algebra");
      }
      Poly a = atom();
      a *= c;
      return a;
    }
    return atom();
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) error("expected a generator, 'N(', '[' or '('");
    return std::string(text_.substr(start, pos_ - start));
  }

  Symbol letter(const std::string& name, std::size_t at) {
    auto s = alphabet_.find(name);
    if (!s) throw SymbolError("unknown symbol '" + name + "' at position " + std::to_string(at));
    return *s;
  }

  Poly atom() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      Poly a = expr();
      expect(',');
      Poly b = expr();
      expect(']');
      return bracket(a, b);
    }
    if (c == '(') {
      ++pos_;
      Poly a = expr();
      expect(')');
      return a;
    }
    std::size_t at = pos_;
    std::string name = identifier();
    if (name == "N") {
      expect('(');
      Poly a = expr();
      expect(')');
      return apply_op(a);
    }
    return Poly::basis(NWord::of(Prime::letter(letter(name, at))), 1, order_);
  }

  NTerm term() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      NTerm a = term();
      expect(',');
      NTerm b = term();
      expect(']');
      return NTerm::pair(std::move(a), std::move(b));
    }
    std::size_t at = pos_;
    std::string name = identifier();
    if (name == "N") {
      expect('(');
      NTerm a = term();
      expect(')');
      return NTerm::op(std::move(a));
    }
    return NTerm::leaf(letter(name, at));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  PrimeOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expr(std::string_view text, const Alphabet& alphabet, PrimeOrder order) {
  return ExprParser(text, alphabet, order).parse_all();
}

NTerm parse_term(std::string_view text, const Alphabet& alphabet) {
  return ExprParser(text, alphabet, PrimeOrder::erasure).term_all();
}

}  // namespace nlh
