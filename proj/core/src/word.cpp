#include "nlh/word.hpp"

#include <algorithm>
#include <cctype>

#include "nlh/errors.hpp"

namespace nlh {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct Prime::OpData {
  NWord body;
  std::vector<Symbol> erasure;
  std::size_t ops = 0;
  std::size_t depth = 0;
  std::size_t stars = 0;
  std::size_t hash = 0;
};

Prime Prime::letter(Symbol s) noexcept {
  Prime p;
  p.symbol_ = s;
  return p;
}

Prime Prime::op(NWord body) {
  if (body.empty()) throw PreconditionError("operator applied to the empty word");
  auto data = std::make_shared<OpData>();
  data->ops = 1;
  data->depth = body.depth() + 1;
  data->stars = body.star_count();
  std::size_t h = 0x4e;
  for (const auto& q : body.primes()) {
    auto e = q.erasure();
    data->erasure.insert(data->erasure.end(), e.begin(), e.end());
    data->ops += q.op_count();
  }
  data->hash = mix(h, body.hash());
  data->body = std::move(body);
  Prime p;
  p.op_ = std::move(data);
  return p;
}

Symbol Prime::symbol() const {
  if (op_) throw PreconditionError("operator prime has no symbol");
  return symbol_;
}

const NWord& Prime::body() const {
  if (!op_) throw PreconditionError("letter prime has no body");
  return op_->body;
}

std::size_t Prime::degree() const noexcept { return op_ ? op_->body.degree() + 1 : 1; }
std::size_t Prime::op_count() const noexcept { return op_ ? op_->ops : 0; }
std::size_t Prime::depth() const noexcept { return op_ ? op_->depth : 0; }

std::span<const Symbol> Prime::erasure() const noexcept {
  if (op_) return op_->erasure;
  return {&symbol_, 1};
}

bool Prime::contains_star() const noexcept { return op_ ? op_->stars > 0 : symbol_ == kStar; }

std::size_t Prime::hash() const noexcept {
  return op_ ? op_->hash : mix(0x1f, static_cast<std::size_t>(symbol_));
}

bool operator==(const Prime& a, const Prime& b) noexcept {
  if (a.is_letter() != b.is_letter()) return false;
  if (a.is_letter()) return a.symbol_ == b.symbol_;
  if (a.op_ == b.op_) return true;
  return a.op_->hash == b.op_->hash && a.op_->body == b.op_->body;
}

NWord::NWord(std::vector<Prime> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_) degree_ += p.degree();
}

NWord NWord::from_symbols(std::span<const Symbol> letters) {
  std::vector<Prime> ps;
  ps.reserve(letters.size());
  for (Symbol s : letters) ps.push_back(Prime::letter(s));
  return NWord(std::move(ps));
}

NWord NWord::from_symbols(std::initializer_list<Symbol> letters) {
  return from_symbols(std::span<const Symbol>(letters.begin(), letters.size()));
}

std::size_t NWord::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& p : primes_) d = std::max(d, p.depth());
  return d;
}

bool NWord::is_plain() const noexcept {
  return std::all_of(primes_.begin(), primes_.end(), [](const Prime& p) { return p.is_letter(); });
}

bool NWord::contains_star() const noexcept { return star_count() > 0; }

std::size_t NWord::star_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : primes_) {
    if (p.is_letter())
      n += p.symbol() == kStar ? 1 : 0;
    else
      n += p.body().star_count();
  }
  return n;
}

NWord NWord::slice(std::size_t pos, std::size_t length) const {
  if (pos > primes_.size() || length > primes_.size() - pos)
    throw PreconditionError("word slice out of range");
  return NWord(std::vector<Prime>(primes_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  primes_.begin() + static_cast<std::ptrdiff_t>(pos + length)));
}

std::size_t NWord::hash() const noexcept {
  std::size_t h = 0x77;
  for (const auto& p : primes_) h = mix(h, p.hash());
  return h;
}

NWord operator*(const NWord& a, const NWord& b) {
  std::vector<Prime> ps = a.primes_;
  ps.insert(ps.end(), b.primes_.begin(), b.primes_.end());
  return NWord(std::move(ps));
}

bool operator==(const NWord& a, const NWord& b) noexcept {
  return a.degree_ == b.degree_ && a.primes_ == b.primes_;
}

std::string to_string(const Prime& p, const Alphabet& alphabet) {
  if (p.is_letter()) return alphabet.name(p.symbol());
  return "N(" + to_string(p.body(), alphabet) + ")";
}

std::string to_string(const NWord& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.breadth(); ++i) {
    if (i) out += '.';
    out += to_string(w[i], alphabet);
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet, bool allow_star)
      : text_(text), alphabet_(alphabet), allow_star_(allow_star) {}

  NWord parse() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      expect_end();
      return {};
    }
    NWord w = word();
    expect_end();
    return w;
  }

 private:
  NWord word() {
    std::vector<Prime> ps;
    ps.push_back(prime());
    skip_ws();
    while (peek() == '.') {
      ++pos_;
      ps.push_back(prime());
      skip_ws();
    }
    return NWord(std::move(ps));
  }

  Prime prime() {
    skip_ws();
    std::size_t at = pos_;
    if (peek() == '*') {
      if (!allow_star_) throw ParseError("placeholder '*' not allowed here", at);
      ++pos_;
      return Prime::letter(kStar);
    }
    std::string name = identifier();
    if (name.empty()) throw ParseError("expected a letter or N(...)", at);
    skip_ws();
    if (name == "N" && peek() == '(') {
      ++pos_;
      NWord body = word();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return Prime::op(std::move(body));
    }
    auto s = alphabet_.find(name);
    if (!s) throw SymbolError("unknown symbol '" + name + "' at position " + std::to_string(at));
    return Prime::letter(*s);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  bool allow_star_;
  std::size_t pos_ = 0;
};

}  // namespace

NWord parse_word(std::string_view text, const Alphabet& alphabet, bool allow_star) {
  return WordParser(text, alphabet, allow_star).parse();
}

}  // namespace nlh
