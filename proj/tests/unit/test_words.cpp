#include <doctest.h>

#include <random>
#include <set>

#include "nlh/errors.hpp"
#include "nlh/freealg.hpp"
#include "nlh/lyndon.hpp"
#include "nlh/order.hpp"
#include "nlh/word.hpp"
#include "support/oracles.hpp"

using namespace nlh;
using std::strong_ordering;

namespace {

const Alphabet xy({"x", "y"});
const Alphabet xyz({"x", "y", "z"});

NWord W(std::string_view s, const Alphabet& a = xy) { return parse_word(s, a); }

}  // namespace

TEST_SUITE("alphabet") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), SymbolError);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), SymbolError);
    CHECK_THROWS_AS(Alphabet({"N"}), SymbolError);
    CHECK_THROWS_AS(Alphabet({"1a"}), SymbolError);
    CHECK(xy.symbol("y") == 1);
    CHECK_THROWS_AS(xy.symbol("z"), SymbolError);
    CHECK(xy.name(kStar) == "*");
  }
}

TEST_SUITE("word") {
  TEST_CASE("shape statistics") {
    NWord u = W("x.N(x.y).y");
    CHECK(u.breadth() == 3);
    CHECK(u.degree() == 5);
    CHECK(u.depth() == 1);
    CHECK(W("N(N(x))").depth() == 2);
    CHECK(W("x").depth() == 0);
  }

  TEST_CASE("text round trip") {
    for (auto s : {"x", "x.y", "N(x)", "x.N(x.y).y", "N(N(y).x)", "1"}) CHECK(to_string(W(s), xy) == s);
    CHECK(to_string(parse_word(" x . N ( y ) ", xy), xy) == "x.N(y)");
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(W("x."), ParseError);
    CHECK_THROWS_AS(W("N(x"), ParseError);
    CHECK_THROWS_AS(W("N()"), ParseError);
    CHECK_THROWS_AS(W("q"), SymbolError);
    CHECK_THROWS_AS(W("x.*"), ParseError);
    CHECK(parse_word("x.*", xy, true).star_count() == 1);
  }

  TEST_CASE("slicing") {
    NWord u = W("x.N(y).y");
    CHECK(u.slice(1, 2) == W("N(y).y"));
    CHECK(u.prefix(1) * u.suffix(1) == u);
    CHECK_THROWS(u.slice(2, 2));
  }
}

TEST_SUITE("order") {
  TEST_CASE("lex examples") {
    CHECK(cmp_lex(W("x"), W("x.y")) == strong_ordering::greater);
    CHECK(cmp_lex(W("x.y"), W("x.y")) == strong_ordering::equal);
    CHECK(cmp_lex(W("x.y"), W("y.x")) == strong_ordering::greater);
  }

  TEST_CASE("deglex examples") {
    CHECK(cmp_deglex(W("x.x.y"), W("x.y")) == strong_ordering::greater);
    CHECK(cmp_deglex(W("x.y"), W("y.x")) == strong_ordering::greater);
    CHECK(cmp_deglex(W("y"), W("y")) == strong_ordering::equal);
  }

  TEST_CASE("weight examples") {
    CHECK(cmp_weight(W("N(x)"), W("x")) == strong_ordering::greater);
    CHECK(cmp_weight(W("x.N(y)"), W("x.N(y)")) == strong_ordering::equal);
    CHECK(cmp_prime(Prime::letter(0), W("N(y)")[0]) == strong_ordering::greater);
  }

  TEST_CASE("x > N(y) > z and t > N(a) > N(b)") {
    auto p = [&](std::string_view s) { return parse_word(s, xyz)[0]; };
    CHECK(cmp_prime(p("x"), p("N(y)")) == strong_ordering::greater);
    CHECK(cmp_prime(p("N(y)"), p("z")) == strong_ordering::greater);
    CHECK(cmp_prime(p("x"), p("N(x)")) == strong_ordering::less);
    CHECK(cmp_prime(p("N(x)"), p("N(y)")) == strong_ordering::greater);
  }

  TEST_CASE("nested prime order puts letters first") {
    auto p = [&](std::string_view s) { return parse_word(s, xyz)[0]; };
    CHECK(cmp_prime(p("z"), p("N(x)"), PrimeOrder::nested) == strong_ordering::greater);
    CHECK(cmp_prime(p("N(x)"), p("N(y)"), PrimeOrder::nested) == strong_ordering::greater);
  }

  TEST_CASE("weight order is a strict total order on LS words up to degree 5") {
    for (auto order : {PrimeOrder::erasure, PrimeOrder::nested}) {
      auto words = enumerate_ls_nwords(xy, 4, true, order);
      auto w5 = enumerate_ls_nwords(xy, 5, true, order);
      for (const auto& u : w5)
        for (const auto& v : w5) {
          auto c = cmp_weight(u, v, order);
          CHECK((c == strong_ordering::equal) == (u == v));
          CHECK(cmp_weight(v, u, order) == (0 <=> c));
        }
      for (const auto& u : words)
        for (const auto& v : words)
          for (const auto& w : words)
            if (cmp_weight(u, v, order) > 0 && cmp_weight(v, w, order) > 0) CHECK(cmp_weight(u, w, order) > 0);
    }
  }
}

TEST_SUITE("lyndon") {
  TEST_CASE("is_ls_word examples") {
    CHECK(is_ls_word(W("x.y")));
    CHECK_FALSE(is_ls_word(W("y.x")));
    CHECK_FALSE(is_ls_word(W("x.x")));
  }

  TEST_CASE("rotation oracle agrees up to degree 7") {
    for (int len = 1; len <= 7; ++len)
      for (int k : {2, 3})
        for (const auto& w : oracle::all_plain_words(k, len))
          CHECK(is_ls_word(oracle::to_nword(w)) == oracle::plain_is_ls(w));
  }

  TEST_CASE("counts on two letters") {
    const std::size_t expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
    std::vector<Symbol> letters{0, 1};
    auto words = enumerate_ls_nwords(letters, 8, false);
    for (int d = 1; d <= 8; ++d) {
      auto n = std::count_if(words.begin(), words.end(), [&](const NWord& w) { return w.degree() == std::size_t(d); });
      CHECK(std::size_t(n) == expected[d - 1]);
      CHECK(oracle::brute_ls_count(2, d) == expected[d - 1]);
    }
  }

  TEST_CASE("factorization examples") {
    CHECK(ls_factorize(W("x.x.y")) == std::pair{W("x"), W("x.y")});
    CHECK(ls_factorize(W("x.y.y")) == std::pair{W("x.y"), W("y")});
    CHECK(ls_factorize(W("x.y")) == std::pair{W("x"), W("y")});
    CHECK_THROWS(ls_factorize(W("y.x")));
    CHECK_THROWS(ls_factorize(W("x")));
  }

  TEST_CASE("shirshov bracket examples") {
    CHECK(to_string(shirshov_bracket(W("x.x.y")), xy) == "[x,[x,y]]");
    CHECK(to_string(shirshov_bracket(W("x.y")), xy) == "[x,y]");
    CHECK(to_string(shirshov_bracket(W("N(x.y)")), xy) == "N([x,y])");
    CHECK_THROWS(shirshov_bracket(W("y.x")));
  }

  TEST_CASE("is_ls_term examples") {
    auto x = NTerm::leaf(0), y = NTerm::leaf(1);
    CHECK(is_ls_term(NTerm::pair(x, NTerm::pair(x, y))));
    CHECK(is_ls_term(NTerm::pair(NTerm::pair(x, y), y)));
    CHECK_FALSE(is_ls_term(NTerm::pair(x, NTerm::pair(y, y))));
    CHECK_FALSE(is_ls_term(NTerm::pair(y, x)));
    CHECK(is_ls_term(x));
  }

  TEST_CASE("bracket round trip on Nijenhuis words") {
    for (const auto& u : enumerate_ls_nwords(xy, 6, true)) {
      NTerm t = shirshov_bracket(u);
      CHECK(flatten(t) == u);
      CHECK(is_ls_term(t));
    }
  }

  TEST_CASE("enumeration examples") {
    auto list = [](const std::vector<NWord>& ws, const Alphabet& a) {
      std::vector<std::string> out;
      for (const auto& w : ws) out.push_back(to_string(w, a));
      return out;
    };
    CHECK(list(enumerate_ls_nwords(xy, 2, false), xy) == std::vector<std::string>{"x.y", "x", "y"});
    Alphabet x({"x"});
    CHECK(list(enumerate_ls_nwords(x, 3, false), x) == std::vector<std::string>{"x"});
    CHECK(list(enumerate_ls_nwords(x, 2, true), x) == std::vector<std::string>{"N(x)", "x"});
    CHECK_THROWS(enumerate_ls_nwords(x, 0, true));
  }

  TEST_CASE("enumeration is complete against a brute-force scan") {
    // Every Nijenhuis word of degree <= 4 over {x, y}, tested directly.
    std::vector<NWord> all;
    std::function<void(std::size_t, std::vector<Prime>&)> words;
    std::vector<std::vector<Prime>> primes_by_deg(5);
    primes_by_deg[1] = {Prime::letter(0), Prime::letter(1)};
    std::vector<std::vector<NWord>> words_by_deg(5);
    for (std::size_t d = 1; d <= 4; ++d) {
      if (d >= 2)
        for (const auto& w : words_by_deg[d - 1]) primes_by_deg[d].push_back(Prime::op(w));
      for (std::size_t first = 1; first <= d; ++first)
        for (const auto& p : primes_by_deg[first]) {
          if (first == d) {
            words_by_deg[d].push_back(NWord::of(p));
            continue;
          }
          for (const auto& rest : words_by_deg[d - first]) words_by_deg[d].push_back(NWord::of(p) * rest);
        }
    }
    std::set<std::string> expect;
    for (std::size_t d = 1; d <= 4; ++d)
      for (const auto& w : words_by_deg[d])
        if (is_ls_nword(w)) expect.insert(to_string(w, xy));
    std::set<std::string> got;
    for (const auto& w : enumerate_ls_nwords(xy, 4, true)) got.insert(to_string(w, xy));
    CHECK(got == expect);
  }

  TEST_CASE("enumeration is sorted descending without duplicates") {
    auto ws = enumerate_ls_nwords(xyz, 5, true);
    for (std::size_t i = 1; i < ws.size(); ++i) CHECK(cmp_weight(ws[i - 1], ws[i]) > 0);
  }

  TEST_CASE("unique decomposition examples") {
    CHECK(unique_decomposition(W("y.x")) == std::vector{W("y"), W("x")});
    CHECK(unique_decomposition(W("x.y")) == std::vector{W("x.y")});
    CHECK(unique_decomposition(W("x.y.x.y")) == std::vector{W("x.y"), W("x.y")});
  }

  TEST_CASE("unique decomposition round trip and uniqueness") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 8), letter(0, 2);
    for (int i = 0; i < 1000; ++i) {
      oracle::Plain w(len(rng));
      for (auto& c : w) c = letter(rng);
      NWord u = oracle::to_nword(w);
      auto parts = unique_decomposition(u);
      NWord joined;
      for (const auto& p : parts) {
        CHECK(is_ls_word(p));
        joined = joined * p;
      }
      CHECK(joined == u);
      for (std::size_t k = 1; k < parts.size(); ++k) CHECK(cmp_lex(parts[k - 1], parts[k]) <= 0);
    }
    // Exhaustive: exactly one split satisfies the constraints.
    for (int len = 1; len <= 6; ++len)
      for (const auto& w : oracle::all_plain_words(2, len)) {
        int found = 0;
        for (unsigned mask = 0; mask < (1u << (len - 1)); ++mask) {
          std::vector<NWord> parts;
          std::size_t start = 0;
          for (int i = 1; i <= len; ++i)
            if (i == len || (mask >> (i - 1) & 1)) {
              parts.push_back(oracle::to_nword(oracle::Plain(w.begin() + start, w.begin() + i)));
              start = i;
            }
          bool ok = std::all_of(parts.begin(), parts.end(), [](const NWord& p) { return is_ls_word(p); });
          for (std::size_t k = 1; ok && k < parts.size(); ++k) ok = cmp_lex(parts[k - 1], parts[k]) <= 0;
          if (ok) {
            ++found;
            CHECK(parts == unique_decomposition(oracle::to_nword(w)));
          }
        }
        CHECK(found == 1);
      }
  }

  TEST_CASE("relative bracketing examples") {
    auto lead_of = [](const RelativeBracketing& r) { return leading(rewrite_to_basis(r.term)); };
    auto r1 = relative_bracket(W("x.y"), 1, 1);
    CHECK(to_string(r1.term, xy) == "[x,y]");
    CHECK(flatten(subterm(r1.term, r1.path)) == W("y"));
    auto r2 = relative_bracket(W("x.x.y"), 1, 2);
    CHECK(to_string(r2.term, xy) == "[x,[x,y]]");
    CHECK(flatten(subterm(r2.term, r2.path)) == W("x.y"));
    auto r3 = relative_bracket(W("x.y.y"), 0, 2);
    CHECK(lead_of(r3) == std::pair{W("x.y.y"), Rational(1)});
    CHECK(flatten(subterm(r3.term, r3.path)) == W("x.y"));
  }

  TEST_CASE("relative bracketing keeps the leading word for every LS occurrence") {
    for (const auto& u : enumerate_ls_nwords(xy, 6, true))
      for (std::size_t s = 0; s < u.breadth(); ++s)
        for (std::size_t l = 1; s + l <= u.breadth(); ++l) {
          if (!is_ls_nword(u.slice(s, l))) continue;
          auto r = relative_bracket(u, s, l);
          CHECK(flatten(subterm(r.term, r.path)) == u.slice(s, l));
          CHECK(leading(rewrite_to_basis(r.term)) == std::pair{u, Rational(1)});
        }
  }
}
