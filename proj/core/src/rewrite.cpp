#include "nlh/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "nlh/errors.hpp"
#include "nlh/freealg.hpp"
#include "nlh/lyndon.hpp"

namespace nlh {
namespace {

NWord substitute_star(const NWord& w, const NWord& replacement) {
  std::vector<Prime> out;
  out.reserve(w.breadth() + replacement.breadth());
  for (const auto& p : w.primes()) {
    if (p.is_letter() && p.symbol() == kStar)
      out.insert(out.end(), replacement.primes().begin(), replacement.primes().end());
    else if (p.is_op() && p.contains_star())
      out.push_back(Prime::op(substitute_star(p.body(), replacement)));
    else
      out.push_back(p);
  }
  return NWord(std::move(out));
}

// Applies `edit` to the word reached by descending through `path`.
NWord rebuild(const NWord& w, std::span<const std::size_t> path,
              const std::function<NWord(const NWord&)>& edit) {
  if (path.empty()) return edit(w);
  std::vector<Prime> ps = w.primes();
  ps[path.front()] = Prime::op(rebuild(w[path.front()].body(), path.subspan(1), edit));
  return NWord(std::move(ps));
}

void scan(const NWord& w, const NWord& needle, std::vector<std::size_t>& path,
          std::vector<Occurrence>& out) {
  const std::size_t n = w.breadth();
  const std::size_t m = needle.breadth();
  for (std::size_t i = 0; i < n; ++i) {
    if (i + m <= n && std::equal(needle.primes().begin(), needle.primes().end(),
                                 w.primes().begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(Occurrence{path, i, m});
    if (w[i].is_op()) {
      path.push_back(i);
      scan(w[i].body(), needle, path, out);
      path.pop_back();
    }
  }
}

Poly evaluate_with_hole(const NTerm& t, std::span<const std::uint8_t> path, const Poly& hole,
                        PrimeOrder order) {
  if (path.empty()) return hole;
  if (t.is_op()) return apply_op(evaluate_with_hole(t.body(), path.subspan(1), hole, order));
  if (path.front() == 0)
    return bracket(evaluate_with_hole(t.left(), path.subspan(1), hole, order),
                   rewrite_to_basis(t.right(), order));
  return bracket(rewrite_to_basis(t.left(), order),
                 evaluate_with_hole(t.right(), path.subspan(1), hole, order));
}

Poly snsw_impl(const NWord& pattern, const Poly& f, const NWord& lead) {
  const PrimeOrder order = f.order();
  NWord whole = substitute_star(pattern, lead);
  for (std::size_t i = 0; i < pattern.breadth(); ++i) {
    const Prime& p = pattern[i];
    if (p.is_letter() && p.symbol() == kStar) {
      if (pattern.breadth() == 1) return f;
      auto rb = relative_bracket(whole, i, lead.breadth(), order);
      return evaluate_with_hole(rb.term, rb.path, f, order);
    }
    if (p.is_op() && p.contains_star()) {
      Poly inner = apply_op(snsw_impl(p.body(), f, lead));
      if (pattern.breadth() == 1) return inner;
      auto rb = relative_bracket(whole, i, 1, order);
      return evaluate_with_hole(rb.term, rb.path, inner, order);
    }
  }
  throw PreconditionError("star word without a placeholder");
}

Poly eval_right_normed(const NWord& w, const Poly& s) {
  const PrimeOrder order = s.order();
  std::vector<Poly> parts;
  for (const auto& p : w.primes()) {
    if (p.is_letter() && p.symbol() == kStar)
      parts.push_back(s);
    else if (p.is_letter())
      parts.push_back(Poly::basis(NWord::of(p), 1, order));
    else
      parts.push_back(apply_op(eval_right_normed(p.body(), s)));
  }
  Poly acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = bracket(parts[i], acc);
  return acc;
}

const NWord& monic_lead(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("zero polynomial where a monic one is required");
  const auto& [w, c] = *f.terms().begin();
  if (c != 1) throw PreconditionError("polynomial is not monic");
  return w;
}

}  // namespace

StarWord::StarWord(NWord w) : word_(std::move(w)) {
  if (word_.star_count() != 1) throw PreconditionError("star word must contain exactly one '*'");
}

StarWord StarWord::star() { return StarWord(NWord::of(Prime::letter(kStar))); }

bool StarWord::is_bare() const noexcept {
  return word_.breadth() == 1 && word_[0].is_letter() && word_[0].symbol() == kStar;
}

NWord StarWord::substitute(const NWord& w) const { return substitute_star(word_, w); }

std::string to_string(const StarWord& pi, const Alphabet& alphabet) {
  return to_string(pi.word(), alphabet);
}

std::vector<Occurrence> find_occurrences(const NWord& haystack, const NWord& needle) {
  if (needle.empty()) throw PreconditionError("empty pattern");
  std::vector<Occurrence> out;
  std::vector<std::size_t> path;
  scan(haystack, needle, path, out);
  return out;
}

StarWord star_word_at(const NWord& haystack, const Occurrence& occ) {
  return StarWord(rebuild(haystack, occ.path, [&](const NWord& w) {
    return w.prefix(occ.start) * NWord::of(Prime::letter(kStar)) * w.suffix(occ.start + occ.length);
  }));
}

Poly star_substitute(const StarWord& pi, const Poly& s) {
  if (s.is_zero()) throw PreconditionError("substitution of the zero polynomial");
  return eval_right_normed(pi.word(), s);
}

Poly special_normal_sword(const StarWord& pi, const Poly& f) {
  const NWord& lead = monic_lead(f);
  NWord target = pi.substitute(lead);
  if (!is_ls_nword(target, f.order()))
    throw PreconditionError("pi|_lead(f) is not an LS Nijenhuis word");
  Poly result = snsw_impl(pi.word(), f, lead);
  if (result.is_zero() || leading(result).first != target)
    throw OrderingConflict("special normal s-word does not lead with the substituted word");
  auto c = leading(result).second;
  if (c != 1) result *= Rational(1) / c;
  return result;
}

RelationSet::RelationSet(std::vector<Relation> relations) : relations_(std::move(relations)) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    if (i == 0)
      order_ = r.poly.order();
    else if (r.poly.order() != order_)
      throw PreconditionError("relations use different prime orders");
    leading_.push_back(monic_lead(r.poly));
  }
}

std::optional<std::size_t> RelationSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  return std::nullopt;
}

bool is_reducible(const NWord& w, const RelationSet& s) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!find_occurrences(w, s.leading_word(j)).empty()) return true;
  return false;
}

namespace {

struct Target {
  NWord word;
  std::size_t relation;
  Occurrence occ;
};

std::optional<Target> pick_target(const Poly& r, const RelationSet& s, ReductionStrategy strategy) {
  auto try_word = [&](const NWord& w) -> std::optional<Target> {
    if (strategy == ReductionStrategy::greatest_first) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto occs = find_occurrences(w, s.leading_word(j));
        if (!occs.empty()) return Target{w, j, occs.front()};
      }
    } else {
      for (std::size_t j = s.size(); j-- > 0;) {
        auto occs = find_occurrences(w, s.leading_word(j));
        if (!occs.empty()) return Target{w, j, occs.back()};
      }
    }
    return std::nullopt;
  };
  if (strategy == ReductionStrategy::greatest_first) {
    for (const auto& [w, c] : r.terms())
      if (auto t = try_word(w)) return t;
  } else {
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
      if (auto t = try_word(it->first)) return t;
  }
  return std::nullopt;
}

}  // namespace

Reduction reduce(const Poly& p, const RelationSet& s, std::size_t max_steps,
                 ReductionStrategy strategy) {
  if (!s.empty() && p.order() != s.order())
    throw PreconditionError("polynomial and relations use different prime orders");
  Reduction out{p, {}};
  while (auto target = pick_target(out.remainder, s, strategy)) {
    if (out.steps.size() >= max_steps)
      throw ReductionBudgetExceeded("reduction exceeded " + std::to_string(max_steps) + " steps");
    StarWord pi = star_word_at(target->word, target->occ);
    Rational c = out.remainder.coefficient(target->word);
    Poly sword = special_normal_sword(pi, s[target->relation].poly);
    out.remainder -= c * sword;
    out.steps.push_back(ReductionStep{target->relation, std::move(pi), target->word, c});
  }
  return out;
}

Poly replay(std::span<const ReductionStep> steps, const RelationSet& s) {
  Poly total(s.order());
  for (const auto& step : steps)
    total += step.coefficient * special_normal_sword(step.pi, s[step.relation].poly);
  return total;
}

std::string_view to_string(Composition::Kind kind) noexcept {
  return kind == Composition::Kind::intersection ? "intersection" : "inclusion";
}

std::vector<Composition> intersection_compositions(const Poly& f, const Poly& g) {
  const NWord& lf = monic_lead(f);
  const NWord& lg = monic_lead(g);
  const NWord star = NWord::of(Prime::letter(kStar));
  std::vector<Composition> out;
  const std::size_t max_overlap = std::min(lf.breadth(), lg.breadth());
  for (std::size_t k = 1; k < max_overlap; ++k) {
    if (lf.suffix(lf.breadth() - k) != lg.prefix(k)) continue;
    NWord a = lg.suffix(k);
    NWord b = lf.prefix(lf.breadth() - k);
    NWord w = lf * a;
    if (!is_ls_nword(w, f.order())) continue;
    Composition c;
    c.kind = Composition::Kind::intersection;
    c.value = special_normal_sword(StarWord(star * a), f) - special_normal_sword(StarWord(b * star), g);
    c.w = std::move(w);
    c.a = std::move(a);
    c.b = std::move(b);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Composition> inclusion_compositions(const Poly& f, const Poly& g) {
  const NWord& lf = monic_lead(f);
  const NWord& lg = monic_lead(g);
  std::vector<Composition> out;
  if (lg.degree() > lf.degree()) return out;
  const bool same = f == g;
  for (const auto& occ : find_occurrences(lf, lg)) {
    StarWord pi = star_word_at(lf, occ);
    if (same && pi.is_bare()) continue;
    Composition c;
    c.kind = Composition::Kind::inclusion;
    c.w = lf;
    c.value = f - special_normal_sword(pi, g);
    c.pi = std::move(pi);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_trivial_mod(const Poly& h, const RelationSet& s, const NWord& w, std::size_t max_steps) {
  for (const auto& [u, c] : h.terms())
    if (cmp_weight(u, w, h.order()) != std::strong_ordering::less)
      throw PreconditionError("support word not below the ambiguity word");
  Reduction r = reduce(h, s, max_steps);
  return r.remainder.is_zero() &&
         std::all_of(r.steps.begin(), r.steps.end(), [&](const ReductionStep& st) {
           return cmp_weight(st.word, w, h.order()) == std::strong_ordering::less;
         });
}

GsbReport gsb_check(const RelationSet& s, std::size_t max_deg, std::size_t threads) {
  const std::size_t n = s.size();
  std::vector<std::vector<CompositionRecord>> per_pair(n * n);
  std::vector<std::size_t> skipped(n * n, 0);

  auto run_pair = [&](std::size_t idx) {
    const std::size_t i = idx / n;
    const std::size_t j = idx % n;
    std::vector<Composition> comps;
    try {
      comps = intersection_compositions(s[i].poly, s[j].poly);
      auto inc = inclusion_compositions(s[i].poly, s[j].poly);
      std::move(inc.begin(), inc.end(), std::back_inserter(comps));
    } catch (const Error& e) {
      CompositionRecord rec;
      rec.f = i;
      rec.g = j;
      rec.error = e.what();
      per_pair[idx].push_back(std::move(rec));
      return;
    }
    for (auto& c : comps) {
      if (c.w.degree() > max_deg) {
        ++skipped[idx];
        continue;
      }
      CompositionRecord rec;
      rec.f = i;
      rec.g = j;
      try {
        Reduction red = reduce(c.value, s);
        rec.residual = std::move(red.remainder);
        rec.steps = std::move(red.steps);
      } catch (const Error& e) {
        rec.residual = c.value;
        rec.error = e.what();
      }
      rec.composition = std::move(c);
      per_pair[idx].push_back(std::move(rec));
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < n * n; idx = next++) run_pair(idx);
  };
  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n * n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  GsbReport report;
  report.max_deg = max_deg;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    report.skipped_above_degree += skipped[idx];
    for (auto& rec : per_pair[idx]) {
      if (!rec.trivial()) report.pass = false;
      report.compositions.push_back(std::move(rec));
    }
  }
  return report;
}

std::vector<NWord> irr_words(const RelationSet& s, std::span<const Symbol> letters,
                             std::size_t max_deg, bool allow_ops) {
  auto words = enumerate_ls_nwords(letters, max_deg, allow_ops, s.order());
  std::erase_if(words, [&](const NWord& w) { return is_reducible(w, s); });
  return words;
}

std::vector<NTerm> irr_basis(const RelationSet& s, const Alphabet& alphabet, std::size_t max_deg) {
  std::vector<Symbol> letters(alphabet.size());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Symbol>(i);
  std::vector<NTerm> out;
  for (const auto& w : irr_words(s, letters, max_deg)) out.push_back(shirshov_bracket(w, s.order()));
  return out;
}

}  // namespace nlh
