#include "nlh/hnn.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "nlh/errors.hpp"
#include "nlh/freealg.hpp"
#include "nlh/lyndon.hpp"

namespace nlh {
namespace {

Vec& axpy(Vec& acc, const Rational& c, const Vec& v) {
  if (c == 0) return acc;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
  return acc;
}

Vec minus(Vec a, const Vec& b) { return axpy(a, -1, b); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

std::string format(const AlgebraSpec& spec, const Vec& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational m = abs(v[i]);
    if (first)
      out << (v[i] < 0 ? "-" : "");
    else
      out << (v[i] < 0 ? " - " : " + ");
    if (m != 1) out << to_string(m) << "*";
    out << spec.generators[i];
    first = false;
  }
  return first ? "0" : out.str();
}

// D as a partial linear map on span(Y). Returns nullopt and records the
// offending basis element when the argument leaves the subalgebra.
std::optional<Vec> apply_derivation(const AlgebraSpec& spec, const Vec& v,
                                    std::vector<std::size_t>& outside) {
  Vec out = spec.zero();
  bool ok = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!spec.in_subalgebra(k)) {
      outside.push_back(k);
      ok = false;
      continue;
    }
    if (auto it = spec.derivation.find(k); it != spec.derivation.end()) axpy(out, v[k], it->second);
  }
  if (!ok) return std::nullopt;
  return out;
}

void check_zero(CheckReport& report, const AlgebraSpec& spec, const Vec& residual,
                std::string identity, std::vector<std::string> args) {
  if (is_zero(residual)) return;
  report.pass = false;
  report.violations.push_back(
      Violation{std::move(identity), std::move(args), "residual " + format(spec, residual)});
}

}  // namespace

Vec AlgebraSpec::unit(std::size_t i) const {
  Vec v = zero();
  v.at(i) = 1;
  return v;
}

Vec AlgebraSpec::alpha(std::size_t i, std::size_t j) const {
  if (auto it = bracket.find({i, j}); it != bracket.end()) return it->second;
  if (auto it = bracket.find({j, i}); it != bracket.end()) {
    Vec v = it->second;
    for (auto& c : v) c = -c;
    return v;
  }
  return zero();
}

Vec AlgebraSpec::bracket_of(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) axpy(out, a[i] * b[j], alpha(i, j));
  }
  return out;
}

Vec AlgebraSpec::apply_nijenhuis(const Vec& a) const {
  Vec out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) axpy(out, a[i], nijenhuis[i]);
  return out;
}

bool AlgebraSpec::in_subalgebra(std::size_t i) const {
  return std::binary_search(subalgebra.begin(), subalgebra.end(), i);
}

std::size_t AlgebraSpec::index_of(std::string_view name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) throw SymbolError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

CheckReport validate_lie(const AlgebraSpec& spec) {
  CheckReport report{"lie", true, {}};
  const auto& g = spec.generators;
  for (const auto& [key, v] : spec.bracket) {
    auto [i, j] = key;
    if (i == j) {
      check_zero(report, spec, v, "antisymmetry", {g[i], g[i]});
    } else if (i < j) {
      if (auto it = spec.bracket.find({j, i}); it != spec.bracket.end()) {
        Vec sum = v;
        axpy(sum, 1, it->second);
        check_zero(report, spec, sum, "antisymmetry", {g[i], g[j]});
      }
    }
  }
  const std::size_t n = spec.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto x = spec.unit(i), y = spec.unit(j), z = spec.unit(k);
        Vec jac = spec.bracket_of(spec.bracket_of(x, y), z);
        axpy(jac, 1, spec.bracket_of(spec.bracket_of(y, z), x));
        axpy(jac, 1, spec.bracket_of(spec.bracket_of(z, x), y));
        check_zero(report, spec, jac, "jacobi", {g[i], g[j], g[k]});
      }
  return report;
}

CheckReport validate_nijenhuis(const AlgebraSpec& spec) {
  CheckReport report{"nijenhuis", true, {}};
  const std::size_t n = spec.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec nx = spec.nijenhuis[i], ny = spec.nijenhuis[j];
      Vec x = spec.unit(i), y = spec.unit(j);
      Vec lhs = spec.bracket_of(nx, ny);
      Vec inner = spec.bracket_of(nx, y);
      axpy(inner, 1, spec.bracket_of(x, ny));
      axpy(inner, -1, spec.apply_nijenhuis(spec.bracket_of(x, y)));
      check_zero(report, spec, minus(lhs, spec.apply_nijenhuis(inner)), "nijenhuis",
                 {spec.generators[i], spec.generators[j]});
    }
  return report;
}

CheckReport validate_subalgebra(const AlgebraSpec& spec) {
  CheckReport report{"subalgebra", true, {}};
  auto outside = [&](const Vec& v) {
    Vec out = spec.zero();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!spec.in_subalgebra(k)) out[k] = v[k];
    return out;
  };
  const auto& y = spec.subalgebra;
  for (std::size_t p = 0; p < y.size(); ++p) {
    for (std::size_t q = p + 1; q < y.size(); ++q)
      check_zero(report, spec, outside(spec.alpha(y[p], y[q])), "subalgebra-bracket",
                 {spec.generators[y[p]], spec.generators[y[q]]});
    check_zero(report, spec, outside(spec.nijenhuis[y[p]]), "subalgebra-nijenhuis",
               {spec.generators[y[p]]});
  }
  return report;
}

CheckReport validate_derivation(const AlgebraSpec& spec) {
  CheckReport report{"derivation", true, {}};
  const auto& g = spec.generators;
  const auto& y = spec.subalgebra;

  auto domain = [&](const std::vector<std::size_t>& outside, std::string identity,
                    std::vector<std::string> args) {
    for (auto k : outside) {
      report.pass = false;
      auto a = args;
      a.push_back(g[k]);
      report.violations.push_back(Violation{
          "derivation-domain", std::move(a),
          identity + " evaluates D at " + g[k] + ", which is outside the subalgebra"});
    }
  };

  for (std::size_t p = 0; p < y.size(); ++p) {
    const std::size_t a = y[p];
    Vec ea = spec.unit(a);
    std::vector<std::size_t> outside;
    auto da = apply_derivation(spec, ea, outside);

    // D(N a) = N(D a)
    auto dna = apply_derivation(spec, spec.nijenhuis[a], outside);
    if (da && dna)
      check_zero(report, spec, minus(*dna, spec.apply_nijenhuis(*da)), "derivation-commutes-n", {g[a]});
    domain(outside, "D(N(a)) = N(D(a))", {g[a]});

    for (std::size_t q = p + 1; q < y.size(); ++q) {
      const std::size_t b = y[q];
      Vec eb = spec.unit(b);
      outside.clear();
      auto db = apply_derivation(spec, eb, outside);
      auto dab = apply_derivation(spec, spec.bracket_of(ea, eb), outside);
      if (da && db && dab) {
        Vec rhs = spec.bracket_of(*da, eb);
        axpy(rhs, 1, spec.bracket_of(ea, *db));
        check_zero(report, spec, minus(*dab, rhs), "derivation-bracket", {g[a], g[b]});
      }
      domain(outside, "D[a,b] = [Da,b] + [a,Db]", {g[a], g[b]});

      outside.clear();
      Vec na = spec.nijenhuis[a], nb = spec.nijenhuis[b];
      auto dna2 = apply_derivation(spec, na, outside);
      auto dnb = apply_derivation(spec, nb, outside);
      auto dnanb = apply_derivation(spec, spec.bracket_of(na, nb), outside);
      if (dna2 && dnb && dnanb) {
        Vec rhs = spec.bracket_of(*dna2, nb);
        axpy(rhs, 1, spec.bracket_of(na, *dnb));
        check_zero(report, spec, minus(*dnanb, rhs), "derivation-nijenhuis-bracket", {g[a], g[b]});
      }
      domain(outside, "D[Na,Nb] = [DNa,Nb] + [Na,DNb]", {g[a], g[b]});
    }
  }
  return report;
}

std::vector<CheckReport> validate_all(const AlgebraSpec& spec) {
  return {validate_lie(spec), validate_nijenhuis(spec), validate_subalgebra(spec),
          validate_derivation(spec)};
}

HnnPresentation build_relations(const AlgebraSpec& spec, const BuildOptions& opts) {
  if (opts.validate) {
    std::string failed;
    for (const auto& r : validate_all(spec))
      if (!r.pass) failed += (failed.empty() ? "" : ", ") + r.check;
    if (!failed.empty()) throw SpecError("algebra fails validation: " + failed);
  }
  if (std::find(spec.generators.begin(), spec.generators.end(), "t") != spec.generators.end())
    throw SpecError("'t' is reserved for the HNN letter");

  HnnPresentation pres;
  std::vector<std::string> letters{"t"};
  letters.insert(letters.end(), spec.generators.begin(), spec.generators.end());
  pres.alphabet = Alphabet(letters);
  pres.t = 0;
  pres.strict = !opts.include_nt;
  const PrimeOrder order = opts.order;
  const std::size_t n = spec.dimension();
  auto sym = [](std::size_t i) { return static_cast<Symbol>(i + 1); };
  for (std::size_t i = 0; i < n; ++i) pres.generators.push_back(sym(i));
  for (auto a : spec.subalgebra) pres.subalgebra.push_back(sym(a));

  auto letter = [&](Symbol s) { return Poly::basis(NWord::of(Prime::letter(s)), 1, order); };
  auto op_letter = [&](Symbol s) { return apply_op(letter(s)); };
  auto linear = [&](const Vec& v) {
    Poly p(order);
    for (std::size_t k = 0; k < n; ++k) p.add_term(NWord::of(Prime::letter(sym(k))), v[k]);
    return p;
  };
  auto op_word = [](Symbol s) { return Prime::op(NWord::of(Prime::letter(s))); };

  std::vector<Relation> relations;
  auto emit = [&](std::string name, std::string family, const Poly& p, NWord expected) {
    Poly monic = make_monic(p);
    const NWord& lead = leading(monic).first;
    if (lead != expected)
      throw OrderingConflict("relation " + name + " leads with " + to_string(lead, pres.alphabet) +
                             " instead of " + to_string(expected, pres.alphabet) +
                             " under the '" + std::string(to_string(order)) + "' prime order");
    pres.families.push_back(HnnRelation{name, std::move(family), std::move(expected)});
    relations.push_back(Relation{std::move(name), std::move(monic)});
  };

  const auto& g = spec.generators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      emit("f_" + g[i] + g[j], "f", bracket(letter(sym(i)), letter(sym(j))) - linear(spec.alpha(i, j)),
           NWord::from_symbols({sym(i), sym(j)}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      emit("fN_" + g[i] + g[j], "fN",
           bracket(letter(sym(i)), op_letter(sym(j))) -
               linear(spec.bracket_of(spec.unit(i), spec.nijenhuis[j])),
           NWord({Prime::letter(sym(i)), op_word(sym(j))}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      emit("hN_" + g[i] + g[j], "hN",
           bracket(op_letter(sym(i)), op_letter(sym(j))) -
               linear(spec.bracket_of(spec.nijenhuis[i], spec.nijenhuis[j])),
           NWord({op_word(sym(i)), op_word(sym(j))}));

  auto derivation = [&](const Vec& v) {
    Vec out = spec.zero();
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      if (!spec.in_subalgebra(k))
        throw SpecError("derivation evaluated outside the subalgebra at " + g[k]);
      if (auto it = spec.derivation.find(k); it != spec.derivation.end()) axpy(out, v[k], it->second);
    }
    return out;
  };
  for (auto a : spec.subalgebra)
    emit("g_" + g[a], "g", bracket(letter(pres.t), letter(sym(a))) - linear(derivation(spec.unit(a))),
         NWord::from_symbols({pres.t, sym(a)}));
  for (auto a : spec.subalgebra)
    emit("gN_" + g[a], "gN",
         bracket(letter(pres.t), op_letter(sym(a))) - linear(derivation(spec.nijenhuis[a])),
         NWord({Prime::letter(pres.t), op_word(sym(a))}));
  if (opts.include_nt)
    emit("r_t", "rt", op_letter(pres.t) - letter(pres.t), NWord::of(op_word(pres.t)));

  pres.relations = RelationSet(std::move(relations));
  return pres;
}

GsbReport hnn_gsb_check(const HnnPresentation& pres, std::size_t max_deg) {
  return gsb_check(pres.relations, max_deg);
}

NormalFormResult normal_form(const Poly& expr, const HnnPresentation& pres, std::size_t max_deg) {
  NormalFormResult out;
  out.value = reduce(expr, pres.relations).remainder;
  out.advisory = !hnn_gsb_check(pres, max_deg).pass;
  return out;
}

namespace {

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

EmbeddingReport embedding_check(const HnnPresentation& pres) {
  EmbeddingReport report;
  const PrimeOrder order = pres.relations.order();
  std::vector<Poly> forms;
  for (Symbol s : pres.generators) {
    Poly p = Poly::basis(NWord::of(Prime::letter(s)), 1, order);
    Poly nf = reduce(p, pres.relations).remainder;
    bool fixed = nf == p;
    report.pass = report.pass && fixed;
    report.entries.push_back(EmbeddingEntry{pres.alphabet.name(s), nf, fixed});
    forms.push_back(std::move(nf));
  }
  std::vector<NWord> columns;
  for (const auto& f : forms)
    for (const auto& [w, c] : f.terms())
      if (std::find(columns.begin(), columns.end(), w) == columns.end()) columns.push_back(w);
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    std::vector<Rational> row;
    for (const auto& w : columns) row.push_back(f.coefficient(w));
    rows.push_back(std::move(row));
  }
  report.rank = rank_of(std::move(rows));
  report.pass = report.pass && report.rank == pres.generators.size();
  return report;
}

FreeSubalgebraReport free_subalgebra_check(const HnnPresentation& pres, std::string_view x,
                                           std::size_t max_deg) {
  auto s = pres.alphabet.find(x);
  if (!s || *s == pres.t) throw PreconditionError("'" + std::string(x) + "' is not a generator of the algebra");
  if (std::find(pres.subalgebra.begin(), pres.subalgebra.end(), *s) != pres.subalgebra.end())
    throw PreconditionError("'" + std::string(x) + "' lies in the subalgebra");

  FreeSubalgebraReport report;
  report.generator = std::string(x);
  report.max_deg = max_deg;
  std::vector<Symbol> letters{pres.t, *s};
  std::sort(letters.begin(), letters.end());
  auto words = enumerate_ls_nwords(letters, max_deg, true, pres.relations.order());
  report.words_checked = words.size();
  for (const auto& w : words)
    if (is_reducible(w, pres.relations)) report.reducible.push_back(w);
  report.pass = report.reducible.empty();
  return report;
}

}  // namespace nlh
