#include "nlh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "nlh/errors.hpp"
#include "nlh/hnn.hpp"
#include "nlh/io.hpp"
#include "nlh/lyndon.hpp"
#include "nlh/report_json.hpp"
#include "nlh/rewrite.hpp"

namespace nlh::cli {
namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string file;
  bool json = false;
  bool strict = false;
  std::string order = "erasure";
  std::optional<std::size_t> max_deg;
};

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Loaded {
  AlgebraSpec spec;
  std::vector<CheckReport> checks;
  bool valid = true;
};

Loaded load(const Common& c) {
  Loaded l{parse_algebra(c.file), {}, true};
  l.checks = validate_all(l.spec);
  l.valid = std::all_of(l.checks.begin(), l.checks.end(), [](const auto& r) { return r.pass; });
  return l;
}

void print_checks(std::ostream& out, const std::vector<CheckReport>& checks) {
  for (const auto& r : checks) {
    out << r.check << ": " << verdict(r.pass) << '\n';
    for (const auto& v : r.violations) {
      out << "  " << v.identity << '(';
      for (std::size_t i = 0; i < v.args.size(); ++i) out << (i ? "," : "") << v.args[i];
      out << "): " << v.detail << '\n';
    }
  }
}

// Shared prologue of the commands that need a presentation. Returns a
// status when the command must stop early.
std::optional<int> prepare(const Common& c, Loaded& l, std::optional<HnnPresentation>& pres,
                           std::ostream& out, std::ostream& err) {
  l = load(c);
  if (!l.valid) {
    if (c.json) {
      json checks = json::array();
      for (const auto& r : l.checks) checks.push_back(to_json(r));
      emit(out, {{"verdict", "fail"}, {"checks", std::move(checks)}});
    } else {
      err << "algebra fails validation\n";
      print_checks(out, l.checks);
      out << "verdict: fail\n";
    }
    return kFail;
  }
  BuildOptions opts;
  opts.include_nt = l.spec.options.include_nt && !c.strict;
  opts.order = parse_prime_order(c.order);
  opts.validate = false;
  pres = build_relations(l.spec, opts);
  return std::nullopt;
}

std::size_t degree_bound(const Common& c, const Loaded& l) {
  return c.max_deg.value_or(l.spec.options.max_deg);
}

int cmd_validate(const Common& c, std::ostream& out) {
  Loaded l = load(c);
  if (c.json) {
    json checks = json::array();
    for (const auto& r : l.checks) checks.push_back(to_json(r));
    emit(out, {{"verdict", verdict(l.valid)}, {"checks", std::move(checks)}});
  } else {
    print_checks(out, l.checks);
    out << "verdict: " << verdict(l.valid) << '\n';
  }
  return l.valid ? kPass : kFail;
}

int cmd_build(const Common& c, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  if (c.json) {
    emit(out, to_json(*pres));
    return kPass;
  }
  for (std::size_t i = 0; i < pres->relations.size(); ++i)
    out << pres->relations[i].name << ": " << to_string(pres->relations[i].poly, pres->alphabet)
        << "    lead " << to_string(pres->relations.leading_word(i), pres->alphabet) << '\n';
  return kPass;
}

int cmd_gsb(const Common& c, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  auto report = hnn_gsb_check(*pres, degree_bound(c, l));
  if (c.json) {
    emit(out, to_json(report, pres->relations, pres->alphabet));
  } else {
    const auto& a = pres->alphabet;
    out << "relations: " << pres->relations.size() << '\n';
    out << "compositions: " << report.compositions.size() << " (max_deg " << report.max_deg
        << ", skipped above: " << report.skipped_above_degree << ")\n";
    for (const auto& r : report.compositions) {
      if (r.trivial()) continue;
      out << "  " << pres->relations[r.f].name << " / " << pres->relations[r.g].name << ' '
          << to_string(r.composition.kind) << " w=" << to_string(r.composition.w, a) << ": "
          << (r.error.empty() ? "residual " + to_string(r.residual, a) : r.error) << '\n';
    }
    out << "verdict: " << verdict(report.pass) << '\n';
  }
  return report.pass ? kPass : kFail;
}

int cmd_nf(const Common& c, const std::string& expr, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  Poly p = parse_expr(expr, pres->alphabet, pres->relations.order());
  auto result = normal_form(p, *pres, degree_bound(c, l));
  if (c.json) {
    emit(out, {{"input", to_string(p, pres->alphabet)},
               {"normal_form", to_string(result.value, pres->alphabet)},
               {"advisory", result.advisory}});
  } else {
    out << to_string(result.value, pres->alphabet) << '\n';
    if (result.advisory)
      err << "advisory: relations are not a Groebner-Shirshov basis up to degree "
          << degree_bound(c, l) << "; the normal form may not be unique\n";
  }
  return kPass;
}

int cmd_irr(const Common& c, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  std::vector<Symbol> letters;
  for (Symbol s = 0; s < pres->alphabet.size(); ++s) letters.push_back(s);
  auto words = irr_words(pres->relations, letters, degree_bound(c, l));
  const PrimeOrder order = pres->relations.order();
  if (c.json) {
    json list = json::array();
    for (const auto& w : words)
      list.push_back({{"word", to_string(w, pres->alphabet)},
                      {"term", to_string(shirshov_bracket(w, order), pres->alphabet)}});
    emit(out, {{"max_deg", degree_bound(c, l)}, {"strict", pres->strict}, {"count", words.size()},
               {"basis", std::move(list)}});
  } else {
    for (const auto& w : words) out << to_string(shirshov_bracket(w, order), pres->alphabet) << '\n';
    out << "count: " << words.size() << '\n';
  }
  return kPass;
}

int cmd_embed(const Common& c, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  auto report = embedding_check(*pres);
  if (c.json) {
    emit(out, to_json(report, pres->alphabet));
  } else {
    for (const auto& e : report.entries)
      out << e.generator << " -> " << to_string(e.normal_form, pres->alphabet)
          << (e.fixed ? "" : "  (changed)") << '\n';
    out << "rank: " << report.rank << '/' << pres->generators.size() << '\n';
    out << "verdict: " << verdict(report.pass) << '\n';
  }
  return report.pass ? kPass : kFail;
}

int cmd_free_sub(const Common& c, const std::string& gen, std::ostream& out, std::ostream& err) {
  Loaded l;
  std::optional<HnnPresentation> pres;
  if (auto status = prepare(c, l, pres, out, err)) return *status;
  auto report = free_subalgebra_check(*pres, gen, degree_bound(c, l));
  if (c.json) {
    emit(out, to_json(report, pres->alphabet));
  } else {
    out << "words checked: " << report.words_checked << '\n';
    for (const auto& w : report.reducible) out << "  reducible: " << to_string(w, pres->alphabet) << '\n';
    out << "verdict: " << verdict(report.pass) << '\n';
  }
  return report.pass ? kPass : kFail;
}

int cmd_ls(const std::vector<std::string>& letters, std::size_t max_deg, bool ops,
           const std::string& order_name, bool as_json, std::ostream& out) {
  Alphabet alphabet(letters);
  const PrimeOrder order = parse_prime_order(order_name);
  auto words = enumerate_ls_nwords(alphabet, max_deg, ops, order);
  if (as_json) {
    json list = json::array();
    for (const auto& w : words)
      list.push_back({{"word", to_string(w, alphabet)},
                      {"term", to_string(shirshov_bracket(w, order), alphabet)}});
    emit(out, {{"alphabet", letters}, {"max_deg", max_deg}, {"ops", ops}, {"count", words.size()},
               {"words", std::move(list)}});
  } else {
    for (const auto& w : words)
      out << to_string(w, alphabet) << "  " << to_string(shirshov_bracket(w, order), alphabet) << '\n';
    out << "count: " << words.size() << '\n';
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov tools for free Nijenhuis Lie algebras and HNN-extensions", "nlh"};
  app.require_subcommand(1);

  Common c;
  std::string expr, gen, order_ls = "erasure";
  std::vector<std::string> letters;
  std::size_t ls_deg = 6;
  bool ops = false;

  auto file_cmd = [&](CLI::App* sub, bool with_deg) {
    sub->add_option("file", c.file, "Algebra file (JSON)")->required();
    sub->add_flag("--json", c.json, "Structured output");
    sub->add_flag("--strict-relations", c.strict, "Omit N(t) - t");
    sub->add_option("--order", c.order, "Prime order: erasure or nested")
        ->check(CLI::IsMember({"erasure", "nested"}));
    if (with_deg)
      sub->add_option("--max-deg", c.max_deg, "Degree bound")->check(CLI::PositiveNumber);
    return sub;
  };

  auto* validate = app.add_subcommand("validate", "Check the structure-constant identities");
  validate->add_option("file", c.file, "Algebra file (JSON)")->required();
  validate->add_flag("--json", c.json, "Structured output");

  auto* hnn = app.add_subcommand("hnn", "HNN-extension presentation");
  hnn->require_subcommand(1);
  auto* build = file_cmd(hnn->add_subcommand("build", "Print the relation set"), false);

  auto* gsb = app.add_subcommand("gsb", "Groebner-Shirshov basis test");
  gsb->require_subcommand(1);
  auto* check = file_cmd(gsb->add_subcommand("check", "Reduce every composition"), true);

  auto* nf = file_cmd(app.add_subcommand("nf", "Normal form of an expression"), true);
  nf->add_option("--expr", expr, "Expression, e.g. \"[x,[x,y]]\"")->required();

  auto* irr = file_cmd(app.add_subcommand("irr", "Irreducible LS terms up to a degree"), true);

  auto* embed = file_cmd(app.add_subcommand("embed", "Embedding check for the generators"), false);

  auto* free_sub = file_cmd(app.add_subcommand("free-sub", "Freeness check on t and a generator"), true);
  free_sub->add_option("--gen", gen, "Generator outside the subalgebra")->required();

  auto* ls = app.add_subcommand("ls", "Lyndon-Shirshov words");
  ls->require_subcommand(1);
  auto* enumerate = ls->add_subcommand("enumerate", "List LS Nijenhuis words");
  enumerate->add_option("--alphabet", letters, "Letters, greatest first")->required()->delimiter(',');
  enumerate->add_option("--max-deg", ls_deg, "Degree bound")->check(CLI::PositiveNumber);
  enumerate->add_flag("--ops", ops, "Allow operator primes");
  enumerate->add_option("--order", order_ls, "Prime order: erasure or nested")
      ->check(CLI::IsMember({"erasure", "nested"}));
  enumerate->add_flag("--json", c.json, "Structured output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(c, out);
    if (*build) return cmd_build(c, out, err);
    if (*check) return cmd_gsb(c, out, err);
    if (*nf) return cmd_nf(c, expr, out, err);
    if (*irr) return cmd_irr(c, out, err);
    if (*embed) return cmd_embed(c, out, err);
    if (*free_sub) return cmd_free_sub(c, gen, out, err);
    if (*enumerate) return cmd_ls(letters, ls_deg, ops, order_ls, c.json, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SymbolError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace nlh::cli
