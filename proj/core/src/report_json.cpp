#include "nlh/report_json.hpp"

namespace nlh {
namespace {

using json = nlohmann::ordered_json;

json steps_json(const std::vector<ReductionStep>& steps, const RelationSet& s, const Alphabet& a) {
  json out = json::array();
  for (const auto& st : steps)
    out.push_back({{"relation", s[st.relation].name},
                   {"pi", to_string(st.pi, a)},
                   {"word", to_string(st.word, a)},
                   {"coefficient", to_string(st.coefficient)}});
  return out;
}

}  // namespace

json to_json(const CheckReport& report) {
  json v = json::array();
  for (const auto& x : report.violations)
    v.push_back({{"identity", x.identity}, {"args", x.args}, {"detail", x.detail}});
  return {{"check", report.check}, {"verdict", report.pass ? "pass" : "fail"}, {"violations", std::move(v)}};
}

json to_json(const GsbReport& report, const RelationSet& s, const Alphabet& alphabet) {
  json rels = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    rels.push_back({{"name", s[i].name},
                    {"leading", to_string(s.leading_word(i), alphabet)},
                    {"poly", to_string(s[i].poly, alphabet)}});
  json comps = json::array();
  for (const auto& r : report.compositions) {
    const auto& c = r.composition;
    json entry{{"f", s[r.f].name},
               {"g", s[r.g].name},
               {"kind", std::string(to_string(c.kind))},
               {"w", to_string(c.w, alphabet)}};
    if (c.kind == Composition::Kind::intersection) {
      entry["a"] = to_string(c.a, alphabet);
      entry["b"] = to_string(c.b, alphabet);
    } else if (c.pi) {
      entry["pi"] = to_string(*c.pi, alphabet);
    }
    entry["value"] = to_string(c.value, alphabet);
    entry["residual"] = to_string(r.residual, alphabet);
    entry["trivial"] = r.trivial();
    entry["steps"] = steps_json(r.steps, s, alphabet);
    if (!r.error.empty()) entry["error"] = r.error;
    comps.push_back(std::move(entry));
  }
  return {{"verdict", report.pass ? "pass" : "fail"},
          {"max_deg", report.max_deg},
          {"relations", std::move(rels)},
          {"compositions", std::move(comps)},
          {"skipped_above_degree", report.skipped_above_degree}};
}

json to_json(const HnnPresentation& pres) {
  json rels = json::array();
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& fam = pres.families[i];
    rels.push_back({{"name", fam.name},
                    {"family", fam.family},
                    {"leading", to_string(pres.relations.leading_word(i), pres.alphabet)},
                    {"poly", to_string(pres.relations[i].poly, pres.alphabet)}});
  }
  json y = json::array();
  for (auto s : pres.subalgebra) y.push_back(pres.alphabet.name(s));
  return {{"alphabet", pres.alphabet.letters()},
          {"subalgebra", std::move(y)},
          {"strict", pres.strict},
          {"order", std::string(to_string(pres.relations.order()))},
          {"relations", std::move(rels)}};
}

json to_json(const EmbeddingReport& report, const Alphabet& alphabet) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"generator", e.generator},
                       {"normal_form", to_string(e.normal_form, alphabet)},
                       {"fixed", e.fixed}});
  return {{"verdict", report.pass ? "pass" : "fail"}, {"rank", report.rank}, {"entries", std::move(entries)}};
}

json to_json(const FreeSubalgebraReport& report, const Alphabet& alphabet) {
  json bad = json::array();
  for (const auto& w : report.reducible) bad.push_back(to_string(w, alphabet));
  return {{"verdict", report.pass ? "pass" : "fail"},
          {"generator", report.generator},
          {"max_deg", report.max_deg},
          {"words_checked", report.words_checked},
          {"reducible", std::move(bad)}};
}

}  // namespace nlh
