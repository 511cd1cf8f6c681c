#include "mrees/serialize.hpp"

#include "mrees/errors.hpp"

#include <algorithm>

namespace mrees {

using nlohmann::json;

namespace {

json ref_json(const GeneratorRef& r) { return json::array({r.level, r.index}); }

json optional_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

} // namespace

json to_json(const LeveledFamily& fam) {
  json levels = json::array();
  for (int i = fam.first_level(); i <= fam.last_level(); ++i) {
    json gens = json::array();
    for (const auto& g : fam.level(i).generators) gens.push_back(g.to_string());
    levels.push_back({{"level", i}, {"degree", fam.degree(i)}, {"generators", gens}});
  }
  json out{{"mode", std::string(to_string(fam.mode()))},
           {"variables", fam.variables()},
           {"levels", levels}};
  if (fam.embedding_degree()) out["embedding_degree"] = *fam.embedding_degree();
  return out;
}

json to_json(const ClosureReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"a", ref_json(w.a)},
                         {"b", ref_json(w.b)},
                         {"replacement", {w.replacement.first.to_string(), w.replacement.second.to_string()}},
                         {"first_missing", w.first_missing},
                         {"second_missing", w.second_missing}});
  return {{"closed", report.closed},
          {"pairs_checked", report.pairs_checked},
          {"incomparable_pairs", report.incomparable_pairs},
          {"violations", report.violations},
          {"witnesses", witnesses}};
}

json to_json(const CharacterizationReport& report) {
  json levels = json::array();
  for (const auto& l : report.levels)
    levels.push_back({{"level", l.level},
                      {"last", l.last.to_string()},
                      {"borel_size", l.borel_size},
                      {"borel_equal", l.borel_equal},
                      {"borel_subset", l.borel_subset}});
  json chain = json::array();
  for (const auto& c : report.chain)
    chain.push_back({{"level", c.level},
                     {"max_of_last", c.max_of_last},
                     {"min_of_next_last", c.min_of_next_last},
                     {"holds", c.holds}});
  return {{"levels", levels},
          {"chain", chain},
          {"conjunction", report.conjunction},
          {"necessary_conditions", report.necessary_conditions}};
}

json to_json(const ConfluenceReport& report) {
  return {{"passed", report.passed},
          {"pairs", report.pairs},
          {"max_reduction_length", report.max_reduction_length},
          {"total_steps", report.total_steps},
          {"failures", report.failures},
          {"first_failure", optional_string(report.first_failure)}};
}

json to_json(const OracleReport& report) {
  return {{"passed", report.passed},
          {"monomials", report.monomials},
          {"fibers", report.fibers},
          {"max_fiber_size", report.max_fiber_size},
          {"reductions", report.reductions},
          {"failures", report.failures},
          {"witness", optional_string(report.witness)}};
}

json to_json(const MeasureReport& report) {
  return {{"passed", report.passed},
          {"monomials", report.monomials},
          {"steps", report.steps},
          {"violations", report.violations},
          {"longest_chain", report.longest_chain},
          {"witness", optional_string(report.witness)}};
}

json to_json(const Certificate& cert) {
  json out{{"mode", std::string(to_string(cert.mode))},
           {"closed", cert.closed},
           {"basis_size", cert.basis_size ? json(*cert.basis_size) : json(nullptr)},
           {"quadratic", cert.quadratic ? json(*cert.quadratic) : json(nullptr)},
           {"squarefree_leads", cert.squarefree_leads ? json(*cert.squarefree_leads) : json(nullptr)},
           {"characterization", to_json(cert.characterization)}};
  if (!cert.closed) out["witnesses"] = to_json(cert.closure)["witnesses"];
  if (!cert.conclusions.empty()) {
    out["conclusions"] = cert.conclusions;
    out["citations"] = cert.citations;
  }
  return out;
}

json to_json(const Basis& basis) {
  const auto& g = basis.elements();
  json relations = json::array();
  for (const auto& b : g) relations.push_back({{"lead", b.lead.to_string()}, {"trail", b.trail.to_string()}});
  return {{"count", g.size()},
          {"quadratic", std::all_of(g.begin(), g.end(),
                                    [](const auto& b) { return b.lead.degree() == 2 && b.trail.degree() == 2; })},
          {"squarefree_leads",
           std::all_of(g.begin(), g.end(), [](const auto& b) { return b.lead.is_squarefree(); })},
          {"relations", relations}};
}

Basis basis_from_json(const json& doc, const LeveledFamily& fam) {
  const json* relations = &doc;
  if (doc.is_object()) {
    auto it = doc.find("relations");
    if (it == doc.end()) throw ParseError("basis: missing \"relations\"");
    relations = &*it;
  }
  if (!relations->is_array()) throw ParseError("basis: \"relations\" must be an array");
  std::vector<MarkedBinomial> out;
  for (std::size_t k = 0; k < relations->size(); ++k) {
    const auto& r = (*relations)[k];
    if (!r.is_object() || !r.contains("lead") || !r.contains("trail") || !r["lead"].is_string() ||
        !r["trail"].is_string())
      throw ParseError("basis: relation " + std::to_string(k) + " needs string lead and trail");
    out.push_back({parse_tmonomial(r["lead"].get<std::string>(), fam),
                   parse_tmonomial(r["trail"].get<std::string>(), fam)});
  }
  try {
    return Basis(std::move(out));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("basis: ") + e.what());
  }
}

} // namespace mrees
