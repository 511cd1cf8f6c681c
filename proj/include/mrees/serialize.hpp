#ifndef MREES_SERIALIZE_HPP
#define MREES_SERIALIZE_HPP

#include "mrees/certificate.hpp"
#include "mrees/family.hpp"
#include "mrees/oracle.hpp"
#include "mrees/presentation.hpp"

#include <json.hpp>

namespace mrees {

nlohmann::json to_json(const LeveledFamily& fam);
nlohmann::json to_json(const ClosureReport& report);
nlohmann::json to_json(const CharacterizationReport& report);
nlohmann::json to_json(const ConfluenceReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const MeasureReport& report);
nlohmann::json to_json(const Certificate& cert);

/// {"count": k, "quadratic": .., "squarefree_leads": .., "relations": [{"lead", "trail"}]}
nlohmann::json to_json(const Basis& basis);
/// Inverse of to_json(Basis); refs are checked against fam. Throws ParseError.
Basis basis_from_json(const nlohmann::json& doc, const LeveledFamily& fam);

} // namespace mrees

#endif
