#include "mrees/errors.hpp"
#include "mrees/family.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mrees {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t positive(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw ParseError(where + ": expected a positive integer");
  return v.get<std::uint64_t>();
}

} // namespace

FamilySpec parse_family_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("family file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("family file: top level must be an object");

  FamilySpec spec;
  const auto& mode = require(doc, "mode", "family file");
  if (mode == "rees") spec.mode = FamilyMode::rees;
  else if (mode == "fiber") spec.mode = FamilyMode::fiber;
  else throw ParseError("/mode: expected \"rees\" or \"fiber\"");

  spec.variables = positive(require(doc, "variables", "family file"), "/variables");
  if (auto it = doc.find("embedding_degree"); it != doc.end() && !it->is_null())
    spec.embedding_degree = positive(*it, "/embedding_degree");

  const auto& levels = require(doc, "levels", "family file");
  if (!levels.is_array()) throw ParseError("/levels: expected an array");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const std::string where = "/levels/" + std::to_string(k);
    const auto& entry = levels[k];
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    LevelSpec ls;
    if (auto it = entry.find("degree"); it != entry.end()) ls.degree = positive(*it, where + "/degree");
    const bool has_borel = entry.contains("borel");
    const bool has_list = entry.contains("generators");
    if (has_borel == has_list)
      throw ParseError(where + ": exactly one of \"borel\" or \"generators\" is required");
    try {
      if (has_borel) {
        const auto& b = entry.at("borel");
        if (!b.is_string()) throw ParseError(where + "/borel: expected a monomial string");
        ls.borel = b.get<std::string>();
        parse_monomial(*ls.borel, spec.variables);
      } else {
        const auto& list = entry.at("generators");
        if (!list.is_array()) throw ParseError(where + "/generators: expected an array");
        for (std::size_t g = 0; g < list.size(); ++g) {
          if (!list[g].is_string())
            throw ParseError(where + "/generators/" + std::to_string(g) + ": expected a monomial string");
          ls.generators.push_back(list[g].get<std::string>());
          try {
            parse_monomial(ls.generators.back(), spec.variables);
          } catch (const ParseError& e) {
            throw ParseError(where + "/generators/" + std::to_string(g) + ": " + e.what());
          }
        }
      }
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).starts_with("/")) throw;
      throw ParseError(where + "/borel: " + e.what());
    }
    spec.levels.push_back(std::move(ls));
  }
  return spec;
}

FamilySpec load_family_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_family_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

} // namespace mrees
