#ifndef MREES_CERTIFICATE_HPP
#define MREES_CERTIFICATE_HPP

#include "mrees/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mrees {

/// What was checked about a family, and what follows from it. Conclusions
/// are attached only when the family is closed under comparability and the
/// basis is verified quadratic with squarefree leads.
struct Certificate {
  FamilyMode mode = FamilyMode::rees;
  bool closed = false;
  ClosureReport closure;
  CharacterizationReport characterization;
  std::optional<std::size_t> basis_size;
  std::optional<bool> quadratic;
  std::optional<bool> squarefree_leads;
  std::vector<std::string> conclusions;
  std::vector<std::string> citations;
};

Certificate certify(const LeveledFamily& fam);

} // namespace mrees

#endif
