#ifndef MREES_ORACLE_HPP
#define MREES_ORACLE_HPP

#include "mrees/inversions.hpp"
#include "mrees/presentation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mrees {

struct OracleOptions {
  /// Upper bound on the number of T-monomials enumerated.
  std::uint64_t monomial_cap = 10'000'000;
  std::size_t step_cap = 1'000'000;
};

/// Psi image -> every T-monomial of degree 1..D with that image, each bucket
/// in increasing T-monomial order.
using FiberMap = std::map<PsiImage, std::vector<TMonomial>>;

/// Number of T-monomials of degree 1..max_degree in `variables` variables,
/// saturating at UINT64_MAX.
std::uint64_t count_tmonomials(std::uint64_t variables, std::size_t max_degree);

/// All T-monomials of exactly `degree`, increasing.
std::vector<TMonomial> enumerate_tmonomials(const LeveledFamily& fam, std::size_t degree);

/// Throws ValidationError for max_degree == 0 and ResourceError past the cap.
FiberMap enumerate_fibers(const LeveledFamily& fam, std::size_t max_degree,
                          const OracleOptions& options = {});

struct OracleReport {
  bool passed = true;
  std::uint64_t monomials = 0;
  std::size_t fibers = 0;
  std::size_t max_fiber_size = 0;
  std::uint64_t reductions = 0;
  std::size_t failures = 0;
  std::optional<std::string> witness;
};

/// Every fiber holds exactly one completely reduced monomial and every
/// member normal-forms to it.
OracleReport verify_unique_normal_forms(const LeveledFamily& fam, const Basis& basis,
                                        std::size_t max_degree, const OracleOptions& options = {});

/// member - representative reduces to 0 for every member of every fiber.
OracleReport verify_kernel_generation(const LeveledFamily& fam, const Basis& basis,
                                      std::size_t max_degree, const OracleOptions& options = {});

struct MeasureReport {
  bool passed = true;
  std::uint64_t monomials = 0;
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
  std::size_t longest_chain = 0;
  std::optional<std::string> witness;
};

/// Reduces each monomial with the deterministic strategy and checks that
/// (c, e) drops strictly in lex order at every step.
MeasureReport verify_measure_decrease(const LeveledFamily& fam, const Basis& basis,
                                      std::span<const TMonomial> monomials,
                                      const OracleOptions& options = {});

} // namespace mrees

#endif
