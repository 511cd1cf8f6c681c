#ifndef MREES_FAMILY_HPP
#define MREES_FAMILY_HPP

#include "mrees/monomial.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mrees {

/// rees: levels 0..s with level 0 = {X_1, ..., X_n}, images u_ij t_i.
/// fiber: levels 1..s, images u_ij X_{n+i}^{m - d_i}.
enum class FamilyMode { rees, fiber };

std::string_view to_string(FamilyMode mode);

/// (level, 1-based index within the level). The defaulted ordering is the
/// lexicographic order on (i, j).
struct GeneratorRef {
  int level = 0;
  int index = 0;
  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

struct GeneratorRefHash {
  std::size_t operator()(const GeneratorRef& r) const noexcept {
    return std::hash<long long>()((static_cast<long long>(r.level) << 32) ^ r.index);
  }
};

std::string to_string(const GeneratorRef& r);

struct Level {
  std::uint64_t degree = 0;
  /// Strictly descending in revlex: generators[0] is u_{i1}.
  std::vector<Monomial> generators;
};

/// The generator set M (or M* in fiber mode), validated on construction.
class LeveledFamily {
public:
  /// `levels` lists every level starting at first_level() for the mode, so
  /// rees mode must include level 0. Generators are sorted here; duplicates
  /// and every other invariant violation throw ValidationError.
  LeveledFamily(FamilyMode mode, std::size_t variables, std::vector<Level> levels,
                std::optional<std::uint64_t> embedding_degree = std::nullopt);

  FamilyMode mode() const { return mode_; }
  std::size_t variables() const { return variables_; }
  std::optional<std::uint64_t> embedding_degree() const { return embedding_degree_; }

  int first_level() const { return mode_ == FamilyMode::rees ? 0 : 1; }
  /// s. Equals first_level() - 1 when a fiber family has no levels.
  int last_level() const { return first_level() + static_cast<int>(levels_.size()) - 1; }
  bool has_level(int i) const { return i >= first_level() && i <= last_level(); }

  const Level& level(int i) const;
  std::uint64_t degree(int i) const { return level(i).degree; }
  int level_size(int i) const { return static_cast<int>(level(i).generators.size()); }

  bool contains(const GeneratorRef& r) const;
  const Monomial& generator(const GeneratorRef& r) const;
  /// 1-based index of `m` within level i, if present.
  std::optional<int> find(int level, const Monomial& m) const;

  /// Every ref in <_lex order.
  std::vector<GeneratorRef> refs() const;
  std::size_t generator_count() const;

private:
  FamilyMode mode_;
  std::size_t variables_;
  std::optional<std::uint64_t> embedding_degree_;
  std::vector<Level> levels_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> lookup_;
};

/// One entry of the "levels" array of a family file.
struct LevelSpec {
  std::optional<std::uint64_t> degree;
  std::optional<std::string> borel;
  std::vector<std::string> generators;
};

/// Parsed but not yet validated family description.
struct FamilySpec {
  FamilyMode mode = FamilyMode::rees;
  std::size_t variables = 0;
  std::optional<std::uint64_t> embedding_degree;
  /// Levels 1..s; level 0 of a rees family is implicit.
  std::vector<LevelSpec> levels;
};

/// Reads the JSON family format:
///   { "mode": "rees"|"fiber", "variables": n, "embedding_degree": m,
///     "levels": [ {"degree": d, "borel": "<monomial>"}
///               | {"degree": d, "generators": ["<monomial>", ...]} ] }
/// Throws ParseError with a JSON-pointer-ish location.
FamilySpec parse_family_spec(std::string_view json_text);
FamilySpec load_family_spec(const std::filesystem::path& path);

/// Expands borel(...) levels, dedupes explicit lists (one warning per
/// duplicate), injects level 0 in rees mode and validates.
LeveledFamily build_family(const FamilySpec& spec, std::vector<std::string>* warnings = nullptr);

/// The replacement a pair would be rewritten to: sort on a shared level,
/// ord across levels. Requires a <_lex b.
MonomialPair replacement_pair(const GeneratorRef& a, const GeneratorRef& b,
                              const LeveledFamily& fam);

/// u_a and u_b are comparable: their replacement pair is the pair itself.
/// Throws ValidationError on bad refs or when a is not <_lex b.
bool comparable(const GeneratorRef& a, const GeneratorRef& b, const LeveledFamily& fam);

struct ClosureOptions {
  bool all_witnesses = false;
  std::size_t max_witnesses = 32;
};

/// An incomparable pair whose replacement leaves M.
struct ClosureWitness {
  GeneratorRef a;
  GeneratorRef b;
  MonomialPair replacement;
  bool first_missing = false;
  bool second_missing = false;
};

struct ClosureReport {
  bool closed = true;
  std::size_t pairs_checked = 0;
  std::size_t incomparable_pairs = 0;
  std::size_t violations = 0;
  /// Sorted by (a, b); capped unless all_witnesses was requested.
  std::vector<ClosureWitness> witnesses;
};

ClosureReport is_closed_under_comparability(const LeveledFamily& fam,
                                            const ClosureOptions& options = {});

struct LevelCharacterization {
  int level = 0;
  Monomial last;  // u_{i n_i}
  std::size_t borel_size = 0;
  bool borel_equal = false;   // M_i == B(u_{i n_i})
  bool borel_subset = false;  // M_i subset of B(u_{i n_i})
};

/// max(u_{i n_i}) <= min(u_{(i+1) n_{i+1}}) in variable order, i.e. the
/// index of the former is at least the index of the latter.
struct ChainCondition {
  int level = 0;
  VarIndex max_of_last = 0;
  VarIndex min_of_next_last = 0;
  bool holds = false;
};

struct CharacterizationReport {
  std::vector<LevelCharacterization> levels;  // levels 1..s
  std::vector<ChainCondition> chain;          // pairs (i, i+1), 1 <= i < s
  bool conjunction = false;                   // all borel_equal and all chain
  bool necessary_conditions = false;          // all borel_subset and all chain

  /// rees: conjunction == closed. fiber: conjunction implies closed, and
  /// closed implies the necessary conditions.
  bool consistent_with(FamilyMode mode, bool closed) const;
};

CharacterizationReport characterize(const LeveledFamily& fam);

} // namespace mrees

#endif
