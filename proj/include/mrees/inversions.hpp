#ifndef MREES_INVERSIONS_HPP
#define MREES_INVERSIONS_HPP

#include "mrees/presentation.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mrees {

/// A standard factorization written as ascending variable indices.
using MatrixRow = std::vector<VarIndex>;

/// The i-th level of a T-monomial as an r_i x d_i matrix, one generator's
/// standard factorization per row.
struct LevelMatrix {
  int level = 0;
  std::vector<MatrixRow> rows;

  std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
  std::string to_string() const;
  friend bool operator==(const LevelMatrix&, const LevelMatrix&) = default;
};

/// Level of reduction (c, e), ordered lexicographically.
struct ReductionMeasure {
  std::uint64_t c = 0;
  std::uint64_t e = 0;
  friend auto operator<=>(const ReductionMeasure&, const ReductionMeasure&) = default;
};

/// "(c,e): <c> <e>"
std::string to_string(const ReductionMeasure& m);

/// Number of (entry, later entry) pairs where the later entry is a strictly
/// larger variable (smaller index). "Later" is column-major: further right,
/// or in the same column and further down.
std::uint64_t inversion_count(const LevelMatrix& a);

struct InversionMinimum {
  LevelMatrix matrix;
  std::uint64_t inversions = 0;
};

/// Row order minimising inversion_count; ties go to the lexicographically
/// smallest sequence of rows. Throws ResourceError above `row_cap` rows.
InversionMinimum inversion_minimal(int level, std::vector<MatrixRow> rows, std::size_t row_cap = 10);

/// Rows sorted descending in revlex. Cheap, not guaranteed minimal.
LevelMatrix revlex_descending_matrix(int level, std::vector<MatrixRow> rows);

/// Level matrices of m, one per occupied level, rows in <_lex factor order.
std::vector<LevelMatrix> level_matrices(const TMonomial& m, const LeveledFamily& fam);

/// c_m: for each entry, the number of entries on strictly higher levels that
/// are strictly smaller variables (larger index).
std::uint64_t comparability_number(const TMonomial& m, const LeveledFamily& fam);

/// (c_m, sum over levels of the inversion-minimal e).
ReductionMeasure reduction_level(const TMonomial& m, const LeveledFamily& fam,
                                 std::size_t row_cap = 10);

} // namespace mrees

#endif
