#include "mrees/inversions.hpp"

#include "mrees/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mrees {

std::string to_string(const ReductionMeasure& m) {
  return "(c,e): " + std::to_string(m.c) + " " + std::to_string(m.e);
}

std::string LevelMatrix::to_string() const {
  std::string out;
  for (const auto& row : rows) {
    out += '[';
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += 'x' + std::to_string(row[k]);
    }
    out += "]\n";
  }
  return out;
}

std::uint64_t inversion_count(const LevelMatrix& a) {
  const std::size_t d = a.columns();
  for (const auto& row : a.rows)
    if (row.size() != d) throw ValidationError("ragged level matrix");
  std::vector<VarIndex> seq;
  seq.reserve(a.rows.size() * d);
  for (std::size_t col = 0; col < d; ++col)
    for (const auto& row : a.rows) seq.push_back(row[col]);
  std::uint64_t e = 0;
  for (std::size_t p = 0; p < seq.size(); ++p)
    for (std::size_t q = p + 1; q < seq.size(); ++q)
      if (seq[q] < seq[p]) ++e;
  return e;
}

InversionMinimum inversion_minimal(int level, std::vector<MatrixRow> rows, std::size_t row_cap) {
  const std::size_t k = rows.size();
  if (k > row_cap)
    throw ResourceError("inversion_minimal: " + std::to_string(k) + " rows exceeds the cap of " +
                        std::to_string(row_cap));
  if (k > 24) throw ResourceError("inversion_minimal: more than 24 rows is not supported");
  std::sort(rows.begin(), rows.end());
  const std::size_t d = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != d) throw ValidationError("ragged level matrix");

  // Inversions between two different columns do not depend on the row order.
  // Within a column, placing row p above row q costs the number of columns
  // where q holds a strictly larger variable than p.
  std::vector<std::vector<std::uint64_t>> above(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t c = 0; c < d; ++c)
        if (rows[q][c] < rows[p][c]) ++above[p][q];

  // best[S]: least cost of ordering the rows outside S below the rows in S.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::uint64_t> best(full + 1, 0);
  for (std::size_t s = full; s-- > 0;) {
    std::uint64_t b = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t x = 0; x < k; ++x) {
      if (s & (std::size_t{1} << x)) continue;
      std::uint64_t cost = best[s | (std::size_t{1} << x)];
      for (std::size_t p = 0; p < k; ++p)
        if (s & (std::size_t{1} << p)) cost += above[p][x];
      b = std::min(b, cost);
    }
    best[s] = b;
  }

  // Greedy reconstruction: rows are sorted, so taking the first row that
  // stays optimal gives the lexicographically smallest minimiser.
  InversionMinimum out;
  out.matrix.level = level;
  std::size_t s = 0;
  while (s != full) {
    for (std::size_t x = 0; x < k; ++x) {
      if (s & (std::size_t{1} << x)) continue;
      std::uint64_t cost = best[s | (std::size_t{1} << x)];
      for (std::size_t p = 0; p < k; ++p)
        if (s & (std::size_t{1} << p)) cost += above[p][x];
      if (cost == best[s]) {
        out.matrix.rows.push_back(rows[x]);
        s |= std::size_t{1} << x;
        break;
      }
    }
  }
  out.inversions = inversion_count(out.matrix);
  return out;
}

LevelMatrix revlex_descending_matrix(int level, std::vector<MatrixRow> rows) {
  // Same-degree rows: revlex-descending is "last differing entry smaller".
  std::sort(rows.begin(), rows.end(), [](const MatrixRow& a, const MatrixRow& b) {
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });
  return {level, std::move(rows)};
}

std::vector<LevelMatrix> level_matrices(const TMonomial& m, const LeveledFamily& fam) {
  std::vector<LevelMatrix> out;
  for (const auto& r : m.factors()) {
    if (out.empty() || out.back().level != r.level) out.push_back({r.level, {}});
    out.back().rows.push_back(fam.generator(r).factorization());
  }
  return out;
}

std::uint64_t comparability_number(const TMonomial& m, const LeveledFamily& fam) {
  const std::size_t n = fam.variables();
  // counts[l][v]: occurrences of variable v+1 among the entries of level l.
  std::map<int, std::vector<std::uint64_t>> counts;
  for (const auto& r : m.factors()) {
    auto& c = counts.try_emplace(r.level, n, 0).first->second;
    const auto& e = fam.generator(r).exponents();
    for (std::size_t v = 0; v < n; ++v) c[v] += e[v];
  }
  // Walk levels from the top down, keeping the entry counts strictly above.
  std::vector<std::uint64_t> higher(n, 0);
  std::uint64_t total = 0;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    std::uint64_t smaller = 0;  // higher-level entries with index > v+1
    for (std::size_t v = n; v-- > 0;) {
      total += it->second[v] * smaller;
      smaller += higher[v];
    }
    for (std::size_t v = 0; v < n; ++v) higher[v] += it->second[v];
  }
  return total;
}

ReductionMeasure reduction_level(const TMonomial& m, const LeveledFamily& fam, std::size_t row_cap) {
  ReductionMeasure out;
  out.c = comparability_number(m, fam);
  for (auto& mat : level_matrices(m, fam))
    out.e += inversion_minimal(mat.level, std::move(mat.rows), row_cap).inversions;
  return out;
}

} // namespace mrees
