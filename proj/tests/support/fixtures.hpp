#ifndef MREES_TESTS_FIXTURES_HPP
#define MREES_TESTS_FIXTURES_HPP

// Shared fixtures and brute-force oracles for the test binaries. Nothing in
// here calls the library routine it is used to check.

#include "mrees/family.hpp"
#include "mrees/inversions.hpp"
#include "mrees/monomial.hpp"
#include "mrees/presentation.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace mrees::testing {

inline std::filesystem::path data_dir() { return MREES_DATA_DIR; }

inline Monomial mono(std::string_view text, std::size_t n) { return parse_monomial(text, n); }

inline std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

/// I_1 = (B(x3x4)), I_2 = (B(x2^2x3)), I_3 = (B(x1x2^2)), I_4 = (x1^5) in 4 variables.
inline FamilySpec four_ideals_spec() {
  FamilySpec spec;
  spec.mode = FamilyMode::rees;
  spec.variables = 4;
  spec.levels = {LevelSpec{2, "x3*x4", {}}, LevelSpec{3, "x2^2*x3", {}},
                 LevelSpec{3, "x1*x2^2", {}}, LevelSpec{5, std::nullopt, {"x1^5"}}};
  return spec;
}

inline LeveledFamily four_ideals() { return build_family(four_ideals_spec()); }

/// Fiber family that is closed although its first level is not a B-set.
inline LeveledFamily fiber_veronese_type() {
  FamilySpec spec;
  spec.mode = FamilyMode::fiber;
  spec.variables = 5;
  spec.embedding_degree = 4;
  spec.levels = {LevelSpec{2, std::nullopt, {"x3^2", "x3*x4", "x3*x5", "x4*x5"}},
                 LevelSpec{3, std::nullopt, {"x1^3", "x1^2*x3"}}};
  return build_family(spec);
}

/// The first `top` powers of the maximal ideal in n variables.
inline LeveledFamily maximal_powers(std::size_t n, std::size_t top) {
  FamilySpec spec;
  spec.variables = n;
  for (std::size_t d = 1; d <= top; ++d)
    spec.levels.push_back(LevelSpec{d, "x" + std::to_string(n) + "^" + std::to_string(d), {}});
  return build_family(spec);
}

/// B(u) by breadth-first search over moves X_j -> X_i with i < j.
inline std::set<Monomial> borel_by_moves(const Monomial& u) {
  std::set<Monomial> seen{u};
  std::deque<Monomial> queue{u};
  while (!queue.empty()) {
    Monomial w = queue.front();
    queue.pop_front();
    auto e = w.exponents();
    for (std::size_t j = 1; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        auto f = e;
        --f[j];
        ++f[i];
        Monomial next(f);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

/// Revlex comparison straight from the standard factorizations: the larger
/// monomial has the larger variable at the last differing position.
inline int revlex_by_factorization(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
  const auto fu = u.factorization();
  const auto fv = v.factorization();
  for (std::size_t k = fu.size(); k-- > 0;)
    if (fu[k] != fv[k]) return fu[k] < fv[k] ? 1 : -1;
  return 0;
}

/// Minimal inversion count over every distinct row permutation, ties to the
/// lexicographically smallest row sequence.
inline InversionMinimum inversion_minimal_by_permutations(int level, std::vector<MatrixRow> rows) {
  std::sort(rows.begin(), rows.end());
  InversionMinimum best;
  bool first = true;
  do {
    LevelMatrix m{level, rows};
    const auto e = inversion_count(m);
    if (first || e < best.inversions) {
      best = {m, e};
      first = false;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint64_t degree) {
  std::uniform_int_distribution<int> var(1, static_cast<int>(n));
  std::vector<VarIndex> f;
  for (std::uint64_t k = 0; k < degree; ++k) f.push_back(var(rng));
  return Monomial::from_factors(n, f);
}

/// A rees family with borel levels of non-decreasing degree; with
/// `force_chain` the chain condition on the last generators is enforced.
inline FamilySpec random_borel_spec(std::mt19937_64& rng, std::size_t n, std::uint64_t max_degree,
                                    std::size_t max_levels, bool force_chain) {
  FamilySpec spec;
  spec.variables = n;
  std::uniform_int_distribution<std::size_t> levels(1, max_levels);
  const std::size_t s = levels(rng);
  std::uint64_t d = 1;
  VarIndex floor_index = 1;  // previous max(u) index; next min(u) must not exceed it
  for (std::size_t i = 0; i < s; ++i) {
    d = std::uniform_int_distribution<std::uint64_t>(d, max_degree)(rng);
    Monomial u = random_monomial(rng, n, d);
    if (force_chain && i > 0) {
      // Shift every factor up to variables <= floor_index.
      std::vector<VarIndex> f = u.factorization();
      std::uniform_int_distribution<VarIndex> var(1, floor_index);
      for (auto& v : f)
        if (v > floor_index) v = var(rng);
      u = Monomial::from_factors(n, f);
    }
    floor_index = u.max_var();
    spec.levels.push_back(LevelSpec{d, u.to_string(), {}});
  }
  return spec;
}

/// Expand every borel level of `spec` into an explicit generator list.
inline FamilySpec explicit_levels(const FamilySpec& spec) {
  FamilySpec out = spec;
  for (auto& ls : out.levels) {
    if (!ls.borel) continue;
    ls.generators = strings(borel_closure(parse_monomial(*ls.borel, spec.variables)));
    ls.borel.reset();
  }
  return out;
}

inline TMonomial random_tmonomial(std::mt19937_64& rng, const LeveledFamily& fam, std::size_t degree) {
  const auto refs = fam.refs();
  std::uniform_int_distribution<std::size_t> pick(0, refs.size() - 1);
  std::vector<GeneratorRef> f;
  for (std::size_t k = 0; k < degree; ++k) f.push_back(refs[pick(rng)]);
  return TMonomial(std::move(f));
}

} // namespace mrees::testing

#endif
