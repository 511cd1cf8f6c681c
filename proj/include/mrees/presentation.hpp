#ifndef MREES_PRESENTATION_HPP
#define MREES_PRESENTATION_HPP

#include "mrees/family.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mrees {

/// A monomial of S' = K[T_ij], kept as the <_lex-sorted multiset of its
/// factors. The defaulted ordering compares those sequences
/// lexicographically.
class TMonomial {
public:
  TMonomial() = default;
  explicit TMonomial(std::vector<GeneratorRef> factors);
  TMonomial(std::initializer_list<GeneratorRef> factors)
      : TMonomial(std::vector<GeneratorRef>(factors)) {}

  const std::vector<GeneratorRef>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }

  /// r_i: number of level-i factors.
  std::size_t count_at_level(int level) const;
  /// The level-i factors in <_lex order (the selection sigma_i).
  std::vector<GeneratorRef> level_factors(int level) const;
  std::vector<int> levels() const;

  bool is_squarefree() const;
  bool divides(const TMonomial& other) const;
  /// Throws std::invalid_argument unless `divisor` divides *this.
  TMonomial divided_by(const TMonomial& divisor) const;
  TMonomial lcm(const TMonomial& other) const;
  TMonomial operator*(const TMonomial& other) const;

  /// "T[i,j]*T[i',j']", or "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const TMonomial&, const TMonomial&) = default;
  friend auto operator<=>(const TMonomial&, const TMonomial&) = default;

private:
  std::vector<GeneratorRef> factors_;
};

struct TMonomialHash {
  std::size_t operator()(const TMonomial& m) const noexcept;
};

using Coefficient = mpq_class;

/// Sparse polynomial in S' with exact rational coefficients and no zero terms.
class TPolynomial {
public:
  using TermMap = std::map<TMonomial, Coefficient>;

  TPolynomial() = default;
  explicit TPolynomial(const TMonomial& m, const Coefficient& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const TMonomial& m) const;

  void add_term(const TMonomial& m, const Coefficient& c);
  /// this += c * m * g
  void add_multiple(const Coefficient& c, const TMonomial& m, const TPolynomial& g);

  TPolynomial operator+(const TPolynomial& other) const;
  TPolynomial operator-(const TPolynomial& other) const;
  TPolynomial operator*(const Coefficient& c) const;
  TPolynomial operator*(const TMonomial& m) const;

  /// Terms from the greatest monomial down, e.g. "T[1,3]*T[1,4] - T[1,2]*T[1,5]".
  std::string to_string() const;

  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
  TermMap terms_;
};

/// Parses "T[i,j]" products. Refs are checked against `fam`.
TMonomial parse_tmonomial(std::string_view text, const LeveledFamily& fam);
/// Parses a rational combination such as "T[1,3]*T[1,4] - 1/2*T[0,1]^2 + 3".
TPolynomial parse_tpolynomial(std::string_view text, const LeveledFamily& fam);

/// Image of a T-monomial. rees: x has n entries and t has s entries
/// (t_0 = 1 is not stored). fiber: x has n + s entries and t is empty.
struct PsiImage {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> t;

  PsiImage operator*(const PsiImage& other) const;
  std::string to_string() const;
  friend bool operator==(const PsiImage&, const PsiImage&) = default;
  friend auto operator<=>(const PsiImage&, const PsiImage&) = default;
};

struct PsiImageHash {
  std::size_t operator()(const PsiImage& p) const noexcept;
};

PsiImage psi_eval(const TMonomial& m, const LeveledFamily& fam);

/// lead - trail, with the lead marked as the initial term.
struct MarkedBinomial {
  TMonomial lead;
  TMonomial trail;

  TPolynomial polynomial() const;
  friend bool operator==(const MarkedBinomial&, const MarkedBinomial&) = default;
};

/// A list of marked binomials sorted by lead, with lead lookup.
class Basis {
public:
  Basis() = default;
  /// Sorts by lead. Throws ValidationError on a repeated lead or lead == trail.
  explicit Basis(std::vector<MarkedBinomial> elements);

  const std::vector<MarkedBinomial>& elements() const { return elements_; }
  const MarkedBinomial& operator[](std::size_t k) const { return elements_.at(k); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// Copy with element k removed (negative-control hook).
  Basis without(std::size_t k) const;

  /// Element with the smallest lead dividing m, if any.
  std::optional<std::size_t> find_divisor(const TMonomial& m) const;
  /// Every element whose lead divides m, ascending.
  std::vector<std::size_t> divisors(const TMonomial& m) const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.elements_ == b.elements_; }

private:
  std::vector<MarkedBinomial> elements_;
  std::unordered_map<TMonomial, std::size_t, TMonomialHash> by_lead_;
  bool quadratic_leads_ = true;
};

/// Raised by build_basis when the family is not closed under comparability.
class NotClosedError : public std::runtime_error {
public:
  explicit NotClosedError(ClosureReport report);
  const ClosureReport& report() const { return report_; }

private:
  ClosureReport report_;
};

/// One binomial T_a T_b - T_l T_l' per incomparable pair a <_lex b, with the
/// replacement pair as trail. Throws NotClosedError.
Basis build_basis(const LeveledFamily& fam);

/// All factor pairs of m comparable.
bool is_completely_reduced(const TMonomial& m, const LeveledFamily& fam);

struct ReductionStep {
  TMonomial monomial;  // support monomial being rewritten
  std::size_t rule = 0;
  TMonomial result;    // monomial / lead * trail
  Coefficient coefficient;
};

/// Deterministic choice: the greatest reducible support monomial and the
/// element with the smallest dividing lead. With `rng`, a uniformly random
/// (monomial, rule) candidate instead.
std::optional<ReductionStep> choose_step(const TPolynomial& f, const Basis& basis,
                                         std::mt19937_64* rng = nullptr);
TPolynomial apply_step(const TPolynomial& f, const ReductionStep& step, const Basis& basis);

/// One reduction step under the deterministic strategy, or nullopt when f is
/// fully reduced.
std::optional<TPolynomial> reduce_step(const TPolynomial& f, const Basis& basis);

struct ReductionOptions {
  std::size_t step_cap = 1'000'000;
  std::mt19937_64* rng = nullptr;
  std::vector<ReductionStep>* trace = nullptr;
};

struct Reduction {
  TPolynomial remainder;
  std::size_t steps = 0;
};

/// Iterates reduction to a fixed point. Throws InvariantError past step_cap.
Reduction reduce_fully(const TPolynomial& f, const Basis& basis, const ReductionOptions& options = {});
TPolynomial normal_form(const TPolynomial& f, const Basis& basis, const ReductionOptions& options = {});

/// (lcm/lead_1) g_1 - (lcm/lead_2) g_2.
TPolynomial s_polynomial(const MarkedBinomial& g1, const MarkedBinomial& g2);

struct ConfluenceReport {
  bool passed = true;
  std::size_t pairs = 0;
  std::size_t max_reduction_length = 0;
  std::size_t total_steps = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
};

/// Every S-pair (coprime leads included) must reduce to 0.
ConfluenceReport confluence_check(const Basis& basis, std::size_t step_cap = 1'000'000);

/// normal_form(f) == 0.
bool kernel_membership(const TPolynomial& f, const Basis& basis);

/// Independent route: group the terms of f by Psi image and check that
/// every group's coefficients sum to zero.
bool in_kernel_by_image(const TPolynomial& f, const LeveledFamily& fam);

} // namespace mrees

#endif
