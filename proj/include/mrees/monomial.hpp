#ifndef MREES_MONOMIAL_HPP
#define MREES_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mrees {

/// Variables are addressed by 1-based index. The size order on variables is
/// X_1 > X_2 > ... > X_n, so "larger variable" means "smaller index".
using VarIndex = int;
using Exponent = std::uint32_t;

/// A monomial X_1^a_1 ... X_n^a_n over a fixed number of variables.
class Monomial {
public:
  Monomial() = default;
  /// The empty product over `variables` variables.
  explicit Monomial(std::size_t variables);
  explicit Monomial(std::vector<Exponent> exponents);

  /// Product of the listed variables (1-based, any order, repeats allowed).
  static Monomial from_factors(std::size_t variables, std::span<const VarIndex> factors);

  std::size_t variables() const { return exponents_.size(); }
  const std::vector<Exponent>& exponents() const { return exponents_; }
  Exponent exponent(VarIndex var) const { return exponents_.at(static_cast<std::size_t>(var - 1)); }
  std::uint64_t degree() const;
  bool is_one() const { return degree() == 0; }

  /// Standard factorization: the factors listed from the largest variable
  /// down, i.e. as ascending indices.
  std::vector<VarIndex> factorization() const;

  /// Index of max(u) (the largest variable dividing u). Requires u != 1.
  VarIndex max_var() const;
  /// Index of min(u) (the smallest variable dividing u). Requires u != 1.
  VarIndex min_var() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  /// Canonical display: ascending index, "^" for exponents above 1, "*"
  /// separators, "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors, for containers only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exponents_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// An ordered pair of monomials sharing the ambient variable count.
struct MonomialPair {
  Monomial first;
  Monomial second;
  friend bool operator==(const MonomialPair&, const MonomialPair&) = default;
};

/// Parses `term ("*" term)*` with `term := "x" index ("^" exponent)?`, or
/// "1" for the empty product. Throws ParseError naming the offending token.
Monomial parse_monomial(std::string_view text, std::size_t variables);

/// Largest variable index mentioned in a monomial string (used when the
/// caller has no ambient count of its own). Throws ParseError.
std::size_t max_index_in(std::string_view text);

/// Graded reverse lexicographic comparison with X_1 > ... > X_n.
std::strong_ordering revlex_cmp(const Monomial& u, const Monomial& v);

/// ord(u, v) for deg u <= deg v: the smallest deg(u) factors of uv go to the
/// first component, the largest deg(v) to the second.
MonomialPair ord_pair(const Monomial& u, const Monomial& v);

/// sort(u, v) for deg u = deg v: odd and even positions of the standard
/// factorization of uv.
MonomialPair sort_pair(const Monomial& u, const Monomial& v);

/// w2 in B(w1), by suffix-sum dominance of exponent vectors.
bool borel_member(const Monomial& w2, const Monomial& w1);

/// The principal strongly stable set B(u), strictly descending in revlex.
std::vector<Monomial> borel_closure(const Monomial& u);

/// All monomials of `degree` in `variables` variables, in no particular order.
std::vector<Monomial> monomials_of_degree(std::size_t variables, std::uint64_t degree);

} // namespace mrees

#endif
