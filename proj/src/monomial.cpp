#include "mrees/monomial.hpp"

#include "mrees/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace mrees {

namespace {

void require_same_ambient(const Monomial& u, const Monomial& v, const char* op) {
  if (u.variables() != v.variables())
    throw ValidationError(std::string(op) + ": monomials live in different rings (" +
                          std::to_string(u.variables()) + " vs " +
                          std::to_string(v.variables()) + " variables)");
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct Term {
  std::size_t index;
  Exponent exponent;
};

Term parse_term(std::string_view token) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad monomial token '" + std::string(token) + "': " + why);
  };
  if (token.empty() || (token.front() != 'x' && token.front() != 'X'))
    throw fail("expected x<index>");
  auto body = token.substr(1);
  auto caret = body.find('^');
  auto index_text = body.substr(0, caret);
  std::size_t index = 0;
  if (!parse_int(index_text, index)) throw fail("bad variable index");
  Exponent exponent = 1;
  if (caret != std::string_view::npos) {
    if (!parse_int(body.substr(caret + 1), exponent) || exponent == 0)
      throw fail("exponent must be a positive integer");
  }
  return {index, exponent};
}

// Split on '*' without allocating per token.
template <class F>
void for_each_token(std::string_view text, F&& f) {
  std::size_t start = 0;
  while (true) {
    auto star = text.find('*', start);
    f(trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos
                                                              : star - start)));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
}

} // namespace

Monomial::Monomial(std::size_t variables) : exponents_(variables, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

Monomial Monomial::from_factors(std::size_t variables, std::span<const VarIndex> factors) {
  Monomial m(variables);
  for (VarIndex v : factors) {
    if (v < 1 || static_cast<std::size_t>(v) > variables)
      throw ValidationError("variable index " + std::to_string(v) + " out of range 1.." +
                            std::to_string(variables));
    ++m.exponents_[static_cast<std::size_t>(v - 1)];
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::vector<VarIndex> Monomial::factorization() const {
  std::vector<VarIndex> out;
  out.reserve(degree());
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    out.insert(out.end(), exponents_[i], static_cast<VarIndex>(i + 1));
  return out;
}

VarIndex Monomial::max_var() const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) return static_cast<VarIndex>(i + 1);
  throw ValidationError("max(u) of the empty product");
}

VarIndex Monomial::min_var() const {
  for (std::size_t i = exponents_.size(); i-- > 0;)
    if (exponents_[i] != 0) return static_cast<VarIndex>(i + 1);
  throw ValidationError("min(u) of the empty product");
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(*this, other, "multiply");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (other.exponents_[i] > std::numeric_limits<Exponent>::max() - out.exponents_[i])
      throw ResourceError("exponent overflow in monomial product");
    out.exponents_[i] += other.exponents_[i];
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other, "divides");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exponents_[i] > 1) {
      out += '^';
      out += std::to_string(exponents_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.variables();
  for (Exponent e : m.exponents()) h = h * 1000003u ^ (e + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

Monomial parse_monomial(std::string_view text, std::size_t variables) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial");
  Monomial m(variables);
  if (text == "1") return m;
  std::vector<Exponent> exps(variables, 0);
  for_each_token(text, [&](std::string_view token) {
    Term t = parse_term(token);
    if (t.index < 1 || t.index > variables)
      throw ParseError("bad monomial token '" + std::string(token) + "': index out of range 1.." +
                       std::to_string(variables));
    auto& slot = exps[t.index - 1];
    if (t.exponent > std::numeric_limits<Exponent>::max() - slot)
      throw ParseError("bad monomial token '" + std::string(token) + "': exponent overflow");
    slot += t.exponent;
  });
  return Monomial(std::move(exps));
}

std::size_t max_index_in(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial");
  if (text == "1") return 0;
  std::size_t best = 0;
  for_each_token(text, [&](std::string_view token) {
    Term t = parse_term(token);
    if (t.index < 1) throw ParseError("bad monomial token '" + std::string(token) + "': index must be positive");
    best = std::max(best, t.index);
  });
  return best;
}

std::strong_ordering revlex_cmp(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "revlex_cmp");
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == b[i]) continue;
    // The last differing exponent being smaller in u means u is larger.
    return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

MonomialPair ord_pair(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "ord");
  if (u.degree() > v.degree())
    throw ValidationError("ord(u, v) needs deg(u) <= deg(v), got " + std::to_string(u.degree()) +
                          " > " + std::to_string(v.degree()));
  const auto factors = (u * v).factorization();
  const auto q = static_cast<std::size_t>(v.degree());
  std::span<const VarIndex> all(factors);
  return {Monomial::from_factors(u.variables(), all.subspan(q)),
          Monomial::from_factors(u.variables(), all.first(q))};
}

MonomialPair sort_pair(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "sort");
  if (u.degree() != v.degree())
    throw ValidationError("sort(u, v) needs equal degrees, got " + std::to_string(u.degree()) +
                          " and " + std::to_string(v.degree()));
  const auto factors = (u * v).factorization();
  std::vector<Exponent> a(u.variables(), 0), b(u.variables(), 0);
  for (std::size_t k = 0; k < factors.size(); ++k)
    ++(k % 2 == 0 ? a : b)[static_cast<std::size_t>(factors[k] - 1)];
  return {Monomial(std::move(a)), Monomial(std::move(b))};
}

bool borel_member(const Monomial& w2, const Monomial& w1) {
  require_same_ambient(w2, w1, "borel_member");
  if (w2.degree() != w1.degree())
    throw ValidationError("borel_member needs equal degrees, got " + std::to_string(w2.degree()) +
                          " and " + std::to_string(w1.degree()));
  const auto& beta = w2.exponents();
  const auto& alpha = w1.exponents();
  std::uint64_t sb = 0, sa = 0;
  // Suffix sums for k = n down to 2.
  for (std::size_t k = beta.size(); k-- > 1;) {
    sb += beta[k];
    sa += alpha[k];
    if (sb > sa) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t variables, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> e(variables, 0);
  // Odometer over compositions of `degree` into `variables` parts.
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == variables) {
      e[pos] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      e[pos] = static_cast<Exponent>(a);
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Monomial> borel_closure(const Monomial& u) {
  if (u.variables() == 0) throw ValidationError("borel_closure over zero variables");
  std::vector<Monomial> out;
  for (auto& w : monomials_of_degree(u.variables(), u.degree()))
    if (borel_member(w, u)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return revlex_cmp(a, b) > 0; });
  return out;
}

} // namespace mrees
