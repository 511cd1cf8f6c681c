#include "mrees/presentation.hpp"

#include "mrees/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace mrees {

// ---------------------------------------------------------------- TMonomial

TMonomial::TMonomial(std::vector<GeneratorRef> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

std::size_t TMonomial::count_at_level(int level) const {
  return static_cast<std::size_t>(std::count_if(
      factors_.begin(), factors_.end(), [&](const GeneratorRef& r) { return r.level == level; }));
}

std::vector<GeneratorRef> TMonomial::level_factors(int level) const {
  std::vector<GeneratorRef> out;
  for (const auto& r : factors_)
    if (r.level == level) out.push_back(r);
  return out;
}

std::vector<int> TMonomial::levels() const {
  std::vector<int> out;
  for (const auto& r : factors_)
    if (out.empty() || out.back() != r.level) out.push_back(r.level);
  return out;
}

bool TMonomial::is_squarefree() const {
  return std::adjacent_find(factors_.begin(), factors_.end()) == factors_.end();
}

bool TMonomial::divides(const TMonomial& other) const {
  return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(),
                       factors_.end());
}

TMonomial TMonomial::divided_by(const TMonomial& divisor) const {
  if (!divisor.divides(*this))
    throw std::invalid_argument(divisor.to_string() + " does not divide " + to_string());
  TMonomial out;
  std::set_difference(factors_.begin(), factors_.end(), divisor.factors_.begin(),
                      divisor.factors_.end(), std::back_inserter(out.factors_));
  return out;
}

TMonomial TMonomial::lcm(const TMonomial& other) const {
  TMonomial out;
  std::set_union(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
                 std::back_inserter(out.factors_));
  return out;
}

TMonomial TMonomial::operator*(const TMonomial& other) const {
  TMonomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

std::string TMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors_.size();) {
    std::size_t run = 1;
    while (k + run < factors_.size() && factors_[k + run] == factors_[k]) ++run;
    if (!out.empty()) out += '*';
    out += "T[" + std::to_string(factors_[k].level) + "," + std::to_string(factors_[k].index) + "]";
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

std::size_t TMonomialHash::operator()(const TMonomial& m) const noexcept {
  std::size_t h = m.degree();
  GeneratorRefHash rh;
  for (const auto& r : m.factors()) h = h * 31 + rh(r) + 0x9e3779b9u + (h << 6) + (h >> 2);
  return h;
}

// -------------------------------------------------------------- TPolynomial

TPolynomial::TPolynomial(const TMonomial& m, const Coefficient& c) { add_term(m, c); }

Coefficient TPolynomial::coefficient(const TMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void TPolynomial::add_term(const TMonomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void TPolynomial::add_multiple(const Coefficient& c, const TMonomial& m, const TPolynomial& g) {
  for (const auto& [mono, coef] : g.terms_) add_term(m * mono, c * coef);
}

TPolynomial TPolynomial::operator+(const TPolynomial& other) const {
  TPolynomial out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

TPolynomial TPolynomial::operator-(const TPolynomial& other) const {
  TPolynomial out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

TPolynomial TPolynomial::operator*(const Coefficient& c) const {
  TPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

TPolynomial TPolynomial::operator*(const TMonomial& m) const {
  TPolynomial out;
  for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono * m, coef);
  return out;
}

std::string TPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coefficient c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (it->first.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += it->first.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, const LeveledFamily& fam) : text_(text), fam_(fam) {}

  TPolynomial polynomial() {
    TPolynomial out;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      Coefficient sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [c, m] = term();
      out.add_term(m, sign * c);
      first = false;
      skip_ws();
    }
    return out;
  }

  TMonomial monomial_only() {
    skip_ws();
    auto [c, m] = term();
    skip_ws();
    if (!at_end()) fail("trailing input");
    if (c != 1) fail("coefficients are not allowed in a T-monomial");
    return m;
  }

private:
  std::pair<Coefficient, TMonomial> term() {
    Coefficient coef = 1;
    std::vector<GeneratorRef> factors;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= number();
      } else if (peek() == 'T') {
        const GeneratorRef r = tvar();
        std::size_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          power = integer();
          if (power == 0) fail("exponent must be positive");
        }
        factors.insert(factors.end(), power, r);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
    }
    return {coef, TMonomial(std::move(factors))};
  }

  GeneratorRef tvar() {
    const std::size_t start = pos_;
    expect('T');
    skip_ws();
    expect('[');
    const int level = static_cast<int>(integer());
    skip_ws();
    expect(',');
    const int index = static_cast<int>(integer());
    skip_ws();
    expect(']');
    GeneratorRef r{level, index};
    if (!fam_.contains(r))
      throw ParseError("unknown T-variable " + std::string(text_.substr(start, pos_ - start)) +
                       " at offset " + std::to_string(start));
    return r;
  }

  Coefficient number() {
    mpz_class num(std::to_string(integer()));
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      const auto den = integer();
      if (den == 0) fail("zero denominator");
      Coefficient q(num, mpz_class(std::to_string(den)));
      q.canonicalize();
      return q;
    }
    return Coefficient(num);
  }

  std::size_t integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::size_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100'000'000) fail("integer too large");
      v = v * 10 + static_cast<std::size_t>(get() - '0');
    }
    return v;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad T-expression at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const LeveledFamily& fam_;
  std::size_t pos_ = 0;
};

} // namespace

TMonomial parse_tmonomial(std::string_view text, const LeveledFamily& fam) {
  return ExprParser(text, fam).monomial_only();
}

TPolynomial parse_tpolynomial(std::string_view text, const LeveledFamily& fam) {
  return ExprParser(text, fam).polynomial();
}

// --------------------------------------------------------------------- Psi

PsiImage PsiImage::operator*(const PsiImage& other) const {
  if (x.size() != other.x.size() || t.size() != other.t.size())
    throw ValidationError("Psi images from different families");
  PsiImage out(*this);
  for (std::size_t k = 0; k < x.size(); ++k) out.x[k] += other.x[k];
  for (std::size_t k = 0; k < t.size(); ++k) out.t[k] += other.t[k];
  return out;
}

std::string PsiImage::to_string() const {
  std::string out;
  auto put = [&](const char* name, std::size_t k, std::uint64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name + std::to_string(k);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t k = 0; k < x.size(); ++k) put("x", k + 1, x[k]);
  for (std::size_t k = 0; k < t.size(); ++k) put("t", k + 1, t[k]);
  return out.empty() ? "1" : out;
}

std::size_t PsiImageHash::operator()(const PsiImage& p) const noexcept {
  std::size_t h = p.x.size() * 7 + p.t.size();
  for (auto e : p.x) h = h * 1000003u ^ (e + 0x9e3779b9u + (h << 6) + (h >> 2));
  for (auto e : p.t) h = h * 1000003u ^ (e + 0x7f4a7c15u + (h << 6) + (h >> 2));
  return h;
}

PsiImage psi_eval(const TMonomial& m, const LeveledFamily& fam) {
  const std::size_t n = fam.variables();
  const auto s = static_cast<std::size_t>(std::max(0, fam.last_level()));
  PsiImage img;
  if (fam.mode() == FamilyMode::rees) {
    img.x.assign(n, 0);
    img.t.assign(s, 0);
  } else {
    img.x.assign(n + s, 0);
  }
  for (const auto& r : m.factors()) {
    const auto& e = fam.generator(r).exponents();
    for (std::size_t k = 0; k < n; ++k) img.x[k] += e[k];
    if (fam.mode() == FamilyMode::rees) {
      if (r.level > 0) ++img.t[static_cast<std::size_t>(r.level - 1)];
    } else {
      img.x[n + static_cast<std::size_t>(r.level - 1)] +=
          *fam.embedding_degree() - fam.degree(r.level);
    }
  }
  return img;
}

// -------------------------------------------------------------------- basis

TPolynomial MarkedBinomial::polynomial() const {
  TPolynomial p(lead);
  p.add_term(trail, -1);
  return p;
}

Basis::Basis(std::vector<MarkedBinomial> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const MarkedBinomial& a, const MarkedBinomial& b) { return a.lead < b.lead; });
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const auto& g = elements_[k];
    if (g.lead == g.trail) throw ValidationError("marked binomial with lead == trail: " + g.lead.to_string());
    if (g.lead.is_one()) throw ValidationError("marked binomial with constant lead");
    if (!by_lead_.emplace(g.lead, k).second)
      throw ValidationError("two basis elements share the lead " + g.lead.to_string());
    quadratic_leads_ = quadratic_leads_ && g.lead.degree() == 2;
  }
}

Basis Basis::without(std::size_t k) const {
  if (k >= elements_.size())
    throw ValidationError("no basis element " + std::to_string(k) + " (basis has " +
                          std::to_string(elements_.size()) + ")");
  auto copy = elements_;
  copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(k));
  return Basis(std::move(copy));
}

std::optional<std::size_t> Basis::find_divisor(const TMonomial& m) const {
  if (!quadratic_leads_) {
    for (std::size_t k = 0; k < elements_.size(); ++k)
      if (elements_[k].lead.divides(m)) return k;
    return std::nullopt;
  }
  // Degree-2 divisors of m in increasing order; the first hit has the
  // smallest lead.
  const auto& f = m.factors();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x > 0 && f[x] == f[x - 1]) continue;
    for (std::size_t y = x + 1; y < f.size(); ++y) {
      if (y > x + 1 && f[y] == f[y - 1]) continue;
      if (auto it = by_lead_.find(TMonomial{f[x], f[y]}); it != by_lead_.end()) return it->second;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> Basis::divisors(const TMonomial& m) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].lead.divides(m)) out.push_back(k);
  return out;
}

NotClosedError::NotClosedError(ClosureReport report)
    : std::runtime_error("family is not closed under comparability (" +
                         std::to_string(report.violations) + " violating pairs)"),
      report_(std::move(report)) {}

Basis build_basis(const LeveledFamily& fam) {
  auto closure = is_closed_under_comparability(fam);
  if (!closure.closed) throw NotClosedError(std::move(closure));
  std::vector<MarkedBinomial> out;
  const auto refs = fam.refs();
  for (std::size_t x = 0; x < refs.size(); ++x) {
    for (std::size_t y = x + 1; y < refs.size(); ++y) {
      const auto& a = refs[x];
      const auto& b = refs[y];
      const auto rep = replacement_pair(a, b, fam);
      if (rep.first == fam.generator(a) && rep.second == fam.generator(b)) continue;
      const GeneratorRef l{a.level, *fam.find(a.level, rep.first)};
      const GeneratorRef lp{b.level, *fam.find(b.level, rep.second)};
      out.push_back({TMonomial{a, b}, TMonomial{l, lp}});
    }
  }
  return Basis(std::move(out));
}

bool is_completely_reduced(const TMonomial& m, const LeveledFamily& fam) {
  const auto& f = m.factors();
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = x + 1; y < f.size(); ++y)
      if (f[x] != f[y] && !comparable(f[x], f[y], fam)) return false;
  return true;
}

// ---------------------------------------------------------------- reduction

std::optional<ReductionStep> choose_step(const TPolynomial& f, const Basis& basis,
                                         std::mt19937_64* rng) {
  if (rng == nullptr) {
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      if (auto k = basis.find_divisor(it->first)) {
        const auto& g = basis[*k];
        return ReductionStep{it->first, *k, it->first.divided_by(g.lead) * g.trail, it->second};
      }
    }
    return std::nullopt;
  }
  std::vector<std::pair<const TPolynomial::TermMap::value_type*, std::size_t>> candidates;
  for (const auto& term : f.terms())
    for (std::size_t k : basis.divisors(term.first)) candidates.emplace_back(&term, k);
  if (candidates.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const auto& [term, k] = candidates[pick(*rng)];
  const auto& g = basis[k];
  return ReductionStep{term->first, k, term->first.divided_by(g.lead) * g.trail, term->second};
}

TPolynomial apply_step(const TPolynomial& f, const ReductionStep& step, const Basis& basis) {
  const auto& g = basis[step.rule];
  TPolynomial out(f);
  out.add_multiple(-step.coefficient, step.monomial.divided_by(g.lead), g.polynomial());
  return out;
}

std::optional<TPolynomial> reduce_step(const TPolynomial& f, const Basis& basis) {
  auto step = choose_step(f, basis);
  if (!step) return std::nullopt;
  return apply_step(f, *step, basis);
}

Reduction reduce_fully(const TPolynomial& f, const Basis& basis, const ReductionOptions& options) {
  Reduction out{f, 0};
  while (auto step = choose_step(out.remainder, basis, options.rng)) {
    if (out.steps >= options.step_cap)
      throw InvariantError("reduction exceeded " + std::to_string(options.step_cap) +
                           " steps; the rewriting system is not terminating");
    out.remainder = apply_step(out.remainder, *step, basis);
    if (options.trace) options.trace->push_back(std::move(*step));
    ++out.steps;
  }
  return out;
}

TPolynomial normal_form(const TPolynomial& f, const Basis& basis, const ReductionOptions& options) {
  return reduce_fully(f, basis, options).remainder;
}

TPolynomial s_polynomial(const MarkedBinomial& g1, const MarkedBinomial& g2) {
  const TMonomial l = g1.lead.lcm(g2.lead);
  TPolynomial out;
  out.add_multiple(1, l.divided_by(g1.lead), g1.polynomial());
  out.add_multiple(-1, l.divided_by(g2.lead), g2.polynomial());
  return out;
}

ConfluenceReport confluence_check(const Basis& basis, std::size_t step_cap) {
  ConfluenceReport report;
  ReductionOptions options;
  options.step_cap = step_cap;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      ++report.pairs;
      const auto r = reduce_fully(s_polynomial(basis[x], basis[y]), basis, options);
      report.total_steps += r.steps;
      report.max_reduction_length = std::max(report.max_reduction_length, r.steps);
      if (r.remainder.is_zero()) continue;
      report.passed = false;
      ++report.failures;
      if (!report.first_failure)
        report.first_failure = "S(" + basis[x].lead.to_string() + ", " + basis[y].lead.to_string() +
                               ") reduces to " + r.remainder.to_string();
    }
  }
  return report;
}

bool kernel_membership(const TPolynomial& f, const Basis& basis) {
  return normal_form(f, basis).is_zero();
}

bool in_kernel_by_image(const TPolynomial& f, const LeveledFamily& fam) {
  std::unordered_map<PsiImage, Coefficient, PsiImageHash> sums;
  for (const auto& [m, c] : f.terms()) sums[psi_eval(m, fam)] += c;
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

} // namespace mrees
