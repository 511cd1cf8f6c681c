#include "mrees/oracle.hpp"

#include "mrees/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>

namespace mrees {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (!r.fits_ulong_p()) return kSaturated;
  return r.get_ui();
}

void check_cap(const LeveledFamily& fam, std::size_t max_degree, const OracleOptions& options) {
  if (max_degree == 0) throw ValidationError("degree bound must be at least 1");
  const auto count = count_tmonomials(fam.generator_count(), max_degree);
  if (count > options.monomial_cap)
    throw ResourceError("fiber enumeration needs " +
                        (count == kSaturated ? std::string("too many") : std::to_string(count)) +
                        " T-monomials, cap is " + std::to_string(options.monomial_cap));
}

} // namespace

std::uint64_t count_tmonomials(std::uint64_t variables, std::size_t max_degree) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    if (variables == 0) break;
    const auto c = binomial(variables + k - 1, k);
    if (c == kSaturated || total > kSaturated - c) return kSaturated;
    total += c;
  }
  return total;
}

std::vector<TMonomial> enumerate_tmonomials(const LeveledFamily& fam, std::size_t degree) {
  const auto refs = fam.refs();
  std::vector<TMonomial> out;
  if (refs.empty()) return out;
  // Non-decreasing index sequences into refs, in lexicographic order.
  std::vector<std::size_t> pick(degree, 0);
  std::vector<GeneratorRef> factors(degree);
  while (true) {
    for (std::size_t k = 0; k < degree; ++k) factors[k] = refs[pick[k]];
    out.emplace_back(factors);
    std::size_t k = degree;
    while (k > 0 && pick[k - 1] + 1 == refs.size()) --k;
    if (k == 0) break;
    const std::size_t next = pick[k - 1] + 1;
    for (std::size_t q = k - 1; q < degree; ++q) pick[q] = next;
  }
  return out;
}

FiberMap enumerate_fibers(const LeveledFamily& fam, std::size_t max_degree,
                          const OracleOptions& options) {
  check_cap(fam, max_degree, options);
  FiberMap fibers;
  for (std::size_t d = 1; d <= max_degree; ++d)
    for (auto& m : enumerate_tmonomials(fam, d)) {
      auto img = psi_eval(m, fam);
      fibers[std::move(img)].push_back(std::move(m));
    }
  return fibers;
}

namespace {

struct FiberScan {
  FiberMap fibers;
  OracleReport report;
};

FiberScan scan(const LeveledFamily& fam, std::size_t max_degree, const OracleOptions& options) {
  FiberScan s{enumerate_fibers(fam, max_degree, options), {}};
  s.report.fibers = s.fibers.size();
  for (const auto& [img, members] : s.fibers) {
    s.report.monomials += members.size();
    s.report.max_fiber_size = std::max(s.report.max_fiber_size, members.size());
  }
  return s;
}

void fail(OracleReport& report, std::string witness) {
  report.passed = false;
  ++report.failures;
  if (!report.witness) report.witness = std::move(witness);
}

} // namespace

OracleReport verify_unique_normal_forms(const LeveledFamily& fam, const Basis& basis,
                                        std::size_t max_degree, const OracleOptions& options) {
  auto [fibers, report] = scan(fam, max_degree, options);
  ReductionOptions ro;
  ro.step_cap = options.step_cap;
  for (const auto& [img, members] : fibers) {
    std::vector<const TMonomial*> reduced;
    for (const auto& m : members)
      if (is_completely_reduced(m, fam)) reduced.push_back(&m);
    if (reduced.size() != 1) {
      fail(report, "fiber " + img.to_string() + " has " + std::to_string(reduced.size()) +
                       " completely reduced members");
      continue;
    }
    const TPolynomial expected(*reduced.front());
    for (const auto& m : members) {
      auto r = reduce_fully(TPolynomial(m), basis, ro);
      report.reductions += r.steps;
      if (r.remainder != expected)
        fail(report, "fiber " + img.to_string() + ": " + m.to_string() + " normal-forms to " +
                         r.remainder.to_string() + ", expected " + expected.to_string());
    }
  }
  return report;
}

OracleReport verify_kernel_generation(const LeveledFamily& fam, const Basis& basis,
                                      std::size_t max_degree, const OracleOptions& options) {
  auto [fibers, report] = scan(fam, max_degree, options);
  ReductionOptions ro;
  ro.step_cap = options.step_cap;
  for (const auto& [img, members] : fibers) {
    const auto& rep = members.front();
    for (std::size_t k = 1; k < members.size(); ++k) {
      TPolynomial diff(members[k]);
      diff.add_term(rep, -1);
      auto r = reduce_fully(diff, basis, ro);
      report.reductions += r.steps;
      if (!r.remainder.is_zero())
        fail(report, members[k].to_string() + " - " + rep.to_string() + " reduces to " +
                         r.remainder.to_string());
    }
  }
  return report;
}

MeasureReport verify_measure_decrease(const LeveledFamily& fam, const Basis& basis,
                                      std::span<const TMonomial> monomials,
                                      const OracleOptions& options) {
  MeasureReport report;
  for (const auto& start : monomials) {
    ++report.monomials;
    TMonomial m = start;
    ReductionMeasure measure = reduction_level(m, fam);
    std::size_t chain = 0;
    while (auto k = basis.find_divisor(m)) {
      if (chain >= options.step_cap)
        throw InvariantError("reduction of " + start.to_string() + " exceeded the step cap");
      const auto& g = basis[*k];
      TMonomial next = m.divided_by(g.lead) * g.trail;
      const ReductionMeasure next_measure = reduction_level(next, fam);
      ++report.steps;
      ++chain;
      if (!(next_measure < measure)) {
        ++report.violations;
        report.passed = false;
        if (!report.witness)
          report.witness = m.to_string() + " " + to_string(measure) + " -> " + next.to_string() +
                           " " + to_string(next_measure);
      }
      m = std::move(next);
      measure = next_measure;
    }
    report.longest_chain = std::max(report.longest_chain, chain);
  }
  return report;
}

} // namespace mrees
