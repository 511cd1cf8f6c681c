#include "doctest.h"

#include "fixtures.hpp"
#include "mrees/errors.hpp"
#include "mrees/oracle.hpp"

#include <numeric>

using namespace mrees;

namespace {

const LeveledFamily& fam4() {
  static const LeveledFamily fam = testing::four_ideals();
  return fam;
}

const Basis& basis4() {
  static const Basis basis = build_basis(fam4());
  return basis;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST_CASE("monomial counts") {
  CHECK(count_tmonomials(24, 1) == 24);
  CHECK(count_tmonomials(24, 2) == 24 + 300);
  CHECK(count_tmonomials(24, 3) == 24 + 300 + 2600);
  CHECK(count_tmonomials(1, 5) == 5);
  CHECK(count_tmonomials(1000, 40) == UINT64_MAX);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto all = enumerate_tmonomials(fam4(), d);
    CHECK(all.size() == binomial(24 + d - 1, d));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("degree-1 fibers are singletons") {
  const auto fibers = enumerate_fibers(fam4(), 1);
  CHECK(fibers.size() == 24);
  for (const auto& [img, members] : fibers) CHECK(members.size() == 1);
}

TEST_CASE("degree-2 fibers") {
  const auto fibers = enumerate_fibers(fam4(), 2);
  const auto a = parse_tmonomial("T[1,3]*T[1,4]", fam4());
  const auto b = parse_tmonomial("T[1,2]*T[1,5]", fam4());
  const auto& bucket = fibers.at(psi_eval(a, fam4()));
  CHECK(std::find(bucket.begin(), bucket.end(), a) != bucket.end());
  CHECK(std::find(bucket.begin(), bucket.end(), b) != bucket.end());
}

TEST_CASE("fibers partition the monomials") {
  const auto fibers = enumerate_fibers(fam4(), 3);
  CHECK(fibers.size() == 1181);
  std::map<std::size_t, std::size_t> per_degree;
  std::size_t largest = 0;
  for (const auto& [img, members] : fibers) {
    largest = std::max(largest, members.size());
    CHECK(std::is_sorted(members.begin(), members.end()));
    for (const auto& m : members) {
      CHECK(psi_eval(m, fam4()) == img);
      ++per_degree[m.degree()];
    }
  }
  CHECK(largest == 13);
  CHECK(per_degree[1] == 24);
  CHECK(per_degree[2] == 300);
  CHECK(per_degree[3] == 2600);
}

TEST_CASE("no collisions with a single generator") {
  FamilySpec spec;
  spec.mode = FamilyMode::fiber;
  spec.variables = 2;
  spec.embedding_degree = 3;
  spec.levels = {LevelSpec{2, std::nullopt, {"x1*x2"}}};
  const auto fam = build_family(spec);
  const auto fibers = enumerate_fibers(fam, 5);
  CHECK(fibers.size() == 5);
  const auto b = build_basis(fam);
  CHECK(b.empty());
  CHECK(verify_unique_normal_forms(fam, b, 5).passed);
  CHECK(verify_kernel_generation(fam, b, 5).passed);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_fibers(fam4(), 0), ValidationError);
  OracleOptions small;
  small.monomial_cap = 100;
  CHECK_THROWS_AS(enumerate_fibers(fam4(), 2, small), ResourceError);
  CHECK_THROWS_AS(verify_unique_normal_forms(fam4(), basis4(), 2, small), ResourceError);
}

TEST_CASE("unique normal forms on the four-ideal family") {
  const auto report = verify_unique_normal_forms(fam4(), basis4(), 3);
  CHECK(report.passed);
  CHECK(report.monomials == 2924);
  CHECK(report.fibers == 1181);
  CHECK(report.max_fiber_size == 13);
  CHECK(report.failures == 0);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("kernel generation on the four-ideal family") {
  const auto report = verify_kernel_generation(fam4(), basis4(), 3);
  CHECK(report.passed);
  CHECK(report.monomials == 2924);
  CHECK(report.reductions > 0);  // reduction steps, not differences
}

TEST_CASE("a dropped rule is caught") {
  const auto broken = basis4().without(0);
  const auto report = verify_unique_normal_forms(fam4(), broken, 2);
  CHECK_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->find(basis4()[0].lead.to_string()) != std::string::npos);
  CHECK_FALSE(verify_kernel_generation(fam4(), broken, 2).passed);
}

TEST_CASE("powers of the maximal ideal") {
  const auto fam = testing::maximal_powers(3, 2);
  const auto b = build_basis(fam);
  CHECK(verify_kernel_generation(fam, b, 3).passed);
  CHECK(verify_unique_normal_forms(fam, b, 3).passed);
}

TEST_CASE("fiber family oracle") {
  const auto& fam = testing::fiber_veronese_type();
  const auto b = build_basis(fam);
  CHECK(verify_unique_normal_forms(fam, b, 3).passed);
  CHECK(verify_kernel_generation(fam, b, 3).passed);
}

TEST_CASE("measure decrease over every monomial up to degree 3") {
  std::vector<TMonomial> all;
  for (std::size_t d = 1; d <= 3; ++d) {
    auto part = enumerate_tmonomials(fam4(), d);
    all.insert(all.end(), part.begin(), part.end());
  }
  const auto report = verify_measure_decrease(fam4(), basis4(), all);
  CHECK(report.passed);
  CHECK(report.monomials == all.size());
  CHECK(report.violations == 0);
  CHECK(report.steps > 0);
}

TEST_CASE("cross-fiber differences are never kernel members") {
  const auto fibers = enumerate_fibers(fam4(), 2);
  std::vector<TMonomial> reps;
  for (const auto& [img, members] : fibers) reps.push_back(members.front());
  for (std::size_t k = 0; k + 1 < reps.size(); k += 3) {
    const auto f = TPolynomial(reps[k]) - TPolynomial(reps[k + 1]);
    CHECK_FALSE(kernel_membership(f, basis4()));
  }
}
