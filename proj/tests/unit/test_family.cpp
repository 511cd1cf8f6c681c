#include "doctest.h"

#include "fixtures.hpp"
#include "mrees/errors.hpp"
#include "mrees/family.hpp"

#include <random>

using namespace mrees;
using mrees::testing::mono;
using mrees::testing::strings;

namespace {

LeveledFamily without_generator(const FamilySpec& spec, int level, const std::string& drop) {
  auto ex = testing::explicit_levels(spec);
  auto& gens = ex.levels.at(static_cast<std::size_t>(level - 1)).generators;
  gens.erase(std::find(gens.begin(), gens.end(), drop));
  return build_family(ex);
}

} // namespace

TEST_CASE("the four-ideal family") {
  const auto fam = testing::four_ideals();
  CHECK(fam.mode() == FamilyMode::rees);
  CHECK(fam.first_level() == 0);
  CHECK(fam.last_level() == 4);
  CHECK(fam.level_size(0) == 4);
  CHECK(fam.level_size(1) == 9);
  CHECK(fam.level_size(2) == 7);
  CHECK(fam.level_size(3) == 3);
  CHECK(fam.level_size(4) == 1);
  CHECK(fam.generator_count() == 24);
  CHECK(fam.generator({0, 3}) == mono("x3", 4));
  CHECK(fam.generator({1, 5}) == mono("x2*x3", 4));
  CHECK(fam.generator({2, 7}) == mono("x2^2*x3", 4));
  CHECK(fam.find(1, mono("x1*x4", 4)) == 7);
  CHECK_FALSE(fam.find(1, mono("x4^2", 4)).has_value());
  CHECK_THROWS_AS(fam.generator({5, 1}), ValidationError);
  CHECK_THROWS_AS(fam.generator({1, 10}), ValidationError);
}

TEST_CASE("loading the family files") {
  const auto fam = build_family(load_family_spec(testing::data_dir() / "four_ideals.json"));
  CHECK(fam.refs() == testing::four_ideals().refs());
  CHECK(fam.level(2).generators == testing::four_ideals().level(2).generators);

  const auto fib = build_family(load_family_spec(testing::data_dir() / "fiber_veronese_type.json"));
  CHECK(fib.mode() == FamilyMode::fiber);
  CHECK(fib.embedding_degree() == 4u);
  CHECK(fib.level_size(1) == 4);
  CHECK(fib.level_size(2) == 2);

  CHECK_THROWS_AS(load_family_spec(testing::data_dir() / "malformed_monomial.json"), ParseError);
  CHECK_THROWS_AS(load_family_spec(testing::data_dir() / "no_such_file.json"), ParseError);
}

TEST_CASE("family parse errors carry a location") {
  auto message = [](std::string_view text) {
    try {
      parse_family_spec(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"mode":"rees","variables":2,"levels":[{"generators":["x1","y2"]}]})")
            .find("/levels/0/generators/1") != std::string::npos);
  CHECK(message(R"({"mode":"both","variables":2,"levels":[]})").find("/mode") != std::string::npos);
  CHECK(message(R"({"mode":"rees","variables":0,"levels":[]})").find("/variables") != std::string::npos);
  CHECK(message(R"({"mode":"rees","variables":2,"levels":[{"degree":1}]})").find("/levels/0") !=
        std::string::npos);
  CHECK(message("{not json") != "no error");
}

TEST_CASE("validation") {
  FamilySpec spec;
  spec.variables = 3;
  spec.levels = {LevelSpec{3, "x2*x3", {}}};
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // degree mismatch

  spec.levels = {LevelSpec{3, "x3^3", {}}, LevelSpec{2, "x3^2", {}}};
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // degrees decrease

  spec.levels = {LevelSpec{std::nullopt, std::nullopt, {}}};
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // empty level

  spec.levels = {LevelSpec{std::nullopt, std::nullopt, {"x1*x2", "x3"}}};
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // mixed degrees

  spec.mode = FamilyMode::fiber;
  spec.levels = {LevelSpec{2, "x3^2", {}}};
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // missing embedding degree
  spec.embedding_degree = 2;
  CHECK_THROWS_AS(build_family(spec), ValidationError);  // m must exceed every d_i
  spec.embedding_degree = 3;
  CHECK_NOTHROW(build_family(spec));

  CHECK_THROWS_AS(LeveledFamily(FamilyMode::rees, 2, {Level{1, {mono("x1", 2)}}}), ValidationError);
  CHECK_THROWS_AS(LeveledFamily(FamilyMode::fiber, 2,
                                {Level{1, {mono("x1", 2), mono("x1", 2)}}}, 3),
                  ValidationError);
}

TEST_CASE("degree is inferred and explicit duplicates are dropped with a warning") {
  FamilySpec spec;
  spec.variables = 3;
  spec.levels = {LevelSpec{std::nullopt, std::nullopt, {"x2^2", "x1^2", "x1*x2", "x2^2"}}};
  std::vector<std::string> warnings;
  const auto fam = build_family(spec, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(fam.degree(1) == 2);
  CHECK(strings(fam.level(1).generators) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
}

TEST_CASE("comparable pairs") {
  const auto fam = testing::four_ideals();
  CHECK_FALSE(comparable({1, 3}, {1, 4}, fam));
  CHECK(replacement_pair({1, 3}, {1, 4}, fam) == MonomialPair{mono("x1*x2", 4), mono("x2*x3", 4)});
  CHECK(fam.find(1, mono("x1*x2", 4)) == 2);
  CHECK(fam.find(1, mono("x2*x3", 4)) == 5);

  CHECK(comparable({1, 2}, {1, 5}, fam));
  CHECK(comparable({0, 1}, {4, 1}, fam));
  CHECK_FALSE(comparable({0, 1}, {2, 7}, fam));
  CHECK(replacement_pair({0, 1}, {2, 7}, fam) ==
        MonomialPair{mono("x3", 4), mono("x1*x2^2", 4)});
  CHECK(fam.find(0, mono("x3", 4)) == 3);
  CHECK(fam.find(2, mono("x1*x2^2", 4)) == 3);

  CHECK(comparable({1, 2}, {1, 4}, fam));
  CHECK(comparable({0, 2}, {2, 1}, fam));
  CHECK_THROWS_AS(comparable({1, 3}, {1, 3}, fam), ValidationError);
  CHECK_THROWS_AS(comparable({1, 4}, {1, 3}, fam), ValidationError);
  CHECK_THROWS_AS(comparable({1, 4}, {6, 1}, fam), ValidationError);
}

TEST_CASE("closure and characterization on the four-ideal family") {
  const auto fam = testing::four_ideals();
  const auto report = is_closed_under_comparability(fam);
  CHECK(report.closed);
  CHECK(report.violations == 0);
  CHECK(report.witnesses.empty());
  CHECK(report.pairs_checked == 24 * 23 / 2);
  CHECK(report.incomparable_pairs == 104);

  const auto ch = characterize(fam);
  REQUIRE(ch.levels.size() == 4);
  for (const auto& l : ch.levels) {
    CHECK(l.borel_equal);
    CHECK(l.borel_subset);
  }
  CHECK(ch.levels[0].last == mono("x3*x4", 4));
  CHECK(ch.levels[0].borel_size == 9);
  REQUIRE(ch.chain.size() == 3);
  for (const auto& c : ch.chain) CHECK(c.holds);
  CHECK(ch.conjunction);
  CHECK(ch.consistent_with(FamilyMode::rees, report.closed));
}

TEST_CASE("removing x2*x3 breaks closure") {
  const auto fam =
      build_family(load_family_spec(testing::data_dir() / "four_ideals_missing_x2x3.json"));
  const auto report = is_closed_under_comparability(fam);
  CHECK_FALSE(report.closed);
  REQUIRE_FALSE(report.witnesses.empty());
  bool saw_pair = false;
  for (const auto& w : report.witnesses) {
    CHECK((w.first_missing || w.second_missing));
    if (w.replacement == MonomialPair{mono("x1*x2", 4), mono("x2*x3", 4)}) saw_pair = true;
  }
  CHECK(saw_pair);
  const auto ch = characterize(fam);
  CHECK_FALSE(ch.conjunction);
  CHECK_FALSE(ch.levels[0].borel_equal);
  CHECK(ch.levels[0].borel_subset);
  CHECK(ch.consistent_with(FamilyMode::rees, report.closed));
}

TEST_CASE("witness capping") {
  const auto fam =
      build_family(load_family_spec(testing::data_dir() / "four_ideals_missing_x2x3.json"));
  const auto capped = is_closed_under_comparability(fam, {false, 1});
  const auto all = is_closed_under_comparability(fam, {true, 1});
  CHECK(capped.witnesses.size() == 1);
  CHECK(all.witnesses.size() == all.violations);
  CHECK(capped.violations == all.violations);
  CHECK(all.witnesses.front().a == capped.witnesses.front().a);
}

TEST_CASE("every proper generator of level 1 is needed") {
  const auto spec = testing::four_ideals_spec();
  const auto full = testing::four_ideals();
  for (int j = 1; j < full.level_size(1); ++j) {
    const auto drop = full.generator({1, j}).to_string();
    CAPTURE(drop);
    const auto fam = without_generator(spec, 1, drop);
    CHECK_FALSE(is_closed_under_comparability(fam).closed);
    CHECK_FALSE(characterize(fam).conjunction);
  }
}

TEST_CASE("chain condition failure") {
  FamilySpec spec;
  spec.variables = 3;
  spec.levels = {LevelSpec{1, "x1", {}}, LevelSpec{2, "x3^2", {}}};
  const auto fam = build_family(spec);
  const auto ch = characterize(fam);
  REQUIRE(ch.chain.size() == 1);
  CHECK_FALSE(ch.chain[0].holds);
  CHECK(ch.chain[0].max_of_last == 1);
  CHECK(ch.chain[0].min_of_next_last == 3);
  CHECK_FALSE(is_closed_under_comparability(fam).closed);
}

TEST_CASE("borel closure of every level plus the chain condition decides closure") {
  std::mt19937_64 rng(11);
  int agree = 0, closed_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const auto spec = testing::random_borel_spec(rng, n, 4, 3, trial % 2 == 0);
    const auto fam = build_family(spec);
    const bool closed = is_closed_under_comparability(fam).closed;
    const auto ch = characterize(fam);
    CHECK(ch.conjunction == closed);
    agree += ch.conjunction == closed;
    closed_count += closed;
  }
  CHECK(agree == 200);
  // Both verdicts occur.
  CHECK(closed_count > 20);
  CHECK(closed_count < 180);
}

TEST_CASE("random explicit subsets: closed rees families are borel chains") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    auto spec = testing::explicit_levels(testing::random_borel_spec(rng, n, 3, 2, true));
    for (auto& ls : spec.levels) {
      if (ls.generators.size() < 2 || rng() % 2) continue;
      ls.generators.erase(ls.generators.begin() +
                          static_cast<std::ptrdiff_t>(rng() % ls.generators.size()));
    }
    const auto fam = build_family(spec);
    const bool closed = is_closed_under_comparability(fam).closed;
    CHECK(characterize(fam).conjunction == closed);
  }
}

TEST_CASE("fiber mode: closure without borel levels") {
  const auto fam = testing::fiber_veronese_type();
  CHECK(is_closed_under_comparability(fam).closed);
  const auto ch = characterize(fam);
  CHECK_FALSE(ch.levels[0].borel_equal);
  CHECK_FALSE(ch.conjunction);
  CHECK(ch.consistent_with(FamilyMode::fiber, true));
}

TEST_CASE("fiber mode: the borel chain conditions are sufficient") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto spec = testing::random_borel_spec(rng, 2 + static_cast<std::size_t>(trial % 4), 3, 3, true);
    spec.mode = FamilyMode::fiber;
    spec.embedding_degree = 4;
    const auto fam = build_family(spec);
    const bool closed = is_closed_under_comparability(fam).closed;
    const auto ch = characterize(fam);
    CHECK(ch.consistent_with(FamilyMode::fiber, closed));
    if (ch.conjunction) CHECK(closed);
  }
}
