#include "mrees/family.hpp"

#include "mrees/errors.hpp"

#include <algorithm>
#include <set>

namespace mrees {

std::string_view to_string(FamilyMode mode) {
  return mode == FamilyMode::rees ? "rees" : "fiber";
}

std::string to_string(const GeneratorRef& r) {
  return "(" + std::to_string(r.level) + "," + std::to_string(r.index) + ")";
}

LeveledFamily::LeveledFamily(FamilyMode mode, std::size_t variables, std::vector<Level> levels,
                             std::optional<std::uint64_t> embedding_degree)
    : mode_(mode), variables_(variables), embedding_degree_(embedding_degree),
      levels_(std::move(levels)) {
  if (variables_ == 0) throw ValidationError("a family needs at least one variable");

  if (mode_ == FamilyMode::rees) {
    if (embedding_degree_)
      throw ValidationError("embedding_degree is only meaningful in fiber mode");
    if (levels_.empty()) throw ValidationError("rees family is missing level 0");
    const Level& zero = levels_.front();
    bool ok = zero.degree == 1 && zero.generators.size() == variables_;
    for (std::size_t j = 0; ok && j < variables_; ++j) {
      const VarIndex v = static_cast<VarIndex>(j + 1);
      ok = zero.generators[j] == Monomial::from_factors(variables_, std::span(&v, 1));
    }
    if (!ok) throw ValidationError("level 0 must be exactly x1, ..., xn in order");
  } else if (!embedding_degree_) {
    throw ValidationError("fiber mode requires embedding_degree");
  }

  std::uint64_t previous = 0;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const int i = first_level() + static_cast<int>(k);
    Level& lv = levels_[k];
    const std::string where = "level " + std::to_string(i);
    if (lv.degree == 0) throw ValidationError(where + ": degree must be positive");
    if (lv.degree < previous)
      throw ValidationError(where + ": degrees must be non-decreasing (" + std::to_string(previous) +
                            " then " + std::to_string(lv.degree) + ")");
    previous = lv.degree;
    if (lv.generators.empty()) throw ValidationError(where + ": no generators");
    for (const auto& g : lv.generators) {
      if (g.variables() != variables_)
        throw ValidationError(where + ": generator " + g.to_string() + " has the wrong variable count");
      if (g.degree() != lv.degree)
        throw ValidationError(where + ": generator " + g.to_string() + " has degree " +
                              std::to_string(g.degree()) + ", expected " + std::to_string(lv.degree));
    }
    std::sort(lv.generators.begin(), lv.generators.end(),
              [](const Monomial& a, const Monomial& b) { return revlex_cmp(a, b) > 0; });
    auto dup = std::adjacent_find(lv.generators.begin(), lv.generators.end());
    if (dup != lv.generators.end())
      throw ValidationError(where + ": duplicate generator " + dup->to_string());
  }
  if (mode_ == FamilyMode::fiber && !levels_.empty() && *embedding_degree_ <= levels_.back().degree)
    throw ValidationError("fiber mode requires embedding_degree > " +
                          std::to_string(levels_.back().degree));

  lookup_.resize(levels_.size());
  for (std::size_t k = 0; k < levels_.size(); ++k)
    for (std::size_t j = 0; j < levels_[k].generators.size(); ++j)
      lookup_[k].emplace(levels_[k].generators[j], static_cast<int>(j + 1));
}

const Level& LeveledFamily::level(int i) const {
  if (!has_level(i)) throw ValidationError("no level " + std::to_string(i) + " in family");
  return levels_[static_cast<std::size_t>(i - first_level())];
}

bool LeveledFamily::contains(const GeneratorRef& r) const {
  return has_level(r.level) && r.index >= 1 && r.index <= level_size(r.level);
}

const Monomial& LeveledFamily::generator(const GeneratorRef& r) const {
  if (!contains(r)) throw ValidationError("generator ref " + to_string(r) + " out of range");
  return level(r.level).generators[static_cast<std::size_t>(r.index - 1)];
}

std::optional<int> LeveledFamily::find(int level, const Monomial& m) const {
  if (!has_level(level)) return std::nullopt;
  const auto& table = lookup_[static_cast<std::size_t>(level - first_level())];
  if (auto it = table.find(m); it != table.end()) return it->second;
  return std::nullopt;
}

std::vector<GeneratorRef> LeveledFamily::refs() const {
  std::vector<GeneratorRef> out;
  out.reserve(generator_count());
  for (int i = first_level(); i <= last_level(); ++i)
    for (int j = 1; j <= level_size(i); ++j) out.push_back({i, j});
  return out;
}

std::size_t LeveledFamily::generator_count() const {
  std::size_t total = 0;
  for (const auto& lv : levels_) total += lv.generators.size();
  return total;
}

LeveledFamily build_family(const FamilySpec& spec, std::vector<std::string>* warnings) {
  const std::size_t n = spec.variables;
  if (n == 0) throw ValidationError("variables must be positive");
  std::vector<Level> levels;
  if (spec.mode == FamilyMode::rees) {
    Level zero{1, {}};
    for (std::size_t j = 1; j <= n; ++j) {
      const VarIndex v = static_cast<VarIndex>(j);
      zero.generators.push_back(Monomial::from_factors(n, std::span(&v, 1)));
    }
    levels.push_back(std::move(zero));
  }
  const int first = 1;
  for (std::size_t k = 0; k < spec.levels.size(); ++k) {
    const LevelSpec& ls = spec.levels[k];
    const std::string where = "level " + std::to_string(first + static_cast<int>(k));
    Level lv;
    if (ls.borel && !ls.generators.empty())
      throw ValidationError(where + ": give either borel or generators, not both");
    if (ls.borel) {
      Monomial u = parse_monomial(*ls.borel, n);
      if (u.is_one()) throw ValidationError(where + ": borel(1) is not a valid generator");
      lv.generators = borel_closure(u);
    } else {
      std::set<Monomial> seen;
      for (const auto& text : ls.generators) {
        Monomial g = parse_monomial(text, n);
        if (!seen.insert(g).second) {
          if (warnings) warnings->push_back(where + ": duplicate generator " + g.to_string() + " dropped");
          continue;
        }
        lv.generators.push_back(std::move(g));
      }
    }
    if (lv.generators.empty()) throw ValidationError(where + ": no generators");
    lv.degree = ls.degree.value_or(lv.generators.front().degree());
    levels.push_back(std::move(lv));
  }
  return LeveledFamily(spec.mode, n, std::move(levels), spec.embedding_degree);
}

MonomialPair replacement_pair(const GeneratorRef& a, const GeneratorRef& b,
                              const LeveledFamily& fam) {
  const Monomial& u = fam.generator(a);
  const Monomial& v = fam.generator(b);
  if (!(a < b)) throw ValidationError("pair " + to_string(a) + ", " + to_string(b) + " is not <_lex ordered");
  return a.level == b.level ? sort_pair(u, v) : ord_pair(u, v);
}

bool comparable(const GeneratorRef& a, const GeneratorRef& b, const LeveledFamily& fam) {
  const auto rep = replacement_pair(a, b, fam);
  return rep.first == fam.generator(a) && rep.second == fam.generator(b);
}

ClosureReport is_closed_under_comparability(const LeveledFamily& fam, const ClosureOptions& options) {
  ClosureReport report;
  const auto refs = fam.refs();
  for (std::size_t x = 0; x < refs.size(); ++x) {
    for (std::size_t y = x + 1; y < refs.size(); ++y) {
      const auto& a = refs[x];
      const auto& b = refs[y];
      ++report.pairs_checked;
      auto rep = replacement_pair(a, b, fam);
      if (rep.first == fam.generator(a) && rep.second == fam.generator(b)) continue;
      ++report.incomparable_pairs;
      const bool first_missing = !fam.find(a.level, rep.first);
      const bool second_missing = !fam.find(b.level, rep.second);
      if (!first_missing && !second_missing) continue;
      report.closed = false;
      ++report.violations;
      if (options.all_witnesses || report.witnesses.size() < options.max_witnesses)
        report.witnesses.push_back({a, b, std::move(rep), first_missing, second_missing});
    }
  }
  return report;
}

bool CharacterizationReport::consistent_with(FamilyMode mode, bool closed) const {
  if (mode == FamilyMode::rees) return conjunction == closed;
  return (!conjunction || closed) && (!closed || necessary_conditions);
}

CharacterizationReport characterize(const LeveledFamily& fam) {
  CharacterizationReport report;
  report.conjunction = true;
  report.necessary_conditions = true;
  const int first = std::max(1, fam.first_level());
  for (int i = first; i <= fam.last_level(); ++i) {
    const auto& gens = fam.level(i).generators;
    LevelCharacterization lc;
    lc.level = i;
    lc.last = gens.back();
    const auto bset = borel_closure(lc.last);
    lc.borel_size = bset.size();
    lc.borel_subset = std::all_of(gens.begin(), gens.end(),
                                  [&](const Monomial& g) { return borel_member(g, lc.last); });
    // Both lists are revlex-sorted and duplicate-free.
    lc.borel_equal = lc.borel_subset && bset.size() == gens.size();
    report.conjunction = report.conjunction && lc.borel_equal;
    report.necessary_conditions = report.necessary_conditions && lc.borel_subset;
    report.levels.push_back(std::move(lc));
  }
  for (int i = first; i < fam.last_level(); ++i) {
    ChainCondition cc;
    cc.level = i;
    cc.max_of_last = fam.level(i).generators.back().max_var();
    cc.min_of_next_last = fam.level(i + 1).generators.back().min_var();
    cc.holds = cc.max_of_last >= cc.min_of_next_last;
    report.conjunction = report.conjunction && cc.holds;
    report.necessary_conditions = report.necessary_conditions && cc.holds;
    report.chain.push_back(cc);
  }
  return report;
}

} // namespace mrees
