#include "commands.hpp"

#include "mrees/certificate.hpp"
#include "mrees/errors.hpp"
#include "mrees/family.hpp"
#include "mrees/inversions.hpp"
#include "mrees/oracle.hpp"
#include "mrees/presentation.hpp"
#include "mrees/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace mrees::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string format = "text";
  std::string certify_format = "json";
  bool all_witnesses = false;
  std::size_t max_degree = 3;
  std::optional<std::size_t> drop_rule;
  std::string expression;
  bool trace = false;
  std::string monomial;
  std::size_t variables = 0;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

LeveledFamily load_family(const Options& opt, std::ostream& err) {
  std::vector<std::string> warnings;
  auto fam = build_family(load_family_spec(opt.file), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return fam;
}

void print_family_line(const LeveledFamily& fam, std::ostream& out) {
  out << "family: " << to_string(fam.mode()) << ", " << fam.variables() << " variables";
  if (fam.embedding_degree()) out << ", embedding degree " << *fam.embedding_degree();
  out << ", level sizes (";
  for (int i = fam.first_level(); i <= fam.last_level(); ++i)
    out << (i == fam.first_level() ? "" : ", ") << fam.level_size(i);
  out << ")\n";
}

void print_witnesses(const ClosureReport& report, std::ostream& out) {
  for (const auto& w : report.witnesses) {
    out << "witness: " << to_string(w.a) << " " << to_string(w.b) << " -> "
        << w.replacement.first.to_string() << ", " << w.replacement.second.to_string()
        << " (missing:";
    if (w.first_missing) out << " " << w.replacement.first.to_string() << " on level " << w.a.level;
    if (w.second_missing)
      out << (w.first_missing ? ", " : " ") << w.replacement.second.to_string() << " on level " << w.b.level;
    out << ")\n";
  }
  if (report.witnesses.size() < report.violations)
    out << "(" << report.violations - report.witnesses.size()
        << " more violating pairs; use --all-witnesses)\n";
}

void print_characterization(const CharacterizationReport& ch, std::ostream& out) {
  out << "characterization:\n";
  out << "  level  last          |B(last)|  borel_equal  borel_subset\n";
  for (const auto& l : ch.levels)
    out << "  " << std::left << std::setw(7) << l.level << std::setw(14) << l.last.to_string()
        << std::setw(11) << l.borel_size << std::setw(13) << yes_no(l.borel_equal)
        << yes_no(l.borel_subset) << '\n';
  for (const auto& c : ch.chain)
    out << "  chain " << c.level << "-" << c.level + 1 << ": max = x" << c.max_of_last
        << " <= min = x" << c.min_of_next_last << ": " << yes_no(c.holds) << '\n';
  out << "conjunction: " << yes_no(ch.conjunction) << '\n';
  out << "necessary conditions: " << yes_no(ch.necessary_conditions) << '\n';
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fam = load_family(opt, err);
  ClosureOptions co;
  co.all_witnesses = opt.all_witnesses;
  const auto closure = is_closed_under_comparability(fam, co);
  const auto ch = characterize(fam);
  const bool agree = ch.consistent_with(fam.mode(), closure.closed);
  if (opt.format == "json") {
    out << json{{"family", to_json(fam)},
                {"closure", to_json(closure)},
                {"characterization", to_json(ch)},
                {"agreement", agree}}
               .dump(2)
        << '\n';
  } else {
    print_family_line(fam, out);
    out << "closed: " << yes_no(closure.closed) << '\n';
    out << "pairs checked: " << closure.pairs_checked
        << ", incomparable: " << closure.incomparable_pairs
        << ", violations: " << closure.violations << '\n';
    print_witnesses(closure, out);
    print_characterization(ch, out);
    out << "agreement: " << yes_no(agree)
        << (fam.mode() == FamilyMode::rees ? " (closure == conjunction)"
                                           : " (conjunction => closure => necessary conditions)")
        << '\n';
  }
  return closure.closed ? kSuccess : kNegative;
}

Basis closed_basis(const LeveledFamily& fam, const Options& opt) {
  Basis basis = build_basis(fam);
  if (opt.drop_rule) basis = basis.without(*opt.drop_rule);
  return basis;
}

int cmd_basis(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fam = load_family(opt, err);
  const Basis basis = closed_basis(fam, opt);
  const json doc = to_json(basis);
  if (opt.format == "json") {
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  // Leads are marked with underscores.
  for (const auto& g : basis.elements())
    out << "_" << g.lead.to_string() << "_ - " << g.trail.to_string() << '\n';
  out << basis.size() << " relations\n";
  out << "quadratic: " << yes_no(doc["quadratic"].get<bool>()) << '\n';
  out << "squarefree leads: " << yes_no(doc["squarefree_leads"].get<bool>()) << '\n';
  return kSuccess;
}

int cmd_certify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fam = load_family(opt, err);
  const auto cert = certify(fam);
  if (opt.certify_format == "text") {
    print_family_line(fam, out);
    out << "closed: " << yes_no(cert.closed) << '\n';
    if (cert.basis_size) out << "basis size: " << *cert.basis_size << '\n';
    if (cert.quadratic) out << "quadratic: " << yes_no(*cert.quadratic) << '\n';
    if (cert.squarefree_leads) out << "squarefree leads: " << yes_no(*cert.squarefree_leads) << '\n';
    if (!cert.closed) print_witnesses(cert.closure, out);
    for (const auto& c : cert.conclusions) out << "conclusion: " << c << '\n';
    for (const auto& c : cert.citations) out << "citation: " << c << '\n';
  } else {
    out << to_json(cert).dump(2) << '\n';
  }
  return cert.conclusions.empty() ? kNegative : kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fam = load_family(opt, err);
  auto t = std::chrono::steady_clock::now();
  const Basis basis = closed_basis(fam, opt);
  const double t_basis = seconds_since(t);

  t = std::chrono::steady_clock::now();
  const auto confluence = confluence_check(basis);
  const double t_conf = seconds_since(t);

  t = std::chrono::steady_clock::now();
  const auto unique = verify_unique_normal_forms(fam, basis, opt.max_degree);
  const double t_unique = seconds_since(t);

  t = std::chrono::steady_clock::now();
  const auto kernel = verify_kernel_generation(fam, basis, opt.max_degree);
  const double t_kernel = seconds_since(t);

  t = std::chrono::steady_clock::now();
  std::vector<TMonomial> all;
  for (std::size_t d = 1; d <= opt.max_degree; ++d)
    for (auto& m : enumerate_tmonomials(fam, d)) all.push_back(std::move(m));
  const auto measure = verify_measure_decrease(fam, basis, all);
  const double t_measure = seconds_since(t);

  const bool passed = confluence.passed && unique.passed && kernel.passed && measure.passed;
  if (opt.format == "json") {
    out << json{{"basis_size", basis.size()},
                {"max_degree", opt.max_degree},
                {"confluence", to_json(confluence)},
                {"unique_normal_forms", to_json(unique)},
                {"kernel_generation", to_json(kernel)},
                {"measure_decrease", to_json(measure)},
                {"passed", passed}}
               .dump(2)
        << '\n';
    return passed ? kSuccess : kNegative;
  }
  auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
  print_family_line(fam, out);
  out << "basis: " << basis.size() << " relations (" << fixed(t_basis) << " s)\n";
  out << "confluence: " << verdict(confluence.passed) << " (" << confluence.pairs
      << " S-pairs, max reduction length " << confluence.max_reduction_length << ", "
      << fixed(t_conf) << " s)\n";
  if (confluence.first_failure) out << "  first failure: " << *confluence.first_failure << '\n';
  auto oracle_line = [&](const char* name, const OracleReport& r, double secs) {
    out << name << ": " << verdict(r.passed) << " (degree <= " << opt.max_degree << ", "
        << r.monomials << " monomials, " << r.fibers << " fibers, max fiber " << r.max_fiber_size
        << ", " << r.reductions << " reductions, " << fixed(secs) << " s)\n";
    if (r.witness) out << "  first failure: " << *r.witness << '\n';
  };
  oracle_line("unique normal forms", unique, t_unique);
  oracle_line("kernel generation", kernel, t_kernel);
  out << "measure decrease: " << verdict(measure.passed) << " (" << measure.monomials
      << " monomials, " << measure.steps << " steps, " << measure.violations << " violations, "
      << fixed(t_measure) << " s)\n";
  if (measure.witness) out << "  first failure: " << *measure.witness << '\n';
  out << "all suites: " << verdict(passed) << '\n';
  return passed ? kSuccess : kNegative;
}

int cmd_normal_form(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fam = load_family(opt, err);
  const Basis basis = closed_basis(fam, opt);
  const TPolynomial f = parse_tpolynomial(opt.expression, fam);
  std::vector<ReductionStep> trace;
  ReductionOptions ro;
  if (opt.trace) ro.trace = &trace;
  const auto r = reduce_fully(f, basis, ro);
  if (opt.format == "json") {
    json steps = json::array();
    for (const auto& s : trace) {
      const auto before = reduction_level(s.monomial, fam);
      const auto after = reduction_level(s.result, fam);
      steps.push_back({{"monomial", s.monomial.to_string()},
                       {"rule", s.rule},
                       {"result", s.result.to_string()},
                       {"measure_before", {before.c, before.e}},
                       {"measure_after", {after.c, after.e}}});
    }
    json doc{{"input", f.to_string()}, {"normal_form", r.remainder.to_string()}, {"steps", r.steps}};
    if (opt.trace) doc["trace"] = steps;
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  if (opt.trace) {
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const auto& s = trace[k];
      const auto& g = basis[s.rule];
      out << "step " << k + 1 << ": " << s.monomial.to_string() << " -> " << s.result.to_string()
          << "  [rule " << s.rule << ": " << g.lead.to_string() << " -> " << g.trail.to_string()
          << "]\n";
      out << "  " << to_string(reduction_level(s.monomial, fam)) << '\n';
      out << "  " << to_string(reduction_level(s.result, fam)) << '\n';
    }
  }
  out << r.remainder.to_string() << '\n';
  return kSuccess;
}

int cmd_bset(const Options& opt, std::ostream& out, std::ostream&) {
  std::size_t n = opt.variables;
  if (n == 0) n = std::max<std::size_t>(1, max_index_in(opt.monomial));
  const Monomial u = parse_monomial(opt.monomial, n);
  if (u.is_one()) throw ValidationError("B(1) is not defined; give a non-constant monomial");
  const auto bset = borel_closure(u);
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& m : bset) rows.push_back(m.to_string());
    out << json{{"monomial", u.to_string()}, {"variables", n}, {"size", bset.size()}, {"generators", rows}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  for (std::size_t j = 0; j < bset.size(); ++j) out << j + 1 << "  " << bset[j].to_string() << '\n';
  out << bset.size() << " monomials\n";
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify Koszulness of multi-Rees algebras of strongly stable ideals via an explicit "
               "marked quadratic Groebner basis",
               "mrees"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> formats{"text", "json"};

  auto* check = app.add_subcommand("check", "Closure under comparability and the Borel characterization");
  check->add_option("file", opt.file, "Family file (JSON)")->required();
  check->add_flag("--all-witnesses", opt.all_witnesses, "List every violating pair");
  check->add_option("--format", opt.format)->check(CLI::IsMember(formats));

  auto* basis = app.add_subcommand("basis", "Emit the marked quadratic Groebner basis");
  basis->add_option("file", opt.file, "Family file (JSON)")->required();
  basis->add_option("--format", opt.format)->check(CLI::IsMember(formats));
  basis->add_option("--drop-rule", opt.drop_rule)->group("");

  auto* cert = app.add_subcommand("certify", "Emit a certificate (JSON by default)");
  cert->add_option("file", opt.file, "Family file (JSON)")->required();
  cert->add_option("--format", opt.certify_format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run the confluence, fiber and measure suites");
  verify->add_option("file", opt.file, "Family file (JSON)")->required();
  verify->add_option("--max-degree", opt.max_degree, "Degree bound for fiber enumeration")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", opt.format)->check(CLI::IsMember(formats));
  verify->add_option("--drop-rule", opt.drop_rule)->group("");

  auto* nf = app.add_subcommand("normal-form", "Reduce a T-expression modulo the basis");
  nf->add_option("file", opt.file, "Family file (JSON)")->required();
  nf->add_option("expression", opt.expression, "e.g. \"T[1,3]*T[1,4] - T[1,2]*T[1,5]\"")->required();
  nf->add_flag("--trace", opt.trace, "Print each step with its (c,e) measure");
  nf->add_option("--format", opt.format)->check(CLI::IsMember(formats));
  nf->add_option("--drop-rule", opt.drop_rule)->group("");

  auto* bset = app.add_subcommand("bset", "List B(u) in descending revlex order");
  bset->add_option("monomial", opt.monomial, "e.g. x3*x4")->required();
  bset->add_option("-n,--variables", opt.variables, "Ambient variable count (default: largest index)");
  bset->add_option("--format", opt.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv{"mrees"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out, err);
    if (basis->parsed()) return cmd_basis(opt, out, err);
    if (cert->parsed()) return cmd_certify(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (nf->parsed()) return cmd_normal_form(opt, out, err);
    if (bset->parsed()) return cmd_bset(opt, out, err);
  } catch (const NotClosedError& e) {
    err << "error: " << e.what() << '\n';
    print_witnesses(e.report(), err);
    return kNegative;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvariantError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  }
  return kInputError;
}

} // namespace mrees::cli
