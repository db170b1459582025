// clifflog: expression front end over the closed-form exp/log/sqrt kernels.
//
// Exit codes: 0 success, 1 failed check suite, 2 usage/lex/parse errors,
// 3 domain errors (no finite value exists for the request).
// stdout carries the report (text, JSON with --json, CSV for bench);
// stderr carries human diagnostics.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "ga/bench.hpp"
#include "ga/checks.hpp"
#include "ga/core.hpp"
#include "ga/functions.hpp"
#include "ga/parser.hpp"
#include "ga/report.hpp"

namespace {

struct EvalOpts {
  std::string algebra = "cl20";
  std::string expr;
  long k = 0;
  double f1 = 0.0, f2 = 0.0;
  bool json = false;
};

struct ExprOpts {
  std::string algebra = "cl20";
  std::string expr;
  bool json = false;
};

struct CheckOpts {
  std::string algebra = "cl20";
  std::string suite;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  bool json = false;
};

struct BenchOpts {
  std::string algebra = "cl20";
  std::string op;
  std::size_t samples = 1000;
  int terms = 20;
  std::uint64_t seed = 0;
  bool json = false;
};

int exit_code_for(const ga::error& e) {
  switch (e.code()) {
    case ga::errc::lex_error:
    case ga::errc::parse_error:
    case ga::errc::basis_out_of_dimension:
      return 2;
    default:
      return 3;
  }
}

void print_error(const std::string& expr, const ga::error& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  if (e.position() != ga::error::npos && e.position() <= expr.size())
    std::fprintf(stderr, "  %s\n  %*s^\n", expr.c_str(),
                 static_cast<int>(e.position()), "");
}

void emit(const ga::CliReport& rep, bool json) {
  if (json) {
    std::printf("%s\n", ga::to_json(rep).c_str());
  } else {
    std::fputs(ga::to_text(rep).c_str(), stdout);
  }
}

ga::Signature sig_of(const std::string& name) {
  return ga::signature_from_name(name).value();  // flag validation guarantees
}

// classify/roots want a plain multivector; structured operands reduce the
// same way the evaluator reduces them mid-expression.
ga::Multivector collapse_to_mv(const ga::EvalValue& v,
                               std::vector<std::string>& notes) {
  if (const auto* m = std::get_if<ga::Multivector>(&v)) return *m;
  if (const auto* lr = std::get_if<ga::LogResult>(&v)) {
    if (!lr->principal)
      throw ga::error(ga::errc::unsupported_kind,
                      "logarithm has no finite principal value here (sector: " +
                          std::string(ga::to_string(lr->sector.tag)) + ")");
    notes.push_back("log collapsed to its principal branch");
    return *lr->principal;
  }
  const auto& sr = std::get<ga::SqrtResult>(v);
  if (sr.isolated.empty())
    throw ga::error(ga::errc::no_real_root, "no real square root to collapse");
  notes.push_back("sqrt collapsed to its first isolated root");
  return sr.isolated.front();
}

int run_eval(const EvalOpts& o) {
  ga::CliReport rep;
  rep.command = "eval";
  rep.algebra = o.algebra;
  rep.input = o.expr;
  try {
    const ga::Signature sig = sig_of(o.algebra);
    ga::EvalOutcome out = ga::eval_ast(*ga::parse_expression(o.expr), sig);
    rep.notes = out.notes;
    int code = 0;
    std::string diag;

    if (const auto* m = std::get_if<ga::Multivector>(&out.value)) {
      rep.kind = "multivector";
      rep.coeffs = ga::coeff_array(*m);
      rep.sector = ga::classify_log(*m);
    } else if (const auto* lr = std::get_if<ga::LogResult>(&out.value)) {
      rep.kind = std::string(ga::to_string(lr->kind));
      rep.sector = lr->sector;
      switch (lr->kind) {
        case ga::LogKind::no_solution: {
          const ga::NormReport& nr = lr->sector.norms;
          diag = nr.qsq > 0.0 && nr.det <= 0.0
                     ? "no solution: qvector part squares positive and det <= 0"
                     : "no solution: outside the image of exp";
          code = 3;
          break;
        }
        case ga::LogKind::asymptotic: {
          rep.finite_part = ga::coeff_array(*lr->finite_part);
          rep.divergent_direction = ga::coeff_array(*lr->divergent_direction);
          rep.family = std::string(lr->family_params);
          const ga::Multivector probe = ga::log_asymptotic_eval(*lr, 1e-8);
          rep.residual = ga::max_abs_diff(ga::exp(probe), lr->input);
          rep.notes.push_back(
              "no finite log; residual taken at eps=1e-8 via finite_part + log(eps)*divergent_direction");
          break;
        }
        default: {
          const ga::Multivector branch = ga::log_eval(*lr, o.k, o.f1, o.f2);
          rep.coeffs = ga::coeff_array(branch);
          if (lr->axis) rep.axis = ga::coeff_array(*lr->axis);
          if (!lr->family_params.empty())
            rep.family = std::string(lr->family_params);
          if (lr->kind == ga::LogKind::free_family) rep.family_log = lr->family_log;
          rep.residual = ga::max_abs_diff(ga::exp(branch), lr->input);
          break;
        }
      }
    } else {
      const auto& sr = std::get<ga::SqrtResult>(out.value);
      rep.kind = "roots";
      rep.sector = ga::classify_log(sr.input);
      for (const auto& rt : sr.isolated) rep.roots.push_back(ga::coeff_array(rt));
      for (const auto& f : sr.families) rep.families.push_back(f.describe());
      if (!sr.isolated.empty()) {
        rep.coeffs = ga::coeff_array(sr.isolated.front());
        double resid = 0.0;
        for (const auto& rt : sr.isolated)
          resid = std::max(resid, ga::max_abs_diff(ga::gp(rt, rt), sr.input));
        rep.residual = resid;
      } else if (!sr.families.empty()) {
        const ga::RootFamily& f = sr.families.front();
        if (f.in_domain(o.f1, o.f2)) {
          const ga::Multivector member = f.at(o.f1, o.f2);
          rep.coeffs = ga::coeff_array(member);
          rep.residual = ga::max_abs_diff(ga::gp(member, member), sr.input);
          rep.notes.push_back("family member evaluated at (--f1, --f2)");
        }
      } else {
        diag = "no real square root";
        code = 3;
      }
    }

    emit(rep, o.json);
    if (code != 0) std::fprintf(stderr, "error: %s\n", diag.c_str());
    return code;
  } catch (const ga::error& e) {
    print_error(o.expr, e);
    return exit_code_for(e);
  }
}

int run_classify(const ExprOpts& o) {
  ga::CliReport rep;
  rep.command = "classify";
  rep.algebra = o.algebra;
  rep.input = o.expr;
  try {
    const ga::Signature sig = sig_of(o.algebra);
    ga::EvalOutcome out = ga::eval_ast(*ga::parse_expression(o.expr), sig);
    rep.notes = out.notes;
    const ga::Multivector m = collapse_to_mv(out.value, rep.notes);
    rep.kind = "sector";
    rep.coeffs = ga::coeff_array(m);
    rep.sector = ga::classify_log(m);
    emit(rep, o.json);
    return 0;
  } catch (const ga::error& e) {
    print_error(o.expr, e);
    return exit_code_for(e);
  }
}

int run_roots(const ExprOpts& o) {
  ga::CliReport rep;
  rep.command = "roots";
  rep.algebra = o.algebra;
  rep.input = o.expr;
  try {
    const ga::Signature sig = sig_of(o.algebra);
    ga::EvalOutcome out = ga::eval_ast(*ga::parse_expression(o.expr), sig);
    rep.notes = out.notes;
    const ga::Multivector m = collapse_to_mv(out.value, rep.notes);
    rep.kind = "roots";
    rep.sector = ga::classify_log(m);
    const ga::SqrtResult sr = ga::sqrt_all(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < sr.isolated.size(); ++i) {
      const ga::Multivector& rt = sr.isolated[i];
      rep.roots.push_back(ga::coeff_array(rt));
      const double resid = ga::max_abs_diff(ga::gp(rt, rt), m);
      worst = std::max(worst, resid);
      rep.notes.push_back("root[" + std::to_string(i) +
                          "] residual = " + ga::format_double(resid));
    }
    for (const auto& f : sr.families) rep.families.push_back(f.describe());
    if (!sr.isolated.empty()) {
      rep.coeffs = ga::coeff_array(sr.isolated.front());
      rep.residual = worst;
      try {
        const auto [rp, rm] = ga::sqrt_explog(m);
        (void)rm;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& rt : sr.isolated)
          best = std::min(best, ga::max_abs_diff(rp, rt));
        rep.notes.push_back("exp(log/2) matches an isolated root within " +
                            ga::format_double(best));
      } catch (const ga::error&) {
        // no finite log here; the enumeration stands on its own
      }
    }
    if (sr.isolated.empty() && sr.families.empty())
      rep.notes.push_back("no real square roots");
    emit(rep, o.json);
    return 0;
  } catch (const ga::error& e) {
    print_error(o.expr, e);
    return exit_code_for(e);
  }
}

int run_check(const CheckOpts& o) {
  ga::CliReport rep;
  rep.command = "check";
  rep.algebra = o.algebra;
  rep.input = o.suite;
  try {
    ga::CheckOptions copt;
    copt.sig = sig_of(o.algebra);
    copt.seed = o.seed;
    copt.samples = o.samples;
    copt.tol = o.tol;
    const ga::CheckReport cr = ga::run_check(o.suite, copt);
    rep.kind = "check";
    rep.suites.push_back(cr);
    rep.residual = cr.max_residual;
    emit(rep, o.json);
    if (!cr.passed) {
      std::fprintf(stderr, "error: check suite '%s' failed on %s\n",
                   o.suite.c_str(), o.algebra.c_str());
      return 1;
    }
    return 0;
  } catch (const ga::error& e) {
    print_error(o.suite, e);
    return exit_code_for(e);
  }
}

int run_bench(const BenchOpts& o) {
  try {
    const ga::BenchResult br =
        ga::run_bench(sig_of(o.algebra), o.op, o.samples, o.terms, o.seed);
    if (o.json) {
      ga::CliReport rep;
      rep.command = "bench";
      rep.algebra = o.algebra;
      rep.input = o.op;
      rep.kind = "bench";
      rep.bench = br;
      for (const ga::BenchRow& row : br.rows)
        rep.timing.emplace_back(row.impl + "_ns_per_op", row.ns_per_op);
      emit(rep, true);
    } else {
      std::fputs(ga::to_csv(br).c_str(), stdout);
      std::fprintf(stderr, "skipped: %zu of %zu inputs outside the series domain\n",
                   br.skipped, br.samples);
    }
    return 0;
  } catch (const ga::error& e) {
    print_error(o.op, e);
    return exit_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "closed-form exp, log and sqrt over the Clifford algebras Cl(p,q) with "
      "p+q <= 2"};
  app.require_subcommand(1);

  const std::vector<std::string> algebras = {"cl01", "cl10", "cl02", "cl11",
                                             "cl20"};
  std::vector<std::string> suites;
  for (std::string_view s : ga::check_suite_names()) suites.emplace_back(s);

  EvalOpts eo;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a multivector expression");
  eval->add_option("expr", eo.expr, "expression, e.g. \"log(2+4e1-5e2-e12)\"")
      ->required();
  eval->add_option("--algebra", eo.algebra, "algebra tag")
      ->check(CLI::IsMember(algebras))
      ->capture_default_str();
  eval->add_option("--k", eo.k, "winding / family sheet index");
  eval->add_option("--f1", eo.f1, "free-family parameter 1");
  eval->add_option("--f2", eo.f2, "free-family parameter 2");
  eval->add_flag("--json", eo.json, "emit the JSON report");

  ExprOpts co;
  CLI::App* classify = app.add_subcommand("classify", "Classify the log sector");
  classify->add_option("expr", co.expr, "expression")->required();
  classify->add_option("--algebra", co.algebra, "algebra tag")
      ->check(CLI::IsMember(algebras))
      ->capture_default_str();
  classify->add_flag("--json", co.json, "emit the JSON report");

  ExprOpts ro;
  CLI::App* roots = app.add_subcommand("roots", "Enumerate real square roots");
  roots->add_option("expr", ro.expr, "expression")->required();
  roots->add_option("--algebra", ro.algebra, "algebra tag")
      ->check(CLI::IsMember(algebras))
      ->capture_default_str();
  roots->add_flag("--json", ro.json, "emit the JSON report");

  CheckOpts ko;
  CLI::App* check = app.add_subcommand("check", "Run a randomized property suite");
  check->add_option("suite", ko.suite, "roundtrip|involution|product|sqrt|series")
      ->required()
      ->check(CLI::IsMember(suites));
  check->add_option("--algebra", ko.algebra, "algebra tag")
      ->check(CLI::IsMember(algebras))
      ->capture_default_str();
  check->add_option("--samples", ko.samples, "sample count (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--seed", ko.seed, "RNG seed")->envname("CLIFFLOG_SEED");
  check->add_option("--tol", ko.tol, "residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_flag("--json", ko.json, "emit the JSON report");

  BenchOpts bo;
  CLI::App* bench =
      app.add_subcommand("bench", "Time closed forms against truncated series");
  bench->add_option("--op", bo.op, "exp|log|sqrt")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"exp", "log", "sqrt"}));
  bench->add_option("--algebra", bo.algebra, "algebra tag")
      ->check(CLI::IsMember(algebras))
      ->capture_default_str();
  bench->add_option("--samples", bo.samples, "input count (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--terms", bo.terms, "series truncation order")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  bench->add_option("--seed", bo.seed, "RNG seed")->envname("CLIFFLOG_SEED");
  bench->add_flag("--json", bo.json, "emit the JSON report instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; any usage problem exits 2
  }

  if (eval->parsed()) return run_eval(eo);
  if (classify->parsed()) return run_classify(co);
  if (roots->parsed()) return run_roots(ro);
  if (check->parsed()) return run_check(ko);
  return run_bench(bo);
}
