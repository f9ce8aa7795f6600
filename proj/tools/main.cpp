// Command-line front end: analyze / check / ancilla / oracle over instance
// files. Exit codes: 0 success (or "optimal"), 1 valid but not optimal,
// 2 parse or usage error, 3 domain violation.
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusd/ancilla.hpp"
#include "fusd/discrimination.hpp"
#include "fusd/instance_io.hpp"
#include "fusd/optimality.hpp"
#include "fusd/oracle.hpp"
#include "fusd/tolerances.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string path;
  std::string format = "text";
  double tolerance = fusd::tol::kGap;
  long long trials = 1000000;
  std::uint64_t seed = 42;
  int grid_steps = 200;
  double a_sq = 0.5;
  double phase = 0.0;
};

json tolerances_block(const Options& opt) {
  return {{"gap", opt.tolerance},
          {"validation", fusd::tol::kValidation},
          {"internal", fusd::tol::kInternal},
          {"condition", fusd::tol::kCondition},
          {"angle", fusd::tol::kAngle}};
}

json complex_block(const std::complex<double>& z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

json sector_block(const fusd::SectorSlot& slot) {
  json j{{"pr", slot.pr},
         {"psi_norm", slot.psi_norm},
         {"phi_norm", slot.phi_norm},
         {"s", complex_block(slot.s)},
         {"degenerate", slot.degenerate}};
  if (!slot.degenerate) {
    j["p_cond"] = slot.p_cond;
    j["q_cond"] = slot.q_cond;
    j["overlap"] = slot.overlap;
    if (!slot.single_hypothesis())
      j["strategy"] = fusd::to_string(fusd::classify(slot.p_cond, slot.q_cond, slot.overlap));
    else
      j["strategy"] = fusd::to_string(fusd::StrategyClass::SingleHypothesis);
  }
  return j;
}

json analysis_block(const fusd::DiscriminationInstance& inst) {
  const double p = inst.psi.prior;
  const double q = inst.phi.prior;
  json j{{"p", p}, {"q", q}};
  if (!inst.same_global_parity()) {
    j["different_parity"] = true;
    j["p_s"] = 1.0;
    j["p_s_sep"] = 1.0;
    j["gap"] = 0.0;
    return j;
  }
  const fusd::SectorData sd = fusd::sector_data(inst);
  const double s_abs = std::abs(sd.global_overlap());
  j["different_parity"] = false;
  j["global_overlap"] = s_abs;
  if (p > 0.0 && q > 0.0) {
    j["xi"] = fusd::xi(p, q);
    j["global_strategy"] = fusd::to_string(fusd::classify(p, q, s_abs));
  }
  if (sd.delta) j["delta"] = *sd.delta;
  j["even"] = sector_block(sd.even);
  j["odd"] = sector_block(sd.odd);
  const auto sep = fusd::optimal_success_sep(sd);
  j["p_s"] = fusd::optimal_success_unconstrained(p, q, s_abs);
  j["p_s_sep"] = sep.total;
  j["even_success"] = sep.even_success;
  j["odd_success"] = sep.odd_success;
  j["gap"] = j["p_s"].get<double>() - sep.total;
  return j;
}

void print_sector_line(const char* name, const json& s) {
  std::printf("  %s: Pr=%.9g", name, s["pr"].get<double>());
  if (s.contains("overlap"))
    std::printf("  p_i=%.9g q_i=%.9g overlap=%.9g strategy=%s", s["p_cond"].get<double>(),
                s["q_cond"].get<double>(), s["overlap"].get<double>(),
                s["strategy"].get<std::string>().c_str());
  else if (s["degenerate"].get<bool>())
    std::printf("  (degenerate)");
  std::printf("\n");
}

void emit(const Options& opt, const json& report) {
  if (opt.format == "structured") {
    std::cout << report.dump() << "\n";
    return;
  }
  const json& a = report.contains("analysis") ? report["analysis"] : report;
  if (a.contains("different_parity") && a["different_parity"].get<bool>())
    std::printf("states have different global parity: perfectly discriminable\n");
  if (a.contains("global_overlap")) {
    std::printf("|<psi|phi>| = %.9g", a["global_overlap"].get<double>());
    if (a.contains("xi"))
      std::printf("  Xi(p,q) = %.9g  strategy = %s", a["xi"].get<double>(),
                  a["global_strategy"].get<std::string>().c_str());
    std::printf("\n");
  }
  if (a.contains("even")) {
    print_sector_line("even", a["even"]);
    print_sector_line("odd ", a["odd"]);
  }
  if (a.contains("p_s"))
    std::printf("P_s      = %.12g\nP_s^SEP  = %.12g\ngap      = %.12g\n",
                a["p_s"].get<double>(), a["p_s_sep"].get<double>(), a["gap"].get<double>());
  if (report.contains("verdict")) {
    const json& v = report["verdict"];
    std::printf("verdict  = %s  case = %s", v["locc_optimal"].get<bool>() ? "optimal" : "sub-optimal",
                v["case"].get<std::string>().c_str());
    if (v["degenerate_case"].get<int>() > 0)
      std::printf(" (condition %d)", v["degenerate_case"].get<int>());
    std::printf("\n  closed-form checker = %s%s\n", v["checker"].get<bool>() ? "pass" : "fail",
                v["condition_mismatch"].get<bool>() ? "  [CONDITION MISMATCH]" : "");
    if (!v["detail"].get<std::string>().empty())
      std::printf("  detail: %s\n", v["detail"].get<std::string>().c_str());
  }
  if (report.contains("ancilla")) {
    const json& anc = report["ancilla"];
    std::printf("ancilla |a|^2 = %.9g  phase = %.9g\n", anc["a_sq"].get<double>(),
                anc["phase"].get<double>());
    for (const auto& prop : anc["properties"])
      std::printf("  property %-28s residual=%.3g %s\n",
                  prop["name"].get<std::string>().c_str(), prop["residual"].get<double>(),
                  prop["holds"].get<bool>() ? "ok" : "--");
    std::printf("gap before = %.12g\ngap after  = %.12g\n", anc["gap_before"].get<double>(),
                anc["gap_after"].get<double>());
  }
  if (report.contains("oracle")) {
    const json& o = report["oracle"];
    std::printf("closed form:  P_s=%.9g  P_s^SEP=%.9g\n", o["p_s_closed"].get<double>(),
                o["p_s_sep_closed"].get<double>());
    std::printf("grid oracle:  P_s=%.9g (|d|=%.3g)  P_s^SEP=%.9g (|d|=%.3g)\n",
                o["p_s_grid"].get<double>(), o["p_s_delta"].get<double>(),
                o["p_s_sep_grid"].get<double>(), o["p_s_sep_delta"].get<double>());
    std::printf("monte carlo:  rate=%.6g (|d|=%.3g, bound=%.3g)  cross_errors=%lld\n",
                o["mc_rate"].get<double>(), o["mc_delta"].get<double>(),
                o["mc_bound"].get<double>(), o["cross_errors"].get<long long>());
    std::printf("%s\n", o["within_bounds"].get<bool>() ? "all deltas within bounds"
                                                       : "DELTA OUT OF BOUNDS");
  }
  std::printf("tolerances: gap=%.3g validation=%.3g condition=%.3g\n",
              report["tolerances"]["gap"].get<double>(),
              report["tolerances"]["validation"].get<double>(),
              report["tolerances"]["condition"].get<double>());
}

json verdict_block(const fusd::OptimalityVerdict& v) {
  return {{"locc_optimal", v.locc_optimal},
          {"case", fusd::to_string(v.case_tag)},
          {"degenerate_case", v.degenerate_case},
          {"p_s", v.p_s},
          {"p_s_sep", v.p_s_sep},
          {"gap", v.gap},
          {"checker", v.checker_result},
          {"condition_mismatch", v.condition_mismatch},
          {"detail", v.detail}};
}

int cmd_analyze(const Options& opt) {
  const auto file = fusd::load_instance_file(opt.path);
  json report{{"command", "analyze"},
              {"analysis", analysis_block(file.instance)},
              {"tolerances", tolerances_block(opt)}};
  emit(opt, report);
  return 0;
}

int cmd_check(const Options& opt) {
  const auto file = fusd::load_instance_file(opt.path);
  const auto verdict = fusd::check_locc_optimal(file.instance);
  json report{{"command", "check"},
              {"analysis", analysis_block(file.instance)},
              {"verdict", verdict_block(verdict)},
              {"tolerances", tolerances_block(opt)}};
  emit(opt, report);
  return verdict.gap <= opt.tolerance ? 0 : 1;
}

int cmd_ancilla(const Options& opt) {
  const auto file = fusd::load_instance_file(opt.path);
  const auto anc = fusd::AncillaSpec::from_weight_and_phase(opt.a_sq, opt.phase);
  const auto rep = fusd::verify_ancilla_rescue(file.instance, anc);
  json props = json::array();
  for (const auto& prop : rep.properties)
    props.push_back({{"name", prop.name}, {"residual", prop.residual}, {"holds", prop.holds}});
  json report{{"command", "ancilla"},
              {"analysis", analysis_block(file.instance)},
              {"ancilla",
               {{"a_sq", opt.a_sq},
                {"phase", opt.phase},
                {"maximally_entangled", rep.maximally_entangled},
                {"properties", props},
                {"gap_before", rep.before.gap},
                {"gap_after", rep.after.gap},
                {"verdict_after", verdict_block(rep.after)}}},
              {"tolerances", tolerances_block(opt)}};
  emit(opt, report);
  if (rep.rescue_guaranteed && rep.after.gap > opt.tolerance) return 1;
  return 0;
}

int cmd_oracle(const Options& opt) {
  const auto file = fusd::load_instance_file(opt.path);
  const auto& inst = file.instance;

  fusd::GridSearchConfig cfg;
  cfg.coarse_steps = opt.grid_steps;

  double s_abs = 0.0;
  if (inst.same_global_parity())
    s_abs = std::abs(fusd::inner_product(inst.psi.vector, inst.phi.vector));
  const double p_s_closed =
      inst.same_global_parity()
          ? fusd::optimal_success_unconstrained(inst.psi.prior, inst.phi.prior, s_abs)
          : 1.0;
  const double p_s_sep_closed = fusd::optimal_success_sep(inst).total;
  const double p_s_grid =
      inst.same_global_parity()
          ? fusd::brute_force_unconstrained(inst.psi.prior, inst.phi.prior, s_abs, cfg)
          : 1.0;
  const double p_s_sep_grid = fusd::brute_force_sep(inst, cfg);

  const auto povm = fusd::build_sep_povm(inst);
  const auto counts = fusd::monte_carlo(inst, povm, opt.trials, opt.seed);
  // 4-sigma binomial bound around the separable closed form.
  const double sigma = std::sqrt(std::max(p_s_sep_closed * (1.0 - p_s_sep_closed),
                                          1.0 / static_cast<double>(opt.trials)) /
                                 static_cast<double>(opt.trials));
  const double mc_bound = 4.0 * sigma;

  const double d_uncon = std::abs(p_s_grid - p_s_closed);
  const double d_sep = std::abs(p_s_sep_grid - p_s_sep_closed);
  const double d_mc = std::abs(counts.success_rate - p_s_sep_closed);
  const bool ok = d_uncon <= 1e-4 && d_sep <= 1e-4 && d_mc <= mc_bound &&
                  counts.cross_errors == 0;

  json report{{"command", "oracle"},
              {"oracle",
               {{"p_s_closed", p_s_closed},
                {"p_s_grid", p_s_grid},
                {"p_s_delta", d_uncon},
                {"p_s_sep_closed", p_s_sep_closed},
                {"p_s_sep_grid", p_s_sep_grid},
                {"p_s_sep_delta", d_sep},
                {"mc_rate", counts.success_rate},
                {"mc_delta", d_mc},
                {"mc_bound", mc_bound},
                {"trials", counts.trials},
                {"seed", opt.seed},
                {"cross_errors", counts.cross_errors},
                {"within_bounds", ok}}},
              {"tolerances", tolerances_block(opt)}};
  emit(opt, report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unambiguous discrimination of bipartite Fermionic states"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("path", opt.path, "instance file")->required();
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--tolerance", opt.tolerance, "optimality gap tolerance");
  };

  auto* analyze = app.add_subcommand("analyze", "sector and strategy summary");
  add_common(analyze);
  auto* check = app.add_subcommand("check", "LOCC-optimality verdict");
  add_common(check);
  auto* ancilla = app.add_subcommand("ancilla", "two-mode ancilla rescue");
  add_common(ancilla);
  ancilla->add_option("--a-sq", opt.a_sq, "|a|^2 of the ancilla")->required();
  ancilla->add_option("--phase", opt.phase, "relative phase of the ancilla");
  auto* oracle = app.add_subcommand("oracle", "brute-force and Monte Carlo cross-check");
  add_common(oracle);
  oracle->add_option("--trials", opt.trials, "Monte Carlo trials");
  oracle->add_option("--seed", opt.seed, "Monte Carlo seed");
  oracle->add_option("--grid-steps", opt.grid_steps, "coarse grid steps per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt);
    if (check->parsed()) return cmd_check(opt);
    if (ancilla->parsed()) return cmd_ancilla(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const fusd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fusd::DomainError& e) {
    std::cerr << "domain violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
