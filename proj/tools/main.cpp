#include "unruh/analytic.hpp"
#include "unruh/blackhole.hpp"
#include "unruh/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompareFailure = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitConvergence = 3;

struct CommonOpts {
  std::string family = "Phi_FF";
  std::string sign = "+";
  double alpha = std::numbers::pi / 4;
  double omega = 1.0;
  double Omega = 1.0;
  int nmax = 0;  // 0 = adaptive
  double term_tol = 1e-14;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_family = true) {
  if (with_family)
    cmd->add_option("--family", o.family,
                    "State family: Psi_FF Phi_FF Psi_BB Phi_BB X1 X2 Psi_BF Phi_BF "
                    "Psi_alpha_BB Phi_alpha_BB")
        ->envname("UNRUH_BELL_FAMILY");
  cmd->add_option("--sign", o.sign, "Bell sign: + or -")->envname("UNRUH_BELL_SIGN");
  cmd->add_option("--alpha", o.alpha, "Superposition angle for the alpha families")
      ->envname("UNRUH_BELL_ALPHA");
  cmd->add_option("--omega", o.omega, "Frequency of mode 1 (units 1/L)")
      ->envname("UNRUH_BELL_OMEGA");
  cmd->add_option("--Omega", o.Omega, "Frequency of mode 2 (units 1/L)")
      ->envname("UNRUH_BELL_CAP_OMEGA");
  cmd->add_option("--nmax", o.nmax,
                  "Fixed bosonic cutoff; 0 selects the adaptive ladder (default)")
      ->envname("UNRUH_BELL_NMAX");
  cmd->add_option("--term-tol", o.term_tol, "Series term tolerance")
      ->envname("UNRUH_BELL_TERM_TOL");
  cmd->add_option("--format", o.format, "Output format: csv or jsonl")
      ->envname("UNRUH_BELL_FORMAT");
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)")
      ->envname("UNRUH_BELL_OUT");
}

unruh::states::BellSign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return unruh::states::BellSign::Plus;
  if (s == "-" || s == "minus") return unruh::states::BellSign::Minus;
  throw std::invalid_argument("sign must be + or -");
}

unruh::ent::TruncationConfig truncation_of(const CommonOpts& o) {
  unruh::ent::TruncationConfig t;
  if (o.nmax > 0) t.fixed_nmax = o.nmax;
  return t;
}

int write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitInvalidConfig;
  }
  os << payload;
  return kExitOk;
}

int cmd_sweep(const CommonOpts& common, const unruh::sweep::GridSpec& grid, bool equal_accel,
              const std::string& method) {
  unruh::sweep::SweepConfig cfg;
  cfg.family = unruh::states::family_from_string(common.family);
  cfg.sign = parse_sign(common.sign);
  cfg.alpha = common.alpha;
  cfg.omega = common.omega;
  cfg.Omega = common.Omega;
  cfg.grid = grid;
  cfg.equal_accel = equal_accel;
  cfg.method = unruh::sweep::method_from_string(method);
  cfg.truncation = truncation_of(common);
  cfg.series.term_tol = common.term_tol;

  const auto result = unruh::sweep::run_sweep(cfg);
  std::ostringstream os;
  if (unruh::sweep::format_from_string(common.format) == unruh::sweep::Format::Csv)
    unruh::sweep::write_csv(result, os);
  else
    unruh::sweep::write_jsonl(result, os);
  const int rc = write_out(common.out, os.str());
  if (rc != kExitOk) return rc;
  if (!result.all_converged) {
    std::cerr << "warning: some rows did not converge (flagged in output)\n";
    return kExitConvergence;
  }
  return kExitOk;
}

int cmd_sectors(const CommonOpts& common, const unruh::sweep::GridSpec& grid) {
  unruh::sweep::SectorsConfig cfg;
  cfg.family = unruh::states::family_from_string(common.family);
  cfg.sign = parse_sign(common.sign);
  cfg.alpha = common.alpha;
  cfg.omega = common.omega;
  cfg.Omega = common.Omega;
  cfg.grid = grid;
  cfg.truncation = truncation_of(common);
  const auto result = unruh::sweep::run_sectors(cfg);
  std::ostringstream os;
  unruh::sweep::write_csv(result, os);
  return write_out(common.out, os.str());
}

int cmd_limits() {
  std::printf("%-36s %s\n", "quantity", "value");
  for (const auto& [name, value] : unruh::analytic::asymptotic_limit_rows())
    std::printf("%-36s %.10f\n", name.c_str(), value);
  return kExitOk;
}

int cmd_blackhole(const CommonOpts& common, double rs, const unruh::sweep::GridSpec& dgrid,
                  const std::string& method, double ratio2) {
  unruh::blackhole::HoverSpec spec;
  spec.schwarzschild_radius = rs;
  spec.hover_radius = 2.0 * rs;
  spec.omega = common.omega;
  spec.Omega = common.Omega;

  unruh::states::StateFamily family;
  family.kind = unruh::states::family_from_string(common.family);
  family.sign = parse_sign(common.sign);
  family.alpha = common.alpha;
  {
    // statistics per family kind; frequencies/accelerations are filled inside
    unruh::sweep::SweepConfig probe;
    probe.family = family.kind;
    family.mode1.statistics =
        (family.kind == unruh::states::FamilyKind::PsiFF ||
         family.kind == unruh::states::FamilyKind::PhiFF)
            ? unruh::Statistics::Fermion
            : (family.kind == unruh::states::FamilyKind::X2 ? unruh::Statistics::ChargedBoson
                                                            : unruh::Statistics::Boson);
    family.mode2.statistics = (family.kind == unruh::states::FamilyKind::PsiBB ||
                               family.kind == unruh::states::FamilyKind::PhiBB ||
                               family.kind == unruh::states::FamilyKind::PsiAlphaBB ||
                               family.kind == unruh::states::FamilyKind::PhiAlphaBB)
                                  ? unruh::Statistics::Boson
                                  : unruh::Statistics::Fermion;
  }

  const auto distances = unruh::sweep::make_grid(dgrid);
  const auto method_kind = unruh::sweep::method_from_string(method);
  unruh::ent::TruncationConfig trunc = truncation_of(common);
  unruh::analytic::SeriesConfig series;
  series.term_tol = common.term_tol;
  const auto table = unruh::blackhole::negativity_vs_distance(
      family, spec, distances,
      method_kind == unruh::sweep::Method::Numeric ? unruh::blackhole::Method::Numeric
                                                   : unruh::blackhole::Method::Analytic,
      ratio2, series, trunc);

  std::ostringstream os;
  if (table.d_star_over_rs)
    os << "# d_star_over_rs=" << unruh::sweep::format_double(*table.d_star_over_rs) << "\n";
  os << "d_over_rs,a_rs,negativity\n";
  for (const auto& row : table.rows)
    os << unruh::sweep::format_double(row.d_over_rs) << ','
       << unruh::sweep::format_double(row.a_rs) << ','
       << unruh::sweep::format_double(row.negativity) << '\n';
  return write_out(common.out, os.str());
}

int cmd_compare(const CommonOpts& common, const std::string& families, double tol) {
  unruh::sweep::CompareConfig cfg;
  cfg.omega = common.omega;
  cfg.Omega = common.Omega;
  cfg.tol = tol;
  cfg.truncation = truncation_of(common);
  cfg.series.term_tol = common.term_tol;
  if (!families.empty() && families != "all") {
    std::stringstream ss(families);
    std::string name;
    while (std::getline(ss, name, ','))
      cfg.families.push_back(unruh::states::family_from_string(name));
  }
  const auto report = unruh::sweep::run_compare(cfg);
  std::ostringstream os;
  unruh::sweep::write_json(report, os);
  const int rc = write_out(common.out, os.str());
  if (rc != kExitOk) return rc;
  if (!report.all_pass) {
    std::cerr << "compare: FAIL worst offender family="
              << unruh::states::to_string(report.worst.family)
              << " a_omega=" << report.worst.a_omega << " a_Omega=" << report.worst.a_Omega
              << " |analytic-numeric|=" << report.worst.abs_diff
              << " allowed=" << report.worst.allowed
              << (report.any_truncation_flagged ? " (truncation flagged)" : "") << "\n";
    return kExitCompareFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "unruh-bell: entanglement of Bell-type Unruh-mode states seen by two accelerated "
      "observers (closed forms + brute-force matrix path)"};
  app.set_config("--config", "", "Key=value config file; flags override file values");
  app.require_subcommand(1);

  CommonOpts sweep_opts, sectors_opts, bh_opts, compare_opts;

  auto* sweep = app.add_subcommand("sweep", "Negativity/entropy sweep over accelerations");
  unruh::sweep::GridSpec sweep_grid;
  bool equal_accel = true;
  std::string sweep_method = "both";
  add_common(sweep, sweep_opts);
  sweep->add_option("--a-min", sweep_grid.start, "Grid start")->envname("UNRUH_BELL_A_MIN");
  sweep->add_option("--a-max", sweep_grid.stop, "Grid stop")->envname("UNRUH_BELL_A_MAX");
  sweep->add_option("--points", sweep_grid.count, "Grid point count")
      ->envname("UNRUH_BELL_POINTS");
  sweep->add_flag("--log-grid", sweep_grid.log_scale, "Logarithmic grid")
      ->envname("UNRUH_BELL_LOG_GRID");
  sweep->add_option("--equal-accel", equal_accel,
                    "1: both modes share each grid value (default); 0: cartesian grid");
  sweep->add_option("--method", sweep_method, "analytic | numeric | both")
      ->envname("UNRUH_BELL_METHOD");

  auto* sectors =
      app.add_subcommand("sectors", "Per-sector negativity breakdown along a sweep");
  unruh::sweep::GridSpec sectors_grid;
  sectors_grid.count = 25;
  add_common(sectors, sectors_opts);
  sectors->add_option("--a-min", sectors_grid.start,
                      "Grid start (r_f grid on [0, pi/4] for FF families)");
  sectors->add_option("--a-max", sectors_grid.stop, "Grid stop");
  sectors->add_option("--points", sectors_grid.count, "Grid point count");
  sectors->add_flag("--log-grid", sectors_grid.log_scale, "Logarithmic grid");

  auto* limits = app.add_subcommand("limits", "Print the infinite-acceleration constants");

  auto* bh = app.add_subcommand("blackhole", "Negativity vs hover distance above a horizon");
  unruh::sweep::GridSpec bh_grid{1e-4, 1.0, 61, true};
  double rs = 1.0, ratio2 = 1.0;
  std::string bh_method = "analytic";
  add_common(bh, bh_opts);
  bh->add_option("--rs", rs, "Schwarzschild radius R_S (length unit)")
      ->envname("UNRUH_BELL_RS");
  bh->add_option("--d-min", bh_grid.start, "Smallest d/R_S")->envname("UNRUH_BELL_D_MIN");
  bh->add_option("--d-max", bh_grid.stop, "Largest d/R_S")->envname("UNRUH_BELL_D_MAX");
  bh->add_option("--points", bh_grid.count, "Distance point count");
  bh->add_flag("--log-grid,!--linear-grid", bh_grid.log_scale,
               "Logarithmic distance grid (default)");
  bh->add_option("--method", bh_method, "analytic | numeric");
  bh->add_option("--ratio2", ratio2, "Second observer hovers at d2 = ratio2 * d");

  auto* compare = app.add_subcommand(
      "compare", "Closed forms vs brute-force matrix path on the reference grid");
  std::string families = "all";
  double tol = 1e-6;
  add_common(compare, compare_opts, /*with_family=*/false);
  compare->add_option("--families", families, "Comma-separated family list or 'all'");
  compare->add_option("--tol", tol, "Agreement tolerance (scaled by value when > 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_grid, equal_accel, sweep_method);
    if (sectors->parsed()) return cmd_sectors(sectors_opts, sectors_grid);
    if (limits->parsed()) return cmd_limits();
    if (bh->parsed()) return cmd_blackhole(bh_opts, rs, bh_grid, bh_method, ratio2);
    if (compare->parsed()) return cmd_compare(compare_opts, families, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
  return kExitInvalidConfig;
}
