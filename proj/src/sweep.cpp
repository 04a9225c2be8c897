#include "unruh/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace unruh::sweep {

using states::FamilyKind;

Method method_from_string(const std::string& s) {
  if (s == "analytic") return Method::Analytic;
  if (s == "numeric") return Method::Numeric;
  if (s == "both") return Method::Both;
  throw std::invalid_argument("method must be analytic|numeric|both");
}

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::JsonLines;
  throw std::invalid_argument("format must be csv|jsonl");
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::vector<double> make_grid(const GridSpec& g) {
  if (g.count < 2) throw std::invalid_argument("grid count must be >= 2");
  if (!(g.start < g.stop)) throw std::invalid_argument("grid start must be < stop");
  if (g.log_scale && !(g.start > 0.0))
    throw std::invalid_argument("log grid requires a positive start");
  if (!(g.start >= 0.0)) throw std::invalid_argument("grid values must be >= 0");
  std::vector<double> v(g.count);
  if (g.log_scale) {
    const double l0 = std::log(g.start), l1 = std::log(g.stop);
    for (int i = 0; i < g.count; ++i)
      v[i] = std::exp(l0 + (l1 - l0) * i / (g.count - 1));
  } else {
    for (int i = 0; i < g.count; ++i)
      v[i] = g.start + (g.stop - g.start) * i / (g.count - 1);
  }
  return v;
}

std::optional<analytic::SeriesResult> analytic_point(FamilyKind kind, double omega,
                                                     double Omega, double a1, double a2,
                                                     const analytic::SeriesConfig& series) {
  using analytic::BellKind;
  using analytic::XKind;
  switch (kind) {
    case FamilyKind::PsiFF: {
      analytic::SeriesResult r;
      r.leading = r.total = analytic::neg_ff(BellKind::Psi, omega, Omega, a1, a2);
      return r;
    }
    case FamilyKind::PhiFF: {
      analytic::SeriesResult r;
      r.leading = r.total = analytic::neg_ff(BellKind::Phi, omega, Omega, a1, a2);
      return r;
    }
    case FamilyKind::PsiBB:
      return analytic::neg_bb(BellKind::Psi, omega, Omega, a1, a2, series);
    case FamilyKind::PhiBB:
      return analytic::neg_bb(BellKind::Phi, omega, Omega, a1, a2, series);
    case FamilyKind::X1:
      return analytic::neg_x(XKind::X1, omega, Omega, a1, a2, series);
    case FamilyKind::X2:
      return analytic::neg_x(XKind::X2, omega, Omega, a1, a2, series);
    case FamilyKind::PsiBF:
      return analytic::neg_bf(BellKind::Psi, omega, Omega, a1, a2, series);
    case FamilyKind::PhiBF:
      return analytic::neg_bf(BellKind::Phi, omega, Omega, a1, a2, series);
    case FamilyKind::PsiAlphaBB:
    case FamilyKind::PhiAlphaBB:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

states::StateFamily make_family(FamilyKind kind, states::BellSign sign, double alpha,
                                double omega, double Omega, double a1, double a2) {
  states::StateFamily f;
  f.kind = kind;
  f.sign = sign;
  f.alpha = alpha;
  switch (kind) {
    case FamilyKind::PsiFF:
    case FamilyKind::PhiFF:
      f.mode1.statistics = Statistics::Fermion;
      f.mode2.statistics = Statistics::Fermion;
      break;
    case FamilyKind::PsiBB:
    case FamilyKind::PhiBB:
    case FamilyKind::PsiAlphaBB:
    case FamilyKind::PhiAlphaBB:
      f.mode1.statistics = Statistics::Boson;
      f.mode2.statistics = Statistics::Boson;
      break;
    case FamilyKind::X2:
      f.mode1.statistics = Statistics::ChargedBoson;
      f.mode2.statistics = Statistics::Fermion;
      break;
    case FamilyKind::X1:
    case FamilyKind::PsiBF:
    case FamilyKind::PhiBF:
      f.mode1.statistics = Statistics::Boson;
      f.mode2.statistics = Statistics::Fermion;
      break;
  }
  f.mode1.frequency = omega;
  f.mode1.acceleration = a1;
  f.mode2.frequency = Omega;
  f.mode2.acceleration = a2;
  return f;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  result.config = config;
  const std::vector<double> grid = make_grid(config.grid);
  std::vector<std::pair<double, double>> points;
  if (config.equal_accel) {
    for (double a : grid) points.emplace_back(a, a);
  } else {
    for (double a1 : grid)
      for (double a2 : grid) points.emplace_back(a1, a2);
  }
  result.rows.reserve(points.size());
  for (auto [a1, a2] : points) {
    SweepRow row;
    row.a_omega = a1;
    row.a_Omega = a2;
    if (config.method != Method::Numeric) {
      auto ana = analytic_point(config.family, config.omega, config.Omega, a1, a2,
                                config.series);
      if (ana) {
        row.analytic_leading = ana->leading;
        row.analytic_total = ana->total;
        if (!ana->converged) {
          row.converged = false;
          result.all_converged = false;
        }
      }
    }
    if (config.method != Method::Analytic) {
      const auto family = make_family(config.family, config.sign, config.alpha, config.omega,
                                      config.Omega, a1, a2);
      auto pe = ent::evaluate(family, config.truncation, /*want_correlations=*/true);
      row.numeric = pe.negativity.total;
      row.entropy_nats = pe.correlations.entropy_nats;
      row.mutual_info_bits = pe.correlations.mutual_information_bits;
      row.nmax = pe.nmax_used;
      row.norm_deficit = pe.norm_deficit;
      if (!pe.converged) {
        row.converged = false;
        result.all_converged = false;
      }
    }
    if (row.analytic_total && row.numeric)
      row.abs_diff = std::abs(*row.analytic_total - *row.numeric);
    result.rows.push_back(row);
  }
  return result;
}

namespace {

std::string opt_str(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Analytic: return "analytic";
    case Method::Numeric: return "numeric";
    case Method::Both: return "both";
  }
  return "?";
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& os) {
  os << "family,sign,alpha,omega,Omega,method,a_omega,a_Omega,N_analytic_leading,"
        "N_analytic_total,N_numeric,abs_diff,entropy_nats,mutual_info_bits,nmax,"
        "norm_deficit,converged\n";
  const auto& c = result.config;
  const std::string prefix = states::to_string(c.family) + "," +
                             (c.sign == states::BellSign::Plus ? "+" : "-") + "," +
                             format_double(c.alpha) + "," + format_double(c.omega) + "," +
                             format_double(c.Omega) + "," + method_name(c.method) + ",";
  for (const SweepRow& r : result.rows) {
    os << prefix << format_double(r.a_omega) << ',' << format_double(r.a_Omega) << ','
       << opt_str(r.analytic_leading) << ',' << opt_str(r.analytic_total) << ','
       << opt_str(r.numeric) << ',' << opt_str(r.abs_diff) << ',' << opt_str(r.entropy_nats)
       << ',' << opt_str(r.mutual_info_bits) << ',' << r.nmax << ','
       << format_double(r.norm_deficit) << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

void write_jsonl(const SweepResult& result, std::ostream& os) {
  const auto& c = result.config;
  auto field = [](const char* k, const std::string& v, bool quote = false) {
    return std::string("\"") + k + "\":" + (quote ? "\"" + v + "\"" : v);
  };
  for (const SweepRow& r : result.rows) {
    os << '{' << field("family", states::to_string(c.family), true) << ','
       << field("sign", c.sign == states::BellSign::Plus ? "+" : "-", true) << ','
       << field("alpha", format_double(c.alpha)) << ','
       << field("omega", format_double(c.omega)) << ','
       << field("Omega", format_double(c.Omega)) << ','
       << field("method", method_name(c.method), true) << ','
       << field("a_omega", format_double(r.a_omega)) << ','
       << field("a_Omega", format_double(r.a_Omega));
    if (r.analytic_leading) os << ',' << field("N_analytic_leading", opt_str(r.analytic_leading));
    if (r.analytic_total) os << ',' << field("N_analytic_total", opt_str(r.analytic_total));
    if (r.numeric) os << ',' << field("N_numeric", opt_str(r.numeric));
    if (r.abs_diff) os << ',' << field("abs_diff", opt_str(r.abs_diff));
    if (r.entropy_nats) os << ',' << field("entropy_nats", opt_str(r.entropy_nats));
    if (r.mutual_info_bits)
      os << ',' << field("mutual_info_bits", opt_str(r.mutual_info_bits));
    os << ',' << field("nmax", std::to_string(r.nmax)) << ','
       << field("norm_deficit", format_double(r.norm_deficit)) << ','
       << field("converged", r.converged ? "true" : "false") << "}\n";
  }
}

SectorsResult run_sectors(const SectorsConfig& config) {
  SectorsResult result;
  result.config = config;
  const bool ff = config.family == FamilyKind::PsiFF || config.family == FamilyKind::PhiFF;
  result.grid_is_rf = ff;
  GridSpec g = config.grid;
  if (ff) {
    g.start = std::max(0.0, g.start);
    g.stop = std::min(g.stop, std::numbers::pi / 4);
    if (!(g.start < g.stop)) {
      g.start = 0.0;
      g.stop = std::numbers::pi / 4;
    }
  }
  result.grid = make_grid(g);

  std::vector<std::vector<ent::Sector>> per_row;
  per_row.reserve(result.grid.size());
  for (double x : result.grid) {
    states::StateFamily family;
    if (ff) {
      // direct r_f input: choose the acceleration reproducing it at omega
      family = make_family(config.family, config.sign, config.alpha, config.omega,
                           config.Omega, 0.0, 0.0);
      const double pi = std::numbers::pi;
      auto accel_for = [&](double rf, double freq) {
        if (rf <= 0.0) return 0.0;
        return -pi * freq / std::log(std::tan(std::min(rf, pi / 4 - 1e-15)));
      };
      family.mode1.acceleration = accel_for(x, config.omega);
      family.mode2.acceleration = accel_for(x, config.Omega);
    } else {
      family = make_family(config.family, config.sign, config.alpha, config.omega,
                           config.Omega, x, x);
    }
    auto pe = ent::evaluate(family, config.truncation);
    result.totals.push_back(pe.negativity.total);
    per_row.push_back(pe.negativity.sectors);
  }
  // stable union of sector labels: order of first appearance, scanning rows
  for (const auto& sectors : per_row)
    for (const auto& s : sectors)
      if (std::find(result.sector_labels.begin(), result.sector_labels.end(), s.label) ==
          result.sector_labels.end())
        result.sector_labels.push_back(s.label);
  for (const auto& sectors : per_row) {
    std::vector<double> row(result.sector_labels.size(), 0.0);
    for (const auto& s : sectors) {
      const auto it =
          std::find(result.sector_labels.begin(), result.sector_labels.end(), s.label);
      row[it - result.sector_labels.begin()] = s.negativity;
    }
    result.values.push_back(std::move(row));
  }
  return result;
}

void write_csv(const SectorsResult& result, std::ostream& os) {
  os << (result.grid_is_rf ? "r_f" : "a") << ",total";
  for (const auto& label : result.sector_labels) os << ",\"" << label << "\"";
  os << '\n';
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    os << format_double(result.grid[i]) << ',' << format_double(result.totals[i]);
    for (double v : result.values[i]) os << ',' << format_double(v);
    os << '\n';
  }
}

std::vector<FamilyKind> default_compare_families() {
  return {FamilyKind::PsiFF, FamilyKind::PhiFF, FamilyKind::PsiBB, FamilyKind::PhiBB,
          FamilyKind::X1,    FamilyKind::X2,    FamilyKind::PsiBF, FamilyKind::PhiBF};
}

CompareReport run_compare(const CompareConfig& config) {
  CompareReport report;
  std::vector<FamilyKind> families =
      config.families.empty() ? default_compare_families() : config.families;

  // equal-acceleration points spanning [0, 50] plus asymmetric pairs
  std::vector<std::pair<double, double>> pts;
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 7.0, 9.0, 12.0, 16.0, 20.0, 25.0, 30.0,
                   35.0, 40.0, 45.0, 50.0})
    pts.emplace_back(a, a);
  pts.insert(pts.end(), {{0.0, 5.0},
                         {5.0, 0.0},
                         {1.0, 10.0},
                         {10.0, 1.0},
                         {3.0, 7.0},
                         {7.0, 3.0},
                         {2.0, 30.0},
                         {30.0, 2.0},
                         {15.0, 50.0},
                         {50.0, 15.0}});

  double worst_excess = -1.0;
  for (FamilyKind family : families) {
    for (auto [a1, a2] : pts) {
      ComparePoint p;
      p.family = family;
      p.a_omega = a1 * config.omega;
      p.a_Omega = a2 * config.Omega;
      auto ana = analytic_point(family, config.omega, config.Omega, p.a_omega, p.a_Omega,
                                config.series);
      if (!ana) continue;
      p.analytic_total = ana->total;
      auto pe = ent::evaluate(
          make_family(family, states::BellSign::Plus, std::numbers::pi / 4, config.omega,
                      config.Omega, p.a_omega, p.a_Omega),
          config.truncation);
      p.numeric = pe.negativity.total;
      p.truncation_flagged = !pe.converged || !ana->converged;
      p.abs_diff = std::abs(p.analytic_total - p.numeric);
      p.allowed = std::max(config.tol, config.tol * p.numeric);
      p.pass = p.abs_diff <= p.allowed && !p.truncation_flagged;
      report.points.push_back(p);
      report.all_pass = report.all_pass && p.pass;
      report.any_truncation_flagged = report.any_truncation_flagged || p.truncation_flagged;
      const double excess = p.abs_diff - p.allowed;
      if (excess > worst_excess) {
        worst_excess = excess;
        report.worst = p;
      }
    }
  }
  return report;
}

void write_json(const CompareReport& report, std::ostream& os) {
  os << "{\"all_pass\":" << (report.all_pass ? "true" : "false")
     << ",\"any_truncation_flagged\":" << (report.any_truncation_flagged ? "true" : "false")
     << ",\"points\":[";
  bool first = true;
  for (const ComparePoint& p : report.points) {
    if (!first) os << ',';
    first = false;
    os << "{\"family\":\"" << states::to_string(p.family) << "\",\"a_omega\":"
       << format_double(p.a_omega) << ",\"a_Omega\":" << format_double(p.a_Omega)
       << ",\"analytic_total\":" << format_double(p.analytic_total)
       << ",\"numeric\":" << format_double(p.numeric)
       << ",\"abs_diff\":" << format_double(p.abs_diff)
       << ",\"allowed\":" << format_double(p.allowed)
       << ",\"pass\":" << (p.pass ? "true" : "false")
       << ",\"truncation_flagged\":" << (p.truncation_flagged ? "true" : "false") << '}';
  }
  os << "],\"worst\":{\"family\":\"" << states::to_string(report.worst.family)
     << "\",\"a_omega\":" << format_double(report.worst.a_omega)
     << ",\"a_Omega\":" << format_double(report.worst.a_Omega)
     << ",\"abs_diff\":" << format_double(report.worst.abs_diff)
     << ",\"allowed\":" << format_double(report.worst.allowed) << "}}\n";
}

}  // namespace unruh::sweep
