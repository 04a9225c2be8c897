#pragma once

#include "unruh/analytic.hpp"
#include "unruh/blackhole.hpp"
#include "unruh/entanglement.hpp"
#include "unruh/states.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unruh::sweep {

enum class Method { Analytic, Numeric, Both };
enum class Format { Csv, JsonLines };

Method method_from_string(const std::string& s);
Format format_from_string(const std::string& s);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

struct GridSpec {
  double start = 0.0;
  double stop = 50.0;
  int count = 201;
  bool log_scale = false;
};

/// The grid values; log grids reject a non-positive start.
std::vector<double> make_grid(const GridSpec& g);

struct SweepConfig {
  states::FamilyKind family = states::FamilyKind::PhiFF;
  states::BellSign sign = states::BellSign::Plus;
  double alpha = 0.78539816339744830961;
  double omega = 1.0;
  double Omega = 1.0;
  GridSpec grid;
  bool equal_accel = true;  // false: cartesian product of the grid with itself
  Method method = Method::Both;
  ent::TruncationConfig truncation;
  analytic::SeriesConfig series;
};

struct SweepRow {
  double a_omega = 0;
  double a_Omega = 0;
  std::optional<double> analytic_leading;
  std::optional<double> analytic_total;
  std::optional<double> numeric;
  std::optional<double> abs_diff;
  std::optional<double> entropy_nats;
  std::optional<double> mutual_info_bits;
  int nmax = 0;
  double norm_deficit = 0;
  bool converged = true;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  bool all_converged = true;
};

/// Analytic leading/total negativity of a Bell/X family point. Alpha families
/// have no closed form here and return nullopt.
std::optional<analytic::SeriesResult> analytic_point(states::FamilyKind kind, double omega,
                                                     double Omega, double a1, double a2,
                                                     const analytic::SeriesConfig& series);

SweepResult run_sweep(const SweepConfig& config);

void write_csv(const SweepResult& result, std::ostream& os);
void write_jsonl(const SweepResult& result, std::ostream& os);

struct SectorsConfig {
  states::FamilyKind family = states::FamilyKind::PhiFF;
  states::BellSign sign = states::BellSign::Plus;
  double alpha = 0.78539816339744830961;
  double omega = 1.0;
  double Omega = 1.0;
  GridSpec grid;  // fermion-fermion families sweep r_f on [0, pi/4] instead
  ent::TruncationConfig truncation;
};

struct SectorsResult {
  SectorsConfig config;
  bool grid_is_rf = false;
  std::vector<double> grid;                 // r_f or acceleration per row
  std::vector<std::string> sector_labels;   // union across rows, stable order
  std::vector<std::vector<double>> values;  // per row, aligned with labels
  std::vector<double> totals;
};

SectorsResult run_sectors(const SectorsConfig& config);
void write_csv(const SectorsResult& result, std::ostream& os);

struct ComparePoint {
  states::FamilyKind family;
  double a_omega = 0, a_Omega = 0;
  double analytic_total = 0;
  double numeric = 0;
  double abs_diff = 0;
  double allowed = 0;
  bool pass = true;
  bool truncation_flagged = false;
};

struct CompareConfig {
  std::vector<states::FamilyKind> families;  // default: the 8 Bell/X families
  double omega = 1.0;
  double Omega = 1.0;
  double tol = 1e-6;
  ent::TruncationConfig truncation;
  analytic::SeriesConfig series;
};

struct CompareReport {
  std::vector<ComparePoint> points;
  bool all_pass = true;
  bool any_truncation_flagged = false;
  ComparePoint worst;
};

/// The oracle-equivalence grid: per family, equal-acceleration points spanning
/// [0, 50] omega plus asymmetric pairs. Pass iff every point agrees to
/// max(tol, tol * value).
CompareReport run_compare(const CompareConfig& config);
void write_json(const CompareReport& report, std::ostream& os);

std::vector<states::FamilyKind> default_compare_families();

}  // namespace unruh::sweep
