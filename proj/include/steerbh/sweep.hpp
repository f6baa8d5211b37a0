#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "steerbh/closed_forms.hpp"
#include "steerbh/hawking.hpp"
#include "steerbh/steering.hpp"

// Hawking-temperature sweeps, transition detection by bisection over the
// numeric pipeline, and numeric-vs-closed-form verification reports.

namespace steerbh {

struct SweepConfig {
  double s = 1.0;
  double omega = 1.0;
  double t_min = 0.05;
  double t_max = 3.0;
  int n_points = 60;
  double tolerance = 1e-9;

  void validate() const {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::invalid_argument("SweepConfig: s must be a nonnegative real");
    if (!(omega > 0.0)) throw std::invalid_argument("SweepConfig: omega must be positive");
    if (!(t_min > 0.0) || !(t_max > t_min))
      throw std::invalid_argument("SweepConfig: need 0 < t_min < t_max");
    if (n_points < 2) throw std::invalid_argument("SweepConfig: need at least 2 points");
    if (!(tolerance > 0.0)) throw std::invalid_argument("SweepConfig: tolerance must be positive");
  }
};

struct SweepRow {
  double temperature;
  double squeezing;  // channel squeezing derived from (temperature, omega)
  SteeringReport report;
};

/// Full steering report at a single parameter point. T = 0 is the exact r = 0
/// boundary case.
inline SweepRow evaluate_point(double s, double omega, double temperature) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("evaluate_point: s must be a nonnegative real");
  const double r = squeezing_from_temperature(temperature, omega);
  const CovarianceMatrix sigma = hawking_extend(initial_tmsv(s), r);
  return {temperature, r, ckw_report(sigma, PartyMap::three_mode())};
}

/// One row per grid point on the linear temperature grid, ascending in T.
/// Deterministic: identical configs produce identical rows.
inline std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(config.n_points));
  const double step = (config.t_max - config.t_min) / (config.n_points - 1);
  for (int i = 0; i < config.n_points; ++i)
    rows.push_back(evaluate_point(config.s, config.omega, config.t_min + step * i));
  return rows;
}

enum class Transition { a_to_b_death, bbar_to_b_birth };

/// Temperature of a steering sudden death/birth, located by bisection on the
/// numeric steering value (not the closed form, so transition detection also
/// validates the pipeline). The bracket starts at [1e-3, 10] and is expanded
/// automatically; absolute tolerance 1e-10 in T.
inline double find_transition(double s, double omega, Transition kind) {
  if (!(s > 0.0)) throw std::invalid_argument("find_transition: s must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("find_transition: omega must be positive");

  const SteeringDirection direction = (kind == Transition::a_to_b_death)
                                          ? SteeringDirection{{Party::A}, {Party::B}}
                                          : SteeringDirection{{Party::Bbar}, {Party::B}};
  // Whether the steering is positive on the low-temperature side.
  const bool low_positive = (kind == Transition::a_to_b_death);
  const PartyMap parties = PartyMap::three_mode();
  const auto positive = [&](double temperature) {
    const double r = squeezing_from_temperature(temperature, omega);
    return gaussian_steering(hawking_extend(initial_tmsv(s), r), parties, direction) > 0.0;
  };

  double lo = 1e-3;
  double hi = 10.0;
  for (int i = 0; i < 12 && positive(lo) != low_positive; ++i) lo *= 0.5;
  for (int i = 0; i < 7 && positive(hi) == low_positive; ++i) hi *= 2.0;
  if (positive(lo) != low_positive || positive(hi) == low_positive)
    throw bracket_error("find_transition: no sign change of the steering in the search bracket");

  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (positive(mid) == low_positive)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct OracleCheck {
  ClosedFormTag tag;
  double max_abs_deviation = 0.0;
};

/// Maximum |numeric - closed form| per printed closed-form direction over the
/// sweep grid, plus the largest collective-symmetry gap |G^{x->yz} - G^{yz->x}|.
struct OracleReport {
  std::array<OracleCheck, 5> checks{};
  double collective_symmetry_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline OracleReport verify_oracle(const SweepConfig& config) {
  config.validate();
  OracleReport report;
  report.tolerance = config.tolerance;
  report.checks = {OracleCheck{ClosedFormTag::ab_to_bbar}, OracleCheck{ClosedFormTag::a_to_bbar},
                   OracleCheck{ClosedFormTag::b_to_bbar}, OracleCheck{ClosedFormTag::a_to_bbbar},
                   OracleCheck{ClosedFormTag::a_to_b}};

  const auto numeric_value = [](const SteeringReport& rep, ClosedFormTag tag) {
    switch (tag) {
      case ClosedFormTag::ab_to_bbar: return rep.g_ab_to_bbar;
      case ClosedFormTag::a_to_bbar: return rep.g_a_to_bbar;
      case ClosedFormTag::b_to_bbar: return rep.g_b_to_bbar;
      case ClosedFormTag::a_to_bbbar: return rep.g_a_to_bbbar;
      case ClosedFormTag::a_to_b: return rep.g_a_to_b;
      default: throw std::invalid_argument("verify_oracle: unexpected tag");
    }
  };

  for (const SweepRow& row : run_sweep(config)) {
    for (OracleCheck& check : report.checks) {
      const double closed = closed_form_steering(check.tag, config.s, row.squeezing);
      const double dev = std::abs(numeric_value(row.report, check.tag) - closed);
      if (dev > check.max_abs_deviation) check.max_abs_deviation = dev;
    }
    const double gap =
        std::max({std::abs(row.report.g_a_to_bbbar - row.report.g_bbbar_to_a),
                  std::abs(row.report.g_b_to_abbar - row.report.g_abbar_to_b),
                  std::abs(row.report.g_bbar_to_ab - row.report.g_ab_to_bbar)});
    if (gap > report.collective_symmetry_gap) report.collective_symmetry_gap = gap;
  }

  report.pass = report.collective_symmetry_gap <= report.tolerance;
  for (const OracleCheck& check : report.checks)
    if (check.max_abs_deviation > report.tolerance) report.pass = false;
  return report;
}

struct TransitionReport {
  double s = 0.0;
  double omega = 0.0;
  double t_death_a_to_b = 0.0;
  double t_birth_bbar_to_b = 0.0;
  double difference = 0.0;
  double t_closed_form = 0.0;
  double t_asymmetry_argmax = 0.0;
};

/// Bisected death/birth temperatures, the closed-form T*, and the argmax of
/// the AB:Bbar monogamy asymmetry from a fine local sweep around T*.
inline TransitionReport transition_report(double s, double omega) {
  TransitionReport report;
  report.s = s;
  report.omega = omega;
  report.t_death_a_to_b = find_transition(s, omega, Transition::a_to_b_death);
  report.t_birth_bbar_to_b = find_transition(s, omega, Transition::bbar_to_b_birth);
  report.difference = report.t_death_a_to_b - report.t_birth_bbar_to_b;
  report.t_closed_form = transition_temperature(s, omega);

  const int n_points = 2001;
  const double lo = 0.5 * report.t_closed_form;
  const double step = report.t_closed_form / (n_points - 1);  // window [0.5 T*, 1.5 T*]
  double best_value = -1.0;
  for (int i = 0; i < n_points; ++i) {
    const double temperature = lo + step * i;
    const SweepRow row = evaluate_point(s, omega, temperature);
    if (row.report.dasym_ab_bbar > best_value) {
      best_value = row.report.dasym_ab_bbar;
      report.t_asymmetry_argmax = temperature;
    }
  }
  return report;
}

}  // namespace steerbh
