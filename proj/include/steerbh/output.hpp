#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "steerbh/sweep.hpp"

// CSV/JSON record formatting for the command-line front end. Column order is
// fixed, the CSV header is emitted exactly once and every number carries 12
// significant digits, so repeated runs are byte-identical.

namespace steerbh {

inline constexpr const char* kSchemaVersion = "steerbh-1";

inline std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

inline constexpr std::array<const char*, 23> kCsvColumns = {
    "T",           "r",            "G_A_to_B",      "G_B_to_A",     "G_A_to_Bbar",
    "G_Bbar_to_A", "G_B_to_Bbar",  "G_Bbar_to_B",   "G_AB_to_Bbar", "G_ABbar_to_B",
    "G_BBbar_to_A", "G_A_to_BBbar", "G_B_to_ABbar",  "G_Bbar_to_AB", "D21_AB_Bbar",
    "D21_ABbar_B", "D21_BBbar_A",  "D12_A_BBbar",   "D12_B_ABbar",  "D12_Bbar_AB",
    "Dasym_AB_Bbar", "Dasym_ABbar_B", "Dasym_BBbar_A"};

inline std::array<double, 23> row_values(const SweepRow& row) {
  const SteeringReport& rep = row.report;
  return {row.temperature, row.squeezing,
          rep.g_a_to_b,     rep.g_b_to_a,     rep.g_a_to_bbar, rep.g_bbar_to_a,
          rep.g_b_to_bbar,  rep.g_bbar_to_b,  rep.g_ab_to_bbar, rep.g_abbar_to_b,
          rep.g_bbbar_to_a, rep.g_a_to_bbbar, rep.g_b_to_abbar, rep.g_bbar_to_ab,
          rep.d21_ab_bbar,  rep.d21_abbar_b,  rep.d21_bbbar_a,  rep.d12_a_bbbar,
          rep.d12_b_abbar,  rep.d12_bbar_ab,  rep.dasym_ab_bbar, rep.dasym_abbar_b,
          rep.dasym_bbbar_a};
}

inline std::string csv_header() {
  std::string out;
  for (size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out += ',';
    out += kCsvColumns[i];
  }
  out += '\n';
  return out;
}

inline std::string csv_row(const SweepRow& row) {
  std::string out;
  const auto values = row_values(row);
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  out += '\n';
  return out;
}

inline std::string csv_document(const std::vector<SweepRow>& rows) {
  std::string out = csv_header();
  for (const SweepRow& row : rows) out += csv_row(row);
  return out;
}

namespace detail {

inline void json_field(std::string& out, const char* key, double value, bool last = false) {
  out += '"';
  out += key;
  out += "\":";
  out += format_number(value);
  if (!last) out += ',';
}

// The steering/deficits/asymmetry groups of one row, nested as in the schema.
inline std::string json_row_groups(const SweepRow& row) {
  const SteeringReport& r = row.report;
  std::string out = "\"steering\":{";
  json_field(out, "G_A_to_B", r.g_a_to_b);
  json_field(out, "G_B_to_A", r.g_b_to_a);
  json_field(out, "G_A_to_Bbar", r.g_a_to_bbar);
  json_field(out, "G_Bbar_to_A", r.g_bbar_to_a);
  json_field(out, "G_B_to_Bbar", r.g_b_to_bbar);
  json_field(out, "G_Bbar_to_B", r.g_bbar_to_b);
  json_field(out, "G_AB_to_Bbar", r.g_ab_to_bbar);
  json_field(out, "G_ABbar_to_B", r.g_abbar_to_b);
  json_field(out, "G_BBbar_to_A", r.g_bbbar_to_a);
  json_field(out, "G_A_to_BBbar", r.g_a_to_bbbar);
  json_field(out, "G_B_to_ABbar", r.g_b_to_abbar);
  json_field(out, "G_Bbar_to_AB", r.g_bbar_to_ab, true);
  out += "},\"deficits\":{";
  json_field(out, "D21_AB_Bbar", r.d21_ab_bbar);
  json_field(out, "D21_ABbar_B", r.d21_abbar_b);
  json_field(out, "D21_BBbar_A", r.d21_bbbar_a);
  json_field(out, "D12_A_BBbar", r.d12_a_bbbar);
  json_field(out, "D12_B_ABbar", r.d12_b_abbar);
  json_field(out, "D12_Bbar_AB", r.d12_bbar_ab, true);
  out += "},\"asymmetry\":{";
  json_field(out, "Dasym_AB_Bbar", r.dasym_ab_bbar);
  json_field(out, "Dasym_ABbar_B", r.dasym_abbar_b);
  json_field(out, "Dasym_BBbar_A", r.dasym_bbbar_a, true);
  out += '}';
  return out;
}

}  // namespace detail

inline std::string json_point(double s, double omega, const SweepRow& row) {
  std::string out = "{\"schema\":\"";
  out += kSchemaVersion;
  out += "\",\"params\":{";
  detail::json_field(out, "s", s);
  detail::json_field(out, "omega", omega);
  detail::json_field(out, "T", row.temperature);
  detail::json_field(out, "r", row.squeezing, true);
  out += "},";
  out += detail::json_row_groups(row);
  out += "}\n";
  return out;
}

inline std::string json_sweep(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  std::string out = "{\"schema\":\"";
  out += kSchemaVersion;
  out += "\",\"params\":{";
  detail::json_field(out, "s", config.s);
  detail::json_field(out, "omega", config.omega);
  detail::json_field(out, "tmin", config.t_min);
  detail::json_field(out, "tmax", config.t_max);
  detail::json_field(out, "points", config.n_points);
  detail::json_field(out, "tolerance", config.tolerance, true);
  out += "},\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += "\n{\"params\":{";
    detail::json_field(out, "T", rows[i].temperature);
    detail::json_field(out, "r", rows[i].squeezing, true);
    out += "},";
    out += detail::json_row_groups(rows[i]);
    out += '}';
  }
  out += "\n]}\n";
  return out;
}

inline std::string json_transitions(const TransitionReport& report) {
  std::string out = "{\"schema\":\"";
  out += kSchemaVersion;
  out += "\",\"params\":{";
  detail::json_field(out, "s", report.s);
  detail::json_field(out, "omega", report.omega, true);
  out += "},\"transitions\":{";
  detail::json_field(out, "T_death_A_to_B", report.t_death_a_to_b);
  detail::json_field(out, "T_birth_Bbar_to_B", report.t_birth_bbar_to_b);
  detail::json_field(out, "difference", report.difference);
  detail::json_field(out, "T_closed_form", report.t_closed_form);
  detail::json_field(out, "T_asymmetry_argmax", report.t_asymmetry_argmax, true);
  out += "}}\n";
  return out;
}

inline std::string json_verify(const SweepConfig& config, const OracleReport& report) {
  std::string out = "{\"schema\":\"";
  out += kSchemaVersion;
  out += "\",\"params\":{";
  detail::json_field(out, "s", config.s);
  detail::json_field(out, "omega", config.omega);
  detail::json_field(out, "tmin", config.t_min);
  detail::json_field(out, "tmax", config.t_max);
  detail::json_field(out, "points", config.n_points, true);
  out += "},\"max_abs_deviation\":{";
  for (size_t i = 0; i < report.checks.size(); ++i)
    detail::json_field(out, closed_form_name(report.checks[i].tag),
                       report.checks[i].max_abs_deviation, i + 1 == report.checks.size());
  out += "},";
  detail::json_field(out, "collective_symmetry_gap", report.collective_symmetry_gap);
  detail::json_field(out, "tolerance", report.tolerance);
  out += "\"pass\":";
  out += report.pass ? "true" : "false";
  out += "}\n";
  return out;
}

}  // namespace steerbh
