// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is pinned in code.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "random_states.hpp"
#include "steerbh/steerbh.hpp"

using namespace steerbh;

namespace {

int failures = 0;

void criterion(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %-24s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct GridPoint {
  double s;
  SweepRow row;
};

// s in {0.25, 0.5, 1.0, 1.5}, Omega = 1, T linear in [0.05, 5] with 200 points.
std::vector<GridPoint> acceptance_grid() {
  std::vector<GridPoint> grid;
  for (double s : {0.25, 0.5, 1.0, 1.5}) {
    SweepConfig config;
    config.s = s;
    config.omega = 1.0;
    config.t_min = 0.05;
    config.t_max = 5.0;
    config.n_points = 200;
    for (SweepRow& row : run_sweep(config)) grid.push_back({s, std::move(row)});
  }
  return grid;
}

}  // namespace

int main() {
  const std::vector<GridPoint> grid = acceptance_grid();

  // 1. Numeric pipeline matches every printed closed form within 1e-9.
  {
    const std::pair<ClosedFormTag, const char*> printed[] = {
        {ClosedFormTag::ab_to_bbar, "AB->Bbar"}, {ClosedFormTag::a_to_bbar, "A->Bbar"},
        {ClosedFormTag::b_to_bbar, "B->Bbar"},   {ClosedFormTag::a_to_bbbar, "A->BBbar"},
        {ClosedFormTag::a_to_b, "A->B"}};
    double worst = 0.0;
    for (const GridPoint& point : grid) {
      const SteeringReport& rep = point.row.report;
      const double numeric[] = {rep.g_ab_to_bbar, rep.g_a_to_bbar, rep.g_b_to_bbar,
                                rep.g_a_to_bbbar, rep.g_a_to_b};
      for (int k = 0; k < 5; ++k) {
        const double closed = closed_form_steering(printed[k].first, point.s, point.row.squeezing);
        worst = std::max(worst, std::abs(numeric[k] - closed));
      }
    }
    criterion(1, "oracle equivalence", worst <= 1e-9, "max |numeric - closed| = " + fmt(worst));
  }

  // 2. Global purity of the constructed three-mode state.
  {
    double worst = 0.0;
    for (const GridPoint& point : grid) {
      const CovarianceMatrix sigma =
          hawking_extend(initial_tmsv(point.s), point.row.squeezing);
      worst = std::max(worst, std::abs(sigma.determinant() - 1.0));
    }
    criterion(2, "purity", worst <= 1e-9, "max |det - 1| = " + fmt(worst));
  }

  // 3. All six monogamy deficits are nonnegative everywhere.
  {
    double least = std::numeric_limits<double>::infinity();
    for (const GridPoint& point : grid) {
      const SteeringReport& rep = point.row.report;
      least = std::min({least, rep.d21_ab_bbar, rep.d21_abbar_b, rep.d21_bbbar_a,
                        rep.d12_a_bbbar, rep.d12_b_abbar, rep.d12_bbar_ab});
    }
    criterion(3, "monogamy holds", least >= -1e-10, "min deficit = " + fmt(least));
  }

  // 4. Collective steerabilities are symmetric for every bipartition.
  {
    double worst = 0.0;
    for (const GridPoint& point : grid) {
      const SteeringReport& rep = point.row.report;
      worst = std::max({worst, std::abs(rep.g_a_to_bbbar - rep.g_bbbar_to_a),
                        std::abs(rep.g_b_to_abbar - rep.g_abbar_to_b),
                        std::abs(rep.g_bbar_to_ab - rep.g_ab_to_bbar)});
    }
    criterion(4, "collective symmetry", worst <= 1e-9, "max gap = " + fmt(worst));
  }

  // 5. The bisected A->B death and Bbar->B birth coincide and equal the
  //    closed-form T* = Omega / ln(1 + 1/tanh^2 s).
  double t_death = 0.0;
  {
    t_death = find_transition(1.0, 1.0, Transition::a_to_b_death);
    const double t_birth = find_transition(1.0, 1.0, Transition::bbar_to_b_birth);
    const double t_closed = transition_temperature(1.0, 1.0);
    const bool pass = std::abs(t_death - t_birth) <= 1e-8 &&
                      std::abs(t_death - t_closed) <= 1e-6 &&
                      std::abs(t_birth - t_closed) <= 1e-6;
    criterion(5, "transition coincidence", pass,
              "death " + fmt(t_death) + ", birth " + fmt(t_birth) + ", closed " + fmt(t_closed));
  }

  // 6. Extreme scenario at s = 1: A never steers Bbar alone, yet steers the
  //    pair (B, Bbar) by the constant ln cosh 2.
  {
    const double ln_cosh_2 = std::log(std::cosh(2.0));
    bool zero_everywhere = true;
    double worst = 0.0;
    for (const GridPoint& point : grid) {
      if (point.s != 1.0) continue;
      zero_everywhere = zero_everywhere && point.row.report.g_a_to_bbar == 0.0;
      worst = std::max(worst, std::abs(point.row.report.g_a_to_bbbar - ln_cosh_2));
    }
    criterion(6, "extreme steering", zero_everywhere && worst <= 1e-10,
              std::string("A->Bbar all zero: ") + (zero_everywhere ? "yes" : "no") +
                  ", max |A->BBbar - ln cosh 2| = " + fmt(worst));
  }

  // 7. The AB:Bbar monogamy-asymmetry peak sits at the transition temperature,
  //    i.e. where cosh(2s) = cosh^2 r / (1 - sinh^2 r).
  {
    SweepConfig config;
    config.s = 1.0;
    config.omega = 1.0;
    config.t_min = 0.05;
    config.t_max = 5.0;
    config.n_points = 2000;
    const double step = (config.t_max - config.t_min) / (config.n_points - 1);
    double best_t = config.t_min;
    double best = -1.0;
    for (const SweepRow& row : run_sweep(config)) {
      if (row.report.dasym_ab_bbar > best) {
        best = row.report.dasym_ab_bbar;
        best_t = row.temperature;
      }
    }
    const double r_star = squeezing_from_temperature(t_death, 1.0);
    const double condition = std::cosh(r_star) * std::cosh(r_star) /
                             (1.0 - std::sinh(r_star) * std::sinh(r_star));
    const bool condition_holds = std::abs(std::cosh(2.0) - condition) <= 1e-6;
    const bool pass = std::abs(best_t - t_death) <= step + 1e-12 && condition_holds;
    criterion(7, "asymmetry peak", pass,
              "argmax " + fmt(best_t) + " vs T* " + fmt(t_death) + ", step " + fmt(step));
  }

  // 8. Zero-temperature boundary: steering correlations with Bbar, all
  //    deficits and all asymmetries are exactly zero, and the A-B steerings
  //    keep their initial value ln cosh 2s.
  {
    bool pass = true;
    double worst = 0.0;
    for (double s : {0.5, 1.0, 1.5}) {
      const SteeringReport rep = evaluate_point(s, 1.0, 0.0).report;
      pass = pass && rep.g_a_to_bbar == 0.0 && rep.g_bbar_to_a == 0.0 &&
             rep.g_b_to_bbar == 0.0 && rep.g_bbar_to_b == 0.0 && rep.g_ab_to_bbar == 0.0 &&
             rep.g_bbar_to_ab == 0.0;
      pass = pass && rep.d21_ab_bbar == 0.0 && rep.d21_abbar_b == 0.0 &&
             rep.d21_bbbar_a == 0.0 && rep.d12_a_bbbar == 0.0 && rep.d12_b_abbar == 0.0 &&
             rep.d12_bbar_ab == 0.0;
      pass = pass && rep.dasym_ab_bbar == 0.0 && rep.dasym_abbar_b == 0.0 &&
             rep.dasym_bbbar_a == 0.0;
      const double expected = std::log(std::cosh(2.0 * s));
      worst = std::max({worst, std::abs(rep.g_a_to_b - expected),
                        std::abs(rep.g_b_to_a - expected)});
    }
    pass = pass && worst <= 1e-12;
    criterion(8, "zero-temperature boundary", pass,
              "max |G - ln cosh 2s| = " + fmt(worst));
  }

  // 9. 1000 randomized physical states: bona fide check, Schur-complement
  //    positive definiteness, and agreement of the eigenvalue-sum and
  //    entropy-difference forms for single-mode steered parties.
  {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> n_dist(2, 3);
    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000 && pass; ++trial) {
      const int n = n_dist(rng);
      const auto state = steerbh_testing::random_physical_state(rng, n);
      pass = pass && check_physical(state.sigma).physical;

      std::uniform_int_distribution<int> mode_dist(0, n - 1);
      const int steerer = mode_dist(rng);
      const Matrix conditional = schur_complement(state.sigma, {steerer});
      Eigen::SelfAdjointEigenSolver<Matrix> es(conditional, Eigen::EigenvaluesOnly);
      pass = pass && es.eigenvalues()(0) > 0.0;

      int steered = mode_dist(rng);
      while (steered == steerer) steered = mode_dist(rng);
      const double sum_form = gaussian_steering(state.sigma, {steerer}, {steered});
      const double entropy_diff = renyi2_entropy(reduce(state.sigma, {steerer})) -
                                  renyi2_entropy(reduce(state.sigma, {steerer, steered}));
      const double two_form_gap = std::abs(sum_form - std::max(0.0, entropy_diff));
      worst = std::max(worst, two_form_gap);
      pass = pass && two_form_gap <= 1e-9;
    }
    criterion(9, "property suite", pass, "max two-form gap = " + fmt(worst));
  }

  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures;
}
