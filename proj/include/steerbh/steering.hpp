#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "steerbh/symplectic.hpp"

// Directional Gaussian EPR steering and its monogamy bookkeeping.

namespace steerbh {

// Steering values below this are reported as exactly 0, so sudden-death and
// sudden-birth points are stable against sub-epsilon positives.
inline constexpr double kSteeringZeroTol = 1e-12;
// Default tolerance for the CKW monogamy pass flag.
inline constexpr double kDeficitTol = 1e-10;

/// A steering direction x -> y between disjoint, nonempty party groups.
struct SteeringDirection {
  std::vector<Party> steerer;
  std::vector<Party> steered;
};

/// Gaussian steering G^{x->y} = max{0, -sum_{j: nu_j < 1} ln nu_j} over the
/// symplectic eigenvalues nu_j of the Schur complement of the steerer block in
/// the reduced state of x and y. Eigenvalues equal to 1 contribute nothing.
inline double gaussian_steering(const CovarianceMatrix& sigma, const std::vector<int>& steerer_modes,
                                const std::vector<int>& steered_modes) {
  if (steerer_modes.empty() || steered_modes.empty())
    throw std::invalid_argument("gaussian_steering: steerer and steered must be nonempty");
  for (int m : steerer_modes)
    if (std::find(steered_modes.begin(), steered_modes.end(), m) != steered_modes.end())
      throw std::invalid_argument("gaussian_steering: steerer and steered modes overlap");

  std::vector<int> joint = steerer_modes;
  joint.insert(joint.end(), steered_modes.begin(), steered_modes.end());
  const CovarianceMatrix joint_state = reduce(sigma, joint);

  std::vector<int> steerer_positions(steerer_modes.size());
  for (size_t i = 0; i < steerer_modes.size(); ++i) steerer_positions[i] = static_cast<int>(i);

  const Matrix conditional = schur_complement(joint_state, steerer_positions);
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(conditional))
    if (nu < 1.0) total -= std::log(nu);
  return total < kSteeringZeroTol ? 0.0 : total;
}

inline double gaussian_steering(const CovarianceMatrix& sigma, const PartyMap& parties,
                                const SteeringDirection& direction) {
  return gaussian_steering(sigma, parties.modes(direction.steerer), parties.modes(direction.steered));
}

namespace detail {

inline void require_distinct(Party x, Party y, Party z, const char* op) {
  if (x == y || y == z || x == z)
    throw std::invalid_argument(std::string(op) + ": parties must be a permutation of {A, B, Bbar}");
}

}  // namespace detail

/// 2->1 monogamy deficit D^{xy:z} = G^{xy->z} - G^{x->z} - G^{y->z} (signed).
inline double deficit_2to1(const CovarianceMatrix& sigma, const PartyMap& parties, Party x, Party y,
                           Party z) {
  detail::require_distinct(x, y, z, "deficit_2to1");
  return gaussian_steering(sigma, parties, {{x, y}, {z}}) -
         gaussian_steering(sigma, parties, {{x}, {z}}) -
         gaussian_steering(sigma, parties, {{y}, {z}});
}

/// 1->2 monogamy deficit D^{x:yz} = G^{x->yz} - G^{x->y} - G^{x->z} (signed).
inline double deficit_1to2(const CovarianceMatrix& sigma, const PartyMap& parties, Party x, Party y,
                           Party z) {
  detail::require_distinct(x, y, z, "deficit_1to2");
  return gaussian_steering(sigma, parties, {{x}, {y, z}}) -
         gaussian_steering(sigma, parties, {{x}, {y}}) -
         gaussian_steering(sigma, parties, {{x}, {z}});
}

/// Monogamy asymmetry D_Delta^{xy:z} = |D^{xy:z} - D^{z:xy}|.
inline double monogamy_asymmetry(const CovarianceMatrix& sigma, const PartyMap& parties, Party x,
                                 Party y, Party z) {
  detail::require_distinct(x, y, z, "monogamy_asymmetry");
  return std::abs(deficit_2to1(sigma, parties, x, y, z) - deficit_1to2(sigma, parties, z, x, y));
}

/// Every directional steering, both deficit families and the three monogamy
/// asymmetries of one three-mode state. Deficits are reported signed; the pass
/// flag applies the tolerance.
struct SteeringReport {
  // 1->1 steerings (nats)
  double g_a_to_b, g_b_to_a;
  double g_a_to_bbar, g_bbar_to_a;
  double g_b_to_bbar, g_bbar_to_b;
  // 2->1 steerings
  double g_ab_to_bbar, g_abbar_to_b, g_bbbar_to_a;
  // 1->2 steerings
  double g_a_to_bbbar, g_b_to_abbar, g_bbar_to_ab;
  // 2->1 deficits D^{xy:z}
  double d21_ab_bbar, d21_abbar_b, d21_bbbar_a;
  // 1->2 deficits D^{x:yz}
  double d12_a_bbbar, d12_b_abbar, d12_bbar_ab;
  // asymmetries D_Delta^{xy:z}
  double dasym_ab_bbar, dasym_abbar_b, dasym_bbbar_a;
  // true iff every deficit >= -tolerance
  bool monogamy_pass;
};

/// CKW compliance report for a physical three-mode state.
inline SteeringReport ckw_report(const CovarianceMatrix& sigma, const PartyMap& parties,
                                 double tolerance = kDeficitTol) {
  if (sigma.modes() != 3)
    throw std::invalid_argument("ckw_report: state must have exactly three modes");

  constexpr Party a = Party::A;
  constexpr Party b = Party::B;
  constexpr Party bb = Party::Bbar;

  SteeringReport rep{};
  rep.g_a_to_b = gaussian_steering(sigma, parties, {{a}, {b}});
  rep.g_b_to_a = gaussian_steering(sigma, parties, {{b}, {a}});
  rep.g_a_to_bbar = gaussian_steering(sigma, parties, {{a}, {bb}});
  rep.g_bbar_to_a = gaussian_steering(sigma, parties, {{bb}, {a}});
  rep.g_b_to_bbar = gaussian_steering(sigma, parties, {{b}, {bb}});
  rep.g_bbar_to_b = gaussian_steering(sigma, parties, {{bb}, {b}});
  rep.g_ab_to_bbar = gaussian_steering(sigma, parties, {{a, b}, {bb}});
  rep.g_abbar_to_b = gaussian_steering(sigma, parties, {{a, bb}, {b}});
  rep.g_bbbar_to_a = gaussian_steering(sigma, parties, {{b, bb}, {a}});
  rep.g_a_to_bbbar = gaussian_steering(sigma, parties, {{a}, {b, bb}});
  rep.g_b_to_abbar = gaussian_steering(sigma, parties, {{b}, {a, bb}});
  rep.g_bbar_to_ab = gaussian_steering(sigma, parties, {{bb}, {a, b}});

  rep.d21_ab_bbar = rep.g_ab_to_bbar - rep.g_a_to_bbar - rep.g_b_to_bbar;
  rep.d21_abbar_b = rep.g_abbar_to_b - rep.g_a_to_b - rep.g_bbar_to_b;
  rep.d21_bbbar_a = rep.g_bbbar_to_a - rep.g_b_to_a - rep.g_bbar_to_a;
  rep.d12_a_bbbar = rep.g_a_to_bbbar - rep.g_a_to_b - rep.g_a_to_bbar;
  rep.d12_b_abbar = rep.g_b_to_abbar - rep.g_b_to_a - rep.g_b_to_bbar;
  rep.d12_bbar_ab = rep.g_bbar_to_ab - rep.g_bbar_to_a - rep.g_bbar_to_b;

  rep.dasym_ab_bbar = std::abs(rep.d21_ab_bbar - rep.d12_bbar_ab);
  rep.dasym_abbar_b = std::abs(rep.d21_abbar_b - rep.d12_b_abbar);
  rep.dasym_bbbar_a = std::abs(rep.d21_bbbar_a - rep.d12_a_bbbar);

  const double min_deficit =
      std::min({rep.d21_ab_bbar, rep.d21_abbar_b, rep.d21_bbbar_a, rep.d12_a_bbbar,
                rep.d12_b_abbar, rep.d12_bbar_ab});
  rep.monogamy_pass = min_deficit >= -tolerance;
  return rep;
}

}  // namespace steerbh
