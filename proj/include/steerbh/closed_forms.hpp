#pragma once

#include <cmath>
#include <stdexcept>

// Closed-form steering scalars for the hawking_extend(initial_tmsv(s), r)
// family, used as an independent oracle against the numeric pipeline, plus the
// exact transition point where the A->B steering dies and B->Bbar's partner
// direction Bbar->B is born.

namespace steerbh {

/// Directions with a closed form in (s, r). Writing C = cosh(2s),
/// c2 = cosh^2 r, s2 = sinh^2 r, the pairwise reduced determinants of the
/// extended state factor as
///   det sigma_A  = C^2,            det sigma_AB   = (c2 + C s2)^2,
///   det sigma_B  = (C c2 + s2)^2,  det sigma_ABbar = (C c2 + s2)^2,
///   det sigma_Bbar = (c2 + C s2)^2, det sigma_BBbar = C^2,
/// with the global state pure. Every direction then reduces to a Renyi-2
/// entropy difference, i.e. the log of a ratio of these block determinants.
enum class ClosedFormTag {
  ab_to_bbar,
  a_to_bbar,
  b_to_bbar,
  a_to_bbbar,
  a_to_b,
  b_to_a,
  bbar_to_b,
  bbar_to_a,
  abbar_to_b,
  bbbar_to_a,
  b_to_abbar,
  bbar_to_ab,
};

inline const char* closed_form_name(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::ab_to_bbar: return "G_AB_to_Bbar";
    case ClosedFormTag::a_to_bbar: return "G_A_to_Bbar";
    case ClosedFormTag::b_to_bbar: return "G_B_to_Bbar";
    case ClosedFormTag::a_to_bbbar: return "G_A_to_BBbar";
    case ClosedFormTag::a_to_b: return "G_A_to_B";
    case ClosedFormTag::b_to_a: return "G_B_to_A";
    case ClosedFormTag::bbar_to_b: return "G_Bbar_to_B";
    case ClosedFormTag::bbar_to_a: return "G_Bbar_to_A";
    case ClosedFormTag::abbar_to_b: return "G_ABbar_to_B";
    case ClosedFormTag::bbbar_to_a: return "G_BBbar_to_A";
    case ClosedFormTag::b_to_abbar: return "G_B_to_ABbar";
    case ClosedFormTag::bbar_to_ab: return "G_Bbar_to_AB";
  }
  throw std::invalid_argument("closed_form_name: unknown tag");
}

inline double closed_form_steering(ClosedFormTag tag, double s, double r) {
  if (!(s >= 0.0) || !(r >= 0.0) || !std::isfinite(s) || !std::isfinite(r))
    throw std::invalid_argument("closed_form_steering: s and r must be nonnegative reals");
  const double big_c = std::cosh(2.0 * s);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double c2 = ch * ch;
  const double s2 = sh * sh;

  double arg = 0.0;
  switch (tag) {
    case ClosedFormTag::ab_to_bbar: arg = c2 + big_c * s2; break;
    case ClosedFormTag::a_to_bbar: arg = big_c / (s2 + big_c * c2); break;
    case ClosedFormTag::b_to_bbar: arg = c2 + s2 / big_c; break;
    case ClosedFormTag::a_to_bbbar: arg = big_c; break;
    case ClosedFormTag::a_to_b: arg = big_c / (c2 + big_c * s2); break;
    case ClosedFormTag::b_to_a: arg = (big_c * c2 + s2) / (c2 + big_c * s2); break;
    case ClosedFormTag::bbar_to_b: arg = (c2 + big_c * s2) / big_c; break;
    case ClosedFormTag::bbar_to_a: arg = (c2 + big_c * s2) / (big_c * c2 + s2); break;
    case ClosedFormTag::abbar_to_b: arg = big_c * c2 + s2; break;
    case ClosedFormTag::bbbar_to_a: arg = big_c; break;
    case ClosedFormTag::b_to_abbar: arg = big_c * c2 + s2; break;
    case ClosedFormTag::bbar_to_ab: arg = c2 + big_c * s2; break;
    default: throw std::invalid_argument("closed_form_steering: unknown tag");
  }
  const double value = std::log(arg);
  return value > 0.0 ? value : 0.0;
}

struct TransitionSqueezing {
  double r_star;
  // Set when s = 0: there is no A->B steering to lose, the boundary value
  // r_star = 0 is returned instead of a genuine transition.
  bool degenerate;
};

/// Channel squeezing at which the A->B steering dies, i.e. the root of
/// cosh(2s) (1 - sinh^2 r) = cosh^2 r, which simplifies to sinh r* = tanh s.
/// The Bbar->B steering is born at the same point.
inline TransitionSqueezing transition_squeezing(double s) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("transition_squeezing: s must be a nonnegative real");
  if (s == 0.0) return {0.0, true};
  return {std::asinh(std::tanh(s)), false};
}

/// Hawking temperature of the A->B sudden death / Bbar->B sudden birth:
/// T* = Omega / ln(1 + 1/tanh^2 s). Linear in Omega.
inline double transition_temperature(double s, double omega) {
  if (!(s > 0.0)) throw std::invalid_argument("transition_temperature: s must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("transition_temperature: omega must be positive");
  const double t = std::tanh(s);
  return omega / std::log1p(1.0 / (t * t));
}

}  // namespace steerbh
