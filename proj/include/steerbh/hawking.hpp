#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "steerbh/symplectic.hpp"

// The Hawking effect as a Gaussian channel: black-hole/field parameters map to
// a squeezing strength r, and the channel acts on the exterior mode B by
// two-mode squeezing it with a fresh interior mode Bbar.

namespace steerbh {

/// Hawking temperature of an asymptotically flat horizon from the metric
/// derivatives at r_+: T = sqrt(f'(r_+) h'(r_+)) / (4 pi). Units G = c = k_B = 1.
inline double temperature_from_surface_gravity(double fprime, double hprime) {
  if (!(fprime >= 0.0) || !(hprime >= 0.0))
    throw std::invalid_argument("temperature_from_surface_gravity: metric derivatives must be nonnegative");
  return std::sqrt(fprime * hprime) / (4.0 * std::numbers::pi);
}

/// Channel squeezing r with sinh(r) = (e^{Omega/T} - 1)^{-1/2}.
///
/// T = 0 is an exact special case (r = 0). Elsewhere the identity is evaluated
/// as sinh(r) = e^{-x/2} / sqrt(1 - e^{-x}) with x = Omega/T, which stays
/// accurate both for x >> 1 (no overflow) and x << 1 (no cancellation).
inline double squeezing_from_temperature(double temperature, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("squeezing_from_temperature: omega must be positive");
  if (!(temperature >= 0.0))
    throw std::invalid_argument("squeezing_from_temperature: temperature must be nonnegative");
  if (temperature == 0.0) return 0.0;
  const double x = omega / temperature;
  const double sinh_r = std::exp(-0.5 * x) / std::sqrt(-std::expm1(-x));
  return std::asinh(sinh_r);
}

/// Inverse of squeezing_from_temperature: T = Omega / ln(1 + 1/sinh^2 r).
inline double temperature_from_squeezing(double squeezing, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("temperature_from_squeezing: omega must be positive");
  if (!(squeezing >= 0.0))
    throw std::invalid_argument("temperature_from_squeezing: squeezing must be nonnegative");
  if (squeezing == 0.0) return 0.0;
  // ln(1 + 1/sinh^2 r) = -2 ln tanh r; the tanh form is the accurate one for
  // small r, the log1p form for large r.
  if (squeezing < 1.0) return omega / (-2.0 * std::log(std::tanh(squeezing)));
  const double sh = std::sinh(squeezing);
  return omega / std::log1p(1.0 / (sh * sh));
}

struct MetricDerivatives {
  double fprime;
  double hprime;
};

/// Hawking temperature T, field frequency Omega and the derived channel
/// squeezing r, optionally remembering the metric derivatives they came from.
struct HawkingParams {
  double temperature;
  double omega;
  double squeezing;
  std::optional<MetricDerivatives> origin;

  static HawkingParams from_temperature(double temperature, double omega) {
    return {temperature, omega, squeezing_from_temperature(temperature, omega), std::nullopt};
  }
  static HawkingParams from_metric(double fprime, double hprime, double omega) {
    const double t = temperature_from_surface_gravity(fprime, hprime);
    return {t, omega, squeezing_from_temperature(t, omega),
            MetricDerivatives{fprime, hprime}};
  }
  static HawkingParams from_squeezing(double squeezing, double omega) {
    return {temperature_from_squeezing(squeezing, omega), omega, squeezing, std::nullopt};
  }
};

/// Two-mode squeezed vacuum shared by A and B: diagonal blocks cosh(2s) I2,
/// off-diagonal blocks sinh(2s) Z2. Pure (det = 1) for every s.
inline CovarianceMatrix initial_tmsv(double s) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("initial_tmsv: squeezing must be a nonnegative real");
  const double ch = std::cosh(2.0 * s);
  const double sh = std::sinh(2.0 * s);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = ch;
  m(1, 1) = ch;
  m(2, 2) = ch;
  m(3, 3) = ch;
  m(0, 2) = sh;
  m(2, 0) = sh;
  m(1, 3) = -sh;
  m(3, 1) = -sh;
  return CovarianceMatrix(std::move(m));
}

/// Final three-mode state of (A, B, Bbar): append a vacuum mode Bbar and apply
/// the two-mode squeezer of strength r across (B, Bbar),
///
///   sigma_ABBbar = [I_A (+) S(r)] [sigma_AB (+) I_Bbar] [I_A (+) S(r)]^T.
///
/// The congruence product is the authoritative definition; the resulting
/// diagonal blocks are sigma_A = cosh(2s) I2,
/// sigma_B = [cosh(2s) cosh^2 r + sinh^2 r] I2 and
/// sigma_Bbar = [cosh^2 r + cosh(2s) sinh^2 r] I2 when sigma_AB = initial_tmsv(s).
inline CovarianceMatrix hawking_extend(const CovarianceMatrix& sigma_ab, double r) {
  if (sigma_ab.modes() != 2)
    throw std::invalid_argument("hawking_extend: input state must have exactly two modes");
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("hawking_extend: squeezing must be a nonnegative real");
  if (!check_physical(sigma_ab).physical)
    throw std::invalid_argument("hawking_extend: input covariance matrix is not physical");
  const CovarianceMatrix padded =
      direct_sum(sigma_ab, CovarianceMatrix(Matrix::Identity(2, 2)));
  return conjugate(padded, two_mode_squeezer(r), {1, 2});
}

}  // namespace steerbh
