#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "steerbh/hawking.hpp"

using namespace steerbh;

namespace {
// Frozen oracle values.
constexpr double kQuarterInvPi = 0.0795774715459476679;  // 1/(4 pi)
constexpr double kEighthInvPi = 0.0397887357729738339;   // 1/(8 pi)
constexpr double kR1 = 0.703414556873647626;             // r at T = 1, Omega = 1
constexpr double kSinh2R1 = 0.581976706869326424;        // sinh^2 r1 = 1/(e - 1)
constexpr double kCosh2 = 3.76219569108363146;
constexpr double kSinh2 = 3.62686040784701877;
constexpr double kSigmaB1 = 6.53368265684777942;         // cosh2 cosh^2 r1 + sinh^2 r1
constexpr double kSigmaBbar1 = 3.77148696576414796;      // cosh^2 r1 + cosh2 sinh^2 r1
}  // namespace

TEST_CASE("temperature from surface gravity") {
  CHECK(std::abs(temperature_from_surface_gravity(1.0, 1.0) - kQuarterInvPi) < 1e-15);
  CHECK(temperature_from_surface_gravity(0.0, 3.0) == 0.0);
  // Schwarzschild-like f' = h' = 1/(2M) at M = 1.
  CHECK(std::abs(temperature_from_surface_gravity(0.5, 0.5) - kEighthInvPi) < 1e-15);
  CHECK_THROWS_AS(temperature_from_surface_gravity(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(temperature_from_surface_gravity(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("squeezing from temperature") {
  CHECK(squeezing_from_temperature(0.0, 1.0) == 0.0);
  CHECK(squeezing_from_temperature(1e-8, 1.0) < 1e-300);  // e^{Omega/T} enormous, r -> 0
  CHECK(std::abs(squeezing_from_temperature(1.0, 1.0) - kR1) < 1e-14);

  // Monotone increasing in T at fixed Omega.
  double prev = -1.0;
  for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double r = squeezing_from_temperature(t, 1.0);
    CHECK(r > prev);
    prev = r;
  }
  // Monotone decreasing in Omega at fixed T.
  prev = std::numeric_limits<double>::infinity();
  for (double omega : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const double r = squeezing_from_temperature(1.0, omega);
    CHECK(r < prev);
    prev = r;
  }

  CHECK_THROWS_AS(squeezing_from_temperature(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(squeezing_from_temperature(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(squeezing_from_temperature(-0.5, 1.0), std::invalid_argument);
}

TEST_CASE("temperature/squeezing round trip") {
  for (double omega : {0.5, 1.0, 2.0}) {
    for (double t : {0.005, 0.05, 0.3, 1.0, 5.0, 100.0, 1000.0}) {
      const double r = squeezing_from_temperature(t, omega);
      CHECK(std::abs(temperature_from_squeezing(r, omega) - t) <= 1e-12 * t);
    }
  }
  // Deep exponential tail, still invertible through the log form.
  const double r = squeezing_from_temperature(1e-3, 1.0);
  CHECK(std::abs(temperature_from_squeezing(r, 1.0) - 1e-3) <= 1e-12 * 1e-3);
  CHECK(temperature_from_squeezing(0.0, 1.0) == 0.0);
}

TEST_CASE("squeezing satisfies its defining identity") {
  // sinh^2(r) (e^{Omega/T} - 1) = 1, checked directly where e^{Omega/T} is
  // representable and in log space further down the tail.
  const double omega = 1.0;
  for (double t = 1e-3; t <= 1.0e3; t *= 2.1544346900318838) {  // ~log-spaced
    const double x = omega / t;
    const double r = squeezing_from_temperature(t, omega);
    const double sh = std::sinh(r);
    if (x <= 700.0) {
      CHECK(std::abs(sh * sh * std::expm1(x) - 1.0) <= 1e-10);
    } else {
      const double log_expm1 = x + std::log1p(-std::exp(-x));
      CHECK(std::abs(2.0 * std::log(sh) + log_expm1) <= 1e-10);
    }
  }
}

TEST_CASE("hawking params factories") {
  const HawkingParams from_t = HawkingParams::from_temperature(1.0, 1.0);
  CHECK(from_t.temperature == 1.0);
  CHECK(std::abs(from_t.squeezing - kR1) < 1e-14);
  CHECK_FALSE(from_t.origin.has_value());

  const HawkingParams from_metric = HawkingParams::from_metric(1.0, 1.0, 1.0);
  CHECK(std::abs(from_metric.temperature - kQuarterInvPi) < 1e-15);
  REQUIRE(from_metric.origin.has_value());
  CHECK(from_metric.origin->fprime == 1.0);

  const HawkingParams from_r = HawkingParams::from_squeezing(kR1, 1.0);
  CHECK(std::abs(from_r.temperature - 1.0) < 1e-12);
}

TEST_CASE("initial TMSV") {
  CHECK((initial_tmsv(0.0).matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const Matrix m = initial_tmsv(1.0).matrix();
  CHECK(std::abs(m(0, 0) - kCosh2) < 1e-15);
  CHECK(std::abs(m(3, 3) - kCosh2) < 1e-15);
  CHECK(std::abs(m(0, 2) - kSinh2) < 1e-15);
  CHECK(std::abs(m(1, 3) + kSinh2) < 1e-15);
  CHECK(m(0, 1) == 0.0);
  CHECK(m(0, 3) == 0.0);

  for (double s : {0.0, 0.3, 1.0, 1.5, 2.5})
    CHECK(std::abs(initial_tmsv(s).determinant() - 1.0) <= 1e-10);

  CHECK_THROWS_AS(initial_tmsv(-0.2), std::invalid_argument);
}

TEST_CASE("hawking extend") {
  const CovarianceMatrix tmsv = initial_tmsv(1.0);

  // r = 0: the channel appends a vacuum mode and does nothing else.
  const CovarianceMatrix untouched = hawking_extend(tmsv, 0.0);
  CHECK((untouched.matrix() - direct_sum(tmsv, CovarianceMatrix(Matrix::Identity(2, 2))).matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const CovarianceMatrix extended = hawking_extend(tmsv, kR1);
  CHECK(std::abs(extended.matrix()(2, 2) - kSigmaB1) < 1e-12);
  CHECK(std::abs(extended.matrix()(4, 4) - kSigmaBbar1) < 1e-12);

  for (double r : {0.0, 0.2, kR1, 1.1})
    CHECK(std::abs(hawking_extend(tmsv, r).determinant() - 1.0) <= 1e-9);

  CHECK_THROWS_AS(hawking_extend(tmsv, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(hawking_extend(CovarianceMatrix(0.5 * Matrix::Identity(4, 4)), 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(hawking_extend(CovarianceMatrix(Matrix::Identity(2, 2)), 0.5),
                  std::invalid_argument);
}

TEST_CASE("hawking extend reproduces the printed block structure") {
  const Matrix z2 = (Matrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished();
  const Matrix i2 = Matrix::Identity(2, 2);
  for (double s : {0.3, 1.0, 1.6}) {
    for (double r : {0.1, 0.5, kR1, 1.2}) {
      const Matrix m = hawking_extend(initial_tmsv(s), r).matrix();
      const double c2s = std::cosh(2.0 * s);
      const double ch = std::cosh(r);
      const double sh = std::sinh(r);

      CHECK((m.block<2, 2>(0, 0) - c2s * i2).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((m.block<2, 2>(2, 2) - (c2s * ch * ch + sh * sh) * i2).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((m.block<2, 2>(4, 4) - (ch * ch + c2s * sh * sh) * i2).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((m.block<2, 2>(0, 2) - ch * std::sinh(2.0 * s) * z2).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((m.block<2, 2>(2, 4) -
             std::cosh(s) * std::cosh(s) * std::sinh(2.0 * r) * z2)
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      // The congruence puts the A-Bbar correlations on the identity, not Z2:
      // the sign flip of Z2 squares away when the squeezer meets the initial
      // TMSV correlations.
      CHECK((m.block<2, 2>(0, 4) - std::sinh(2.0 * s) * sh * i2).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("interior-mode noise grows with the channel squeezing") {
  double prev = 0.0;
  for (double r : {0.1, 0.3, 0.6, 1.0, 1.5}) {
    const double scalar = hawking_extend(initial_tmsv(1.0), r).matrix()(4, 4);
    CHECK(scalar > prev);
    prev = scalar;
  }
}
