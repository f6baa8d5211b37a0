#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steerbh/errors.hpp"

// Symplectic linear algebra for Gaussian states in one fixed convention:
// quadratures are interleaved (x1, p1, x2, p2, ...) and hbar = 1, so the
// n-mode vacuum has covariance matrix I_{2n}. No operation accepts an
// alternative ordering.

namespace steerbh {

using Matrix = Eigen::MatrixXd;

// Structural tolerance (symmetry, symplectic-form preservation).
inline constexpr double kStructuralTol = 1e-12;
// A state is bona fide when its smallest symplectic eigenvalue is
// at least 1 - kPhysicalSlack.
inline constexpr double kPhysicalSlack = 1e-9;

/// Symplectic form Omega = omega^(+n) with omega = ((0,1),(-1,0)).
/// Antisymmetric and Omega^2 = -I.
inline Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

namespace detail {

inline bool is_square_even(const Matrix& m) {
  return m.rows() > 0 && m.rows() == m.cols() && m.rows() % 2 == 0;
}

inline double max_asymmetry(const Matrix& m) {
  return (m - Matrix(m.transpose())).cwiseAbs().maxCoeff();
}

inline double det2(const Matrix& m, Eigen::Index i, Eigen::Index j) {
  return m(i, i) * m(j, j) - m(i, j) * m(j, i);
}

// The conditional block sigma_y - E^T sigma_x^{-1} E subtracts two nearly
// equal matrices, so it is assembled in extended precision and only the
// result is rounded back to double.
using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Block inversion: closed-form 2x2/4x4 at the sizes this artifact meets,
// full-pivot solve otherwise.
inline LongMatrix invert_block(const LongMatrix& m) {
  const Eigen::Index dim = m.rows();
  if (dim == 2) {
    const long double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (!std::isnormal(static_cast<double>(det)))
      throw numerical_error("invert_block: singular 2x2 block");
    LongMatrix inv(2, 2);
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv * (1.0L / det);
  }
  if (dim == 4) {
    const Eigen::Matrix<long double, 4, 4> fixed = m;
    const long double det = fixed.determinant();
    if (!std::isnormal(static_cast<double>(det)))
      throw numerical_error("invert_block: singular 4x4 block");
    return LongMatrix(fixed.inverse());
  }
  Eigen::FullPivLU<LongMatrix> lu(m);
  if (!lu.isInvertible()) throw numerical_error("invert_block: singular block");
  return lu.inverse();
}

}  // namespace detail

/// Real 2n x 2n matrix S with S Omega S^T = Omega (within 1e-12) and
/// det S = 1 (within 1e-10). Construction validates both.
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Matrix entries) : entries_(std::move(entries)) {
    if (!detail::is_square_even(entries_))
      throw std::invalid_argument("SymplecticTransform: matrix must be square with even dimension");
    const int n = static_cast<int>(entries_.rows()) / 2;
    const Matrix omega = symplectic_form(n);
    const double defect = (entries_ * omega * entries_.transpose() - omega).cwiseAbs().maxCoeff();
    if (!(defect <= kStructuralTol))
      throw std::invalid_argument("SymplecticTransform: S Omega S^T differs from Omega by " +
                                  std::to_string(defect));
    if (!(std::abs(entries_.determinant() - 1.0) <= 1e-10))
      throw std::invalid_argument("SymplecticTransform: determinant must equal 1");
  }

  int modes() const { return static_cast<int>(entries_.rows()) / 2; }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

/// Real symmetric 2n x 2n matrix of quadrature second moments. Construction
/// enforces shape and symmetry (within 1e-12, stored exactly symmetrized);
/// bona-fide-ness is a separate on-demand check, see check_physical.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries) {
    if (!detail::is_square_even(entries))
      throw std::invalid_argument("CovarianceMatrix: matrix must be square with even dimension");
    if (!(detail::max_asymmetry(entries) <= kStructuralTol))
      throw std::invalid_argument("CovarianceMatrix: matrix is not symmetric");
    entries_ = 0.5 * (entries + Matrix(entries.transpose()));
  }

  int modes() const { return static_cast<int>(entries_.rows()) / 2; }
  const Matrix& matrix() const { return entries_; }
  double determinant() const { return entries_.determinant(); }

 private:
  Matrix entries_;
};

/// Parties of the Hawking setup: A (free-falling observer's mode), B (exterior
/// accelerated observer's mode), Bbar (interior mode behind the horizon).
enum class Party { A, B, Bbar };

inline const char* party_name(Party p) {
  switch (p) {
    case Party::A: return "A";
    case Party::B: return "B";
    case Party::Bbar: return "Bbar";
  }
  return "?";
}

/// Assignment of party labels to disjoint mode indices.
class PartyMap {
 public:
  PartyMap(std::map<Party, int> label_to_mode, int n_modes)
      : map_(std::move(label_to_mode)), n_modes_(n_modes) {
    std::vector<int> seen;
    for (const auto& [label, mode] : map_) {
      if (mode < 0 || mode >= n_modes_)
        throw std::invalid_argument("PartyMap: mode index out of range");
      seen.push_back(mode);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::invalid_argument("PartyMap: mode indices must be disjoint");
  }

  static PartyMap two_mode() { return PartyMap({{Party::A, 0}, {Party::B, 1}}, 2); }
  static PartyMap three_mode() {
    return PartyMap({{Party::A, 0}, {Party::B, 1}, {Party::Bbar, 2}}, 3);
  }

  int n_modes() const { return n_modes_; }

  int mode_of(Party p) const {
    const auto it = map_.find(p);
    if (it == map_.end())
      throw std::invalid_argument(std::string("PartyMap: unassigned party ") + party_name(p));
    return it->second;
  }

  std::vector<int> modes(const std::vector<Party>& parties) const {
    std::vector<int> out;
    out.reserve(parties.size());
    for (Party p : parties) out.push_back(mode_of(p));
    return out;
  }

 private:
  std::map<Party, int> map_;
  int n_modes_;
};

/// Two-mode squeezer in phase space: diagonal blocks cosh(r) I2, off-diagonal
/// blocks sinh(r) Z2 with Z2 = diag(1,-1).
inline SymplecticTransform two_mode_squeezer(double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("two_mode_squeezer: r must be a nonnegative real");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Matrix s = Matrix::Zero(4, 4);
  s(0, 0) = ch;
  s(1, 1) = ch;
  s(2, 2) = ch;
  s(3, 3) = ch;
  s(0, 2) = sh;
  s(2, 0) = sh;
  s(1, 3) = -sh;
  s(3, 1) = -sh;
  return SymplecticTransform(std::move(s));
}

/// Principal submatrix on the selected modes, in the order given.
inline CovarianceMatrix reduce(const CovarianceMatrix& sigma, const std::vector<int>& modes) {
  if (modes.empty()) throw std::invalid_argument("reduce: mode subset must be nonempty");
  for (int m : modes)
    if (m < 0 || m >= sigma.modes()) throw std::invalid_argument("reduce: mode index out of range");
  std::vector<int> sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("reduce: duplicate mode index");

  const auto k = static_cast<Eigen::Index>(modes.size());
  Matrix out(2 * k, 2 * k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      out.block<2, 2>(2 * a, 2 * b) = sigma.matrix().block<2, 2>(2 * modes[a], 2 * modes[b]);
  return CovarianceMatrix(std::move(out));
}

inline CovarianceMatrix reduce(const CovarianceMatrix& sigma, const PartyMap& parties,
                               const std::vector<Party>& subset) {
  return reduce(sigma, parties.modes(subset));
}

/// Conditional covariance of the non-steerer modes: M = sigma_y - E^T sigma_x^{-1} E
/// for the bipartition (x = steerer block, y = everything else). The rows of M
/// follow the remaining modes in ascending order.
inline Matrix schur_complement(const CovarianceMatrix& sigma, const std::vector<int>& steerer_modes) {
  const int n = sigma.modes();
  if (steerer_modes.empty())
    throw std::invalid_argument("schur_complement: steerer subset must be nonempty");
  std::vector<bool> in_steerer(static_cast<size_t>(n), false);
  for (int m : steerer_modes) {
    if (m < 0 || m >= n) throw std::invalid_argument("schur_complement: mode index out of range");
    if (in_steerer[static_cast<size_t>(m)])
      throw std::invalid_argument("schur_complement: duplicate steerer mode");
    in_steerer[static_cast<size_t>(m)] = true;
  }
  if (static_cast<int>(steerer_modes.size()) >= n)
    throw std::invalid_argument("schur_complement: steerer must be a proper subset");

  std::vector<int> rest;
  for (int m = 0; m < n; ++m)
    if (!in_steerer[static_cast<size_t>(m)]) rest.push_back(m);

  const auto kx = static_cast<Eigen::Index>(steerer_modes.size());
  const auto ky = static_cast<Eigen::Index>(rest.size());
  detail::LongMatrix sx(2 * kx, 2 * kx), sy(2 * ky, 2 * ky), e(2 * kx, 2 * ky);
  for (Eigen::Index a = 0; a < kx; ++a)
    for (Eigen::Index b = 0; b < kx; ++b)
      sx.block<2, 2>(2 * a, 2 * b) =
          sigma.matrix().block<2, 2>(2 * steerer_modes[a], 2 * steerer_modes[b]).cast<long double>();
  for (Eigen::Index a = 0; a < ky; ++a)
    for (Eigen::Index b = 0; b < ky; ++b)
      sy.block<2, 2>(2 * a, 2 * b) =
          sigma.matrix().block<2, 2>(2 * rest[a], 2 * rest[b]).cast<long double>();
  for (Eigen::Index a = 0; a < kx; ++a)
    for (Eigen::Index b = 0; b < ky; ++b)
      e.block<2, 2>(2 * a, 2 * b) =
          sigma.matrix().block<2, 2>(2 * steerer_modes[a], 2 * rest[b]).cast<long double>();

  const detail::LongMatrix conditional = sy - e.transpose() * detail::invert_block(sx) * e;
  const Matrix m = conditional.cast<double>();
  return 0.5 * (m + Matrix(m.transpose()));
}

/// Symplectic eigenvalues of a symmetric positive-definite 2m x 2m matrix:
/// the m positive numbers nu with spec(i Omega M) = {+-nu}, sorted ascending.
///
/// Computed in real arithmetic from the factored form of -(Omega M)^2: with
/// the Cholesky factor M = L L^T, the matrix K = L^T Omega L is antisymmetric
/// and similar to Omega M, so its singular values are the {nu} in pairs. The
/// singular values come from a Jacobi SVD rather than an eigensolve of
/// K^T K = -(similar form)^2, which would square the condition number and lose
/// half the digits on small nu. A single mode reduces to sqrt(det M) exactly,
/// and exactly decoupled modes (all cross blocks identically zero) are solved
/// per block, which keeps degenerate channel configurations exact.
inline std::vector<double> symplectic_eigenvalues(const Matrix& m) {
  if (!detail::is_square_even(m))
    throw std::invalid_argument("symplectic_eigenvalues: matrix must be square with even dimension");
  if (!(detail::max_asymmetry(m) <= kStructuralTol))
    throw std::invalid_argument("symplectic_eigenvalues: matrix is not symmetric");
  const Eigen::Index n = m.rows() / 2;

  const auto block_value = [&m](Eigen::Index mode) {
    const double lead = m(2 * mode, 2 * mode);
    const double det = detail::det2(m, 2 * mode, 2 * mode + 1);
    if (!(lead > 0.0) || !(det > 0.0))
      throw std::invalid_argument("symplectic_eigenvalues: matrix is not positive definite");
    return std::sqrt(det);
  };

  if (n == 1) return {block_value(0)};

  bool decoupled = true;
  for (Eigen::Index i = 0; i < n && decoupled; ++i)
    for (Eigen::Index j = i + 1; j < n && decoupled; ++j)
      decoupled = (m.block<2, 2>(2 * i, 2 * j).array() == 0.0).all();
  if (decoupled) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(block_value(i));
    std::sort(out.begin(), out.end());
    return out;
  }

  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("symplectic_eigenvalues: matrix is not positive definite");
  const Matrix l = llt.matrixL();
  const Matrix k = l.transpose() * symplectic_form(static_cast<int>(n)) * l;
  Eigen::JacobiSVD<Matrix> svd(k);

  // Singular values of the antisymmetric K come in pairs (nu, nu), descending.
  std::vector<double> out(static_cast<size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j)
    out[static_cast<size_t>(n - 1 - j)] =
        0.5 * (svd.singularValues()(2 * j) + svd.singularValues()(2 * j + 1));
  return out;
}

/// Renyi-2 entropy S(sigma) = (1/2) ln det sigma, in nats. Zero exactly for
/// pure Gaussian states.
inline double renyi2_entropy(const CovarianceMatrix& sigma) {
  const double det = sigma.determinant();
  if (!(det > 0.0))
    throw numerical_error("renyi2_entropy: covariance matrix has non-positive determinant");
  return 0.5 * std::log(det);
}

struct PhysicalityCheck {
  bool physical;
  // Smallest symplectic eigenvalue; for inputs that are not positive definite
  // this falls back to the smallest ordinary eigenvalue (which is <= 0).
  double min_symplectic_eigenvalue;
};

/// True iff every symplectic eigenvalue is >= 1 - 1e-9.
inline PhysicalityCheck check_physical(const CovarianceMatrix& sigma) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.matrix(), Eigen::EigenvaluesOnly);
  const double min_plain = es.eigenvalues()(0);
  if (!(min_plain > 0.0)) return {false, min_plain};
  const std::vector<double> nus = symplectic_eigenvalues(sigma.matrix());
  const double min_nu = nus.front();
  return {min_nu >= 1.0 - kPhysicalSlack, min_nu};
}

/// Congruence transform sigma' = F sigma F^T with S embedded on the target
/// modes and identity elsewhere. Preserves det sigma.
inline CovarianceMatrix conjugate(const CovarianceMatrix& sigma, const SymplecticTransform& s,
                                  const std::vector<int>& target_modes) {
  if (static_cast<int>(target_modes.size()) != s.modes())
    throw std::invalid_argument("conjugate: transform dimension does not match target modes");
  std::vector<int> sorted = target_modes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("conjugate: duplicate target mode");
  for (int m : target_modes)
    if (m < 0 || m >= sigma.modes())
      throw std::invalid_argument("conjugate: target mode out of range");

  const Eigen::Index dim = sigma.matrix().rows();
  Matrix f = Matrix::Identity(dim, dim);
  const auto k = static_cast<Eigen::Index>(target_modes.size());
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      f.block<2, 2>(2 * target_modes[a], 2 * target_modes[b]) = s.matrix().block<2, 2>(2 * a, 2 * b);
  return CovarianceMatrix(f * sigma.matrix() * f.transpose());
}

/// sigma_a (+) sigma_b on modes(a) + modes(b).
inline CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  const Eigen::Index da = a.matrix().rows();
  const Eigen::Index db = b.matrix().rows();
  Matrix out = Matrix::Zero(da + db, da + db);
  out.topLeftCorner(da, da) = a.matrix();
  out.bottomRightCorner(db, db) = b.matrix();
  return CovarianceMatrix(std::move(out));
}

}  // namespace steerbh
