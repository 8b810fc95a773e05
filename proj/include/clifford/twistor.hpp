#pragma once

#include "clifford/dirac.hpp"

#include <array>
#include <cstddef>
#include <vector>

// Twistors as algebraic spinors.
//
// A twistor is a 4-component complex column built either directly from a
// Minkowski point and a 2-spinor seed ("reference" construction, available in
// both gamma conventions), or as chi * P_L * U * f inside the Dirac algebra
// ("ideal" construction).  The ideal construction, the incidence form, and the
// Robinson scan are fixed to the weyl convention, where the derivation chain
//   E4 Pi = -i gamma0 Pi,  chi Pi = (1 - i x) Pi = (1 + gamma5 x) Pi
// closes identically; the test suite walks that chain line by line.

namespace clif {

using Vec4C = Eigen::Vector4cd;
using Vec2C = Eigen::Vector2cd;

enum class ProjectorSide { left, right };

/// Chirality projectors.  The left projector is pinned operationally as the
/// one keeping the lower 2-block, so that P_L w has the column shape (0, xi):
/// 1/2 (1 - i gamma5) in the weyl convention, 1/2 (1 + i gamma5) in keller.
Mat4C projector(const GammaSet& gs, ProjectorSide side);

/// Hermitian 2x2 encoding of a Minkowski point (t, x, y, z):
///   [[t + z, x + iy], [x - iy, t - z]]
/// Its determinant is the Minkowski norm t^2 - x^2 - y^2 - z^2.
Mat2C vec_matrix(const std::array<double, 4>& x);

/// The same encoding of the spatially reflected point (t, -x, -y, -z).
Mat2C vec_matrix_conj(const std::array<double, 4>& x);

/// The honest 4x4 matrix x^mu gamma_mu in the given convention.
Mat4C point_matrix(const GammaSet& gs, const std::array<double, 4>& x);

enum class TwistorConstruction { reference, ideal };

struct Twistor {
  Vec4C components;
  TwistorConstruction construction = TwistorConstruction::reference;
  std::array<double, 4> base{}; // Minkowski base point (reference construction)
  Vec2C seed = Vec2C::Zero();   // the 2-spinor the lower block must reproduce
};

/// (1 + gamma5 * point_matrix(x)) applied to Pi = (0, 0, xi1, xi2) by honest
/// 4x4 arithmetic.  The lower block of the result is exactly xi; the upper
/// block works out to -i * conj(vec_matrix_conj(x)) * xi in the weyl
/// convention and +i * conj(vec_matrix(x)) * xi in keller (conj entrywise),
/// which on the y = 0 slice reduces to the familiar +/- i * xvec * xi forms.
Twistor reference_twistor(const GammaSet& gs, const std::array<double, 4>& x,
                          const Vec2C& xi);

// ---------------------------------------------------------------------------
// Paravectors of R (+) R^{4,1} realized through the paired five-frame, and the
// ideal-based twistor construction.
// ---------------------------------------------------------------------------

struct NullParavector5 {
  /// alpha[A] multiplies E_A for A = 0..4; alpha[5] is the scalar slot.
  /// Minkowski data sits in (alpha[5]; alpha[1..3]); alpha[0] and alpha[4]
  /// are the two cone slots.
  std::array<double, 6> alpha{};

  /// Paravector norm x bar(x): a5^2 + a0^2 - a1^2 - a2^2 - a3^2 - a4^2.
  double norm() const;
  bool is_null(double tol = 1e-9) const;

  /// The normalization weight mu = alpha0 + alpha4; the ideal construction
  /// reproduces the reference twistor exactly when mu = 1.
  double mu() const { return alpha[0] + alpha[4]; }

  /// Embed a Minkowski point on the null quadric: scalar slot t, spatial
  /// slots (x, y, z), cone slots (1 -/+ q)/2 with q the Minkowski norm.
  /// The result is null with mu = 1 by construction.
  static NullParavector5 from_minkowski(const std::array<double, 4>& x);

  /// The Minkowski slots (alpha5; alpha1..3); the inverse of from_minkowski
  /// on its image.
  std::array<double, 4> minkowski() const;
};

/// Matrix of the paravector (scalar * I + sum alpha_A E_A) in the paired
/// five-frame over the weyl gammas.
Mat4C paravector_matrix(const GammaSet& gs, const NullParavector5& x);

/// chi = x * E4.  Defined for any paravector; when mu = 1 it satisfies
/// chi * P_L = (1 + gamma5 * point_matrix) * P_L as matrices.
Mat4C chi_matrix(const GammaSet& gs, const NullParavector5& x);

/// The seed the ideal construction feeds through: the lower 2-block of the
/// first column of P_L * U (i.e. of P_L U f with f the first-column unit).
Vec2C ideal_seed(const Mat4C& U);

/// chi * P_L * U * f with f the matrix unit selecting the first column; the
/// surviving column is returned as the twistor components.  Fixed to the weyl
/// convention.  Equals reference_twistor(x.minkowski(), ideal_seed(U)) when
/// x.mu() == 1.
Twistor twistor_from_ideal(const NullParavector5& x, const Mat4C& U);

/// Incidence form J = -bar(U) E4 bar(x) x' E4 U, with bar the Dirac adjoint
/// (the algebra conjugation transported to matrices).  Zero exactly when the
/// two null points are incident; throws numeric_error if either paravector is
/// off the null quadric, where the form is not defined.
Mat4C incidence(const NullParavector5& x, const NullParavector5& xp,
                const Mat4C& U, double tol = 1e-9);

struct ScanVerdict {
  std::size_t index = 0;
  bool rejected = false; // sample was not null; no verdict
  bool incident = false;
  double max_entry = 0.0; // largest |J entry|, when not rejected
};

/// Evaluate the incidence form of x against every sample; a sample is
/// incident when every entry of J is below tol in magnitude.  Non-null
/// samples are rejected individually rather than aborting the scan.
std::vector<ScanVerdict> robinson_scan(const NullParavector5& x, const Mat4C& U,
                                       const std::vector<NullParavector5>& samples,
                                       double tol = 1e-9);

} // namespace clif
