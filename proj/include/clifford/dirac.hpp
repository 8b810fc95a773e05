#pragma once

#include "clifford/algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string_view>
#include <vector>

// Dirac matrix algebra and the conformal Lie algebra living inside it.
//
// Two gamma conventions are supported; they differ by the sign of the spatial
// off-diagonal blocks and therefore by the sign of gamma5's diagonal:
//
//   weyl:    gamma0 = [[0, I], [I, 0]],  gammak = [[0, -sk], [sk, 0]]
//   keller:  gamma0 = [[0, I], [I, 0]],  gammak = [[0, sk], [-sk, 0]]
//
// with sk the Pauli matrices and metric diag(1,-1,-1,-1).  Everything below is
// convention-parameterised so the two can be compared side by side.

namespace clif {

using Mat4C = Eigen::Matrix4cd;
using Mat2C = Eigen::Matrix2cd;

enum class GammaRep { weyl, keller };

struct GammaSet {
  GammaRep rep = GammaRep::weyl;
  std::array<Mat4C, 4> gamma; // gamma[mu], mu = 0..3
  Mat4C gamma5;               // gamma0 gamma1 gamma2 gamma3
};

GammaSet make_gammas(GammaRep rep);

/// Minkowski metric component g_{mu nu}, signature (+,-,-,-).
double minkowski_metric(int mu, int nu);

/// Largest Frobenius-norm violation of {gamma_mu, gamma_nu} = 2 g_{mu nu} I,
/// gamma5^2 = -I, and {gamma5, gamma_mu} = 0.  Exactly zero entries in, so
/// anything above rounding noise means the construction is wrong.
double gamma_relation_residual(const GammaSet& gs);

/// Dirac adjoint of a matrix: gamma0 m^dagger gamma0.
Mat4C dirac_bar(const GammaSet& gs, const Mat4C& m);

// ---------------------------------------------------------------------------
// Generator frames for one extra dimension.
//
// The Dirac algebra hosts a five-element frame E_0..E_4 with E_0^2 = -I,
// E_1^2 = ... = E_4^2 = +I, all pairs anticommuting.  Two standard
// realizations:
//
//   scaled:  E_mu = -i gamma_mu,           E_4 = -i gamma5
//   paired:  E_0 = i gamma0,  E_k = gamma_k gamma0,  E_4 = gamma5 gamma0
//
// The paired frame's E_4 equals -gamma1 gamma2 gamma3.
// ---------------------------------------------------------------------------

enum class FrameKind { scaled, paired };

struct FiveFrame {
  FrameKind kind = FrameKind::scaled;
  std::array<Mat4C, 5> E;
};

FiveFrame make_five_frame(const GammaSet& gs, FrameKind kind);

/// Largest violation of the frame relations (E_0^2 = -I, E_a^2 = +I for
/// a >= 1, E_a E_b + E_b E_a = 0 for a != b).
double five_frame_residual(const FiveFrame& f);

// ---------------------------------------------------------------------------
// Conformal Lie algebra: fifteen generators built from gamma products.
//
//   P_mu = 1/2 gamma_mu (1 + i gamma5)       translations
//   K_mu = -1/2 gamma_mu (1 - i gamma5)      special conformal
//   D    = 1/2 i gamma5                      dilation
//   M_mn = 1/4 (gamma_m gamma_n - gamma_n gamma_m)   rotations/boosts
//
// Basis order: P0..P3, K0..K3, D, M01, M02, M03, M12, M13, M23.
// ---------------------------------------------------------------------------

inline constexpr std::array<const char*, 15> kGeneratorNames = {
    "P0", "P1", "P2", "P3", "K0", "K1", "K2", "K3", "D",
    "M01", "M02", "M03", "M12", "M13", "M23"};

struct ConformalBasis {
  GammaRep rep = GammaRep::weyl;
  GammaSet gammas;
  std::array<Mat4C, 15> gen;
};

ConformalBasis make_conformal_basis(GammaRep rep);

/// Index of a generator name ("P0".."M23"); throws algebra_error on unknown.
int generator_index(std::string_view name);

/// Closed-form structure constants: the coefficient vector c with
/// [gen_i, gen_j] = sum_k c_k gen_k.  The table is
///   [P,P] = [K,K] = [M,D] = 0
///   [M_mn, P_l] = -(g_ml P_n - g_nl P_m)      (same shape for K)
///   [M_mn, M_sr] = g_mr M_ns + g_ns M_mr - g_ms M_nr - g_nr M_ms
///   [P_m, K_n]  = 2 (g_mn D - M_mn)
///   [P_m, D] = P_m,   [K_m, D] = -K_m
/// The numerically decomposed table is checked against this.
std::array<double, 15> expected_commutator(int i, int j);

struct CommutatorEntry {
  int i = 0, j = 0;               // generator indices, i < j
  std::array<double, 15> coeff{}; // least-squares decomposition of [gen_i, gen_j]
  double residual = 0.0;          // Frobenius norm of the part outside the span
};

struct CommutatorTable {
  GammaRep rep = GammaRep::weyl;
  std::vector<CommutatorEntry> entries; // all 105 unordered pairs
  double max_residual = 0.0;
};

/// Compute every pairwise commutator as matrices and decompose each one in the
/// generator basis by least squares.  A nonzero residual means the fifteen
/// generators fail to close under the bracket.
CommutatorTable commutator_table(const ConformalBasis& basis);

/// The swap P -> -K, K -> -P, D -> -D, M -> M extended linearly is an
/// automorphism of the algebra.  Returns the largest Frobenius deviation of
/// [sigma(g_i), sigma(g_j)] from sigma([g_i, g_j]) over all pairs, using the
/// decomposition in `table` to push sigma through the bracket.
double duality_residual(const ConformalBasis& basis, const CommutatorTable& table);

// ---------------------------------------------------------------------------
// Spin-group exponentials inside a Clifford algebra (any signature).
// ---------------------------------------------------------------------------

/// exp(t B) for a pure grade-2 element B; throws algebra_error for anything
/// with components outside grade 2.  The result R satisfies R rev(R) = 1.
Multivector spin_exp(const Multivector& B, double t);

/// R v R^{-1}.
Multivector adjoint_action(const Multivector& R, const Multivector& v);

/// Truncated series sum_k (t^k / k!) ad_B^k(v) with ad_B(v) = B v - v B.
/// Must agree with adjoint_action(spin_exp(B, t), v); throws numeric_error if
/// the series has not settled within max_terms.
Multivector adjoint_series(const Multivector& B, double t, const Multivector& v,
                           int max_terms = 96, double tol = 1e-14);

} // namespace clif
