#pragma once

#include "clifford/algebra.hpp"
#include "clifford/rng.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace clif {

/// 2x2 matrix with entries in one Clifford algebra, laid out
///
///     [[ a  c ]
///      [ b  d ]]
///
/// i.e. `a` upper-left, `c` upper-right, `b` lower-left, `d` lower-right.
/// With paravector entries over Cl(3,0) these are the Vahlen matrices of the
/// conformal group; over Cl(0,1) they degenerate to complex Moebius maps.
struct ClMat2 {
  Multivector a, b, c, d;

  explicit ClMat2(int p, int q)
      : a(p, q), b(p, q), c(p, q), d(p, q) {}
  ClMat2(Multivector a_, Multivector b_, Multivector c_, Multivector d_);

  int p() const { return a.p(); }
  int q() const { return a.q(); }

  ClMat2 operator*(const ClMat2& o) const;
  ClMat2 operator+(const ClMat2& o) const;
  ClMat2 operator*(double s) const;

  static ClMat2 identity(int p, int q);
};

/// Entrywise tilde: [[bar d, bar c], [bar b, bar a]].
ClMat2 mat_reversion(const ClMat2& m);

/// Entrywise bar: [[rev d, -rev c], [-rev b, rev a]]; for a Vahlen matrix g
/// the product g * mat_conjugation(g) has diagonal
/// (a rev(d) - c rev(b), d rev(a) - b rev(c)) and vanishing off-diagonals.
ClMat2 mat_conjugation(const ClMat2& m);

// --- paravector helpers (generic over the entry algebra) ---

/// s + v with v the coordinate vector over the generators.
Multivector make_paravector(int p, int q, double s,
                            const std::vector<double>& v);

/// True when all grades above 1 vanish within tol.
bool is_paravector(const Multivector& x, double tol = 0.0);

/// x * bar(x), a real scalar for paravectors; the Minkowski quadratic form
/// in the Cl(3,0) model, |z|^2 in the Cl(0,1) plane model.
double paravector_norm(const Multivector& x);

/// Polarization of paravector_norm: the scalar part of a * bar(b).
double paravector_pairing(const Multivector& a, const Multivector& b);

// --- the projective quadric (Klein absolute) ---

/// Projective point (x, lambda, mu) subject to norm(x) = lambda * mu.
struct QuadricPoint {
  Multivector x;
  double lambda = 0.0;
  double mu = 0.0;
};

///// kappa: x -> (x, norm(x), 1); lands on the quadric by construction.
QuadricPoint compactify(const Multivector& x);

/// norm(x) - lambda*mu; zero (within tolerance) on the quadric.
double klein_residual(const QuadricPoint& pt);

/// pi: (x, lambda, mu) -> x / mu.  Throws numeric_error at the point at
/// infinity (|mu| <= 1e-12).
Multivector project(const QuadricPoint& pt);

/// [[x, lambda], [mu, bar x]] -- the matrix carrying a quadric point.
ClMat2 quadric_to_matrix(const QuadricPoint& pt);

/// Six homogeneous coordinates (a0..a5) of the Cl(3,0) model:
/// x = a5 + a1 e1 + a2 e2 + a3 e3, lambda = a4 - a0, mu = a0 + a4.
ClMat2 paravector_to_matrix(const std::array<double, 6>& alpha);

/// Decodes g b g~ back to a quadric point; throws numeric_error when the
/// upper-left entry is not a paravector or the matrix is off-form
/// (off-form residual >= 1e-6 relative).
QuadricPoint matrix_to_quadric(const ClMat2& m);

// --- Vahlen membership ---

/// Per-condition outcome for the six membership conditions:
///   (i)   a bar(a), b bar(b), c bar(c), d bar(d) real
///   (ii)  a bar(b), c bar(d) paravectors
///   (iii) a v bar(c) + c bar(v) bar(a)  and  c v bar(d) + d bar(v) bar(c)
///         real for every paravector v
///   (iv)  a v bar(d) + c bar(v) bar(b) a paravector for every paravector v
///   (v)   a rev(c) = c rev(a),  b rev(d) = d rev(b)
///   (vi)  a rev(d) - c rev(b) = 1
/// (iii)/(iv) are linear in v, so they are checked on the spanning set
/// {1, e_1, ..., e_n} plus eight seeded random paravectors.
struct PinConditionReport {
  std::array<bool, 6> ok{};
  std::array<double, 6> residual{};
  bool all_ok() const;
  double max_residual() const;
};

PinConditionReport verify_pin_conditions(const ClMat2& m, double tol = 1e-9,
                                         std::uint64_t seed = kDefaultSeed);

/// A ClMat2 that passed verify_pin_conditions at construction.
struct PinElement {
  ClMat2 m;
  bool validated = false;
};

/// Validates and wraps; throws verification_error when a condition fails.
PinElement make_pin(const ClMat2& m, double tol = 1e-9,
                    std::uint64_t seed = kDefaultSeed);

/// Matrix product of two validated elements, revalidated (no
/// renormalization is attempted; drift surfaces as verification_error).
PinElement compose(const PinElement& g1, const PinElement& g2,
                   double tol = 1e-9);

// --- the conformal map table ---

PinElement translation_map(const Multivector& h);        // [[1, h], [0, 1]]
PinElement dilation_map(int p, int q, double rho);       // diag(sqrt rho, 1/sqrt rho)
PinElement rotation_map(const Multivector& g);           // diag(g, hat g), g even unit
PinElement inversion_map(int p, int q);                  // [[0, -1], [1, 0]]
PinElement transvection_map(const Multivector& h);       // [[1, 0], [h, 1]]

/// Rotor exp(-(angle/2) B) for the unit blade B of the oriented plane;
/// rotates the plane's first axis toward its second by `angle`.
Multivector plane_rotor(int p, int q, std::uint32_t plane_mask, double angle);

/// The four elements covering the identity map: +/-1 and +/-e123 on the
/// diagonal (the pseudoscalar is central in Cl(3,0) and squares to -1, so it
/// plays the role of the imaginary unit).
std::vector<PinElement> center_elements();

// --- applying maps ---

struct MapResult {
  bool at_infinity = false;
  Multivector x;   // meaningful when !at_infinity
  double delta = 0.0;  // norm(b x + d), the conformal factor denominator
};

/// x' = (a x + c)(b x + d)^{-1} with the inverse realized through bar/norm;
/// at_infinity is set when |norm(b x + d)| <= 1e-12.
MapResult apply_conformal(const PinElement& g, const Multivector& x);

/// sigma-hat: b -> g b g~ on quadric points.  Preserves the Klein absolute.
QuadricPoint twisted_adjoint(const PinElement& g, const QuadricPoint& pt);

// --- quasi-spheres ---

/// Solution set of a*norm(x) + <b, x> + c = 0 with b a paravector and
/// <.,.> the paravector pairing; spheres and hyperplanes in one family.
struct QuasiSphere {
  double a = 0.0;
  Multivector b;
  double c = 0.0;
};

double quasi_sphere_eval(const QuasiSphere& s, const Multivector& x);

/// Least-squares fit of a quasi-sphere through the given points (unit-norm
/// coefficient vector via SVD).  Returns the sphere and the smallest
/// singular value as the fit residual.
std::pair<QuasiSphere, double> fit_quasi_sphere(
    const std::vector<Multivector>& pts);

// --- conformality of the induced point map ---

/// Central-difference Jacobian of apply_conformal at x0 in paravector
/// coordinates; returns the relative deviation of J^T eta J from the
/// closest multiple of eta (eta = diag(+1, -1, ..., -1)).
double jacobian_conformality(const PinElement& g, const Multivector& x0,
                             double step = 1e-5);

// --- the plane (Moebius) specialization over Cl(0,1) ---

Multivector complex_to_paravector(std::complex<double> z);
std::complex<double> paravector_to_complex(const Multivector& x);

struct MobiusResult {
  bool at_infinity = false;
  std::complex<double> z{};
  double omega = 0.0;  // |b z + d|^2
};

/// Direct complex evaluation of z' = (a z + c)/(b z + d) for the matrix
/// [[a, c], [b, d]]; the algebraic route through apply_conformal over
/// Cl(0,1) must agree, which the test suite enforces.
MobiusResult mobius_plane_apply(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, std::complex<double> d,
                                std::complex<double> z);

/// The same map through the Vahlen machinery over Cl(0,1).
MobiusResult mobius_algebraic_apply(std::complex<double> a,
                                    std::complex<double> b,
                                    std::complex<double> c,
                                    std::complex<double> d,
                                    std::complex<double> z);

} // namespace clif
