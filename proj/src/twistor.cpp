#include "clifford/twistor.hpp"

#include <cmath>

namespace clif {

namespace {

const std::complex<double> kI(0.0, 1.0);

/// The weyl-convention machinery the ideal construction is pinned to.
const GammaSet& weyl_gammas() {
  static const GammaSet gs = make_gammas(GammaRep::weyl);
  return gs;
}

const FiveFrame& weyl_paired_frame() {
  static const FiveFrame f = make_five_frame(weyl_gammas(), FrameKind::paired);
  return f;
}

} // namespace

Mat4C projector(const GammaSet& gs, ProjectorSide side) {
  // The sign in 1/2 (1 +/- i gamma5) that keeps the lower block depends on
  // gamma5's diagonal, which flips between the two conventions.
  const double s = (gs.rep == GammaRep::weyl) ? -1.0 : 1.0;
  const Mat4C left = 0.5 * (Mat4C::Identity() + s * kI * gs.gamma5);
  if (side == ProjectorSide::left) return left;
  return Mat4C::Identity() - left;
}

Mat2C vec_matrix(const std::array<double, 4>& x) {
  Mat2C m;
  m(0, 0) = x[0] + x[3];
  m(0, 1) = std::complex<double>(x[1], x[2]);
  m(1, 0) = std::complex<double>(x[1], -x[2]);
  m(1, 1) = x[0] - x[3];
  return m;
}

Mat2C vec_matrix_conj(const std::array<double, 4>& x) {
  return vec_matrix({x[0], -x[1], -x[2], -x[3]});
}

Mat4C point_matrix(const GammaSet& gs, const std::array<double, 4>& x) {
  Mat4C m = Mat4C::Zero();
  for (int mu = 0; mu < 4; ++mu) m += x[mu] * gs.gamma[mu];
  return m;
}

Twistor reference_twistor(const GammaSet& gs, const std::array<double, 4>& x,
                          const Vec2C& xi) {
  Vec4C pi;
  pi << 0.0, 0.0, xi(0), xi(1);
  Twistor t;
  t.construction = TwistorConstruction::reference;
  t.base = x;
  t.seed = xi;
  t.components =
      (Mat4C::Identity() + gs.gamma5 * point_matrix(gs, x)) * pi;
  return t;
}

double NullParavector5::norm() const {
  return alpha[5] * alpha[5] + alpha[0] * alpha[0] - alpha[1] * alpha[1] -
         alpha[2] * alpha[2] - alpha[3] * alpha[3] - alpha[4] * alpha[4];
}

bool NullParavector5::is_null(double tol) const {
  double scale = 0.0;
  for (double a : alpha) scale += a * a;
  return std::abs(norm()) <= tol * std::max(1.0, scale);
}

NullParavector5 NullParavector5::from_minkowski(const std::array<double, 4>& x) {
  const double q =
      x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
  NullParavector5 p;
  p.alpha[0] = 0.5 * (1.0 - q);
  p.alpha[1] = x[1];
  p.alpha[2] = x[2];
  p.alpha[3] = x[3];
  p.alpha[4] = 0.5 * (1.0 + q);
  p.alpha[5] = x[0];
  return p;
}

std::array<double, 4> NullParavector5::minkowski() const {
  return {alpha[5], alpha[1], alpha[2], alpha[3]};
}

Mat4C paravector_matrix(const GammaSet& gs, const NullParavector5& x) {
  const FiveFrame f = make_five_frame(gs, FrameKind::paired);
  Mat4C m = x.alpha[5] * Mat4C::Identity();
  for (int a = 0; a < 5; ++a) m += x.alpha[a] * f.E[a];
  return m;
}

Mat4C chi_matrix(const GammaSet& gs, const NullParavector5& x) {
  const FiveFrame f = make_five_frame(gs, FrameKind::paired);
  return paravector_matrix(gs, x) * f.E[4];
}

Vec2C ideal_seed(const Mat4C& U) {
  const Mat4C pl = projector(weyl_gammas(), ProjectorSide::left);
  const Vec4C column = (pl * U).col(0);
  Vec2C xi;
  xi << column(2), column(3);
  return xi;
}

Twistor twistor_from_ideal(const NullParavector5& x, const Mat4C& U) {
  const GammaSet& gs = weyl_gammas();
  const Mat4C pl = projector(gs, ProjectorSide::left);
  Twistor t;
  t.construction = TwistorConstruction::ideal;
  t.base = x.minkowski();
  t.seed = ideal_seed(U);
  // f = first-column matrix unit, so chi P_L U f has one surviving column.
  t.components = (chi_matrix(gs, x) * pl * U).col(0);
  return t;
}

Mat4C incidence(const NullParavector5& x, const NullParavector5& xp,
                const Mat4C& U, double tol) {
  if (!x.is_null(tol) || !xp.is_null(tol))
    throw numeric_error("incidence form requires null paravectors");
  const GammaSet& gs = weyl_gammas();
  const Mat4C e4 = weyl_paired_frame().E[4];
  const Mat4C xm = paravector_matrix(gs, x);
  const Mat4C xpm = paravector_matrix(gs, xp);
  return -dirac_bar(gs, U) * e4 * dirac_bar(gs, xm) * xpm * e4 * U;
}

std::vector<ScanVerdict> robinson_scan(const NullParavector5& x, const Mat4C& U,
                                       const std::vector<NullParavector5>& samples,
                                       double tol) {
  std::vector<ScanVerdict> out;
  out.reserve(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    ScanVerdict v;
    v.index = k;
    if (!samples[k].is_null(tol)) {
      v.rejected = true;
      out.push_back(v);
      continue;
    }
    const Mat4C j = incidence(x, samples[k], U, tol);
    v.max_entry = j.cwiseAbs().maxCoeff();
    v.incident = v.max_entry < tol;
    out.push_back(v);
  }
  return out;
}

} // namespace clif
