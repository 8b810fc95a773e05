#include <doctest.h>

#include "clifford/rng.hpp"
#include "clifford/twistor.hpp"

#include <array>
#include <cmath>
#include <complex>

using clif::Mat2C;
using clif::Mat4C;
using clif::NullParavector5;
using clif::Vec2C;
using clif::Vec4C;

namespace {

const std::complex<double> I(0.0, 1.0);

std::array<double, 4> random_point(clif::Rng& rng, double scale = 1.0) {
  return {rng.normal() * scale, rng.normal() * scale, rng.normal() * scale,
          rng.normal() * scale};
}

Mat4C random_matrix(clif::Rng& rng) {
  Mat4C u;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) u(r, c) = {rng.normal(), rng.normal()};
  return u;
}

Vec2C random_spinor(clif::Rng& rng) {
  Vec2C xi;
  xi << std::complex<double>(rng.normal(), rng.normal()),
      std::complex<double>(rng.normal(), rng.normal());
  return xi;
}

} // namespace

TEST_CASE("chirality projectors keep the expected blocks") {
  for (auto rep : {clif::GammaRep::weyl, clif::GammaRep::keller}) {
    auto gs = clif::make_gammas(rep);
    auto pl = clif::projector(gs, clif::ProjectorSide::left);
    auto pr = clif::projector(gs, clif::ProjectorSide::right);
    CHECK((pl * pl - pl).norm() < 1e-14);
    CHECK((pr * pr - pr).norm() < 1e-14);
    CHECK((pl + pr - Mat4C::Identity()).norm() < 1e-14);
    CHECK((pl * pr).norm() < 1e-14);
    Mat4C lower = Mat4C::Zero();
    lower(2, 2) = 1.0;
    lower(3, 3) = 1.0;
    CHECK((pl - lower).norm() < 1e-14);
  }
}

TEST_CASE("Hermitian point encoding and its determinant") {
  CHECK((clif::vec_matrix({1, 0, 0, 0}) - Mat2C::Identity()).norm() == 0.0);
  Mat2C dz;
  dz << 1, 0, 0, -1;
  CHECK((clif::vec_matrix({0, 0, 0, 1}) - dz).norm() == 0.0);
  Mat2C mixed;
  mixed << 0, std::complex<double>(1, 1), std::complex<double>(1, -1), 0;
  CHECK((clif::vec_matrix({0, 1, 1, 0}) - mixed).norm() == 0.0);
  CHECK(clif::vec_matrix({0, 1, 1, 0}).determinant().real() ==
        doctest::Approx(-2.0));

  clif::Rng rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    auto x = random_point(rng);
    auto m = clif::vec_matrix(x);
    CHECK((m - m.adjoint()).norm() < 1e-14);
    const double want =
        x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    CHECK(m.determinant().real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(m.determinant().imag()) < 1e-12);
    // The conjugate encoding is the spatial reflection.
    CHECK((clif::vec_matrix_conj(x) -
           clif::vec_matrix({x[0], -x[1], -x[2], -x[3]}))
              .norm() == 0.0);
  }
}

TEST_CASE("reference twistor reproduces the displayed examples") {
  auto keller = clif::make_gammas(clif::GammaRep::keller);
  Vec2C e1, e2;
  e1 << 1, 0;
  e2 << 0, 1;
  auto origin = clif::reference_twistor(keller, {0, 0, 0, 0}, e1);
  Vec4C want;
  want << 0, 0, 1, 0;
  CHECK((origin.components - want).norm() < 1e-14);
  auto unit_time = clif::reference_twistor(keller, {1, 0, 0, 0}, e1);
  want << I, 0, 1, 0;
  CHECK((unit_time.components - want).norm() < 1e-14);
  auto unit_z = clif::reference_twistor(keller, {0, 0, 0, 1}, e2);
  want << 0, -I, 0, 1;
  CHECK((unit_z.components - want).norm() < 1e-14);
}

TEST_CASE("reference twistor closed forms in both conventions") {
  clif::Rng rng(62);
  auto weyl = clif::make_gammas(clif::GammaRep::weyl);
  auto keller = clif::make_gammas(clif::GammaRep::keller);
  for (int rep = 0; rep < 12; ++rep) {
    auto x = random_point(rng);
    auto xi = random_spinor(rng);
    auto tw = clif::reference_twistor(weyl, x, xi);
    auto tk = clif::reference_twistor(keller, x, xi);
    // Lower block is the seed, exactly.
    CHECK(tw.components(2) == xi(0));
    CHECK(tw.components(3) == xi(1));
    CHECK(tk.components(2) == xi(0));
    CHECK(tk.components(3) == xi(1));
    // Upper blocks: -i conj(xvec^c) xi (weyl) and +i conj(xvec) xi (keller).
    const Vec2C upper_w = -I * (clif::vec_matrix_conj(x).conjugate() * xi);
    const Vec2C upper_k = I * (clif::vec_matrix(x).conjugate() * xi);
    CHECK(std::abs(tw.components(0) - upper_w(0)) < 1e-13);
    CHECK(std::abs(tw.components(1) - upper_w(1)) < 1e-13);
    CHECK(std::abs(tk.components(0) - upper_k(0)) < 1e-13);
    CHECK(std::abs(tk.components(1) - upper_k(1)) < 1e-13);
  }
  // On the y = 0 slice the keller form is +i * xvec * xi verbatim.
  for (int rep = 0; rep < 6; ++rep) {
    std::array<double, 4> x = {rng.normal(), rng.normal(), 0.0, rng.normal()};
    auto xi = random_spinor(rng);
    auto tk = clif::reference_twistor(keller, x, xi);
    const Vec2C upper = I * (clif::vec_matrix(x) * xi);
    CHECK(std::abs(tk.components(0) - upper(0)) < 1e-13);
    CHECK(std::abs(tk.components(1) - upper(1)) < 1e-13);
    // ... and on the time axis the weyl form is -i * xvec * xi verbatim.
    std::array<double, 4> t = {rng.normal(), 0.0, 0.0, 0.0};
    auto tw = clif::reference_twistor(weyl, t, xi);
    const Vec2C upper_t = -I * (clif::vec_matrix(t) * xi);
    CHECK(std::abs(tw.components(0) - upper_t(0)) < 1e-13);
    CHECK(std::abs(tw.components(1) - upper_t(1)) < 1e-13);
  }
}

TEST_CASE("the textbook mixed-block display evaluates to -i xvec xi") {
  // The classical display pairs gamma5 = diag(-i,-i,i,i) with the block
  // matrix [[0, xvec],[xvec^c, 0]]; its arithmetic gives (-i xvec xi, xi).
  clif::Rng rng(63);
  for (int rep = 0; rep < 6; ++rep) {
    auto x = random_point(rng);
    auto xi = random_spinor(rng);
    Mat4C g5 = Mat4C::Zero();
    g5(0, 0) = g5(1, 1) = -I;
    g5(2, 2) = g5(3, 3) = I;
    Mat4C blocks = Mat4C::Zero();
    blocks.block<2, 2>(0, 2) = clif::vec_matrix(x);
    blocks.block<2, 2>(2, 0) = clif::vec_matrix_conj(x);
    Vec4C pi;
    pi << 0, 0, xi(0), xi(1);
    const Vec4C eta = (Mat4C::Identity() + g5 * blocks) * pi;
    const Vec2C upper = -I * (clif::vec_matrix(x) * xi);
    CHECK(std::abs(eta(0) - upper(0)) < 1e-13);
    CHECK(std::abs(eta(1) - upper(1)) < 1e-13);
    CHECK(eta(2) == xi(0));
    CHECK(eta(3) == xi(1));
  }
}

TEST_CASE("null paravectors from Minkowski points") {
  clif::Rng rng(64);
  for (int rep = 0; rep < 10; ++rep) {
    auto x = random_point(rng, 2.0);
    auto p = NullParavector5::from_minkowski(x);
    CHECK(p.is_null(1e-12));
    CHECK(p.mu() == doctest::Approx(1.0));
    auto back = p.minkowski();
    for (int k = 0; k < 4; ++k) CHECK(back[k] == x[k]);
  }
  NullParavector5 off;
  off.alpha = {0, 0, 0, 0, 0, 1}; // bare scalar slot: norm 1
  CHECK(off.norm() == doctest::Approx(1.0));
  CHECK(!off.is_null());
}

TEST_CASE("chi on the basis slots") {
  auto gs = clif::make_gammas(clif::GammaRep::weyl);
  auto frame = clif::make_five_frame(gs, clif::FrameKind::paired);
  NullParavector5 e4_slot;
  e4_slot.alpha = {0, 0, 0, 0, 1, 0};
  CHECK((clif::chi_matrix(gs, e4_slot) - Mat4C::Identity()).norm() < 1e-14);
  NullParavector5 scalar_slot;
  scalar_slot.alpha = {0, 0, 0, 0, 0, 1};
  CHECK((clif::chi_matrix(gs, scalar_slot) - frame.E[4]).norm() < 1e-14);
}

TEST_CASE("the ideal-construction derivation chain holds line by line") {
  clif::Rng rng(65);
  auto gs = clif::make_gammas(clif::GammaRep::weyl);
  auto frame = clif::make_five_frame(gs, clif::FrameKind::paired);
  auto pl = clif::projector(gs, clif::ProjectorSide::left);
  for (int rep = 0; rep < 10; ++rep) {
    auto xm = random_point(rng);
    auto p = NullParavector5::from_minkowski(xm);
    auto xi = random_spinor(rng);
    Vec4C pi;
    pi << 0, 0, xi(0), xi(1);

    // E4 Pi = -i gamma0 Pi on the left eigenspace.
    CHECK((frame.E[4] * pi + I * gs.gamma[0] * pi).norm() < 1e-13);

    const Mat4C chi = clif::chi_matrix(gs, p);
    const Vec4C chain1 = chi * pi;
    // Expansion over the five slots.
    const Vec4C expanded =
        p.alpha[5] * frame.E[4] * pi + p.alpha[0] * frame.E[0] * frame.E[4] * pi +
        p.alpha[1] * frame.E[1] * frame.E[4] * pi +
        p.alpha[2] * frame.E[2] * frame.E[4] * pi +
        p.alpha[3] * frame.E[3] * frame.E[4] * pi + p.alpha[4] * pi;
    CHECK((chain1 - expanded).norm() < 1e-13);
    // (1 - i x) Pi with x the 4x4 Minkowski matrix (uses mu = 1).
    const Mat4C xmat = clif::point_matrix(gs, xm);
    const Vec4C line2 = pi - I * (xmat * pi);
    CHECK((chain1 - line2).norm() < 1e-13);
    // (1 + gamma5 x) Pi.
    const Vec4C line3 = pi + gs.gamma5 * (xmat * pi);
    CHECK((chain1 - line3).norm() < 1e-13);
    // ... which is the reference twistor.
    auto ref = clif::reference_twistor(gs, xm, xi);
    CHECK((chain1 - ref.components).norm() < 1e-13);

    // The matrix-level statement: chi P_L = (1 + gamma5 x) P_L when mu = 1.
    const Mat4C tx = Mat4C::Identity() + gs.gamma5 * xmat;
    CHECK((chi * pl - tx * pl).norm() < 1e-12);
  }
}

TEST_CASE("ideal twistor equals the reference twistor") {
  clif::Rng rng(66);
  for (int rep = 0; rep < 20; ++rep) {
    auto xm = random_point(rng);
    auto p = NullParavector5::from_minkowski(xm);
    auto U = random_matrix(rng);
    auto ideal = clif::twistor_from_ideal(p, U);
    auto xi = clif::ideal_seed(U);
    auto ref = clif::reference_twistor(clif::make_gammas(clif::GammaRep::weyl),
                                       xm, xi);
    CHECK((ideal.components - ref.components).norm() <
          1e-12 * (1.0 + ref.components.norm()));
    CHECK(ideal.components(2) == xi(0));
    CHECK(ideal.components(3) == xi(1));
  }
  // U = I feeds the annihilated seed: P_L f = 0, so the twistor vanishes.
  auto p0 = NullParavector5::from_minkowski({0, 0, 0, 0});
  CHECK(clif::twistor_from_ideal(p0, Mat4C::Identity()).components.norm() ==
        0.0);
}

TEST_CASE("incidence form vanishes exactly on proportional null points") {
  clif::Rng rng(67);
  for (int rep = 0; rep < 6; ++rep) {
    auto p = NullParavector5::from_minkowski(random_point(rng));
    auto U = random_matrix(rng);
    CHECK(clif::incidence(p, p, U).cwiseAbs().maxCoeff() < 1e-12);
    NullParavector5 doubled = p;
    for (double& a : doubled.alpha) a *= 2.0;
    CHECK(doubled.is_null(1e-12));
    CHECK(clif::incidence(p, doubled, U).cwiseAbs().maxCoeff() < 1e-12);
    // Linearity in the first slot.
    auto q = NullParavector5::from_minkowski(random_point(rng));
    const Mat4C j1 = clif::incidence(p, q, U);
    NullParavector5 p2 = p;
    for (double& a : p2.alpha) a *= 2.0;
    const Mat4C j2 = clif::incidence(p2, q, U);
    CHECK((j2 - 2.0 * j1).norm() < 1e-10 * (1.0 + j1.norm()));
    // Generic distinct pairs do not vanish.
    CHECK(j1.cwiseAbs().maxCoeff() > 1e-6);
  }
  NullParavector5 off;
  off.alpha = {0, 0, 0, 0, 0, 1};
  auto p = NullParavector5::from_minkowski({1, 1, 0, 0});
  CHECK_THROWS_AS(clif::incidence(off, p, Mat4C::Identity()),
                  clif::numeric_error);
}

TEST_CASE("Robinson scan classifies samples and rejects non-null ones") {
  clif::Rng rng(68);
  auto x = NullParavector5::from_minkowski({0.5, 1.0, -0.3, 0.2});
  auto U = random_matrix(rng);
  NullParavector5 doubled = x;
  for (double& a : doubled.alpha) a *= 2.0;
  NullParavector5 other = NullParavector5::from_minkowski({1.0, 0.0, 2.0, 0.5});
  NullParavector5 bad;
  bad.alpha = {0, 0, 0, 0, 0, 1};
  auto verdicts = clif::robinson_scan(x, U, {x, doubled, other, bad});
  REQUIRE(verdicts.size() == 4);
  CHECK(verdicts[0].incident);
  CHECK(verdicts[1].incident);
  CHECK(!verdicts[2].incident);
  CHECK(!verdicts[2].rejected);
  CHECK(verdicts[3].rejected);
}
