#include <doctest.h>

#include "clifford/rng.hpp"
#include "clifford/tensor2.hpp"

#include <tuple>
#include <utility>
#include <vector>

using clif::Multivector;
using clif::ShiftKind;
using clif::TensorElement;

TEST_CASE("pure tensors multiply factorwise") {
  clif::Rng rng(31);
  for (auto [pv, qv] : {std::pair{1, 1}, {2, 0}, {0, 2}}) {
    Multivector a(pv, qv), c(pv, qv);
    Multivector b(2, 1), d(2, 1);
    for (std::uint32_t m = 0; m < 4; ++m) {
      a.at(m) = rng.normal();
      c.at(m) = rng.normal();
    }
    for (std::uint32_t m = 0; m < 8; ++m) {
      b.at(m) = rng.normal();
      d.at(m) = rng.normal();
    }
    auto lhs = TensorElement::tensor(a, b) * TensorElement::tensor(c, d);
    auto rhs = TensorElement::tensor(a * c, b * d);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("composite mask layout keeps the V factor in the low bits") {
  auto f1 = Multivector::basis_vector(1, 1, 1);
  auto e2 = Multivector::basis_vector(2, 1, 2);
  auto t = TensorElement::tensor(f1, e2);
  CHECK(t.coefficient(0b01, 0b010) == doctest::Approx(1.0));
  CHECK(t.norm() == doctest::Approx(1.0));
}

TEST_CASE("volume element of the split-off plane squares by signature") {
  // (f1 f2)^2 = -lambda1 lambda2: +1 for the (1,1) plane, -1 for the others.
  const std::vector<std::tuple<int, int, double>> cases = {
      {1, 1, 1.0}, {2, 0, -1.0}, {0, 2, -1.0}};
  for (auto [pv, qv, want] : cases) {
    auto f1 = Multivector::basis_vector(pv, qv, 1);
    auto f2 = Multivector::basis_vector(pv, qv, 2);
    auto one = Multivector::scalar(2, 1, 1.0);
    auto vol = TensorElement::tensor(f1 * f2, one);
    auto sq = vol * vol;
    CHECK((sq - TensorElement::tensor(Multivector::scalar(pv, qv, want), one))
              .norm() < 1e-14);
  }
}

TEST_CASE("hand-checked (1,1)-shift of Cl(3,0) into Cl(4,1)") {
  // Images: E_i = f1f2 (x) e_i (i = 1..3), E_4 = f1 (x) 1, E_5 = f2 (x) 1.
  auto iso = clif::make_shift_iso(3, 0, ShiftKind::add11);
  REQUIRE(iso.src_p == 4);
  REQUIRE(iso.src_q == 1);
  REQUIRE(iso.gen_image.size() == 5);
  CHECK(iso.gen_image[0].coefficient(0b11, 0b001) == 1.0);
  CHECK(iso.gen_image[3].coefficient(0b01, 0b000) == 1.0);
  CHECK(iso.gen_image[4].coefficient(0b10, 0b000) == 1.0);

  auto one = TensorElement::unit(1, 1, 3, 0);
  for (int i = 0; i < 5; ++i) {
    auto sq = iso.gen_image[i] * iso.gen_image[i];
    CHECK((sq - one * (i < 4 ? 1.0 : -1.0)).norm() == 0.0);
  }
  // Recovering the partner generators: E_i E_4 E_5 = 1 (x) e_i.
  for (int i = 0; i < 3; ++i) {
    auto rec = iso.gen_image[i] * iso.gen_image[3] * iso.gen_image[4];
    auto want = TensorElement::tensor(Multivector::scalar(1, 1, 1.0),
                                      Multivector::basis_vector(3, 0, i + 1));
    CHECK((rec - want).norm() == 0.0);
  }
}

TEST_CASE("all three shifts verify exhaustively for small signatures") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) {
      if (p + q == 0) continue;
      for (auto kind : {ShiftKind::add11, ShiftKind::add20, ShiftKind::add02}) {
        auto rep = clif::verify_shift(p, q, kind, 7);
        INFO("Cl(", p, ",", q, ") kind ", int(kind));
        CHECK(rep.blade_bijection);
        CHECK(rep.max_residual() < 1e-9);
      }
    }
}

TEST_CASE("shift signatures land where the classification says") {
  auto r1 = clif::make_shift_iso(2, 1, ShiftKind::add11);
  CHECK(r1.src_p == 3);
  CHECK(r1.src_q == 2);
  auto r2 = clif::make_shift_iso(2, 1, ShiftKind::add20);
  CHECK(r2.src_p == 3);
  CHECK(r2.src_q == 2);
  auto r3 = clif::make_shift_iso(2, 1, ShiftKind::add02);
  CHECK(r3.src_p == 1);
  CHECK(r3.src_q == 4);
}

TEST_CASE("transported anti-involution scales every generator image by eps") {
  for (auto kind : {ShiftKind::add11, ShiftKind::add20, ShiftKind::add02})
    for (int eps : {+1, -1}) {
      auto iso = clif::make_shift_iso(2, 2, kind);
      for (const auto& g : iso.gen_image)
        CHECK((clif::transported_antiinvolution(g, eps) - g * double(eps))
                  .norm() == 0.0);
    }
}

TEST_CASE("empty partner algebra is rejected") {
  CHECK_THROWS_AS(clif::make_shift_iso(0, 0, ShiftKind::add11),
                  clif::algebra_error);
}
