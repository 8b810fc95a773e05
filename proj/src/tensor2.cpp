#include "clifford/tensor2.hpp"
#include "clifford/kernels.hpp"
#include "clifford/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

namespace clif {

TensorAlgebra::TensorAlgebra(int pv, int qv, int p, int q)
    : pv_(pv), qv_(qv), wp_(p), wq_(q) {
  const Algebra& V = Algebra::get(pv, qv);
  const Algebra& W = Algebra::get(p, q);
  table_.n = dim();
  table_.size = std::size_t(1) << dim();
  table_.sign.resize(table_.size * table_.size);
  for (std::size_t j = 0; j < table_.size; ++j) {
    const std::uint32_t jv = std::uint32_t(j) & 3u;
    const std::uint32_t jw = std::uint32_t(j) >> 2;
    for (std::size_t k = 0; k < table_.size; ++k) {
      const std::uint32_t kv = std::uint32_t(k) & 3u;
      const std::uint32_t kw = std::uint32_t(k) >> 2;
      table_.sign[j * table_.size + k] =
          double(V.blade_sign(jv, kv) * W.blade_sign(jw, kw));
    }
  }
}

const TensorAlgebra& TensorAlgebra::get(int pv, int qv, int p, int q) {
  if (pv < 0 || qv < 0 || pv + qv != 2)
    throw algebra_error("tensor factor must be two-dimensional");
  if (p < 0 || q < 0 || p + q > 8)
    throw algebra_error("tensor partner Cl(" + std::to_string(p) + "," +
                        std::to_string(q) + ") is out of range");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<TensorAlgebra>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{pv, qv, p, q}];
  if (!slot) slot.reset(new TensorAlgebra(pv, qv, p, q));
  return *slot;
}

TensorElement::TensorElement(int pv, int qv, int p, int q)
    : pv_(pv), qv_(qv), wp_(p), wq_(q),
      coeff_(TensorAlgebra::get(pv, qv, p, q).size(), 0.0) {}

TensorElement TensorElement::tensor(const Multivector& v,
                                    const Multivector& w) {
  if (v.dim() != 2)
    throw algebra_error("left tensor factor must live in a two-dimensional algebra");
  TensorElement t(v.p(), v.q(), w.p(), w.q());
  for (std::uint32_t vm = 0; vm < 4; ++vm)
    for (std::uint32_t wm = 0; wm < w.size(); ++wm)
      t.at(vm, wm) = v[vm] * w[wm];
  return t;
}

TensorElement TensorElement::unit(int pv, int qv, int p, int q) {
  TensorElement t(pv, qv, p, q);
  t.at(0, 0) = 1.0;
  return t;
}

static void check_same(const TensorElement& a, const TensorElement& b) {
  if (&a.algebra() != &b.algebra())
    throw algebra_error("tensor operands live in different algebras");
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  check_same(*this, o);
  TensorElement r(*this);
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  check_same(*this, o);
  TensorElement r(*this);
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
  return r;
}

TensorElement TensorElement::operator-() const {
  TensorElement r(*this);
  for (double& c : r.coeff_) c = -c;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

TensorElement TensorElement::operator*(double s) const {
  TensorElement r(*this);
  for (double& c : r.coeff_) c *= s;
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  check_same(*this, o);
  TensorElement r(pv_, qv_, wp_, wq_);
  kernels::active_backend().product(algebra().table(), coeff_.data(),
                                    o.coeff_.data(), r.coeff_.data());
  return r;
}

bool TensorElement::is_zero(double tol) const {
  for (double c : coeff_)
    if (std::abs(c) > tol) return false;
  return true;
}

double TensorElement::norm() const {
  double s = 0.0;
  for (double c : coeff_) s += c * c;
  return std::sqrt(s);
}

namespace {

TensorElement basis2(int pv, int qv, int p, int q, std::uint32_t vmask,
                     std::uint32_t wmask, double c = 1.0) {
  TensorElement t(pv, qv, p, q);
  t.at(vmask, wmask) = c;
  return t;
}

} // namespace

ShiftIso make_shift_iso(int p, int q, ShiftKind kind) {
  if (p < 0 || q < 0) throw algebra_error("negative signature");
  if (p + q == 0)
    throw algebra_error("dimension shift needs a nontrivial partner algebra");
  ShiftIso iso;
  iso.kind = kind;
  iso.p = p;
  iso.q = q;
  const std::uint32_t f1 = 0b01, f2 = 0b10, f12 = 0b11;
  switch (kind) {
    case ShiftKind::add11: {
      iso.src_p = p + 1;
      iso.src_q = q + 1;
      for (int i = 0; i < p; ++i)
        iso.gen_image.push_back(basis2(1, 1, p, q, f12, 1u << i));
      iso.gen_image.push_back(basis2(1, 1, p, q, f1, 0));
      for (int j = 0; j < q; ++j)
        iso.gen_image.push_back(basis2(1, 1, p, q, f12, 1u << (p + j)));
      iso.gen_image.push_back(basis2(1, 1, p, q, f2, 0));
      break;
    }
    case ShiftKind::add20: {
      iso.src_p = q + 2;
      iso.src_q = p;
      iso.gen_image.push_back(basis2(2, 0, p, q, f1, 0));
      iso.gen_image.push_back(basis2(2, 0, p, q, f2, 0));
      for (int j = 0; j < q; ++j)
        iso.gen_image.push_back(basis2(2, 0, p, q, f12, 1u << (p + j)));
      for (int i = 0; i < p; ++i)
        iso.gen_image.push_back(basis2(2, 0, p, q, f12, 1u << i));
      break;
    }
    case ShiftKind::add02: {
      iso.src_p = q;
      iso.src_q = p + 2;
      for (int j = 0; j < q; ++j)
        iso.gen_image.push_back(basis2(0, 2, p, q, f12, 1u << (p + j)));
      for (int i = 0; i < p; ++i)
        iso.gen_image.push_back(basis2(0, 2, p, q, f12, 1u << i));
      iso.gen_image.push_back(basis2(0, 2, p, q, f1, 0));
      iso.gen_image.push_back(basis2(0, 2, p, q, f2, 0));
      break;
    }
  }
  return iso;
}

static TensorElement blade_image(const ShiftIso& iso, std::uint32_t mask) {
  TensorElement acc = TensorElement::unit(iso.gen_image[0].algebra().pv(),
                                          iso.gen_image[0].algebra().qv(),
                                          iso.p, iso.q);
  for (int k = 0; k < iso.src_p + iso.src_q; ++k)
    if (mask & (1u << k)) acc = acc * iso.gen_image[std::size_t(k)];
  return acc;
}

TensorElement apply_shift_iso(const ShiftIso& iso, const Multivector& src) {
  if (src.p() != iso.src_p || src.q() != iso.src_q)
    throw algebra_error("multivector does not live in the shifted algebra");
  const auto& alg0 = iso.gen_image[0].algebra();
  TensorElement out(alg0.pv(), alg0.qv(), iso.p, iso.q);
  for (std::uint32_t m = 0; m < src.size(); ++m)
    if (src[m] != 0.0) out += blade_image(iso, m) * src[m];
  return out;
}

TensorElement transported_antiinvolution(const TensorElement& t, int eps) {
  if (eps != 1 && eps != -1) throw algebra_error("eps must be +1 or -1");
  // Reversion signs per grade for eps = +1, conjugation signs for eps = -1;
  // the W factor takes the opposite choice.
  auto sgn = [](int grade, int e) {
    const int half = (e == 1) ? grade / 2 : (grade + 1) / 2;
    return (half % 2) ? -1.0 : 1.0;
  };
  const TensorAlgebra& alg = t.algebra();
  TensorElement r(alg.pv(), alg.qv(), alg.wp(), alg.wq());
  for (std::uint32_t vm = 0; vm < 4; ++vm)
    for (std::uint32_t wm = 0; wm < (std::uint32_t(1) << (alg.wp() + alg.wq()));
         ++wm)
      r.at(vm, wm) = sgn(std::popcount(vm), eps) *
                     sgn(std::popcount(wm), -eps) * t.coefficient(vm, wm);
  return r;
}

double ShiftReport::max_residual() const {
  return std::max({generator_residual, product_residual,
                   involution_residual_plus, involution_residual_minus});
}

bool ShiftReport::pass(double tol) const {
  return blade_bijection && max_residual() <= tol;
}

ShiftReport verify_shift(int p, int q, ShiftKind kind, std::uint64_t seed) {
  const ShiftIso iso = make_shift_iso(p, q, kind);
  const Algebra& src = Algebra::get(iso.src_p, iso.src_q);
  const int n = iso.src_p + iso.src_q;
  ShiftReport rep;
  rep.src_p = iso.src_p;
  rep.src_q = iso.src_q;

  // Image generators must satisfy the source Clifford relations.
  const auto& alg0 = iso.gen_image[0].algebra();
  const TensorElement one =
      TensorElement::unit(alg0.pv(), alg0.qv(), iso.p, iso.q);
  for (int i = 0; i < n; ++i) {
    const TensorElement& Ei = iso.gen_image[std::size_t(i)];
    const double sq = (i < iso.src_p) ? 1.0 : -1.0;
    rep.generator_residual =
        std::max(rep.generator_residual, (Ei * Ei - one * sq).norm());
    for (int j = i + 1; j < n; ++j) {
      const TensorElement& Ej = iso.gen_image[std::size_t(j)];
      rep.generator_residual =
          std::max(rep.generator_residual, (Ei * Ej + Ej * Ei).norm());
    }
  }

  // Blade images: each must be +/- a single composite basis element, and the
  // assignment blade -> element must be a bijection.
  std::set<std::uint32_t> seen;
  bool bijective = true;
  std::vector<TensorElement> images;
  images.reserve(src.size());
  for (std::uint32_t m = 0; m < src.size(); ++m)
    images.push_back(blade_image(iso, m));
  for (const TensorElement& img : images) {
    int nonzero = 0;
    std::uint32_t where = 0;
    for (std::uint32_t i = 0; i < img.size(); ++i)
      if (img.coeffs()[i] != 0.0) {
        ++nonzero;
        where = i;
      }
    if (nonzero != 1 || std::abs(img.coeffs()[where]) != 1.0 ||
        !seen.insert(where).second)
      bijective = false;
  }
  rep.blade_bijection = bijective && seen.size() == src.size();

  // Multiplicativity, exhaustive over blade pairs.
  for (std::uint32_t a = 0; a < src.size(); ++a)
    for (std::uint32_t b = 0; b < src.size(); ++b) {
      const Multivector prod = Multivector::blade(iso.src_p, iso.src_q, a) *
                               Multivector::blade(iso.src_p, iso.src_q, b);
      rep.product_residual =
          std::max(rep.product_residual,
                   (images[a] * images[b] - apply_shift_iso(iso, prod)).norm());
    }

  // ... and on dense random elements, which also exercises linearity.
  Rng rng(seed);
  for (int rep_i = 0; rep_i < 8; ++rep_i) {
    Multivector x(iso.src_p, iso.src_q), y(iso.src_p, iso.src_q);
    for (std::uint32_t m = 0; m < src.size(); ++m) {
      x.at(m) = rng.normal();
      y.at(m) = rng.normal();
    }
    const double scale = 1.0 + coeff_norm(x) * coeff_norm(y);
    rep.product_residual = std::max(
        rep.product_residual,
        (apply_shift_iso(iso, x) * apply_shift_iso(iso, y) -
         apply_shift_iso(iso, x * y)).norm() / scale);
    // Random vectors: the image must square to the quadratic form.
    Multivector v(iso.src_p, iso.src_q);
    for (int k = 0; k < n; ++k) v.at(1u << k) = rng.normal();
    const double qv = scalar_part(v * v);
    const TensorElement gv = apply_shift_iso(iso, v);
    rep.product_residual =
        std::max(rep.product_residual, (gv * gv - one * qv).norm() / (1.0 + std::abs(qv)));
  }

  // Involution transport, exhaustive over blades, both signs.
  for (std::uint32_t m = 0; m < src.size(); ++m) {
    const Multivector bl = Multivector::blade(iso.src_p, iso.src_q, m);
    rep.involution_residual_plus = std::max(
        rep.involution_residual_plus,
        (apply_shift_iso(iso, reversion(bl)) -
         transported_antiinvolution(images[m], +1)).norm());
    rep.involution_residual_minus = std::max(
        rep.involution_residual_minus,
        (apply_shift_iso(iso, conjugation(bl)) -
         transported_antiinvolution(images[m], -1)).norm());
  }
  return rep;
}

} // namespace clif
