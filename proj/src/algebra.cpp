#include "clifford/algebra.hpp"
#include "clifford/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace clif {

int reorder_sign(std::uint32_t a, std::uint32_t b) {
  // For each generator in a, count the generators of b it has to jump over
  // to reach its sorted position.  Only the parity matters.
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

int Algebra::blade_metric(std::uint32_t mask) const {
  int s = 1;
  for (int k = 0; k < dim(); ++k)
    if (mask & (1u << k)) s *= metric_sign(k);
  return s;
}

int Algebra::blade_sign(std::uint32_t a, std::uint32_t b) const {
  return reorder_sign(a, b) * blade_metric(a & b);
}

Algebra::Algebra(int p, int q) : p_(p), q_(q) {
  table_.n = dim();
  table_.size = std::size_t(1) << dim();
  if (dim() <= kMaxTabledDim) {
    table_.sign.resize(table_.size * table_.size);
    for (std::size_t j = 0; j < table_.size; ++j)
      for (std::size_t k = 0; k < table_.size; ++k)
        table_.sign[j * table_.size + k] =
            double(blade_sign(std::uint32_t(j), std::uint32_t(k)));
  }
}

const Algebra& Algebra::get(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxDim)
    throw algebra_error("unsupported signature Cl(" + std::to_string(p) + "," +
                        std::to_string(q) + ")");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Algebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, q}];
  if (!slot) slot.reset(new Algebra(p, q));
  return *slot;
}

Multivector::Multivector(int p, int q)
    : p_(p), q_(q), coeff_(Algebra::get(p, q).size(), 0.0) {}

Multivector Multivector::scalar(int p, int q, double s) {
  Multivector m(p, q);
  m.coeff_[0] = s;
  return m;
}

Multivector Multivector::basis_vector(int p, int q, int i) {
  if (i < 1 || i > p + q)
    throw algebra_error("generator index " + std::to_string(i) +
                        " out of range for Cl(" + std::to_string(p) + "," +
                        std::to_string(q) + ")");
  return blade(p, q, 1u << (i - 1));
}

Multivector Multivector::blade(int p, int q, std::uint32_t mask, double coeff) {
  Multivector m(p, q);
  if (mask >= m.size())
    throw algebra_error("blade mask out of range");
  m.coeff_[mask] = coeff;
  return m;
}

static void check_same(const Multivector& a, const Multivector& b) {
  if (a.p() != b.p() || a.q() != b.q())
    throw algebra_error("operands live in different algebras");
}

Multivector Multivector::operator+(const Multivector& o) const {
  check_same(*this, o);
  Multivector r(*this);
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  check_same(*this, o);
  Multivector r(*this);
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
  return r;
}

Multivector Multivector::operator-() const {
  Multivector r(*this);
  for (double& c : r.coeff_) c = -c;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

Multivector Multivector::operator*(double s) const {
  Multivector r(*this);
  for (double& c : r.coeff_) c *= s;
  return r;
}

Multivector Multivector::operator*(const Multivector& o) const {
  check_same(*this, o);
  const Algebra& alg = algebra();
  Multivector r(p_, q_);
  if (!alg.table().sign.empty()) {
    kernels::active_backend().product(alg.table(), coeff_.data(),
                                      o.coeff_.data(), r.coeff_.data());
  } else {
    // Untabled dimensions: compute signs on the fly.
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
      if (coeff_[j] == 0.0) continue;
      for (std::size_t k = 0; k < coeff_.size(); ++k) {
        if (o.coeff_[k] == 0.0) continue;
        r.coeff_[j ^ k] += coeff_[j] *
                           (alg.blade_sign(std::uint32_t(j), std::uint32_t(k)) *
                            o.coeff_[k]);
      }
    }
  }
  return r;
}

bool Multivector::is_zero(double tol) const {
  for (double c : coeff_)
    if (std::abs(c) > tol) return false;
  return true;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  Multivector r(a.p(), a.q());
  const std::size_t n = a.size();
  for (std::uint32_t j = 0; j < n; ++j) {
    if (a[j] == 0.0) continue;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (b[k] == 0.0 || (j & k) != 0) continue; // shared generator kills the wedge
      r.at(j ^ k) += a[j] * (reorder_sign(j, k) * b[k]);
    }
  }
  return r;
}

Multivector grade(const Multivector& a, int k) {
  Multivector r(a.p(), a.q());
  for (std::uint32_t m = 0; m < a.size(); ++m)
    if (std::popcount(m) == k) r.at(m) = a[m];
  return r;
}

double scalar_part(const Multivector& a) { return a[0]; }

static Multivector apply_grade_signs(const Multivector& a, int (*sgn)(int)) {
  Multivector r(a.p(), a.q());
  for (std::uint32_t m = 0; m < a.size(); ++m)
    r.at(m) = sgn(std::popcount(m)) * a[m];
  return r;
}

Multivector reversion(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return (k / 2) % 2 ? -1 : 1; });
}

Multivector grade_involution(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return k % 2 ? -1 : 1; });
}

Multivector conjugation(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return ((k + 1) / 2) % 2 ? -1 : 1; });
}

double metric_pairing(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  // The determinant form is diagonal on an orthogonal blade basis: equal
  // blades pair to the product of their generator squares, everything else
  // (including equal grades on different blades) pairs to zero.
  const Algebra& alg = a.algebra();
  double s = 0.0;
  for (std::uint32_t m = 0; m < a.size(); ++m)
    if (a[m] != 0.0 && b[m] != 0.0) s += a[m] * b[m] * alg.blade_metric(m);
  return s;
}

Multivector vector_contract(const Multivector& v, const Multivector& a) {
  check_same(v, a);
  if (!(v - grade(v, 1)).is_zero())
    throw algebra_error("contraction requires a grade-1 left operand");
  Multivector r(a.p(), a.q());
  for (int k = 0; k <= a.dim(); ++k) {
    Multivector part = v * grade(a, k);
    if (k > 0) r += grade(part, k - 1);
  }
  return r;
}

double coeff_norm(const Multivector& a) {
  double s = 0.0;
  for (double c : a.coeffs()) s += c * c;
  return std::sqrt(s);
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return a * b - b * a;
}

Multivector exp_series(const Multivector& a, int max_terms, double tol) {
  Multivector sum = Multivector::scalar(a.p(), a.q(), 1.0);
  Multivector term = sum;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * a * (1.0 / k);
    sum += term;
    if (coeff_norm(term) < tol) return sum;
  }
  throw numeric_error("exponential series did not converge within " +
                      std::to_string(max_terms) + " terms (last term norm " +
                      std::to_string(coeff_norm(term)) + ")");
}

Multivector mv_exp(const Multivector& a) {
  // When a*a is a scalar s the series collapses:
  //   s < 0:  cos(w) + a sin(w)/w,   w = sqrt(-s)
  //   s > 0:  cosh(w) + a sinh(w)/w, w = sqrt(s)
  //   s = 0:  1 + a
  const Multivector sq = a * a;
  const double s = scalar_part(sq);
  const double off = coeff_norm(sq - Multivector::scalar(a.p(), a.q(), s));
  const double scale = std::max(1.0, coeff_norm(a));
  if (off <= 1e-14 * scale * scale) {
    const Multivector one = Multivector::scalar(a.p(), a.q(), 1.0);
    if (std::abs(s) <= 1e-14 * scale * scale) return one + a;
    if (s < 0) {
      const double w = std::sqrt(-s);
      return one * std::cos(w) + a * (std::sin(w) / w);
    }
    const double w = std::sqrt(s);
    return one * std::cosh(w) + a * (std::sinh(w) / w);
  }
  return exp_series(a);
}

Multivector mv_inverse(const Multivector& a) {
  // Solve L(a) x = 1 where L(a) is the left-regular representation:
  // (a*x)[i] = sum_j a[i^j] * sign(i^j, j) * x[j].
  const Algebra& alg = a.algebra();
  const std::size_t n = a.size();
  std::vector<double> m(n * n);
  std::vector<double> rhs(n, 0.0);
  rhs[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = a[std::uint32_t(i ^ j)] *
                     alg.blade_sign(std::uint32_t(i ^ j), std::uint32_t(j));

  // Gaussian elimination with partial pivoting.
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::abs(v));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) <= 1e-12 * std::max(scale, 1.0))
      throw numeric_error("element is not invertible (singular regular representation)");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m[piv * n + j], m[col * n + j]);
      std::swap(rhs[piv], rhs[col]);
    }
    const double d = m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
      rhs[r] -= f * rhs[col];
    }
  }
  Multivector x(a.p(), a.q());
  for (std::size_t i = n; i-- > 0;) {
    double v = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j)
      v -= m[i * n + j] * x[std::uint32_t(j)];
    x.at(std::uint32_t(i)) = v / m[i * n + i];
  }
  return x;
}

std::string blade_label(std::uint32_t mask, int dim) {
  if (dim > 9) throw algebra_error("blade labels support at most 9 generators");
  if (mask == 0) return "1";
  std::string s = "e";
  for (int k = 0; k < dim; ++k)
    if (mask & (1u << k)) s += char('1' + k);
  return s;
}

std::uint32_t parse_blade_label(const std::string& label, int dim) {
  if (dim > 9) throw algebra_error("blade labels support at most 9 generators");
  if (label == "1") return 0;
  if (label.empty() || label[0] != 'e')
    throw algebra_error("bad blade key '" + label + "'");
  std::uint32_t mask = 0;
  int prev = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    const char c = label[i];
    if (c < '1' || c > '9')
      throw algebra_error("bad blade key '" + label + "'");
    const int idx = c - '0';
    if (idx <= prev)
      throw algebra_error("blade key '" + label + "' must list ascending indices");
    if (idx > dim)
      throw algebra_error("blade key '" + label + "' exceeds the algebra dimension");
    mask |= 1u << (idx - 1);
    prev = idx;
  }
  if (mask == 0) throw algebra_error("bad blade key '" + label + "'");
  return mask;
}

} // namespace clif
