#include "clifford/conformal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace clif {

namespace {

void check_entries(const Multivector& a, const Multivector& b) {
  if (a.p() != b.p() || a.q() != b.q())
    throw algebra_error("matrix entries live in different algebras");
}

/// Distance from being a real scalar.
double real_residual(const Multivector& m) {
  return coeff_norm(m - Multivector::scalar(m.p(), m.q(), scalar_part(m)));
}

/// Distance from being a paravector (grades 0 and 1 only).
double paravector_residual(const Multivector& m) {
  Multivector rest(m);
  rest -= grade(m, 0);
  rest -= grade(m, 1);
  return coeff_norm(rest);
}

Multivector one_like(const Multivector& m) {
  return Multivector::scalar(m.p(), m.q(), 1.0);
}

std::vector<double> paravector_coords(const Multivector& x) {
  std::vector<double> c(std::size_t(x.dim()) + 1);
  c[0] = x[0];
  for (int i = 0; i < x.dim(); ++i) c[std::size_t(i) + 1] = x[1u << i];
  return c;
}

Multivector paravector_from_coords(int p, int q, const std::vector<double>& c) {
  Multivector x(p, q);
  x.at(0) = c[0];
  for (int i = 0; i < p + q; ++i) x.at(1u << i) = c[std::size_t(i) + 1];
  return x;
}

} // namespace

ClMat2::ClMat2(Multivector a_, Multivector b_, Multivector c_, Multivector d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  check_entries(a, b);
  check_entries(a, c);
  check_entries(a, d);
}

ClMat2 ClMat2::operator*(const ClMat2& o) const {
  // Rows are (a, c) and (b, d); columns are (a, b) and (c, d).
  return ClMat2(a * o.a + c * o.b,   // upper-left
                b * o.a + d * o.b,   // lower-left
                a * o.c + c * o.d,   // upper-right
                b * o.c + d * o.d);  // lower-right
}

ClMat2 ClMat2::operator+(const ClMat2& o) const {
  return ClMat2(a + o.a, b + o.b, c + o.c, d + o.d);
}

ClMat2 ClMat2::operator*(double s) const {
  return ClMat2(a * s, b * s, c * s, d * s);
}

ClMat2 ClMat2::identity(int p, int q) {
  ClMat2 m(p, q);
  m.a = Multivector::scalar(p, q, 1.0);
  m.d = Multivector::scalar(p, q, 1.0);
  return m;
}

ClMat2 mat_reversion(const ClMat2& m) {
  return ClMat2(conjugation(m.d), conjugation(m.b), conjugation(m.c),
                conjugation(m.a));
}

ClMat2 mat_conjugation(const ClMat2& m) {
  return ClMat2(reversion(m.d), -reversion(m.b), -reversion(m.c),
                reversion(m.a));
}

Multivector make_paravector(int p, int q, double s,
                            const std::vector<double>& v) {
  if (int(v.size()) != p + q)
    throw algebra_error("expected " + std::to_string(p + q) +
                        " vector components");
  Multivector x(p, q);
  x.at(0) = s;
  for (int i = 0; i < p + q; ++i) x.at(1u << i) = v[std::size_t(i)];
  return x;
}

bool is_paravector(const Multivector& x, double tol) {
  return paravector_residual(x) <= tol;
}

double paravector_norm(const Multivector& x) {
  return scalar_part(x * conjugation(x));
}

double paravector_pairing(const Multivector& a, const Multivector& b) {
  return scalar_part(a * conjugation(b));
}

QuadricPoint compactify(const Multivector& x) {
  if (!is_paravector(x, 1e-12 * (1.0 + coeff_norm(x))))
    throw algebra_error("compactify expects a paravector");
  return QuadricPoint{x, paravector_norm(x), 1.0};
}

double klein_residual(const QuadricPoint& pt) {
  return paravector_norm(pt.x) - pt.lambda * pt.mu;
}

Multivector project(const QuadricPoint& pt) {
  if (std::abs(pt.mu) <= 1e-12)
    throw numeric_error("point at infinity: projection needs mu != 0");
  return pt.x * (1.0 / pt.mu);
}

ClMat2 quadric_to_matrix(const QuadricPoint& pt) {
  const int p = pt.x.p(), q = pt.x.q();
  return ClMat2(pt.x, Multivector::scalar(p, q, pt.mu),
                Multivector::scalar(p, q, pt.lambda), conjugation(pt.x));
}

ClMat2 paravector_to_matrix(const std::array<double, 6>& alpha) {
  const Multivector x =
      make_paravector(3, 0, alpha[5], {alpha[1], alpha[2], alpha[3]});
  return quadric_to_matrix(QuadricPoint{x, alpha[4] - alpha[0],
                                        alpha[0] + alpha[4]});
}

QuadricPoint matrix_to_quadric(const ClMat2& m) {
  const double scale = 1.0 + std::max({coeff_norm(m.a), coeff_norm(m.b),
                                       coeff_norm(m.c), coeff_norm(m.d)});
  const double tol = 1e-6 * scale;
  const Multivector w = grade(m.a, 0) + grade(m.a, 1);
  if (paravector_residual(m.a) > tol ||
      coeff_norm(m.d - conjugation(w)) > tol || real_residual(m.b) > tol ||
      real_residual(m.c) > tol)
    throw numeric_error("matrix does not carry a paravector quadric point");
  return QuadricPoint{w, scalar_part(m.c), scalar_part(m.b)};
}

bool PinConditionReport::all_ok() const {
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

double PinConditionReport::max_residual() const {
  return *std::max_element(residual.begin(), residual.end());
}

PinConditionReport verify_pin_conditions(const ClMat2& m, double tol,
                                         std::uint64_t seed) {
  const int p = m.p(), q = m.q(), n = p + q;
  const double s = std::max({1.0, coeff_norm(m.a), coeff_norm(m.b),
                             coeff_norm(m.c), coeff_norm(m.d)});
  PinConditionReport rep;

  // (i) the four entry norms are real
  rep.residual[0] =
      std::max({real_residual(m.a * conjugation(m.a)),
                real_residual(m.b * conjugation(m.b)),
                real_residual(m.c * conjugation(m.c)),
                real_residual(m.d * conjugation(m.d))}) / (s * s);

  // (ii) adjacent products are paravectors
  rep.residual[1] = std::max(paravector_residual(m.a * conjugation(m.b)),
                             paravector_residual(m.c * conjugation(m.d))) /
                    (s * s);

  // (iii)/(iv): linear in v, so a spanning set of paravectors plus a few
  // random draws decides them.
  std::vector<Multivector> vs;
  vs.push_back(one_like(m.a));
  for (int i = 1; i <= n; ++i) vs.push_back(Multivector::basis_vector(p, q, i));
  Rng rng(seed);
  for (int k = 0; k < 8; ++k) {
    Multivector v(p, q);
    v.at(0) = rng.normal();
    for (int i = 0; i < n; ++i) v.at(1u << i) = rng.normal();
    vs.push_back(v);
  }
  double r3 = 0.0, r4 = 0.0;
  for (const Multivector& v : vs) {
    const double sv = s * s * std::max(1.0, coeff_norm(v));
    const Multivector vb = conjugation(v);
    r3 = std::max(
        r3, real_residual(m.a * v * conjugation(m.c) +
                          m.c * vb * conjugation(m.a)) / sv);
    r3 = std::max(
        r3, real_residual(m.c * v * conjugation(m.d) +
                          m.d * vb * conjugation(m.c)) / sv);
    r4 = std::max(
        r4, paravector_residual(m.a * v * conjugation(m.d) +
                                m.c * vb * conjugation(m.b)) / sv);
  }
  rep.residual[2] = r3;
  rep.residual[3] = r4;

  // (v) the two symmetry identities
  rep.residual[4] =
      std::max(coeff_norm(m.a * reversion(m.c) - m.c * reversion(m.a)),
               coeff_norm(m.b * reversion(m.d) - m.d * reversion(m.b))) /
      (s * s);

  // (vi) pseudo-determinant is 1
  rep.residual[5] =
      coeff_norm(m.a * reversion(m.d) - m.c * reversion(m.b) - one_like(m.a)) /
      (s * s);

  for (int i = 0; i < 6; ++i) rep.ok[std::size_t(i)] = rep.residual[std::size_t(i)] <= tol;
  return rep;
}

PinElement make_pin(const ClMat2& m, double tol, std::uint64_t seed) {
  const PinConditionReport rep = verify_pin_conditions(m, tol, seed);
  if (!rep.all_ok()) {
    static const char* names[6] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"};
    std::string bad;
    for (int i = 0; i < 6; ++i)
      if (!rep.ok[std::size_t(i)]) bad += std::string(bad.empty() ? "" : ", ") + names[i];
    throw verification_error("matrix fails membership condition(s) " + bad);
  }
  return PinElement{m, true};
}

PinElement compose(const PinElement& g1, const PinElement& g2, double tol) {
  if (!g1.validated || !g2.validated)
    throw algebra_error("compose requires validated elements");
  return make_pin(g1.m * g2.m, tol);
}

PinElement translation_map(const Multivector& h) {
  if (!is_paravector(h, 1e-12 * (1.0 + coeff_norm(h))))
    throw algebra_error("translation offset must be a paravector");
  ClMat2 m = ClMat2::identity(h.p(), h.q());
  m.c = h;
  return make_pin(m);
}

PinElement dilation_map(int p, int q, double rho) {
  if (!(rho > 0.0)) throw algebra_error("dilation factor must be positive");
  ClMat2 m(p, q);
  m.a = Multivector::scalar(p, q, std::sqrt(rho));
  m.d = Multivector::scalar(p, q, 1.0 / std::sqrt(rho));
  return make_pin(m);
}

PinElement rotation_map(const Multivector& g) {
  Multivector odd(g.p(), g.q());
  for (int k = 1; k <= g.dim(); k += 2) odd += grade(g, k);
  if (!odd.is_zero(1e-12 * (1.0 + coeff_norm(g))))
    throw algebra_error("rotation factor must be even");
  if (std::abs(scalar_part(g * conjugation(g)) - 1.0) > 1e-9 ||
      real_residual(g * conjugation(g)) > 1e-9)
    throw algebra_error("rotation factor must satisfy g * bar(g) = 1");
  ClMat2 m(g.p(), g.q());
  m.a = g;
  m.d = grade_involution(g);
  return make_pin(m);
}

PinElement inversion_map(int p, int q) {
  ClMat2 m(p, q);
  m.c = Multivector::scalar(p, q, -1.0);
  m.b = Multivector::scalar(p, q, 1.0);
  return make_pin(m);
}

PinElement transvection_map(const Multivector& h) {
  if (!is_paravector(h, 1e-12 * (1.0 + coeff_norm(h))))
    throw algebra_error("transvection offset must be a paravector");
  ClMat2 m = ClMat2::identity(h.p(), h.q());
  m.b = h;
  return make_pin(m);
}

Multivector plane_rotor(int p, int q, std::uint32_t plane_mask, double angle) {
  if (std::popcount(plane_mask) != 2)
    throw algebra_error("rotation plane must be a grade-2 blade");
  return mv_exp(Multivector::blade(p, q, plane_mask, -0.5 * angle));
}

std::vector<PinElement> center_elements() {
  const Multivector one = Multivector::scalar(3, 0, 1.0);
  const Multivector omega = Multivector::blade(3, 0, 0b111); // central, squares to -1
  std::vector<PinElement> out;
  for (const Multivector& u : {one, -one, omega, -omega}) {
    ClMat2 m(3, 0);
    m.a = u;
    m.d = u;
    out.push_back(make_pin(m));
  }
  return out;
}

MapResult apply_conformal(const PinElement& g, const Multivector& x) {
  if (!g.validated) throw algebra_error("apply requires a validated element");
  if (!is_paravector(x, 1e-9 * (1.0 + coeff_norm(x))))
    throw algebra_error("apply expects a paravector point");
  const Multivector n = g.m.b * x + g.m.d;
  const double delta = paravector_norm(n);
  MapResult res;
  res.delta = delta;
  res.x = Multivector(x.p(), x.q());
  if (std::abs(delta) <= 1e-12) {
    res.at_infinity = true;
    return res;
  }
  const Multivector img = (g.m.a * x + g.m.c) * conjugation(n) * (1.0 / delta);
  if (paravector_residual(img) > 1e-6 * (1.0 + coeff_norm(img)))
    throw numeric_error("conformal image is not a paravector");
  res.x = grade(img, 0) + grade(img, 1);
  return res;
}

QuadricPoint twisted_adjoint(const PinElement& g, const QuadricPoint& pt) {
  if (!g.validated)
    throw algebra_error("twisted adjoint requires a validated element");
  const ClMat2 moved = g.m * quadric_to_matrix(pt) * mat_reversion(g.m);
  return matrix_to_quadric(moved);
}

double quasi_sphere_eval(const QuasiSphere& s, const Multivector& x) {
  return s.a * paravector_norm(x) + paravector_pairing(s.b, x) + s.c;
}

std::pair<QuasiSphere, double> fit_quasi_sphere(
    const std::vector<Multivector>& pts) {
  if (pts.empty()) throw algebra_error("quasi-sphere fit needs points");
  const int p = pts[0].p(), q = pts[0].q(), n = p + q;
  const int cols = n + 3; // a, b0..bn, c
  Eigen::MatrixXd M(pts.size(), cols);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const Multivector& x = pts[r];
    M(Eigen::Index(r), 0) = paravector_norm(x);
    M(Eigen::Index(r), 1) = paravector_pairing(one_like(x), x);
    for (int i = 1; i <= n; ++i)
      M(Eigen::Index(r), i + 1) =
          paravector_pairing(Multivector::basis_vector(p, q, i), x);
    M(Eigen::Index(r), cols - 1) = 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  const Eigen::VectorXd v = svd.matrixV().col(cols - 1);
  QuasiSphere s{v(0), Multivector(p, q), v(cols - 1)};
  s.b.at(0) = v(1);
  for (int i = 0; i < n; ++i) s.b.at(1u << i) = v(i + 2);
  const double residual = svd.singularValues()(cols - 1);
  return {s, residual};
}

double jacobian_conformality(const PinElement& g, const Multivector& x0,
                             double step) {
  const int p = x0.p(), q = x0.q(), n = p + q + 1;
  auto eval = [&](const Multivector& x) {
    const MapResult r = apply_conformal(g, x);
    if (r.at_infinity)
      throw numeric_error("Jacobian sample hit the point at infinity");
    return paravector_coords(r.x);
  };
  Eigen::MatrixXd J(n, n);
  std::vector<double> base = paravector_coords(x0);
  for (int j = 0; j < n; ++j) {
    std::vector<double> hi = base, lo = base;
    hi[std::size_t(j)] += step;
    lo[std::size_t(j)] -= step;
    const auto fhi = eval(paravector_from_coords(p, q, hi));
    const auto flo = eval(paravector_from_coords(p, q, lo));
    for (int i = 0; i < n; ++i)
      J(i, j) = (fhi[std::size_t(i)] - flo[std::size_t(i)]) / (2.0 * step);
  }
  Eigen::VectorXd eta(n);
  eta(0) = 1.0;
  for (int i = 1; i < n; ++i)
    // e_i contributes with its metric square; paravector coordinates pair
    // as (+, metric signs negated) in the norm x bar(x).
    eta(i) = -(i <= p ? 1.0 : -1.0);
  const Eigen::MatrixXd A = J.transpose() * eta.asDiagonal() * J;
  double lambda = 0.0;
  for (int i = 0; i < n; ++i) lambda += A(i, i) * eta(i);
  lambda /= n;
  const Eigen::MatrixXd dev = A - lambda * Eigen::MatrixXd(eta.asDiagonal());
  return dev.norm() / (std::abs(lambda) * std::sqrt(double(n)));
}

Multivector complex_to_paravector(std::complex<double> z) {
  Multivector x(0, 1);
  x.at(0) = z.real();
  x.at(1) = z.imag();
  return x;
}

std::complex<double> paravector_to_complex(const Multivector& x) {
  return {x[0], x[1]};
}

MobiusResult mobius_plane_apply(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, std::complex<double> d,
                                std::complex<double> z) {
  const std::complex<double> n = b * z + d;
  MobiusResult res;
  res.omega = std::norm(n);
  if (res.omega <= 1e-12) {
    res.at_infinity = true;
    return res;
  }
  res.z = (a * z + c) / n;
  return res;
}

MobiusResult mobius_algebraic_apply(std::complex<double> a,
                                    std::complex<double> b,
                                    std::complex<double> c,
                                    std::complex<double> d,
                                    std::complex<double> z) {
  // Normalize to pseudo-determinant 1 so the matrix passes membership
  // validation; the point map is scale-invariant and omega is rescaled back.
  const std::complex<double> det = a * d - c * b;
  if (std::abs(det) <= 1e-12)
    throw numeric_error("matrix is singular");
  const std::complex<double> s = 1.0 / std::sqrt(det);
  ClMat2 m(0, 1);
  m.a = complex_to_paravector(a * s);
  m.b = complex_to_paravector(b * s);
  m.c = complex_to_paravector(c * s);
  m.d = complex_to_paravector(d * s);
  const MapResult r = apply_conformal(make_pin(m), complex_to_paravector(z));
  MobiusResult res;
  res.at_infinity = r.at_infinity;
  res.omega = r.delta / std::norm(s);
  if (!r.at_infinity) res.z = paravector_to_complex(r.x);
  return res;
}

} // namespace clif
