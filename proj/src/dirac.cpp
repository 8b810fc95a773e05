#include "clifford/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clif {

namespace {

const std::complex<double> kI(0.0, 1.0);

Mat2C pauli(int k) {
  Mat2C s;
  switch (k) {
  case 1: s << 0, 1, 1, 0; break;
  case 2: s << 0, -kI, kI, 0; break;
  default: s << 1, 0, 0, -1; break;
  }
  return s;
}

/// Real flattening of a 4x4 complex matrix (row-major, re then im per entry).
Eigen::Matrix<double, 32, 1> flatten(const Mat4C& m) {
  Eigen::Matrix<double, 32, 1> v;
  int pos = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      v(pos++) = m(r, c).real();
      v(pos++) = m(r, c).imag();
    }
  return v;
}

/// Index of M_{mn} (m < n) in the generator basis.
int m_index(int m, int n) {
  static constexpr int lut[4][4] = {{-1, 9, 10, 11},
                                    {-1, -1, 12, 13},
                                    {-1, -1, -1, 14},
                                    {-1, -1, -1, -1}};
  return lut[m][n];
}

/// Add c * M_{mn} to the coefficient vector, folding M_{nm} = -M_{mn}.
void add_m(std::array<double, 15>& out, int m, int n, double c) {
  if (m == n) return;
  if (m < n)
    out[m_index(m, n)] += c;
  else
    out[m_index(n, m)] -= c;
}

} // namespace

GammaSet make_gammas(GammaRep rep) {
  GammaSet gs;
  gs.rep = rep;
  const Mat2C id2 = Mat2C::Identity();
  const double sgn = (rep == GammaRep::weyl) ? -1.0 : 1.0;
  gs.gamma[0].setZero();
  gs.gamma[0].block<2, 2>(0, 2) = id2;
  gs.gamma[0].block<2, 2>(2, 0) = id2;
  for (int k = 1; k <= 3; ++k) {
    gs.gamma[k].setZero();
    gs.gamma[k].block<2, 2>(0, 2) = sgn * pauli(k);
    gs.gamma[k].block<2, 2>(2, 0) = -sgn * pauli(k);
  }
  gs.gamma5 = gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3];
  return gs;
}

double minkowski_metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

double gamma_relation_residual(const GammaSet& gs) {
  double worst = 0.0;
  const Mat4C id = Mat4C::Identity();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const Mat4C anti = gs.gamma[m] * gs.gamma[n] + gs.gamma[n] * gs.gamma[m] -
                         2.0 * minkowski_metric(m, n) * id;
      worst = std::max(worst, anti.norm());
    }
  worst = std::max(worst, (gs.gamma5 * gs.gamma5 + id).norm());
  for (int m = 0; m < 4; ++m)
    worst = std::max(
        worst, (gs.gamma5 * gs.gamma[m] + gs.gamma[m] * gs.gamma5).norm());
  return worst;
}

Mat4C dirac_bar(const GammaSet& gs, const Mat4C& m) {
  return gs.gamma[0] * m.adjoint() * gs.gamma[0];
}

FiveFrame make_five_frame(const GammaSet& gs, FrameKind kind) {
  FiveFrame f;
  f.kind = kind;
  if (kind == FrameKind::scaled) {
    for (int m = 0; m < 4; ++m) f.E[m] = -kI * gs.gamma[m];
    f.E[4] = -kI * gs.gamma5;
  } else {
    f.E[0] = kI * gs.gamma[0];
    for (int k = 1; k <= 3; ++k) f.E[k] = gs.gamma[k] * gs.gamma[0];
    f.E[4] = gs.gamma5 * gs.gamma[0];
  }
  return f;
}

double five_frame_residual(const FiveFrame& f) {
  double worst = 0.0;
  const Mat4C id = Mat4C::Identity();
  for (int a = 0; a < 5; ++a) {
    const double square = (a == 0) ? -1.0 : 1.0;
    worst = std::max(worst, (f.E[a] * f.E[a] - square * id).norm());
    for (int b = a + 1; b < 5; ++b)
      worst = std::max(worst, (f.E[a] * f.E[b] + f.E[b] * f.E[a]).norm());
  }
  return worst;
}

ConformalBasis make_conformal_basis(GammaRep rep) {
  ConformalBasis b;
  b.rep = rep;
  b.gammas = make_gammas(rep);
  const Mat4C one = Mat4C::Identity();
  const Mat4C ig5 = kI * b.gammas.gamma5;
  for (int m = 0; m < 4; ++m) {
    b.gen[m] = 0.5 * b.gammas.gamma[m] * (one + ig5);
    b.gen[4 + m] = -0.5 * b.gammas.gamma[m] * (one - ig5);
  }
  b.gen[8] = 0.5 * ig5;
  int idx = 9;
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n)
      b.gen[idx++] = 0.25 * (b.gammas.gamma[m] * b.gammas.gamma[n] -
                             b.gammas.gamma[n] * b.gammas.gamma[m]);
  return b;
}

int generator_index(std::string_view name) {
  for (int k = 0; k < 15; ++k)
    if (name == kGeneratorNames[k]) return k;
  throw algebra_error("unknown generator name: " + std::string(name));
}

std::array<double, 15> expected_commutator(int i, int j) {
  if (i < 0 || j < 0 || i >= 15 || j >= 15)
    throw algebra_error("generator index out of range");
  if (i == j) return {};
  if (i > j) {
    auto c = expected_commutator(j, i);
    for (double& v : c) v = -v;
    return c;
  }
  std::array<double, 15> out{};
  const auto g = minkowski_metric;
  // Decode the pair: 0-3 P, 4-7 K, 8 D, 9-14 M (pairs in lexicographic order).
  static constexpr int m_of[15] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2};
  static constexpr int n_of[15] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 2, 3, 3};
  const bool iP = i < 4, iK = i >= 4 && i < 8, iD = i == 8;
  const bool jK = j >= 4 && j < 8, jD = j == 8, jM = j >= 9;
  if (iP && j < 4) return out;                      // [P,P] = 0
  if (iK && jK) return out;                         // [K,K] = 0
  if (iP && jK) {                                   // [P_m, K_n]
    const int m = i, n = j - 4;
    out[8] += 2.0 * g(m, n);
    add_m(out, m, n, -2.0);
    return out;
  }
  if (iP && jD) { out[i] = 1.0; return out; }       // [P_m, D] = P_m
  if (iK && jD) { out[i] = -1.0; return out; }      // [K_m, D] = -K_m
  if (iD && jM) return out;                         // [D, M] = 0
  if ((iP || iK) && jM) {                           // [P_l, M_mn] = g_ml P_n - g_nl P_m
    const int l = iP ? i : i - 4;
    const int base = iP ? 0 : 4;
    const int m = m_of[j], n = n_of[j];
    out[base + n] += g(m, l);
    out[base + m] -= g(n, l);
    return out;
  }
  // [M_mn, M_sr] = g_mr M_ns + g_ns M_mr - g_ms M_nr - g_nr M_ms
  const int m = m_of[i], n = n_of[i], s = m_of[j], r = n_of[j];
  add_m(out, n, s, g(m, r));
  add_m(out, m, r, g(n, s));
  add_m(out, n, r, -g(m, s));
  add_m(out, m, s, -g(n, r));
  return out;
}

CommutatorTable commutator_table(const ConformalBasis& basis) {
  Eigen::Matrix<double, 32, 15> A;
  for (int k = 0; k < 15; ++k) A.col(k) = flatten(basis.gen[k]);
  const Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 32, 15>> qr(A);
  CommutatorTable t;
  t.rep = basis.rep;
  t.entries.reserve(105);
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j) {
      const Mat4C c =
          basis.gen[i] * basis.gen[j] - basis.gen[j] * basis.gen[i];
      const auto rhs = flatten(c);
      const Eigen::Matrix<double, 15, 1> x = qr.solve(rhs);
      CommutatorEntry e;
      e.i = i;
      e.j = j;
      for (int k = 0; k < 15; ++k) e.coeff[k] = x(k);
      e.residual = (A * x - rhs).norm();
      t.max_residual = std::max(t.max_residual, e.residual);
      t.entries.push_back(e);
    }
  return t;
}

double duality_residual(const ConformalBasis& basis,
                        const CommutatorTable& table) {
  // sigma maps generator k to sign[k] * gen[target[k]].
  std::array<int, 15> target{};
  std::array<double, 15> sign{};
  for (int k = 0; k < 15; ++k) {
    if (k < 4) { target[k] = k + 4; sign[k] = -1.0; }
    else if (k < 8) { target[k] = k - 4; sign[k] = -1.0; }
    else if (k == 8) { target[k] = 8; sign[k] = -1.0; }
    else { target[k] = k; sign[k] = 1.0; }
  }
  double worst = 0.0;
  for (const auto& e : table.entries) {
    const Mat4C lhs =
        sign[e.i] * sign[e.j] *
        (basis.gen[target[e.i]] * basis.gen[target[e.j]] -
         basis.gen[target[e.j]] * basis.gen[target[e.i]]);
    Mat4C rhs = Mat4C::Zero();
    for (int k = 0; k < 15; ++k)
      if (e.coeff[k] != 0.0) rhs += e.coeff[k] * sign[k] * basis.gen[target[k]];
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

Multivector spin_exp(const Multivector& B, double t) {
  if (!(B - grade(B, 2)).is_zero())
    throw algebra_error("spin exponential expects a pure grade-2 element");
  return mv_exp(B * t);
}

Multivector adjoint_action(const Multivector& R, const Multivector& v) {
  return R * v * mv_inverse(R);
}

Multivector adjoint_series(const Multivector& B, double t, const Multivector& v,
                           int max_terms, double tol) {
  Multivector term = v;
  Multivector acc = v;
  for (int k = 1; k <= max_terms; ++k) {
    term = (B * term - term * B) * (t / k);
    acc += term;
    if (coeff_norm(term) <= tol * std::max(1.0, coeff_norm(acc))) return acc;
  }
  throw numeric_error("adjoint series did not settle within the term budget");
}

} // namespace clif
