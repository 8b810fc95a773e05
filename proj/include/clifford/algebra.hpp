#pragma once

// Dense real Clifford algebra Cl(p,q) over a blade-bitmask basis.
//
// Blade encoding: bit k of a mask means generator e_{k+1} is present in the
// blade, so mask 0 is the scalar, mask 0b101 is e1^e3, and an algebra on
// n = p+q generators stores 2^n coefficients indexed by mask.  The first p
// generators square to +1, the remaining q to -1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clif {

/// Signature or dimension misuse (bad (p,q), mixing algebras, bad blade keys).
class algebra_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric domain failures: non-convergent series, singular inverse,
/// off-form matrix entries, projection through the exceptional set.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structural verification failures: Vahlen membership conditions, residual
/// bounds on identity checks.  Kept distinct from numeric_error so callers
/// (notably the CLI) can report "the check ran and failed" separately from
/// "the computation left its domain".
class verification_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense sign table for an XOR-indexed product: the product of basis
/// elements j and k lands on index j^k with sign sign[j*size + k].
/// This covers the Clifford blade product and, with a composite table,
/// the graded tensor product used by the periodicity isomorphisms.
struct MulTable {
  int n = 0;            // log2(size)
  std::size_t size = 1; // 1 << n
  std::vector<double> sign; // row-major [j][k]; empty when size > kMaxTabledSize
};

/// Parity of the transposition count needed to merge two ascending
/// generator lists (metric factors not included).
int reorder_sign(std::uint32_t a, std::uint32_t b);

class Algebra {
public:
  static constexpr int kMaxDim = 12;      // hard allocation guard
  static constexpr int kMaxTabledDim = 10; // dense sign tables above this are skipped

  /// Shared, cached context for Cl(p,q).  Throws algebra_error outside
  /// 0 <= p, q and p+q <= kMaxDim.
  static const Algebra& get(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t size() const { return std::size_t(1) << dim(); }

  /// Square of generator e_{k+1} (0-based k): +1 for k < p, else -1.
  int metric_sign(int k) const { return k < p_ ? 1 : -1; }

  /// Product of generator squares over a blade mask.
  int blade_metric(std::uint32_t mask) const;

  /// Sign of blade(a) * blade(b) including metric factors; the result
  /// blade is always a^b.
  int blade_sign(std::uint32_t a, std::uint32_t b) const;

  /// Dense table when dim() <= kMaxTabledDim; sign vector empty otherwise.
  const MulTable& table() const { return table_; }

private:
  Algebra(int p, int q);
  int p_, q_;
  MulTable table_;
};

class Multivector {
public:
  /// Zero scalar of Cl(0,0); a placeholder state for declare-then-assign use.
  Multivector() : Multivector(0, 0) {}

  /// Zero element of Cl(p,q).
  Multivector(int p, int q);

  static Multivector scalar(int p, int q, double s);
  /// Basis vector e_i, 1-based index.
  static Multivector basis_vector(int p, int q, int i);
  /// Single basis blade by mask.
  static Multivector blade(int p, int q, std::uint32_t mask, double coeff = 1.0);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t size() const { return coeff_.size(); }
  const Algebra& algebra() const { return Algebra::get(p_, q_); }

  double operator[](std::uint32_t mask) const { return coeff_[mask]; }
  double& at(std::uint32_t mask) { return coeff_.at(mask); }
  const std::vector<double>& coeffs() const { return coeff_; }

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(const Multivector& o) const; // geometric product
  Multivector operator*(double s) const;
  friend Multivector operator*(double s, const Multivector& m) { return m * s; }
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);

  bool is_zero(double tol = 0.0) const;

private:
  int p_, q_;
  std::vector<double> coeff_;
};

/// Grassmann exterior product (blade pairs with disjoint masks).
Multivector wedge(const Multivector& a, const Multivector& b);

/// Grade-k part.
Multivector grade(const Multivector& a, int k);

double scalar_part(const Multivector& a);

/// Anti-automorphism reversing factor order: sign (-1)^(k(k-1)/2) on grade k.
Multivector reversion(const Multivector& a);

/// Automorphism negating odd grades: sign (-1)^k.
Multivector grade_involution(const Multivector& a);

/// Composition of the two above: sign (-1)^(k(k+1)/2).  Restricted to a
/// paravector s + v this is the familiar bar map s - v.
Multivector conjugation(const Multivector& a);

/// Extended bilinear form: determinant pairing on equal grades, zero across
/// grades.  On an orthogonal blade basis this collapses to a signed
/// coefficient dot product.
double metric_pairing(const Multivector& a, const Multivector& b);

/// Grade-lowering part of the product of a grade-1 vector with a; together
/// with wedge(v, a) this splits v*a.
Multivector vector_contract(const Multivector& v, const Multivector& a);

/// Coefficient 2-norm.
double coeff_norm(const Multivector& a);

/// AB - BA.
Multivector commutator(const Multivector& a, const Multivector& b);

/// Plain power series for exp(a); throws numeric_error when the term norm
/// has not dropped below tol within max_terms terms.
Multivector exp_series(const Multivector& a, int max_terms = 512, double tol = 1e-14);

/// exp(a) with trig/hyperbolic closed forms when a*a is a scalar, falling
/// back to the series otherwise.
Multivector mv_exp(const Multivector& a);

/// Inverse via the left-regular representation (dense linear solve);
/// throws numeric_error on (near-)singular elements.
Multivector mv_inverse(const Multivector& a);

/// Human-readable blade label: "1", "e1", "e13", ...  Requires single-digit
/// generator indices (dim <= 9).
std::string blade_label(std::uint32_t mask, int dim);

/// Inverse of blade_label; throws algebra_error for malformed keys.
std::uint32_t parse_blade_label(const std::string& label, int dim);

} // namespace clif
