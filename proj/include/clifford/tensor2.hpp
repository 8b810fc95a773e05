#pragma once

#include "clifford/algebra.hpp"

#include <cstdint>
#include <vector>

namespace clif {

/// Cl(V) (x) Cl(p,q) with V two-dimensional: the ambient algebra for the
/// classical dimension-shift isomorphisms
///
///   Cl(p+1,q+1) ~ Cl(1,1) (x) Cl(p,q)
///   Cl(q+2,p)   ~ Cl(2,0) (x) Cl(p,q)
///   Cl(q,p+2)   ~ Cl(0,2) (x) Cl(p,q)
///
/// The two factors commute elementwise, so a composite basis element is a
/// pair (V-blade, W-blade), stored as mask = (w_mask << 2) | v_mask.  The
/// product is again an XOR-convolution whose sign table is the outer
/// product of the factor tables, which means the same runtime kernels that
/// drive plain Clifford products drive this algebra too.
class TensorAlgebra {
 public:
  /// pv + qv must equal 2; p + q is capped at 8 (composite table cap).
  static const TensorAlgebra& get(int pv, int qv, int p, int q);

  int pv() const { return pv_; }
  int qv() const { return qv_; }
  int wp() const { return wp_; }
  int wq() const { return wq_; }
  int dim() const { return 2 + wp_ + wq_; }
  std::size_t size() const { return table_.size; }
  const MulTable& table() const { return table_; }

 private:
  TensorAlgebra(int pv, int qv, int p, int q);
  int pv_, qv_, wp_, wq_;
  MulTable table_;
};

/// Element of Cl(V) (x) Cl(p,q).
class TensorElement {
 public:
  TensorElement(int pv, int qv, int p, int q);

  /// Pure tensor v (x) w.
  static TensorElement tensor(const Multivector& v, const Multivector& w);
  static TensorElement unit(int pv, int qv, int p, int q);

  const TensorAlgebra& algebra() const {
    return TensorAlgebra::get(pv_, qv_, wp_, wq_);
  }
  std::size_t size() const { return coeff_.size(); }
  double coefficient(std::uint32_t vmask, std::uint32_t wmask) const {
    return coeff_[(wmask << 2) | vmask];
  }
  double& at(std::uint32_t vmask, std::uint32_t wmask) {
    return coeff_[(wmask << 2) | vmask];
  }
  const std::vector<double>& coeffs() const { return coeff_; }

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator-() const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement operator*(double s) const;
  TensorElement& operator+=(const TensorElement& o);
  bool is_zero(double tol = 0.0) const;
  double norm() const;

 private:
  int pv_, qv_, wp_, wq_;
  std::vector<double> coeff_;
};

/// Which two-dimensional factor gets split off.
enum class ShiftKind { add11, add20, add02 };

/// The generator images defining one dimension-shift isomorphism
/// Gamma : Cl(src_p, src_q) -> Cl(V) (x) Cl(p,q).
///
/// Source generators are in canonical order (positive squares first), and
/// each image is +/- one composite basis element:
///
///   add11:  e_i       -> f1f2 (x) e_i   (i = 1..p, then the q negatives)
///           e_{p+1}   -> f1 (x) 1       e_{p+q+2} -> f2 (x) 1
///   add20:  f1 (x) 1, f2 (x) 1 lead; then f1f2 (x) (negative e's),
///           and f1f2 (x) (positive e's) pick up the minus signature
///   add02:  f1f2 (x) (negative e's) become positive; everything else,
///           f1 (x) 1 and f2 (x) 1 included, squares to -1
struct ShiftIso {
  ShiftKind kind;
  int p, q;          // W factor signature
  int src_p, src_q;  // shifted signature the map is defined on
  std::vector<TensorElement> gen_image;
};

/// Builds the isomorphism data for Cl(p,q); rejects the empty algebra.
ShiftIso make_shift_iso(int p, int q, ShiftKind kind);

/// Extends the generator images multiplicatively over blades and linearly
/// over coefficients.
TensorElement apply_shift_iso(const ShiftIso& iso, const Multivector& src);

/// The anti-involution the shift transports: alpha_eps^V (x) alpha_{-eps}^W,
/// where alpha_{+1} is reversion and alpha_{-1} is Clifford conjugation on
/// each factor.  It multiplies every image generator by eps, so it matches
/// reversion (eps = +1) or conjugation (eps = -1) of the source algebra
/// through the isomorphism.
TensorElement transported_antiinvolution(const TensorElement& t, int eps);

/// Full verification of one shift isomorphism, exhaustive over source
/// blades: image generator relations, multiplicativity, blade-level
/// bijectivity, and involution transport for both signs.
struct ShiftReport {
  int src_p = 0, src_q = 0;
  double generator_residual = 0.0;
  double product_residual = 0.0;
  bool blade_bijection = false;
  double involution_residual_plus = 0.0;
  double involution_residual_minus = 0.0;
  double max_residual() const;
  bool pass(double tol) const;
};

ShiftReport verify_shift(int p, int q, ShiftKind kind, std::uint64_t seed);

} // namespace clif
