#pragma once

#include <array>
#include <cstdint>

namespace vestab {

/// Symmetric 3x3 tensor stored as its six independent components.
/// Symmetry is structural: there is no second copy of the off-diagonal
/// entries that could drift out of sync.
class SymTensor3 {
 public:
  constexpr SymTensor3() : c_{} {}
  constexpr SymTensor3(double xx, double yy, double zz, double xy, double xz,
                       double yz)
      : c_{xx, yy, zz, xy, xz, yz} {}

  static constexpr SymTensor3 identity() { return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0}; }
  static constexpr SymTensor3 diagonal(double a, double b, double c) {
    return {a, b, c, 0.0, 0.0, 0.0};
  }

  constexpr double xx() const { return c_[0]; }
  constexpr double yy() const { return c_[1]; }
  constexpr double zz() const { return c_[2]; }
  constexpr double xy() const { return c_[3]; }
  constexpr double xz() const { return c_[4]; }
  constexpr double yz() const { return c_[5]; }

  /// Full-matrix element access, (i, j) in {0,1,2}^2.
  double operator()(int i, int j) const;

  const std::array<double, 6>& components() const { return c_; }
  std::array<double, 6>& components() { return c_; }

  double trace() const { return c_[0] + c_[1] + c_[2]; }
  double det() const;
  double frobenius_norm() const;
  bool is_finite() const;

  /// Deviatoric part: subtracts trace/3 from the diagonal.
  SymTensor3 deviator() const;

  SymTensor3& operator+=(const SymTensor3& o);
  SymTensor3& operator-=(const SymTensor3& o);
  SymTensor3& operator*=(double s);

  friend SymTensor3 operator+(SymTensor3 a, const SymTensor3& b) { return a += b; }
  friend SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) { return a -= b; }
  friend SymTensor3 operator*(double s, SymTensor3 a) { return a *= s; }
  friend SymTensor3 operator*(SymTensor3 a, double s) { return a *= s; }

 private:
  std::array<double, 6> c_;  // xx, yy, zz, xy, xz, yz
};

/// Plain 3x3 matrix, used for the (generally non-symmetric) products that
/// appear in commutator checks and stretch terms.
class Mat3 {
 public:
  constexpr Mat3() : m_{} {}
  static Mat3 from(const SymTensor3& s);

  double& operator()(int i, int j) { return m_[3 * i + j]; }
  double operator()(int i, int j) const { return m_[3 * i + j]; }

  double frobenius_norm() const;

  Mat3& operator-=(const Mat3& o);
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }

 private:
  std::array<double, 9> m_;
};

Mat3 mul(const SymTensor3& a, const SymTensor3& b);
Mat3 mul(const Mat3& a, const Mat3& b);

/// Symmetric square a*a of a symmetric tensor (always symmetric).
SymTensor3 sym_square(const SymTensor3& a);

/// Symmetrized product (a*b + b*a)/2.
SymTensor3 sym_product(const SymTensor3& a, const SymTensor3& b);

/// Frobenius pairing sum_ij a_ij b_ij.
double frob_inner(const SymTensor3& a, const SymTensor3& b);

/// Eigenvalues of a symmetric 3x3 tensor, ascending. Closed-form
/// (trigonometric) solve with a Newton polish on the characteristic
/// polynomial; positive-definite spectra get an extra repair pass that
/// restores the trace/determinant identities for small or clustered
/// eigenvalues.
std::array<double, 3> eigvals(const SymTensor3& t);

/// A SymTensor3 certified symmetric positive definite at construction.
/// Certification threshold: min eigenvalue > 1e-13 * max(1, max eigenvalue).
class SpdTensor3 {
 public:
  /// Throws std::domain_error when the argument is not positive definite.
  explicit SpdTensor3(const SymTensor3& t);

  static SpdTensor3 identity() { return SpdTensor3(SymTensor3::identity()); }

  const SymTensor3& sym() const { return t_; }
  operator const SymTensor3&() const { return t_; }

  double operator()(int i, int j) const { return t_(i, j); }
  double trace() const { return t_.trace(); }
  double det() const { return t_.det(); }

 private:
  SymTensor3 t_;
};

/// True when t passes the SPD certification threshold.
bool is_spd(const SymTensor3& t);

/// Natural log of an SPD tensor: eigenvectors kept, eigenvalues mapped by ln.
SymTensor3 mat_log(const SpdTensor3& b);

/// Spectral exponential of a symmetric tensor. Result is SPD by construction.
SymTensor3 mat_exp(const SymTensor3& t);

/// Inverse of an SPD tensor (adjugate formula plus one Newton refinement).
SpdTensor3 mat_inv(const SpdTensor3& b);

/// ln(det b) evaluated through the Cholesky factor; accurate for spectra
/// spanning many orders of magnitude, unlike ln of the cofactor determinant.
double ln_det(const SpdTensor3& b);

/// Deterministic splittable PRNG (xoshiro256**). Value semantics: copies
/// evolve independently, so sampling never shares mutable state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double next_double();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller on the raw bit stream, bit-stable across
  /// platforms, unlike std::normal_distribution).
  double normal();

  /// Independent stream derived from this one; used to fan samples out.
  Rng split(std::uint64_t stream_index) const;

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Random SPD tensor with eigenvalues drawn log-uniformly in [lo, hi] and a
/// Haar-uniform rotation applied. Throws std::domain_error unless
/// 0 < lo <= hi.
SpdTensor3 random_spd(Rng& rng, double lo, double hi);

/// Haar-uniform rotation matrix (via a random unit quaternion).
Mat3 random_rotation(Rng& rng);

/// Conjugation r * diag(d0,d1,d2) * r^T for a rotation r.
SymTensor3 rotate_diagonal(const Mat3& r, double d0, double d1, double d2);

}  // namespace vestab
