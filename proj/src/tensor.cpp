#include "vestab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vestab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// index map for (i,j) -> component slot
constexpr int kSlot[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};

}  // namespace

double SymTensor3::operator()(int i, int j) const { return c_[kSlot[i][j]]; }

double SymTensor3::det() const {
  const double a = c_[0], b = c_[1], c = c_[2];
  const double d = c_[3], e = c_[4], f = c_[5];
  return a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
}

double SymTensor3::frobenius_norm() const {
  const double diag = c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2];
  const double off = c_[3] * c_[3] + c_[4] * c_[4] + c_[5] * c_[5];
  return std::sqrt(diag + 2.0 * off);
}

bool SymTensor3::is_finite() const {
  for (double v : c_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

SymTensor3 SymTensor3::deviator() const {
  const double m = trace() / 3.0;
  return {c_[0] - m, c_[1] - m, c_[2] - m, c_[3], c_[4], c_[5]};
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& o) {
  for (int i = 0; i < 6; ++i) c_[i] += o.c_[i];
  return *this;
}

SymTensor3& SymTensor3::operator-=(const SymTensor3& o) {
  for (int i = 0; i < 6; ++i) c_[i] -= o.c_[i];
  return *this;
}

SymTensor3& SymTensor3::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Mat3 Mat3::from(const SymTensor3& s) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = s(i, j);
  return m;
}

double Mat3::frobenius_norm() const {
  double acc = 0.0;
  for (double v : m_) acc += v * v;
  return std::sqrt(acc);
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (int i = 0; i < 9; ++i) m_[i] -= o.m_[i];
  return *this;
}

Mat3 mul(const SymTensor3& a, const SymTensor3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

SymTensor3 sym_square(const SymTensor3& a) {
  const Mat3 m = mul(a, a);
  return {m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
}

SymTensor3 sym_product(const SymTensor3& a, const SymTensor3& b) {
  const Mat3 m = mul(a, b);
  return {m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(0, 1) + m(1, 0)),
          0.5 * (m(0, 2) + m(2, 0)), 0.5 * (m(1, 2) + m(2, 1))};
}

double frob_inner(const SymTensor3& a, const SymTensor3& b) {
  const auto& x = a.components();
  const auto& y = b.components();
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] +
         2.0 * (x[3] * y[3] + x[4] * y[4] + x[5] * y[5]);
}

namespace {

// Characteristic polynomial chi(l) = det(t - l*I) and its derivative,
// evaluated on the shifted matrix directly (coefficient form cancels badly).
void char_poly_at(const SymTensor3& t, double l, double& chi, double& dchi) {
  const double a = t.xx() - l, d = t.yy() - l, f = t.zz() - l;
  const double b = t.xy(), c = t.xz(), e = t.yz();
  chi = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
  dchi = -((d * f - e * e) + (a * f - c * c) + (a * d - b * b));
}

// Attempt a Cholesky factorization; returns false when a pivot is not
// strictly positive. det_out receives (prod of pivots)^2 on success.
bool cholesky_det(const SymTensor3& t, double& det_out) {
  const double a11 = t.xx(), a21 = t.xy(), a31 = t.xz();
  const double a22 = t.yy(), a32 = t.yz(), a33 = t.zz();
  if (a11 <= 0.0) return false;
  const double l11 = std::sqrt(a11);
  const double l21 = a21 / l11;
  const double l31 = a31 / l11;
  const double d22 = a22 - l21 * l21;
  if (d22 <= 0.0) return false;
  const double l22 = std::sqrt(d22);
  const double l32 = (a32 - l31 * l21) / l22;
  const double d33 = a33 - l31 * l31 - l32 * l32;
  if (d33 <= 0.0) return false;
  const double l33 = std::sqrt(d33);
  const double p = l11 * l22 * l33;
  det_out = p * p;
  return true;
}

std::array<double, 3> eigvals_scaled(const SymTensor3& t) {
  // Trigonometric closed form on the deviatoric part.
  const double q = t.trace() / 3.0;
  const SymTensor3 k = t - q * SymTensor3::identity();
  const double p2 = frob_inner(k, k) / 6.0;
  if (p2 <= 0.0) return {q, q, q};
  const double p = std::sqrt(p2);
  double r = k.det() / (2.0 * p * p * p);
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  std::array<double, 3> e = {q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0),
                             q + 2.0 * p * std::cos(phi + 4.0 * kPi / 3.0),
                             q + 2.0 * p * std::cos(phi)};
  std::sort(e.begin(), e.end());

  // One Newton polish per root on det(t - l*I).
  for (double& l : e) {
    double chi, dchi;
    char_poly_at(t, l, chi, dchi);
    if (dchi != 0.0) l -= chi / dchi;
  }
  std::sort(e.begin(), e.end());

  // Positive-definite repair: the largest eigenvalue is relatively accurate;
  // recover the small ones from the exact trace and the Cholesky determinant
  // so the spectrum keeps sum/product identities at roundoff level even for
  // tiny or clustered eigenvalues.
  if (e[0] > 0.0) {
    double det;
    if (cholesky_det(t, det)) {
      const double tr = t.trace();
      if (e[1] < 0.5 * e[2]) {
        const double s12 = tr - e[2];
        const double p12 = det / e[2];
        if (s12 > 0.0 && p12 > 0.0) {
          const double disc = std::max(s12 * s12 - 4.0 * p12, 0.0);
          const double l2 = 0.5 * (s12 + std::sqrt(disc));
          e[0] = p12 / l2;
          e[1] = l2;
        }
      } else {
        e[0] = det / (e[1] * e[2]);
      }
      std::sort(e.begin(), e.end());
    }
  }
  return e;
}

}  // namespace

std::array<double, 3> eigvals(const SymTensor3& t) {
  double scale = 0.0;
  for (double v : t.components()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return {0.0, 0.0, 0.0};
  const SymTensor3 ts = t * (1.0 / scale);
  auto e = eigvals_scaled(ts);
  for (double& v : e) v *= scale;
  return e;
}

bool is_spd(const SymTensor3& t) {
  if (!t.is_finite()) return false;
  const auto e = eigvals(t);
  return e[0] > 1e-13 * std::max(1.0, e[2]);
}

SpdTensor3::SpdTensor3(const SymTensor3& t) : t_(t) {
  if (!is_spd(t)) {
    throw std::domain_error(
        "SpdTensor3: tensor is not symmetric positive definite "
        "(min eigenvalue <= 1e-13 * max(1, max eigenvalue))");
  }
}

namespace {

// Unit eigenvector of (t - l*I) via the largest cross product of its rows.
// Valid only for well-separated l; callers guard via clustering.
std::array<double, 3> eigenvector_of(const SymTensor3& t, double l) {
  const double row[3][3] = {{t.xx() - l, t.xy(), t.xz()},
                            {t.xy(), t.yy() - l, t.yz()},
                            {t.xz(), t.yz(), t.zz() - l}};
  std::array<double, 3> best = {0.0, 0.0, 0.0};
  double best_norm2 = -1.0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const double* r1 = row[pr[0]];
    const double* r2 = row[pr[1]];
    const std::array<double, 3> c = {r1[1] * r2[2] - r1[2] * r2[1],
                                     r1[2] * r2[0] - r1[0] * r2[2],
                                     r1[0] * r2[1] - r1[1] * r2[0]};
    const double n2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    if (n2 > best_norm2) {
      best_norm2 = n2;
      best = c;
    }
  }
  const double n = std::sqrt(best_norm2);
  if (n > 0.0) {
    for (double& v : best) v /= n;
  } else {
    best = {1.0, 0.0, 0.0};  // fully degenerate: any direction works
  }
  return best;
}

SymTensor3 outer(const std::array<double, 3>& v) {
  return {v[0] * v[0], v[1] * v[1], v[2] * v[2],
          v[0] * v[1], v[0] * v[2], v[1] * v[2]};
}

// f(t) = sum_k [ f(l_k) P_k + f'(l_k) (t - l_k I) P_k ] over eigenvalue
// clusters (relative gap 1e-8). The first-order term absorbs both the
// within-cluster spread and the eigenvalue roundoff, so near-degenerate
// spectra stay accurate without chasing individual eigenvectors.
template <typename F, typename DF>
SymTensor3 spectral_apply(const SymTensor3& t, F&& f, DF&& df) {
  const auto e = eigvals(t);
  const double span = std::max({std::abs(e[0]), std::abs(e[2]), 1e-300});
  const double gap_tol = 1e-8 * span;
  const bool gap01 = (e[1] - e[0]) > gap_tol;
  const bool gap12 = (e[2] - e[1]) > gap_tol;
  const SymTensor3 eye = SymTensor3::identity();

  struct Cluster {
    double mean;
    SymTensor3 proj;
  };
  std::array<Cluster, 3> cl;
  int ncl = 0;

  if (gap01 && gap12) {
    // Three simple eigenvalues: projectors from the two extreme
    // eigenvectors (best conditioned); the middle one is the complement.
    const SymTensor3 p0 = outer(eigenvector_of(t, e[0]));
    const SymTensor3 p2 = outer(eigenvector_of(t, e[2]));
    cl[0] = {e[0], p0};
    cl[1] = {e[1], eye - p0 - p2};
    cl[2] = {e[2], p2};
    ncl = 3;
  } else if (!gap01 && !gap12) {
    cl[0] = {(e[0] + e[1] + e[2]) / 3.0, eye};
    ncl = 1;
  } else if (gap01) {  // pair {e1, e2} clustered, e0 isolated
    const SymTensor3 p0 = outer(eigenvector_of(t, e[0]));
    cl[0] = {e[0], p0};
    cl[1] = {0.5 * (e[1] + e[2]), eye - p0};
    ncl = 2;
  } else {  // pair {e0, e1} clustered, e2 isolated
    const SymTensor3 p2 = outer(eigenvector_of(t, e[2]));
    cl[0] = {0.5 * (e[0] + e[1]), eye - p2};
    cl[1] = {e[2], p2};
    ncl = 2;
  }

  SymTensor3 out;
  for (int k = 0; k < ncl; ++k) {
    const double fv = f(cl[k].mean);
    const double fd = df(cl[k].mean);
    // f(l) P + f'(l) (t - l I) P, symmetrized
    out += fv * cl[k].proj;
    const SymTensor3 shifted = t - cl[k].mean * eye;
    out += fd * sym_product(shifted, cl[k].proj);
  }
  return out;
}

}  // namespace

SymTensor3 mat_log(const SpdTensor3& b) {
  return spectral_apply(
      b.sym(), [](double x) { return std::log(x); },
      [](double x) { return 1.0 / x; });
}

SymTensor3 mat_exp(const SymTensor3& t) {
  return spectral_apply(
      t, [](double x) { return std::exp(x); },
      [](double x) { return std::exp(x); });
}

SpdTensor3 mat_inv(const SpdTensor3& b) {
  const SymTensor3& t = b.sym();
  const double a = t.xx(), bb = t.yy(), c = t.zz();
  const double d = t.xy(), e = t.xz(), f = t.yz();
  const double det = t.det();
  SymTensor3 x{(bb * c - f * f) / det, (a * c - e * e) / det,
               (a * bb - d * d) / det, (e * f - d * c) / det,
               (d * f - e * bb) / det, (d * e - a * f) / det};
  // One Newton step x <- x + x (I - t x) drives the residual to a few ulps
  // even for badly conditioned input.
  const Mat3 tx = mul(t, x);
  Mat3 r;  // I - t x
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (i == j ? 1.0 : 0.0) - tx(i, j);
  const Mat3 corr = mul(Mat3::from(x), r);
  SymTensor3 refined{x.xx() + corr(0, 0), x.yy() + corr(1, 1),
                     x.zz() + corr(2, 2), x.xy() + 0.5 * (corr(0, 1) + corr(1, 0)),
                     x.xz() + 0.5 * (corr(0, 2) + corr(2, 0)),
                     x.yz() + 0.5 * (corr(1, 2) + corr(2, 1))};
  return SpdTensor3(refined);
}

double ln_det(const SpdTensor3& b) {
  const SymTensor3& t = b.sym();
  // Cholesky pivots: ln det = 2 sum ln l_ii. Certification guarantees the
  // pivots are positive up to extreme roundoff; fall back to the cofactor
  // determinant if not.
  const double a11 = t.xx(), a21 = t.xy(), a31 = t.xz();
  const double a22 = t.yy(), a32 = t.yz(), a33 = t.zz();
  if (a11 > 0.0) {
    const double l11 = std::sqrt(a11);
    const double l21 = a21 / l11;
    const double l31 = a31 / l11;
    const double d22 = a22 - l21 * l21;
    if (d22 > 0.0) {
      const double l22 = std::sqrt(d22);
      const double l32 = (a32 - l31 * l21) / l22;
      const double d33 = a33 - l31 * l31 - l32 * l32;
      if (d33 > 0.0) {
        return 2.0 * (std::log(l11) + std::log(l22)) + std::log(d33);
      }
    }
  }
  return std::log(t.det());
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

double Rng::normal() {
  // Box-Muller; guard log(0).
  double u1 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Rng Rng::split(std::uint64_t stream_index) const {
  std::uint64_t mix = s_[0] ^ rotl(s_[3], 13) ^ (stream_index * 0xD6E8FEB86659FD93ull);
  return Rng(splitmix64(mix));
}

Mat3 random_rotation(Rng& rng) {
  // Uniform unit quaternion -> rotation matrix.
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : q) {
      v = rng.normal();
      n2 += v * v;
    }
  } while (n2 == 0.0);
  const double n = std::sqrt(n2);
  for (double& v : q) v /= n;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Mat3 r;
  r(0, 0) = 1 - 2 * (y * y + z * z);
  r(0, 1) = 2 * (x * y - w * z);
  r(0, 2) = 2 * (x * z + w * y);
  r(1, 0) = 2 * (x * y + w * z);
  r(1, 1) = 1 - 2 * (x * x + z * z);
  r(1, 2) = 2 * (y * z - w * x);
  r(2, 0) = 2 * (x * z - w * y);
  r(2, 1) = 2 * (y * z + w * x);
  r(2, 2) = 1 - 2 * (x * x + y * y);
  return r;
}

SymTensor3 rotate_diagonal(const Mat3& r, double d0, double d1, double d2) {
  const double d[3] = {d0, d1, d2};
  SymTensor3 out;
  auto& c = out.components();
  const int slots[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  for (int s = 0; s < 6; ++s) {
    const int i = slots[s][0], j = slots[s][1];
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) acc += r(i, k) * d[k] * r(j, k);
    c[s] = acc;
  }
  return out;
}

SpdTensor3 random_spd(Rng& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw std::domain_error("random_spd: eigenvalue range requires 0 < lo <= hi");
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  double lam[3];
  for (double& l : lam) l = std::exp(rng.uniform(llo, lhi));
  const Mat3 r = random_rotation(rng);
  return SpdTensor3(rotate_diagonal(r, lam[0], lam[1], lam[2]));
}

}  // namespace vestab
