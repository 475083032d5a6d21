#pragma once

#include <string_view>

#include "vestab/model.hpp"
#include "vestab/tensor.hpp"

namespace vestab {

/// Elastic part of the specific free energy [J/kg]. Nonnegative, zero
/// exactly at b = I. Evaluated spectrally so the FENE-P log arguments are
/// guarded per eigenvalue. Throws std::domain_error when FENE-P is evaluated
/// outside tr b <= b_max * (1 - 1e-9).
double psi1(const ModelSpec& m, const SpdTensor3& b);

/// Derivative of psi1 with respect to b (symmetric-tensor convention:
/// the Frechet pairing is frob_inner(dpsi1_dB, delta_b)).
SymTensor3 dpsi1_dB(const ModelSpec& m, const SpdTensor3& b);

/// Relaxation function driving b toward the identity.
SymTensor3 relax_f(const ModelSpec& m, const SpdTensor3& b);

struct CfConstant {
  double value;
  /// False when the constant comes from the model literature, true when it
  /// is the implementation's own derived bound (linear PTT).
  bool derived;
};

/// Stability constant bounding psi1 by the dissipation pairing:
/// psi1(b) <= cf * frob_inner(dpsi1_dB(b), relax_f(b)).
/// Oldroyd-B / Johnson-Segalman: 1 (optimal); Giesekus: 1/(1-alpha);
/// FENE-P: 1-3/b; exponential PTT: e^{3p}; linear PTT: derived 1/(1-3p)
/// for p < 1/3 (domain error at p = 1/3, where no finite constant exists).
CfConstant cf_paper(const ModelSpec& m);

/// Deviatoric elastic contribution to the Cauchy stress [Pa]:
/// 2 rho a dev(b * dpsi1_dB(b)). Traceless; zero at b = I.
SymTensor3 elastic_stress(const ModelSpec& m, const SpdTensor3& b);

/// Dissipation pairing frob_inner(dpsi1_dB(b), relax_f(b)) [J/kg].
/// Closed form per model (no eigen-decomposition); nonnegative.
double dissipation_pairing(const ModelSpec& m, const SpdTensor3& b);

/// Mechanical entropy production zeta_mech [W/m^3]:
/// 2 nu(theta) d:d + rho * mu / nu1(theta) * dissipation_pairing(b).
double zeta_mech(const ModelSpec& m, const SymTensor3& d, const SpdTensor3& b,
                 double theta);

// Scalar inequality catalog. Each function is nonnegative on its stated
// domain and vanishes only at the indicated root.
double scalar_f(double x);                      // x - 1 - ln x, root x = 1
double scalar_g(double x);                      // x - 2 + 1/x, root x = 1
double scalar_h(double x);                      // 1/x + ln x - 1, root x = 1
double scalar_g_alpha(double x, double alpha);  // alpha in (0,1), root x = 1
double scalar_f_rs(double x, double r, double s);  // r > 0, s < 0, root x = 1
double scalar_f_b(double eps, double b);        // eps in (0,1), b > 3, root eps = 3/b

struct ScalarParams {
  double alpha = 0.5;
  double r = 3.0;
  double s = -7.0;
  double b = 10.0;
};

/// Name-dispatched access to the catalog ("f", "g", "h", "g_alpha", "f_rs",
/// "f_b"); the argument is x (or eps for "f_b"). Throws std::invalid_argument
/// for unknown names, std::domain_error for domain violations.
double scalar_catalog(std::string_view name, double x,
                      const ScalarParams& params = {});

}  // namespace vestab
