#pragma once

#include <string>
#include <vector>

namespace vestab {

/// Temperature dependence of a viscosity coefficient. Both variants carry
/// explicit bounds: inf() is a positive lower bound, sup() a finite upper
/// bound, as required by the decay-rate constants.
struct ViscosityLaw {
  enum class Kind { constant, bounded_exponential };

  Kind kind = Kind::constant;
  double value = 1.0;      // constant variant
  double base = 1.0;       // bounded_exponential: base + amplitude*exp(-rate*theta/theta_ref)
  double amplitude = 0.0;
  double rate = 0.0;
  double theta_ref = 300.0;

  static ViscosityLaw constant(double v);
  static ViscosityLaw bounded_exponential(double base, double amplitude,
                                          double rate, double theta_ref);

  double operator()(double theta) const;
  double inf() const;
  double sup() const;

  /// Appends human-readable violations; empty result means valid.
  void validate(const std::string& prefix, std::vector<std::string>& errors) const;
};

enum class ModelKind {
  oldroyd_b,
  giesekus,
  fene_p,
  johnson_segalman,
  ptt_exponential,
  ptt_linear,
};

std::string to_string(ModelKind kind);
/// Throws std::invalid_argument for unknown names.
ModelKind model_kind_from_string(const std::string& name);

/// One of the five rate-type models together with its material parameters.
/// Use the factories (or validate()) rather than aggregate-initializing, so
/// the parameter ranges are enforced.
struct ModelSpec {
  ModelKind kind = ModelKind::oldroyd_b;
  double mu = 1.0;    // elastic modulus density [Pa]
  double rho = 1.0;   // mass density [kg/m^3]
  double a = 1.0;     // slip parameter, fixed to 1 except Johnson-Segalman / PTT
  double alpha = 0.5; // Giesekus only, in (0,1)
  double b = 10.0;    // FENE-P only, > 3
  double p = 0.1;     // PTT only, > 0 (linear PTT: in (0, 1/3])
  ViscosityLaw nu = ViscosityLaw::constant(1.0);
  ViscosityLaw nu1 = ViscosityLaw::constant(1.0);

  static ModelSpec oldroyd_b(double mu, double rho, ViscosityLaw nu,
                             ViscosityLaw nu1);
  static ModelSpec giesekus(double mu, double rho, double alpha,
                            ViscosityLaw nu, ViscosityLaw nu1);
  static ModelSpec fene_p(double mu, double rho, double b, ViscosityLaw nu,
                          ViscosityLaw nu1);
  static ModelSpec johnson_segalman(double mu, double rho, double a,
                                    ViscosityLaw nu, ViscosityLaw nu1);
  static ModelSpec ptt_exponential(double mu, double rho, double a, double p,
                                   ViscosityLaw nu, ViscosityLaw nu1);
  static ModelSpec ptt_linear(double mu, double rho, double a, double p,
                              ViscosityLaw nu, ViscosityLaw nu1);

  std::vector<std::string> validate() const;
  /// Throws std::invalid_argument listing every violation.
  void validate_or_throw() const;

  /// True for the models whose slip parameter is a free input.
  bool slip_is_free() const {
    return kind == ModelKind::johnson_segalman ||
           kind == ModelKind::ptt_exponential || kind == ModelKind::ptt_linear;
  }
};

/// Thermal material constants.
struct ThermalSpec {
  double c_v_ref = 1.0;     // specific heat [J/(kg K)]
  double kappa_ref = 1.0;   // thermal conductivity [W/(m K)]
  double theta_ref = 300.0; // reference temperature [K]

  std::vector<std::string> validate() const;
  void validate_or_throw() const;
};

}  // namespace vestab
