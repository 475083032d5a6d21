#include "vestab/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vestab {

ViscosityLaw ViscosityLaw::constant(double v) {
  ViscosityLaw law;
  law.kind = Kind::constant;
  law.value = v;
  return law;
}

ViscosityLaw ViscosityLaw::bounded_exponential(double base, double amplitude,
                                               double rate, double theta_ref) {
  ViscosityLaw law;
  law.kind = Kind::bounded_exponential;
  law.base = base;
  law.amplitude = amplitude;
  law.rate = rate;
  law.theta_ref = theta_ref;
  return law;
}

double ViscosityLaw::operator()(double theta) const {
  if (kind == Kind::constant) return value;
  return base + amplitude * std::exp(-rate * theta / theta_ref);
}

double ViscosityLaw::inf() const {
  return kind == Kind::constant ? value : base;
}

double ViscosityLaw::sup() const {
  return kind == Kind::constant ? value : base + amplitude;
}

void ViscosityLaw::validate(const std::string& prefix,
                            std::vector<std::string>& errors) const {
  if (kind == Kind::constant) {
    if (!(value > 0.0)) errors.push_back(prefix + ".value must be positive");
    return;
  }
  if (!(base > 0.0)) errors.push_back(prefix + ".base must be positive");
  if (!(amplitude >= 0.0)) errors.push_back(prefix + ".amplitude must be nonnegative");
  if (!(rate >= 0.0)) errors.push_back(prefix + ".rate must be nonnegative");
  if (!(theta_ref > 0.0)) errors.push_back(prefix + ".theta_ref must be positive");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::oldroyd_b: return "oldroyd_b";
    case ModelKind::giesekus: return "giesekus";
    case ModelKind::fene_p: return "fene_p";
    case ModelKind::johnson_segalman: return "johnson_segalman";
    case ModelKind::ptt_exponential: return "ptt_exponential";
    case ModelKind::ptt_linear: return "ptt_linear";
  }
  return "unknown";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "oldroyd_b") return ModelKind::oldroyd_b;
  if (name == "giesekus") return ModelKind::giesekus;
  if (name == "fene_p") return ModelKind::fene_p;
  if (name == "johnson_segalman") return ModelKind::johnson_segalman;
  if (name == "ptt_exponential") return ModelKind::ptt_exponential;
  if (name == "ptt_linear") return ModelKind::ptt_linear;
  throw std::invalid_argument("unknown model kind: '" + name +
                              "' (expected oldroyd_b, giesekus, fene_p, "
                              "johnson_segalman, ptt_exponential, ptt_linear)");
}

namespace {

ModelSpec make_base(ModelKind kind, double mu, double rho, ViscosityLaw nu,
                    ViscosityLaw nu1) {
  ModelSpec m;
  m.kind = kind;
  m.mu = mu;
  m.rho = rho;
  m.nu = nu;
  m.nu1 = nu1;
  return m;
}

}  // namespace

ModelSpec ModelSpec::oldroyd_b(double mu, double rho, ViscosityLaw nu,
                               ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::oldroyd_b, mu, rho, nu, nu1);
  m.validate_or_throw();
  return m;
}

ModelSpec ModelSpec::giesekus(double mu, double rho, double alpha,
                              ViscosityLaw nu, ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::giesekus, mu, rho, nu, nu1);
  m.alpha = alpha;
  m.validate_or_throw();
  return m;
}

ModelSpec ModelSpec::fene_p(double mu, double rho, double b, ViscosityLaw nu,
                            ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::fene_p, mu, rho, nu, nu1);
  m.b = b;
  m.validate_or_throw();
  return m;
}

ModelSpec ModelSpec::johnson_segalman(double mu, double rho, double a,
                                      ViscosityLaw nu, ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::johnson_segalman, mu, rho, nu, nu1);
  m.a = a;
  m.validate_or_throw();
  return m;
}

ModelSpec ModelSpec::ptt_exponential(double mu, double rho, double a, double p,
                                     ViscosityLaw nu, ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::ptt_exponential, mu, rho, nu, nu1);
  m.a = a;
  m.p = p;
  m.validate_or_throw();
  return m;
}

ModelSpec ModelSpec::ptt_linear(double mu, double rho, double a, double p,
                                ViscosityLaw nu, ViscosityLaw nu1) {
  ModelSpec m = make_base(ModelKind::ptt_linear, mu, rho, nu, nu1);
  m.a = a;
  m.p = p;
  m.validate_or_throw();
  return m;
}

std::vector<std::string> ModelSpec::validate() const {
  std::vector<std::string> errors;
  if (!(mu > 0.0)) errors.push_back("model.mu must be positive");
  if (!(rho > 0.0)) errors.push_back("model.rho must be positive");
  if (slip_is_free()) {
    if (!(a >= -1.0 && a <= 1.0))
      errors.push_back("model.a must lie in [-1, 1]");
  } else if (a != 1.0) {
    errors.push_back("model.a is fixed to 1 for " + to_string(kind));
  }
  if (kind == ModelKind::giesekus && !(alpha > 0.0 && alpha < 1.0)) {
    errors.push_back("model.alpha must lie in (0,1)");
  }
  if (kind == ModelKind::fene_p && !(b > 3.0)) {
    errors.push_back("model.b must exceed 3");
  }
  if (kind == ModelKind::ptt_exponential && !(p > 0.0)) {
    errors.push_back("model.p must be positive");
  }
  if (kind == ModelKind::ptt_linear && !(p > 0.0 && p <= 1.0 / 3.0)) {
    errors.push_back("model.p must lie in (0, 1/3] for the linear PTT variant");
  }
  nu.validate("model.nu", errors);
  nu1.validate("model.nu1", errors);
  return errors;
}

void ModelSpec::validate_or_throw() const {
  const auto errors = validate();
  if (errors.empty()) return;
  std::ostringstream os;
  os << "invalid ModelSpec:";
  for (const auto& e : errors) os << "\n  - " << e;
  throw std::invalid_argument(os.str());
}

std::vector<std::string> ThermalSpec::validate() const {
  std::vector<std::string> errors;
  if (!(c_v_ref > 0.0)) errors.push_back("thermal.c_v_ref must be positive");
  if (!(kappa_ref > 0.0)) errors.push_back("thermal.kappa_ref must be positive");
  if (!(theta_ref > 0.0)) errors.push_back("thermal.theta_ref must be positive");
  return errors;
}

void ThermalSpec::validate_or_throw() const {
  const auto errors = validate();
  if (errors.empty()) return;
  std::ostringstream os;
  os << "invalid ThermalSpec:";
  for (const auto& e : errors) os << "\n  - " << e;
  throw std::invalid_argument(os.str());
}

}  // namespace vestab
