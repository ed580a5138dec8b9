#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wtdfisher {

/// Dense complex matrix. All rates are expressed in units of a reference
/// rate Gamma0 and times in units of 1/Gamma0; operators carry sqrt(rate).
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-12;

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// A monitored decay channel. The jump operator must be rank one onto the
/// computational basis state `final_state`, i.e. every column proportional
/// to e_{final_state}, so that a detected click collapses the emitter into
/// a definite state.
struct DetectedChannel {
  ComplexMatrix op;
  int final_state = 0;
  double efficiency = 1.0;
  std::string label;
};

/// A dissipator that never produces a detector click (e.g. dephasing). Its
/// feeding term is kept at full strength in every propagation.
struct UndetectedDissipator {
  ComplexMatrix op;
  std::string label;
};

/// Immutable parameterized open system: Hamiltonian plus detected and
/// undetected jump channels. Validates all invariants on construction and is
/// safe to share across threads afterwards.
class OpenSystemModel {
 public:
  OpenSystemModel(ComplexMatrix hamiltonian,
                  std::vector<DetectedChannel> detected,
                  std::vector<UndetectedDissipator> undetected = {});

  int dim() const { return static_cast<int>(hamiltonian_.rows()); }
  /// Number of detected channels M.
  int channels() const { return static_cast<int>(detected_.size()); }

  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<DetectedChannel>& detected() const { return detected_; }
  const std::vector<UndetectedDissipator>& undetected() const { return undetected_; }

  /// Copy of this model with the efficiency of channel m replaced.
  OpenSystemModel with_efficiency(int m, double efficiency) const;

  /// Hash of the physical content (dimension, matrices, final states,
  /// efficiencies); labels are ignored.
  std::uint64_t fingerprint() const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<DetectedChannel> detected_;
  std::vector<UndetectedDissipator> undetected_;
};

/// Parameters of the driven three-level Lambda system: two ground states
/// |0>, |1> coupled to the excited state |2> with Rabi frequencies omega0/1,
/// detunings delta0/1, decay rates gamma0/1 and a ground-state dephasing
/// rate gamma_deph.
struct LambdaSystemParams {
  double omega0 = 0.0;
  double omega1 = 0.0;
  double delta0 = 0.0;
  double delta1 = 0.0;
  double gamma0 = 1.0;
  double gamma1 = 0.0;
  double gamma_deph = 0.0;
  double eta0 = 1.0;
  double eta1 = 1.0;
};

/// Builds the Lambda system in the basis (|0>, |1>, |2>) with Hamiltonian
///   [ delta0    0      omega0/2 ]
///   [   0     delta1   omega1/2 ]
///   [ omega0/2 omega1/2    0    ]
/// and detected channels sqrt(gamma0)|0><2|, sqrt(gamma1)|1><2| in that
/// order. Channel 1 is present only when gamma1 > 0 (a zero jump operator is
/// not a valid rank-one channel). When gamma_deph > 0, the dephasing
/// operator sqrt(gamma_deph) diag(1, -1, 1) is appended as an undetected
/// dissipator.
OpenSystemModel build_lambda_system(const LambdaSystemParams& p);

/// Two-level emitter with ground state |0> (index 0), excited state |1>, one
/// detected channel sqrt(gamma)|0><1| and Hamiltonian
///   [ 0        omega/2 ]
///   [ omega/2   -delta ]
/// The global energy shift is fixed so that the ground state has energy 0;
/// delta > 0 means the drive is above the atomic resonance.
OpenSystemModel build_two_level(double omega, double delta, double gamma,
                                double eta = 1.0);

/// A scalar family of models theta -> OpenSystemModel. `builder` must be
/// pure and produce models of constant dimension and channel count over the
/// swept range. theta0 is the prior offset value at which estimators and
/// Fisher information are evaluated.
struct ParameterizedModel {
  std::function<OpenSystemModel(double)> builder;
  double theta0 = 0.0;
  std::optional<double> fd_step;  // central-difference half width

  OpenSystemModel at(double theta) const { return builder(theta); }
  /// fd_step, defaulting to 1e-4 * max(1, |theta0|).
  double resolved_fd_step() const;
  ParameterizedModel rebased(double new_theta0) const;
};

/// Parses a JSON model configuration (see README for the schema) and
/// validates all invariants at theta0. Throws ConfigError with the offending
/// field path on schema violations.
ParameterizedModel load_model(const std::string& config_text);
ParameterizedModel load_model_file(const std::string& path);

/// Serializes a model to the explicit-matrix configuration form. The output
/// feeds back through load_model to an identical model.
std::string render_model_config(const OpenSystemModel& model);

}  // namespace wtdfisher
