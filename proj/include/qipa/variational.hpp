#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qipa/statevector.hpp"

namespace qipa {

// F_ij = Re(<di psi|dj psi> - <di psi|psi><psi|dj psi>), C_i = <di psi|G|psi>.
// The state and derivative states are kept so the step-error residual can be
// formed without recomputing the circuit.
struct McLachlanSystem {
    int num_params = 0;
    std::vector<double> F;    // row-major P x P
    std::vector<cdouble> C;
    StateVector state;
    std::vector<StateVector> derivative_states;

    double f(int i, int j) const { return F[static_cast<std::size_t>(i) * num_params + j]; }
};

enum class EvolutionMode { VarQITE, QIPA2 };

struct EvolutionConfig {
    double delta_tau = 0.01;
    double delta_t = 0.1;  // QIPA2 oracle step; unused by varQITE
    int num_steps = 100;
    double regularization = 1e-8;
    EvolutionMode mode = EvolutionMode::VarQITE;
    std::uint64_t seed = 0;
};

struct TrajectoryStep {
    int step = 0;        // 1-based; records are post-update, so 0 steps = empty
    double time = 0.0;   // step * delta_tau
    std::vector<double> theta;
    double energy = 0.0;          // <H> against the problem Hamiltonian passed in
    double solution_prob = 0.0;   // summed over the ground set
    double step_error = 0.0;      // || sum_i thetadot_i |di psi> + (G - <G>)|psi> ||_2
    double bures_cum = 0.0;       // delta_tau * sum of step errors so far
    double bures_exact = 0.0;     // Bures distance to e^{-G t}|psi_0>
    bool diverged = false;
};

McLachlanSystem compute_mclachlan_system(const AnsatzSpec& spec, const std::vector<double>& theta,
                                         const DiagonalObservable& generator);

// Tikhonov-regularized least squares for F thetadot = -Re(C):
// thetadot = (F^T F + reg * max(1, max diag F) * I)^{-1} F^T (-Re C).
std::vector<double> solve_parameter_velocities(const McLachlanSystem& sys, double regularization);

// varQITE: the problem diagonal itself. QIPA2: entrywise (e^{h dt} - 1)/dt,
// which reduces to H as dt -> 0 and double-exponentiates under repeated
// imaginary-time steps.
DiagonalObservable evolution_generator(const DiagonalObservable& problem, const EvolutionConfig& config);
DiagonalObservable evolution_generator(const IsingHamiltonian& H, const EvolutionConfig& config);

// Residual form of Appendix C Eq. (18); algebraically equal to
// sqrt(Var + thetadot F thetadot + 2 thetadot Re C) for the normalized real
// ansatz but immune to the catastrophic cancellation of the quadratic form.
double step_error_norm(const McLachlanSystem& sys, const DiagonalObservable& generator,
                       const std::vector<double>& theta_dot);

// The literal quadratic form, clamped at zero; throws below -1e-6
// ("inconsistent system"). Kept as a cross-check of the residual form.
double step_error_norm_quadratic(const McLachlanSystem& sys, const DiagonalObservable& generator,
                                 const std::vector<double>& theta_dot);

// Euler loop: build system, solve velocities, theta += delta_tau * thetadot,
// log. `targets` is the ground set for the probability column.
std::vector<TrajectoryStep> run_evolution(const DiagonalObservable& problem,
                                          const std::vector<std::string>& targets,
                                          const AnsatzSpec& spec, const EvolutionConfig& config,
                                          const std::optional<std::vector<double>>& theta0 = std::nullopt);

// Convenience wrapper: ground set from brute_force_spectrum(H).
std::vector<TrajectoryStep> run_evolution(const IsingHamiltonian& H, const AnsatzSpec& spec,
                                          const EvolutionConfig& config,
                                          const std::optional<std::vector<double>>& theta0 = std::nullopt);

}  // namespace qipa
