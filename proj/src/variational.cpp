#include "qipa/variational.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "qipa/ising.hpp"

namespace qipa {

namespace {

cdouble inner(const StateVector& a, const StateVector& b) {
    cdouble s(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return s;
}

}  // namespace

McLachlanSystem compute_mclachlan_system(const AnsatzSpec& spec, const std::vector<double>& theta,
                                         const DiagonalObservable& generator) {
    McLachlanSystem sys;
    sys.num_params = spec.parameter_count();
    sys.state = prepare_ansatz_state(spec, theta);
    sys.derivative_states.reserve(static_cast<std::size_t>(sys.num_params));
    for (int i = 0; i < sys.num_params; ++i)
        sys.derivative_states.push_back(parameter_derivative_state(spec, theta, i));

    const std::size_t P = static_cast<std::size_t>(sys.num_params);
    sys.F.assign(P * P, 0.0);
    sys.C.assign(P, cdouble(0.0, 0.0));

    std::vector<cdouble> d_psi(P);  // <di psi | psi>
    for (std::size_t i = 0; i < P; ++i) d_psi[i] = inner(sys.derivative_states[i], sys.state);

    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = i; j < P; ++j) {
            const double fij = std::real(inner(sys.derivative_states[i], sys.derivative_states[j])) -
                               std::real(d_psi[i] * std::conj(d_psi[j]));
            sys.F[i * P + j] = fij;
            sys.F[j * P + i] = fij;
        }
        cdouble ci(0.0, 0.0);
        for (std::size_t b = 0; b < sys.state.dim(); ++b)
            ci += std::conj(sys.derivative_states[i].amplitudes[b]) * generator.values[b] *
                  sys.state.amplitudes[b];
        sys.C[i] = ci;
    }
    return sys;
}

std::vector<double> solve_parameter_velocities(const McLachlanSystem& sys, double regularization) {
    if (regularization < 0.0) throw std::invalid_argument("regularization must be >= 0");
    const int P = sys.num_params;
    if (sys.F.size() != static_cast<std::size_t>(P) * P || sys.C.size() != static_cast<std::size_t>(P))
        throw std::invalid_argument("system dimensions disagree");

    Eigen::Map<const Eigen::MatrixXd> F(sys.F.data(), P, P);  // symmetric, layout moot
    Eigen::VectorXd b(P);
    for (int i = 0; i < P; ++i) b(i) = -std::real(sys.C[static_cast<std::size_t>(i)]);

    const Eigen::VectorXd rhs = F.transpose() * b;
    if (rhs.isZero(0.0)) return std::vector<double>(static_cast<std::size_t>(P), 0.0);

    const double scale = std::max(1.0, F.diagonal().maxCoeff());
    Eigen::MatrixXd A = F.transpose() * F;
    A.diagonal().array() += regularization * scale;

    const Eigen::VectorXd x = A.ldlt().solve(rhs);
    std::vector<double> theta_dot(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i) {
        if (!std::isfinite(x(i))) throw std::runtime_error("non-finite parameter velocity");
        theta_dot[static_cast<std::size_t>(i)] = x(i);
    }
    return theta_dot;
}

DiagonalObservable evolution_generator(const DiagonalObservable& problem,
                                       const EvolutionConfig& config) {
    if (!(config.delta_tau > 0.0) || !(config.delta_t > 0.0))
        throw std::invalid_argument("delta_tau and delta_t must be positive");
    if (config.mode == EvolutionMode::VarQITE) return problem;

    DiagonalObservable g = problem;
    for (double& h : g.values) {
        const double x = h * config.delta_t;
        if (x > 700.0)
            throw std::domain_error("e^{h dt} overflows; use a smaller delta_t or pre-shift H");
        h = std::expm1(x) / config.delta_t;
    }
    return g;
}

DiagonalObservable evolution_generator(const IsingHamiltonian& H, const EvolutionConfig& config) {
    return evolution_generator(diagonal_observable(H), config);
}

double step_error_norm(const McLachlanSystem& sys, const DiagonalObservable& generator,
                       const std::vector<double>& theta_dot) {
    if (theta_dot.size() != static_cast<std::size_t>(sys.num_params))
        throw std::invalid_argument("theta_dot length mismatch");
    const double mean = expectation(sys.state, generator);
    double n2 = 0.0;
    for (std::size_t b = 0; b < sys.state.dim(); ++b) {
        cdouble r = (generator.values[b] - mean) * sys.state.amplitudes[b];
        for (std::size_t i = 0; i < theta_dot.size(); ++i)
            r += theta_dot[i] * sys.derivative_states[i].amplitudes[b];
        n2 += std::norm(r);
    }
    return std::sqrt(n2);
}

double step_error_norm_quadratic(const McLachlanSystem& sys, const DiagonalObservable& generator,
                                 const std::vector<double>& theta_dot) {
    if (theta_dot.size() != static_cast<std::size_t>(sys.num_params))
        throw std::invalid_argument("theta_dot length mismatch");
    const std::size_t P = theta_dot.size();
    double v = variance(sys.state, generator);
    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = 0; j < P; ++j) v += theta_dot[i] * theta_dot[j] * sys.F[i * P + j];
        v += 2.0 * theta_dot[i] * std::real(sys.C[i]);
    }
    if (v < -1e-6) throw std::runtime_error("inconsistent system: negative squared step error");
    return std::sqrt(std::max(0.0, v));
}

std::vector<TrajectoryStep> run_evolution(const DiagonalObservable& problem,
                                          const std::vector<std::string>& targets,
                                          const AnsatzSpec& spec, const EvolutionConfig& config,
                                          const std::optional<std::vector<double>>& theta0) {
    if (spec.num_qubits != problem.num_qubits)
        throw std::invalid_argument("ansatz and problem qubit counts differ");
    if (config.num_steps < 0) throw std::invalid_argument("num_steps must be >= 0");

    const DiagonalObservable generator = evolution_generator(problem, config);
    std::vector<double> theta = theta0 ? *theta0 : initial_parameters(spec, config.seed);
    const StateVector psi0 = prepare_ansatz_state(spec, theta);

    std::vector<TrajectoryStep> trajectory;
    trajectory.reserve(static_cast<std::size_t>(config.num_steps));
    double error_sum = 0.0;

    for (int k = 1; k <= config.num_steps; ++k) {
        const McLachlanSystem sys = compute_mclachlan_system(spec, theta, generator);
        const std::vector<double> theta_dot = solve_parameter_velocities(sys, config.regularization);
        const double err = step_error_norm(sys, generator, theta_dot);

        bool finite = true;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            theta[i] += config.delta_tau * theta_dot[i];
            finite = finite && std::isfinite(theta[i]);
        }

        TrajectoryStep rec;
        rec.step = k;
        rec.time = k * config.delta_tau;
        rec.theta = theta;
        if (!finite) {
            rec.diverged = true;
            trajectory.push_back(std::move(rec));
            break;
        }

        const StateVector psi = prepare_ansatz_state(spec, theta);
        error_sum += err;
        rec.energy = expectation(psi, problem);
        rec.solution_prob = solution_probability(psi, targets);
        rec.step_error = err;
        rec.bures_cum = config.delta_tau * error_sum;
        rec.bures_exact = bures_distance(psi, exact_imaginary_evolution(generator, psi0, rec.time));
        trajectory.push_back(std::move(rec));
    }
    return trajectory;
}

std::vector<TrajectoryStep> run_evolution(const IsingHamiltonian& H, const AnsatzSpec& spec,
                                          const EvolutionConfig& config,
                                          const std::optional<std::vector<double>>& theta0) {
    const SpectrumSummary summary = brute_force_spectrum(H);
    return run_evolution(diagonal_observable(H), summary.ground_states, spec, config, theta0);
}

}  // namespace qipa
