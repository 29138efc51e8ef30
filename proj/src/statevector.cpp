#include "qipa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qipa/rng.hpp"

namespace qipa {

namespace {

void check_dims(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": qubit counts differ");
}

void apply_ry(StateVector& s, int qubit, double theta) {
    const double c = std::cos(theta / 2.0);
    const double sn = std::sin(theta / 2.0);
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t dim = s.dim();
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & mask) continue;
        const cdouble a0 = s.amplitudes[b];
        const cdouble a1 = s.amplitudes[b | mask];
        s.amplitudes[b] = c * a0 - sn * a1;
        s.amplitudes[b | mask] = sn * a0 + c * a1;
    }
}

// Generator insertion for d(RY)/dtheta: the real matrix [[0,-1/2],[1/2,0]].
void apply_ry_generator(StateVector& s, int qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t dim = s.dim();
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & mask) continue;
        const cdouble a0 = s.amplitudes[b];
        const cdouble a1 = s.amplitudes[b | mask];
        s.amplitudes[b] = -0.5 * a1;
        s.amplitudes[b | mask] = 0.5 * a0;
    }
}

void apply_cx(StateVector& s, int control, int target) {
    const std::size_t cm = std::size_t{1} << control;
    const std::size_t tm = std::size_t{1} << target;
    const std::size_t dim = s.dim();
    for (std::size_t b = 0; b < dim; ++b)
        if ((b & cm) && !(b & tm)) std::swap(s.amplitudes[b], s.amplitudes[b | tm]);
}

void apply_ring_entangler(StateVector& s) {
    const int n = s.num_qubits;
    if (n < 2) return;
    for (int i = 0; i < n; ++i) apply_cx(s, i, (i + 1) % n);
}

// Shared circuit walk; derivative_of < 0 prepares the plain state, otherwise
// the generator is inserted right after that parameter's RY gate.
StateVector run_circuit(const AnsatzSpec& spec, const std::vector<double>& theta, int derivative_of) {
    if (spec.num_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
    if (spec.layers < 0) throw std::invalid_argument("ansatz layers must be >= 0");
    if (theta.size() != static_cast<std::size_t>(spec.parameter_count()))
        throw std::invalid_argument("theta length " + std::to_string(theta.size()) +
                                    " != parameter count " + std::to_string(spec.parameter_count()));

    StateVector s = spec.initial == AnsatzSpec::Initial::PlusState
                        ? uniform_state(spec.num_qubits)
                        : basis_state(spec.num_qubits, 0);

    const int n = spec.num_qubits;
    for (int layer = 0; layer <= spec.layers; ++layer) {
        if (layer > 0) apply_ring_entangler(s);
        for (int q = 0; q < n; ++q) {
            const int p = layer * n + q;
            apply_ry(s, q, theta[static_cast<std::size_t>(p)]);
            if (p == derivative_of) apply_ry_generator(s, q);
        }
    }
    return s;
}

}  // namespace

double StateVector::norm() const {
    double n2 = 0.0;
    for (const cdouble& a : amplitudes) n2 += std::norm(a);
    return std::sqrt(n2);
}

StateVector uniform_state(int n) {
    StateVector s;
    s.num_qubits = n;
    const std::size_t dim = std::size_t{1} << n;
    s.amplitudes.assign(dim, cdouble(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return s;
}

StateVector basis_state(int n, std::uint64_t b) {
    StateVector s;
    s.num_qubits = n;
    const std::size_t dim = std::size_t{1} << n;
    if (b >= dim) throw std::invalid_argument("basis index out of range");
    s.amplitudes.assign(dim, cdouble(0.0, 0.0));
    s.amplitudes[b] = 1.0;
    return s;
}

StateVector prepare_ansatz_state(const AnsatzSpec& spec, const std::vector<double>& theta) {
    return run_circuit(spec, theta, -1);
}

StateVector parameter_derivative_state(const AnsatzSpec& spec, const std::vector<double>& theta,
                                       int i) {
    if (i < 0 || i >= spec.parameter_count())
        throw std::invalid_argument("parameter index out of range");
    return run_circuit(spec, theta, i);
}

std::vector<double> initial_parameters(const AnsatzSpec& spec, std::uint64_t seed, double noise) {
    SplitMix64 rng(seed);
    std::vector<double> theta(static_cast<std::size_t>(spec.parameter_count()));
    for (double& t : theta) t = rng.next_real(-noise, noise);
    return theta;
}

double expectation(const StateVector& state, const DiagonalObservable& obs) {
    check_dims(state.num_qubits, obs.num_qubits, "expectation");
    double e = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b)
        e += std::norm(state.amplitudes[b]) * obs.values[b];
    return e;
}

double variance(const StateVector& state, const DiagonalObservable& obs) {
    check_dims(state.num_qubits, obs.num_qubits, "variance");
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const double p = std::norm(state.amplitudes[b]);
        e1 += p * obs.values[b];
        e2 += p * obs.values[b] * obs.values[b];
    }
    return std::max(0.0, e2 - e1 * e1);
}

DiagonalObservable diagonal_observable(const IsingHamiltonian& H) {
    return {H.num_qubits, diagonal_values(H)};
}

DiagonalObservable diagonal_function_observable(const IsingHamiltonian& H,
                                                const std::function<double(double)>& g) {
    DiagonalObservable obs{H.num_qubits, diagonal_values(H)};
    for (std::size_t b = 0; b < obs.values.size(); ++b) {
        obs.values[b] = g(obs.values[b]);
        if (!std::isfinite(obs.values[b]))
            throw std::domain_error("diagonal function not finite at basis index " +
                                    std::to_string(b));
    }
    return obs;
}

double solution_probability(const StateVector& state, const std::vector<std::string>& targets) {
    if (targets.empty()) throw std::invalid_argument("empty target set");
    double p = 0.0;
    for (const std::string& t : targets) {
        if (t.size() != static_cast<std::size_t>(state.num_qubits))
            throw std::invalid_argument("target bitstring length mismatch");
        p += std::norm(state.amplitudes[bits_from_string(t)]);
    }
    return p;
}

StateVector exact_imaginary_evolution(const DiagonalObservable& G, const StateVector& state0,
                                      double tau) {
    check_dims(state0.num_qubits, G.num_qubits, "exact_imaginary_evolution");
    if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");

    // Log-space rescaling: the largest surviving log-magnitude is mapped to 1
    // before exponentiating, so upscaled spectra cannot underflow everything.
    const std::size_t dim = state0.dim();
    std::vector<double> logmag(dim, -std::numeric_limits<double>::infinity());
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < dim; ++b) {
        const double m = std::abs(state0.amplitudes[b]);
        if (m > 0.0) {
            logmag[b] = std::log(m) - G.values[b] * tau;
            max_log = std::max(max_log, logmag[b]);
        }
    }
    if (!std::isfinite(max_log)) throw std::domain_error("evolving the zero state");

    StateVector out;
    out.num_qubits = state0.num_qubits;
    out.amplitudes.assign(dim, cdouble(0.0, 0.0));
    double norm2 = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
        const double m = std::abs(state0.amplitudes[b]);
        if (m == 0.0) continue;
        const cdouble phase = state0.amplitudes[b] / m;
        const double mag = std::exp(logmag[b] - max_log);
        out.amplitudes[b] = phase * mag;
        norm2 += mag * mag;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cdouble& a : out.amplitudes) a *= inv;
    return out;
}

StateVector exact_imaginary_evolution(const IsingHamiltonian& H, const StateVector& state0,
                                      double tau) {
    return exact_imaginary_evolution(diagonal_observable(H), state0, tau);
}

double bures_distance(const StateVector& a, const StateVector& b) {
    check_dims(a.num_qubits, b.num_qubits, "bures_distance");
    cdouble inner(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        inner += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    const double overlap = std::min(1.0, std::abs(inner));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - overlap)));
}

double l2_distance(const StateVector& a, const StateVector& b) {
    check_dims(a.num_qubits, b.num_qubits, "l2_distance");
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) d2 += std::norm(a.amplitudes[i] - b.amplitudes[i]);
    return std::sqrt(d2);
}

}  // namespace qipa
