#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qipa/ising.hpp"

namespace qipa {

using cdouble = std::complex<double>;

struct StateVector {
    int num_qubits = 0;
    std::vector<cdouble> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

// Hardware-efficient ansatz: an RY layer on the initial state, then `layers`
// repetitions of (ring-CX entangler, RY layer). Parameter p = layer*n + qubit.
// ZeroState with layers = 0 is the single-qubit test-harness mode.
struct AnsatzSpec {
    enum class Initial { PlusState, ZeroState };

    int num_qubits = 0;
    int layers = 2;
    Initial initial = Initial::PlusState;

    int parameter_count() const { return num_qubits * (layers + 1); }
};

struct DiagonalObservable {
    int num_qubits = 0;
    std::vector<double> values;
};

StateVector uniform_state(int n);
StateVector basis_state(int n, std::uint64_t b);

StateVector prepare_ansatz_state(const AnsatzSpec& spec, const std::vector<double>& theta);

// Analytic d|psi>/d theta_i via generator insertion (-iY/2 at the gate site);
// unnormalized, norm <= 1/2.
StateVector parameter_derivative_state(const AnsatzSpec& spec, const std::vector<double>& theta, int i);

// Zeros plus seeded uniform noise in [-noise, noise]; exact zeros sit on
// symmetry points where F is singular.
std::vector<double> initial_parameters(const AnsatzSpec& spec, std::uint64_t seed, double noise = 0.01);

double expectation(const StateVector& state, const DiagonalObservable& obs);
double variance(const StateVector& state, const DiagonalObservable& obs);

DiagonalObservable diagonal_observable(const IsingHamiltonian& H);
DiagonalObservable diagonal_function_observable(const IsingHamiltonian& H,
                                                const std::function<double(double)>& g);

double solution_probability(const StateVector& state, const std::vector<std::string>& targets);

// e^{-G tau} |state0>, renormalized in log space (safe for upscaled spectra).
StateVector exact_imaginary_evolution(const DiagonalObservable& G, const StateVector& state0, double tau);
StateVector exact_imaginary_evolution(const IsingHamiltonian& H, const StateVector& state0, double tau);

// sqrt(2 (1 - |<a|b>|)); phase-insensitive, lower-bounds the l2 distance.
double bures_distance(const StateVector& a, const StateVector& b);
double l2_distance(const StateVector& a, const StateVector& b);

}  // namespace qipa
