#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qipa/graph.hpp"

namespace qipa {

struct ZZTerm {
    int i = 0;
    int j = 0;
    double w = 0.0;
};

// Diagonal H = alpha * sum_ij w_ij Z_i Z_j. The MaxCut constant sum(w)/2 is
// recorded (at alpha = 1) but never enters the diagonal.
struct IsingHamiltonian {
    int num_qubits = 0;
    std::vector<ZZTerm> terms;
    double alpha = 1.0;
    double constant_offset = 0.0;

    std::size_t dim() const { return std::size_t{1} << num_qubits; }
};

// Exhaustive enumeration guard: 2^24 doubles is still desk scale.
inline constexpr int kEnumerationGuard = 24;

// Maximization normalization: lambda_b = alpha * (shift0 - E0_b) where E0 is
// the alpha=1 diagonal and shift0 = 1 + |max E0|. Computing the shift on the
// base spectrum (not the scaled one) makes the ratio exactly invariant and the
// gap exactly *alpha under upscaling. `shift` below is alpha*shift0, so
// energy_b = shift - lambda_b undoes the normalization.
struct SpectrumSummary {
    double ground_energy = 0.0;
    int ground_degeneracy = 0;
    std::vector<std::string> ground_states;
    double runner_up_energy = 0.0;
    double absolute_gap = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double ratio = 0.0;
    double shift = 0.0;
};

IsingHamiltonian build_maxcut_hamiltonian(const WeightedGraph& graph);

double diagonal_energy(const IsingHamiltonian& H, std::uint64_t basis_bits);
double diagonal_energy(const IsingHamiltonian& H, const std::string& basis);

// All 2^n diagonal values, basis index b laid out with bit i = spin of node i.
std::vector<double> diagonal_values(const IsingHamiltonian& H);

SpectrumSummary brute_force_spectrum(const IsingHamiltonian& H);

// (eigenvalue, multiplicity) of the maximization-normalized spectrum, strictly
// decreasing; level 0 is the solution level. Shares the shift convention of
// SpectrumSummary, so it feeds the power-iteration engine consistently.
std::vector<std::pair<double, std::uint64_t>> maximization_spectrum(const IsingHamiltonian& H);

IsingHamiltonian upscale(const IsingHamiltonian& H, double alpha);

}  // namespace qipa
