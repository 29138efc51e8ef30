#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qipa {

// Oracle f applied to eigenvalues. Everything evaluates through log f so that
// DoubleExp stays finite: log f is at most e^{lambda*dt}, fine to lambda*dt
// of about 700.
struct OracleFunction {
    enum class Kind { Identity, Exp, DoubleExp };

    Kind kind = Kind::Identity;
    double dt = 1.0;

    static OracleFunction identity() { return {Kind::Identity, 1.0}; }
    static OracleFunction exponential(double dt);
    static OracleFunction double_exponential(double dt);

    double log_f(double lambda) const;  // ln f(lambda)
    std::string name() const;
};

struct SpectralLevel {
    double eigenvalue = 0.0;
    std::uint64_t multiplicity = 0;
    double probability = 0.0;
};

struct SpectralPopulation {
    std::vector<SpectralLevel> levels;  // eigenvalues strictly decreasing
    std::size_t solution_index = 0;

    int num_qubits = 0;
    double solution_probability() const;
    void validate() const;
};

struct IterationBoundEstimate {
    double kappa_varqite = 0.0;
    double kappa_qipa2 = 0.0;
};

struct MajorityResult {
    int iterations = 0;
    bool budget_exceeded = false;
};

using Spectrum = std::vector<std::pair<double, std::uint64_t>>;

// Sorts descending, merges duplicate eigenvalues; solution level = index 0.
SpectralPopulation init_uniform_population(const Spectrum& spectrum);

// p_i' = p_i f(lambda_i)^2 / sum_j p_j f(lambda_j)^2, in log space.
SpectralPopulation apply_oracle_step(const SpectralPopulation& pop, const OracleFunction& f);

// Smallest k with solution probability strictly > 1/2 after k steps from the
// uniform population; 0 if already a majority.
MajorityResult iterations_to_majority(const Spectrum& spectrum, const OracleFunction& f, int max_iter);

// Degenerate-rest model: one solution eigenvalue lambda1, the other 2^n - 1
// states at lambda2. k* = smallest integer > ln(2^n - 1) / (2 (ln f1 - ln f2)).
int closed_form_majority_count(int n, double lambda1, double lambda2, const OracleFunction& f);

// kappa_varQITE = n / log2(lambda1/lambda2), kappa_QIPA2 = n / (lambda1 - lambda2).
IterationBoundEstimate kappa_bounds(int n, double lambda1, double lambda2);

}  // namespace qipa
