#include "qipa/power_iteration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qipa {

OracleFunction OracleFunction::exponential(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("oracle dt must be positive");
    return {Kind::Exp, dt};
}

OracleFunction OracleFunction::double_exponential(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("oracle dt must be positive");
    return {Kind::DoubleExp, dt};
}

double OracleFunction::log_f(double lambda) const {
    switch (kind) {
        case Kind::Identity:
            if (!(lambda > 0.0))
                throw std::domain_error("Identity oracle needs positive eigenvalues");
            return std::log(lambda);
        case Kind::Exp:
            return lambda * dt;
        case Kind::DoubleExp:
            return std::exp(lambda * dt);
    }
    throw std::logic_error("unreachable oracle kind");
}

std::string OracleFunction::name() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Exp: return "exp";
        case Kind::DoubleExp: return "dexp";
    }
    return "?";
}

double SpectralPopulation::solution_probability() const {
    return levels.at(solution_index).probability;
}

void SpectralPopulation::validate() const {
    if (levels.empty()) throw std::invalid_argument("population has no levels");
    if (solution_index >= levels.size()) throw std::invalid_argument("solution index out of range");
    double total = 0.0;
    std::uint64_t states = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0 && !(levels[i].eigenvalue < levels[i - 1].eigenvalue))
            throw std::invalid_argument("eigenvalues must be strictly decreasing");
        if (levels[i].multiplicity == 0) throw std::invalid_argument("zero multiplicity");
        if (levels[i].probability < 0.0 || levels[i].probability > 1.0)
            throw std::invalid_argument("probability out of [0,1]");
        total += levels[i].probability;
        states += levels[i].multiplicity;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
    if (!std::has_single_bit(states))
        throw std::invalid_argument("multiplicities must sum to a power of two");
}

SpectralPopulation init_uniform_population(const Spectrum& spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("empty spectrum");

    Spectrum sorted = spectrum;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    SpectralPopulation pop;
    std::uint64_t total = 0;
    for (const auto& [ev, mult] : sorted) {
        if (mult == 0) throw std::invalid_argument("zero multiplicity");
        total += mult;
        if (!pop.levels.empty() && pop.levels.back().eigenvalue == ev)
            pop.levels.back().multiplicity += mult;
        else
            pop.levels.push_back({ev, mult, 0.0});
    }
    if (!std::has_single_bit(total))
        throw std::invalid_argument("multiplicities must sum to a power of two");

    pop.num_qubits = std::countr_zero(total);
    for (SpectralLevel& lv : pop.levels)
        lv.probability = static_cast<double>(lv.multiplicity) / static_cast<double>(total);
    pop.solution_index = 0;
    return pop;
}

SpectralPopulation apply_oracle_step(const SpectralPopulation& pop, const OracleFunction& f) {
    SpectralPopulation next = pop;

    // log weights; a zero-probability level stays exactly zero.
    std::vector<double> lw(pop.levels.size());
    double max_lw = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pop.levels.size(); ++i) {
        const SpectralLevel& lv = pop.levels[i];
        lw[i] = lv.probability > 0.0
                    ? std::log(lv.probability) + 2.0 * f.log_f(lv.eigenvalue)
                    : -std::numeric_limits<double>::infinity();
        max_lw = std::max(max_lw, lw[i]);
    }

    double norm = 0.0;
    for (std::size_t i = 0; i < lw.size(); ++i) {
        const double w = std::exp(lw[i] - max_lw);
        next.levels[i].probability = w;
        norm += w;
    }
    for (SpectralLevel& lv : next.levels) lv.probability /= norm;
    return next;
}

MajorityResult iterations_to_majority(const Spectrum& spectrum, const OracleFunction& f,
                                      int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    SpectralPopulation pop = init_uniform_population(spectrum);
    if (pop.solution_probability() > 0.5) return {0, false};
    for (int k = 1; k <= max_iter; ++k) {
        pop = apply_oracle_step(pop, f);
        if (pop.solution_probability() > 0.5) return {k, false};
    }
    return {max_iter, true};
}

int closed_form_majority_count(int n, double lambda1, double lambda2, const OracleFunction& f) {
    if (!(lambda1 > lambda2)) throw std::invalid_argument("requires lambda1 > lambda2");
    const double dlog = f.log_f(lambda1) - f.log_f(lambda2);
    if (dlog == 0.0) throw std::domain_error("no amplification: f(lambda1) = f(lambda2)");
    const double t = std::log(std::exp2(static_cast<double>(n)) - 1.0) / (2.0 * dlog);
    // Smallest integer strictly greater than t (majority is a strict ">").
    const int k = static_cast<int>(std::floor(t)) + 1;
    return std::max(k, 0);
}

IterationBoundEstimate kappa_bounds(int n, double lambda1, double lambda2) {
    if (!(lambda1 > lambda2) || !(lambda2 > 0.0))
        throw std::invalid_argument("requires lambda1 > lambda2 > 0");
    IterationBoundEstimate b;
    b.kappa_varqite = static_cast<double>(n) / std::log2(lambda1 / lambda2);
    b.kappa_qipa2 = static_cast<double>(n) / (lambda1 - lambda2);
    return b;
}

}  // namespace qipa
