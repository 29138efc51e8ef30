#include "qipa/separation.hpp"

#include <cmath>
#include <stdexcept>

namespace qipa {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

void require(const SeparationConstants& consts, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(consts.c > 0.0) || !(consts.d > 0.0) || !(consts.k > 0.0))
        throw std::invalid_argument("constants c, d, k must be strictly positive");
}

long double poly_factor(int n, const SeparationConstants& consts) {
    return static_cast<long double>(consts.d) *
           std::pow(static_cast<long double>(n), static_cast<long double>(consts.k) - 1.0L);
}

// n / (c 2^n); underflows gracefully for large n.
long double tiny_exponent(int n, const SeparationConstants& consts) {
    return static_cast<long double>(n) /
           (static_cast<long double>(consts.c) * std::exp2(static_cast<long double>(n)));
}

}  // namespace

double lambda2_lower_bound(int n, const SeparationConstants& consts) {
    require(consts, n);
    const long double x = tiny_exponent(n, consts);
    // 2^x - 1 = expm1(x ln 2); the naive form is pure cancellation past n ~ 30.
    return static_cast<double>(1.0L / (poly_factor(n, consts) * std::expm1(x * kLn2)));
}

double lambda1_lower_bound(int n, const SeparationConstants& consts) {
    require(consts, n);
    const long double x = tiny_exponent(n, consts);
    // 1 - 2^{-x} = -expm1(-x ln 2), guarded the same way.
    return static_cast<double>(1.0L / (poly_factor(n, consts) * -std::expm1(-x * kLn2)));
}

ConditionReport check_inequality_system(int n, double lambda1, double lambda2,
                                        const SeparationConstants& consts) {
    require(consts, n);
    if (!(lambda2 > 0.0)) throw std::invalid_argument("lambda2 must be positive");

    ConditionReport r;
    r.ordering = lambda1 > lambda2;
    if (!r.ordering) return r;  // remaining predicates are undefined -> false

    const double nd = static_cast<double>(n);
    const double gap = lambda1 - lambda2;
    const double exp_n = std::exp2(nd);

    r.ineq_varqite_exponential = nd / std::log2(lambda1 / lambda2) >= consts.c * exp_n;
    r.ineq_qipa_polynomial = nd / gap <= consts.d * std::pow(nd, consts.k);
    r.cond_I = gap >= 1.0 / (consts.d * std::pow(nd, consts.k - 1.0));
    r.cond_II = lambda1 / lambda2 <= std::exp2(nd / (consts.c * exp_n));
    r.cond_III = lambda2 >= lambda2_lower_bound(n, consts);
    r.separated = r.ordering && r.ineq_varqite_exponential && r.ineq_qipa_polynomial && r.cond_I &&
                  r.cond_II && r.cond_III;
    return r;
}

double minimal_upscale_alpha(double gap, int n, const SeparationConstants& consts) {
    require(consts, n);
    if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
    const double needed = 1.0 / (consts.d * std::pow(static_cast<double>(n), consts.k - 1.0) * gap);
    return std::max(1.0, needed);
}

DivergenceProbe divergence_probe(const SeparationConstants& consts, const std::vector<int>& n_values) {
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("n_values must be strictly increasing");

    DivergenceProbe probe;
    probe.rows.reserve(n_values.size());
    for (int n : n_values) probe.rows.push_back({n, lambda2_lower_bound(n, consts)});

    if (probe.rows.size() >= 2) {
        std::size_t start = probe.rows.size() - 1;
        while (start > 0 && probe.rows[start - 1].bound < probe.rows[start].bound) --start;
        if (start < probe.rows.size() - 1) probe.monotone_from = probe.rows[start].n;
    }

    for (const DivergenceRow& row : probe.rows) {
        for (const DivergenceRow& twice : probe.rows) {
            if (twice.n == 2 * row.n) probe.doubling_ratios.emplace_back(row.n, twice.bound / row.bound);
        }
    }
    return probe;
}

}  // namespace qipa
