#pragma once

#include <utility>
#include <vector>

namespace qipa {

struct SeparationConstants {
    double c = 1.0;
    double d = 1.0;
    double k = 1.0;
};

struct ConditionReport {
    bool ordering = false;                   // lambda1 > lambda2
    bool ineq_varqite_exponential = false;   // n/log2(l1/l2) >= c*2^n
    bool ineq_qipa_polynomial = false;       // n/(l1-l2) <= d*n^k
    bool cond_I = false;                     // gap >= 1/(d*n^(k-1))
    bool cond_II = false;                    // l1/l2 <= 2^(n/(c*2^n))
    bool cond_III = false;                   // l2 >= lambda2_lower_bound
    bool separated = false;
};

ConditionReport check_inequality_system(int n, double lambda1, double lambda2,
                                        const SeparationConstants& consts);

// 1 / (d n^(k-1) (2^(n/(c 2^n)) - 1)); the 2^tiny - 1 goes through expm1 in
// long double, otherwise precision is gone past n ~ 30.
double lambda2_lower_bound(int n, const SeparationConstants& consts);

// 1 / (d n^(k-1) (1 - 2^(-n/(c 2^n)))); equals lambda2_lower_bound + 1/(d n^(k-1)).
double lambda1_lower_bound(int n, const SeparationConstants& consts);

// max(1, 1/(d n^(k-1) gap)): the smallest alpha >= 1 whose upscale makes
// Cond I hold.
double minimal_upscale_alpha(double gap, int n, const SeparationConstants& consts);

struct DivergenceRow {
    int n = 0;
    double bound = 0.0;  // lambda2_lower_bound(n)
};

struct DivergenceProbe {
    std::vector<DivergenceRow> rows;
    // First listed n from which the bound strictly increases to the end of the
    // list; -1 when fewer than two rows.
    int monotone_from = -1;
    // (n, L(2n)/L(n)) for every listed n whose doubling is also listed.
    std::vector<std::pair<int, double>> doubling_ratios;
};

DivergenceProbe divergence_probe(const SeparationConstants& consts, const std::vector<int>& n_values);

}  // namespace qipa
