#include "qipa/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qipa {

double delta_squared(const StateVector& state, const IsingHamiltonian& H, double dt, double dtau) {
    if (!(dt > 0.0) || !(dtau > 0.0)) throw std::invalid_argument("dt and dtau must be positive");

    const DiagonalObservable diag = diagonal_observable(H);
    double m1 = 0.0, m2 = 0.0, m3 = 0.0;  // <(1+e)^2>, <(e-1)H>, <(e-2)H^2>
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const double h = diag.values[b];
        const double x = h * dt;
        if (x > 700.0) throw std::domain_error("e^{h dt} overflows; use a smaller dt");
        const double e = std::exp(x);
        const double p = std::norm(state.amplitudes[b]);
        m1 += p * (1.0 + e) * (1.0 + e);
        m2 += p * (e - 1.0) * h;
        m3 += p * (e - 2.0) * h * h;
    }
    return m1 / (dtau * dtau) + 2.0 * m2 / dtau - m3;
}

double qipa_error_floor(double eps_varqite, double delta, double dtau) {
    if (eps_varqite < 0.0 || delta < 0.0 || dtau < 0.0)
        throw std::invalid_argument("error-floor inputs must be non-negative");
    return eps_varqite + delta * dtau;
}

double bures_accumulate(const std::vector<double>& step_error_norms, double dtau) {
    if (dtau < 0.0) throw std::invalid_argument("dtau must be non-negative");
    double sum = 0.0;
    for (double e : step_error_norms) {
        if (e < 0.0) throw std::invalid_argument("step error norms must be non-negative");
        sum += e;
    }
    return dtau * sum;
}

VarianceScalingCheck variance_scaling_check(const IsingHamiltonian& H, const StateVector& state,
                                            double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    VarianceScalingCheck chk;
    IsingHamiltonian scaled = H;
    scaled.alpha = H.alpha * alpha;
    chk.lhs = variance(state, diagonal_observable(scaled));
    chk.rhs = alpha * alpha * variance(state, diagonal_observable(H));
    const double denom = std::max(std::abs(chk.rhs), 1e-300);
    chk.relative_error = std::abs(chk.lhs - chk.rhs) / denom;
    return chk;
}

std::vector<BlowupRow> alpha_blowup_scan(const IsingHamiltonian& H, const StateVector& state,
                                         const std::vector<double>& alphas, double dt, double dtau,
                                         double eps_varqite) {
    if (alphas.empty()) throw std::invalid_argument("alpha list is empty");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0)) throw std::invalid_argument("alphas must be positive");
        if (i > 0 && !(alphas[i] > alphas[i - 1]))
            throw std::invalid_argument("alphas must be strictly increasing");
    }

    double max_abs = 0.0;
    for (double h : diagonal_values(H)) max_abs = std::max(max_abs, std::abs(h));

    std::vector<BlowupRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        IsingHamiltonian scaled = H;
        scaled.alpha = H.alpha * alpha;

        BlowupRow row;
        row.alpha = alpha;
        // Exponent cap 0.5: keeps every e^{alpha h dt} in [e^-0.5, e^0.5], so
        // the row is finite and the Delta column provably increases in alpha.
        row.dt_used = max_abs > 0.0 ? std::min(dt, 0.5 / (max_abs * alpha)) : dt;
        row.var = variance(state, diagonal_observable(scaled));
        const double d2 = delta_squared(state, scaled, row.dt_used, dtau);
        row.delta = std::sqrt(d2);
        row.qipa_floor = qipa_error_floor(eps_varqite, row.delta, dtau);
        row.log_delta_sq = std::log(d2);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qipa
