#pragma once

#include <vector>

#include "qipa/statevector.hpp"

namespace qipa {

// Eq. (9): Delta^2 = <(1+e^{H dt})^2>/dtau^2 + 2<(e^{H dt}-1)H>/dtau
//                    - <(e^{H dt}-2)H^2>, entrywise-diagonal operators,
// expectation on the caller-supplied state.
double delta_squared(const StateVector& state, const IsingHamiltonian& H, double dt, double dtau);

// Eq. (8) lower bound: eps_varQITE + Delta*dtau. The O(dtau^{3/2}) term is a
// symbolic annotation only (the paper gives no constant).
double qipa_error_floor(double eps_varqite, double delta, double dtau);

// Appendix C: B = dtau * sum_k ||e_k||_2.
double bures_accumulate(const std::vector<double>& step_error_norms, double dtau);

struct VarianceScalingCheck {
    double lhs = 0.0;            // Var(alpha H)
    double rhs = 0.0;            // alpha^2 Var(H)
    double relative_error = 0.0;
};

VarianceScalingCheck variance_scaling_check(const IsingHamiltonian& H, const StateVector& state,
                                            double alpha);

struct BlowupRow {
    double alpha = 0.0;
    double var = 0.0;         // Var(alpha H)
    double delta = 0.0;       // sqrt(Delta^2) at dt_used
    double qipa_floor = 0.0;  // eps + delta * dtau
    double dt_used = 0.0;     // min(dt, 0.5 / max|diag(alpha H)|)
    double log_delta_sq = 0.0;  // ln(Delta^2), stored alongside the raw value
};

// One row per alpha. dt auto-shrinks per row so the exponent e^{alpha h dt}
// never exceeds e^{0.5}; that cap both guarantees finiteness and makes the
// Delta column strictly increasing in alpha (Delta^2 = A + B*alpha + C*alpha^2
// with C = <(2 - e^x) h^2> > 0 once the cap binds).
std::vector<BlowupRow> alpha_blowup_scan(const IsingHamiltonian& H, const StateVector& state,
                                         const std::vector<double>& alphas, double dt, double dtau,
                                         double eps_varqite = 0.0);

}  // namespace qipa
