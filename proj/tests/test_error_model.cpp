#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qipa/error_model.hpp"
#include "qipa/graph.hpp"
#include "qipa/ising.hpp"
#include "qipa/power_iteration.hpp"
#include "qipa/rng.hpp"
#include "qipa/variational.hpp"

using namespace qipa;

namespace {

IsingHamiltonian edge_h(double w) {
    WeightedGraph g;
    g.num_nodes = 2;
    g.edges = {{0, 1, w}};
    return build_maxcut_hamiltonian(g);
}

IsingHamiltonian path3_h() {
    WeightedGraph g;
    g.num_nodes = 3;
    g.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
    return build_maxcut_hamiltonian(g);
}

IsingHamiltonian triangle_h() {
    WeightedGraph g;
    g.num_nodes = 3;
    g.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
    return build_maxcut_hamiltonian(g);
}

}  // namespace

TEST_SUITE("error_model") {

TEST_CASE("delta_squared pinned eigenstate values") {
    // Path diagonal is {2,0,-2,0,0,-2,0,2}: basis 1 sits at h = 0, where
    // Delta^2 = (1+1)^2/dtau^2 = 4 at dtau = 1 for any dt.
    CHECK(delta_squared(basis_state(3, 1), path3_h(), 0.3, 1.0) == 4.0);
    CHECK(delta_squared(basis_state(3, 1), path3_h(), 0.001, 1.0) == 4.0);

    // h = 1 at dt = dtau = 1: (1+e)^2 + 2(e-1) - (e-2).
    const double expected = 16.543901584307786;
    CHECK(delta_squared(basis_state(2, 0), edge_h(1.0), 1.0, 1.0) ==
          doctest::Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(delta_squared(basis_state(2, 0), edge_h(1.0), 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_squared(basis_state(2, 0), edge_h(1.0), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_squared(basis_state(2, 0), edge_h(5.0), 200.0, 1.0), std::domain_error);
}

TEST_CASE("delta_squared grows at least quadratically in the spectral scale") {
    // Fixed effective exponent: dt shrinks as alpha grows, so the quadratic
    // <(2-e^x) h^2> term dominates the alpha scaling.
    const IsingHamiltonian H = edge_h(5.0);
    const StateVector u = uniform_state(2);
    const double d1 = delta_squared(u, upscale(H, 1.0), 0.1, 1.0);
    const double d10 = delta_squared(u, upscale(H, 10.0), 0.01, 1.0);
    const double d100 = delta_squared(u, upscale(H, 100.0), 0.001, 1.0);
    CHECK(d10 > d1);
    CHECK(d100 > d10);
    CHECK(d100 / d10 >= 0.9 * 100.0);  // within 10% of the pure quadratic ratio
}

TEST_CASE("qipa_error_floor arithmetic and ordering") {
    CHECK(qipa_error_floor(0.0, 0.0, 0.7) == 0.0);
    CHECK(qipa_error_floor(0.1, 2.0, 0.05) == doctest::Approx(0.2).epsilon(1e-15));
    SplitMix64 rng(88);
    for (int i = 0; i < 50; ++i) {
        const double eps = rng.next_real(0.0, 3.0);
        CHECK(qipa_error_floor(eps, rng.next_real(0.0, 10.0), rng.next_real(0.0, 1.0)) >= eps);
    }
    CHECK_THROWS_AS(qipa_error_floor(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qipa_error_floor(0.1, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("bures_accumulate") {
    CHECK(bures_accumulate({0.0, 0.0, 0.0}, 0.5) == 0.0);
    CHECK(bures_accumulate({1.0, 1.0}, 0.1) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(bures_accumulate({}, 0.1) == 0.0);
    CHECK_THROWS_AS(bures_accumulate({1.0, -0.5}, 0.1), std::invalid_argument);

    // The single-qubit exact flow accumulates nothing.
    EvolutionConfig cfg;
    cfg.delta_tau = 0.1;
    cfg.num_steps = 50;
    cfg.regularization = 0.0;
    const AnsatzSpec spec{1, 0, AnsatzSpec::Initial::ZeroState};
    const auto traj = run_evolution(DiagonalObservable{1, {1.0, -1.0}}, {"1"}, spec, cfg,
                                    std::vector<double>{M_PI / 2.0});
    std::vector<double> norms;
    for (const TrajectoryStep& rec : traj) norms.push_back(rec.step_error);
    CHECK(bures_accumulate(norms, cfg.delta_tau) <= 1e-9);
}

TEST_CASE("variance_scaling_check holds to 1e-9 across alphas and states") {
    const IsingHamiltonian tri = triangle_h();

    const VarianceScalingCheck pinned = variance_scaling_check(tri, uniform_state(3), 1.2);
    CHECK(pinned.lhs == doctest::Approx(4.32).epsilon(1e-13));
    CHECK(pinned.rhs == doctest::Approx(4.32).epsilon(1e-13));
    CHECK(pinned.relative_error <= 1e-12);

    const VarianceScalingCheck unit = variance_scaling_check(tri, uniform_state(3), 1.0);
    CHECK(unit.lhs == unit.rhs);

    SplitMix64 rng(31);
    for (double alpha : {1.2, 10.0, 1024.0}) {
        for (int trial = 0; trial < 5; ++trial) {
            StateVector s;
            s.num_qubits = 3;
            s.amplitudes.resize(8);
            double n2 = 0.0;
            for (cdouble& a : s.amplitudes) {
                a = cdouble(rng.next_real(-1.0, 1.0), rng.next_real(-1.0, 1.0));
                n2 += std::norm(a);
            }
            for (cdouble& a : s.amplitudes) a /= std::sqrt(n2);
            CHECK(variance_scaling_check(tri, s, alpha).relative_error <= 1e-9);
        }
    }
    CHECK_THROWS_AS(variance_scaling_check(tri, uniform_state(3), 0.0), std::invalid_argument);
}

TEST_CASE("alpha_blowup_scan: exact variance column, monotone delta, consistency") {
    const IsingHamiltonian H = edge_h(5.0);
    const StateVector u = uniform_state(2);
    std::vector<double> alphas;
    for (int m = 0; m <= 10; ++m) alphas.push_back(std::exp2(m));

    const std::vector<BlowupRow> rows = alpha_blowup_scan(H, u, alphas, 1.0, 0.1);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // Var(uniform, alpha H) = 25 alpha^2, bit-exact for powers of two.
        CHECK(rows[i].var == 25.0 * rows[i].alpha * rows[i].alpha);
        CHECK(std::isfinite(rows[i].delta));
        CHECK(rows[i].qipa_floor == doctest::Approx(rows[i].delta * 0.1).epsilon(1e-15));
        CHECK(rows[i].log_delta_sq ==
              doctest::Approx(2.0 * std::log(rows[i].delta)).epsilon(1e-12));
        if (i > 0) {
            CHECK(rows[i].var > rows[i - 1].var);
            CHECK(rows[i].delta > rows[i - 1].delta);
            CHECK(rows[i].dt_used <= rows[i - 1].dt_used);
        }
    }
    // The exponent cap: alpha*h*dt_used <= 0.5 everywhere.
    for (const BlowupRow& r : rows) CHECK(r.alpha * 5.0 * r.dt_used <= 0.5 + 1e-15);

    // alpha = 1 row reproduces delta_squared at the dt it actually used.
    CHECK(rows[0].delta ==
          doctest::Approx(std::sqrt(delta_squared(u, H, rows[0].dt_used, 0.1))).epsilon(1e-15));

    const std::vector<BlowupRow> one = alpha_blowup_scan(H, u, {3.0}, 0.05, 0.1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].dt_used == 0.5 / 15.0);  // the 0.5/(5*3) cap binds below dt

    CHECK_THROWS_AS(alpha_blowup_scan(H, u, {}, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(alpha_blowup_scan(H, u, {1.0, 1.0}, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(alpha_blowup_scan(H, u, {2.0, 1.0}, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(alpha_blowup_scan(H, u, {-1.0, 2.0}, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("speedup/error trade-off: error floor grows while iterations shrink") {
    const IsingHamiltonian H = build_maxcut_hamiltonian(random_graph(4, 5, 0.9, 11));
    const StateVector u = uniform_state(4);
    std::vector<double> alphas;
    for (int m = 0; m <= 6; ++m) alphas.push_back(std::exp2(m));

    const std::vector<BlowupRow> rows = alpha_blowup_scan(H, u, alphas, 1.0, 0.1);
    const OracleFunction f = OracleFunction::exponential(1.0);
    int last_iters = 1 << 30;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const MajorityResult r =
            iterations_to_majority(maximization_spectrum(upscale(H, alphas[i])), f, 100000);
        REQUIRE_FALSE(r.budget_exceeded);
        CHECK(r.iterations <= last_iters);
        last_iters = r.iterations;
        if (i > 0) CHECK(rows[i].qipa_floor > rows[i - 1].qipa_floor);
    }
}

}  // TEST_SUITE
