#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qipa/graph.hpp"
#include "qipa/ising.hpp"
#include "qipa/power_iteration.hpp"

using namespace qipa;

TEST_SUITE("power_iteration") {

TEST_CASE("oracle log_f values") {
    CHECK(OracleFunction::identity().log_f(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(OracleFunction::exponential(1.0).log_f(2.0) == 2.0);
    CHECK(OracleFunction::exponential(0.5).log_f(3.0) == 1.5);
    CHECK(OracleFunction::double_exponential(1.0).log_f(2.0) ==
          doctest::Approx(std::exp(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(OracleFunction::identity().log_f(0.0), std::domain_error);
    CHECK_THROWS_AS(OracleFunction::identity().log_f(-1.0), std::domain_error);
    CHECK_THROWS_AS(OracleFunction::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(OracleFunction::double_exponential(-0.1), std::invalid_argument);

    CHECK(OracleFunction::identity().name() == "identity");
    CHECK(OracleFunction::exponential(1.0).name() == "exp");
    CHECK(OracleFunction::double_exponential(1.0).name() == "dexp");
}

TEST_CASE("init_uniform_population splits probability by multiplicity") {
    const SpectralPopulation p = init_uniform_population({{2.0, 1}, {1.0, 7}});
    REQUIRE(p.levels.size() == 2);
    CHECK(p.num_qubits == 3);
    CHECK(p.solution_index == 0);
    CHECK(p.levels[0].probability == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(p.levels[1].probability == doctest::Approx(0.875).epsilon(1e-15));
    CHECK_NOTHROW(p.validate());

    // Triangle raw spectrum: one level at 3 (x2), one at -1 (x6).
    const SpectralPopulation tri = init_uniform_population({{3.0, 2}, {-1.0, 6}});
    CHECK(tri.levels[0].eigenvalue == 3.0);
    CHECK(tri.levels[0].probability == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(tri.levels[1].probability == doctest::Approx(0.75).epsilon(1e-15));

    const SpectralPopulation single = init_uniform_population({{4.0, 8}});
    REQUIRE(single.levels.size() == 1);
    CHECK(single.levels[0].probability == 1.0);

    // Unsorted input with a duplicate eigenvalue is sorted and merged.
    const SpectralPopulation merged = init_uniform_population({{1.0, 3}, {5.0, 1}, {1.0, 4}});
    REQUIRE(merged.levels.size() == 2);
    CHECK(merged.levels[0].eigenvalue == 5.0);
    CHECK(merged.levels[1].multiplicity == 7);

    CHECK_THROWS_AS(init_uniform_population({{2.0, 1}, {1.0, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(init_uniform_population({}), std::invalid_argument);
}

TEST_CASE("apply_oracle_step matches the closed-form two-level update") {
    const SpectralPopulation p = init_uniform_population({{2.0, 1}, {1.0, 7}});

    const SpectralPopulation exp1 = apply_oracle_step(p, OracleFunction::exponential(1.0));
    const double e2 = std::exp(2.0);
    CHECK(exp1.solution_probability() == doctest::Approx(e2 / (e2 + 7.0)).epsilon(1e-14));
    CHECK(exp1.solution_probability() == doctest::Approx(0.5135191667978681).epsilon(1e-14));
    CHECK(exp1.levels[0].probability + exp1.levels[1].probability ==
          doctest::Approx(1.0).epsilon(1e-12));

    const SpectralPopulation dexp1 = apply_oracle_step(p, OracleFunction::double_exponential(1.0));
    CHECK(dexp1.solution_probability() == doctest::Approx(0.9993864520434864).epsilon(1e-12));

    // Identity on a flat spectrum changes nothing.
    const SpectralPopulation flat = init_uniform_population({{2.0, 8}});
    const SpectralPopulation still = apply_oracle_step(flat, OracleFunction::identity());
    CHECK(still.levels[0].probability == 1.0);
}

TEST_CASE("overflow safety: DoubleExp at lambda*dt = 700 stays finite") {
    const SpectralPopulation p = init_uniform_population({{700.0, 1}, {1.0, 7}});
    const SpectralPopulation out = apply_oracle_step(p, OracleFunction::double_exponential(1.0));
    CHECK(std::isfinite(out.solution_probability()));
    CHECK(out.solution_probability() == 1.0);
    CHECK_NOTHROW(out.validate());
}

TEST_CASE("monotone amplification toward the top level") {
    SpectralPopulation p = init_uniform_population({{3.0, 2}, {2.0, 6}, {1.0, 8}});
    double last = p.solution_probability();
    for (int k = 0; k < 30; ++k) {
        p = apply_oracle_step(p, OracleFunction::exponential(0.3));
        CHECK(p.solution_probability() >= last);
        last = p.solution_probability();
    }
    CHECK(last > 0.999);
}

TEST_CASE("iterations_to_majority on the degenerate-rest model") {
    const Spectrum model{{2.0, 1}, {1.0, 7}};

    const MajorityResult exp1 = iterations_to_majority(model, OracleFunction::exponential(1.0), 100);
    CHECK(exp1.iterations == 1);
    CHECK_FALSE(exp1.budget_exceeded);

    const MajorityResult ident = iterations_to_majority(model, OracleFunction::identity(), 100);
    CHECK(ident.iterations == 2);

    // Triangle maximization spectrum: solution multiplicity 6 of 8 is already
    // a majority at k = 0.
    const IsingHamiltonian tri = build_maxcut_hamiltonian([] {
        WeightedGraph g;
        g.num_nodes = 3;
        g.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
        return g;
    }());
    const MajorityResult zero =
        iterations_to_majority(maximization_spectrum(tri), OracleFunction::exponential(1.0), 100);
    CHECK(zero.iterations == 0);

    const MajorityResult capped = iterations_to_majority(model, OracleFunction::identity(), 1);
    CHECK(capped.budget_exceeded);
    CHECK(capped.iterations == 1);

    CHECK_THROWS_AS(iterations_to_majority(model, OracleFunction::identity(), 0),
                    std::invalid_argument);
}

TEST_CASE("closed_form_majority_count pinned examples") {
    CHECK(closed_form_majority_count(3, 2.0, 1.0, OracleFunction::exponential(1.0)) == 1);
    CHECK(closed_form_majority_count(3, 2.0, 1.0, OracleFunction::identity()) == 2);
    CHECK(closed_form_majority_count(10, 2.0, 1.0, OracleFunction::exponential(1.0)) == 4);
    CHECK(closed_form_majority_count(3, 2.0, 1.0, OracleFunction::double_exponential(1.0)) == 1);

    CHECK_THROWS_AS(closed_form_majority_count(3, 2.0, 2.0, OracleFunction::exponential(1.0)),
                    std::invalid_argument);
    // lambda1 > lambda2 but both exp(lambda dt) underflow to 0: no amplification.
    CHECK_THROWS_AS(
        closed_form_majority_count(3, -800.0, -900.0, OracleFunction::double_exponential(1.0)),
        std::domain_error);
}

TEST_CASE("engine equals closed form across the model grid") {
    // Same grid as the acceptance criterion, spot-checked here at n in {2,6}.
    const OracleFunction oracles[] = {OracleFunction::identity(), OracleFunction::exponential(1.0),
                                      OracleFunction::double_exponential(1.0)};
    const double l1s[] = {2.0, 2.6, 3.2, 3.8, 4.4};
    const double l2s[] = {0.5, 0.8, 1.1, 1.4, 1.7};
    for (int n : {2, 6}) {
        const std::uint64_t rest = (std::uint64_t{1} << n) - 1;
        for (double l1 : l1s)
            for (double l2 : l2s)
                for (const OracleFunction& f : oracles) {
                    const Spectrum model{{l1, 1}, {l2, rest}};
                    const MajorityResult r = iterations_to_majority(model, f, 100000);
                    REQUIRE_FALSE(r.budget_exceeded);
                    CHECK(r.iterations == closed_form_majority_count(n, l1, l2, f));
                }
    }
}

TEST_CASE("kappa_bounds pinned values") {
    const IterationBoundEstimate k1 = kappa_bounds(3, 2.0, 1.0);
    CHECK(k1.kappa_varqite == 3.0);
    CHECK(k1.kappa_qipa2 == 3.0);

    const IterationBoundEstimate k2 = kappa_bounds(10, 1024.5, 1024.0);
    CHECK(k2.kappa_varqite == doctest::Approx(14199.119711797006).epsilon(1e-9));
    CHECK(k2.kappa_qipa2 == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(k2.kappa_varqite / k2.kappa_qipa2 > 700.0);

    // (n, 2l, l) -> (n, n/l)
    const IterationBoundEstimate k3 = kappa_bounds(5, 6.0, 3.0);
    CHECK(k3.kappa_varqite == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(k3.kappa_qipa2 == doctest::Approx(5.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(kappa_bounds(3, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kappa_bounds(3, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(kappa_bounds(3, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("population validate rejects broken invariants") {
    SpectralPopulation p = init_uniform_population({{2.0, 1}, {1.0, 7}});
    p.levels[0].probability = 0.5;  // sum now 1.375
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    p = init_uniform_population({{2.0, 1}, {1.0, 7}});
    p.levels[0].eigenvalue = 0.5;  // no longer decreasing
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

}  // TEST_SUITE
