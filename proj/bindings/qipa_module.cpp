#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qipa/commands.hpp"
#include "qipa/error_model.hpp"
#include "qipa/graph_io.hpp"
#include "qipa/ising.hpp"
#include "qipa/power_iteration.hpp"
#include "qipa/separation.hpp"
#include "qipa/statevector.hpp"
#include "qipa/variational.hpp"

namespace py = pybind11;
using namespace qipa;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact desk-scale laboratory for varQITE / QIPA2 iteration bounds, "
              "separation criteria, upscaling, and error blow-up";
    m.attr("__version__") = kToolVersion;

    // graph_ising
    py::class_<Edge>(m, "Edge")
        .def(py::init<int, int, double>(), py::arg("u"), py::arg("v"), py::arg("w"))
        .def_readwrite("u", &Edge::u)
        .def_readwrite("v", &Edge::v)
        .def_readwrite("w", &Edge::w)
        .def("__repr__", [](const Edge& e) {
            return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
                   std::to_string(e.w) + ")";
        });

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init<>())
        .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges) {
                 WeightedGraph g;
                 g.num_nodes = n;
                 for (const auto& [u, v, w] : edges) g.edges.push_back({u, v, w});
                 g.validate();
                 return g;
             }),
             py::arg("num_nodes"), py::arg("edges"))
        .def_readwrite("num_nodes", &WeightedGraph::num_nodes)
        .def_readwrite("edges", &WeightedGraph::edges)
        .def("total_weight", &WeightedGraph::total_weight)
        .def("validate", &WeightedGraph::validate);

    py::class_<ZZTerm>(m, "ZZTerm")
        .def_readonly("i", &ZZTerm::i)
        .def_readonly("j", &ZZTerm::j)
        .def_readonly("w", &ZZTerm::w);

    py::class_<IsingHamiltonian>(m, "IsingHamiltonian")
        .def_readonly("num_qubits", &IsingHamiltonian::num_qubits)
        .def_readonly("terms", &IsingHamiltonian::terms)
        .def_readonly("alpha", &IsingHamiltonian::alpha)
        .def_readonly("constant_offset", &IsingHamiltonian::constant_offset);

    py::class_<SpectrumSummary>(m, "SpectrumSummary")
        .def_readonly("ground_energy", &SpectrumSummary::ground_energy)
        .def_readonly("ground_degeneracy", &SpectrumSummary::ground_degeneracy)
        .def_readonly("ground_states", &SpectrumSummary::ground_states)
        .def_readonly("runner_up_energy", &SpectrumSummary::runner_up_energy)
        .def_readonly("absolute_gap", &SpectrumSummary::absolute_gap)
        .def_readonly("lambda1", &SpectrumSummary::lambda1)
        .def_readonly("lambda2", &SpectrumSummary::lambda2)
        .def_readonly("ratio", &SpectrumSummary::ratio)
        .def_readonly("shift", &SpectrumSummary::shift);

    py::class_<MaxCutResult>(m, "MaxCutResult")
        .def_readonly("best_value", &MaxCutResult::best_value)
        .def_readonly("optimal_partitions", &MaxCutResult::optimal_partitions)
        .def_readonly("total_optima", &MaxCutResult::total_optima);

    m.def("build_maxcut_hamiltonian", &build_maxcut_hamiltonian, py::arg("graph"));
    m.def("cut_value", py::overload_cast<const WeightedGraph&, const std::string&>(&cut_value),
          py::arg("graph"), py::arg("partition"));
    m.def("diagonal_energy",
          py::overload_cast<const IsingHamiltonian&, const std::string&>(&diagonal_energy),
          py::arg("H"), py::arg("basis"));
    m.def("diagonal_values", &diagonal_values, py::arg("H"));
    m.def("brute_force_spectrum", &brute_force_spectrum, py::arg("H"));
    m.def("maximization_spectrum", &maximization_spectrum, py::arg("H"));
    m.def("brute_force_maxcut", &brute_force_maxcut, py::arg("graph"));
    m.def("upscale", &upscale, py::arg("H"), py::arg("alpha"));
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("max_weight"), py::arg("density"),
          py::arg("seed"));
    m.def("load_graph", &load_graph, py::arg("file"));

    // power_iteration
    py::class_<OracleFunction>(m, "OracleFunction")
        .def_static("identity", &OracleFunction::identity)
        .def_static("exponential", &OracleFunction::exponential, py::arg("dt"))
        .def_static("double_exponential", &OracleFunction::double_exponential, py::arg("dt"))
        .def("log_f", &OracleFunction::log_f, py::arg("eigenvalue"))
        .def_property_readonly("name", &OracleFunction::name);

    py::class_<SpectralLevel>(m, "SpectralLevel")
        .def_readonly("eigenvalue", &SpectralLevel::eigenvalue)
        .def_readonly("multiplicity", &SpectralLevel::multiplicity)
        .def_readonly("probability", &SpectralLevel::probability);

    py::class_<SpectralPopulation>(m, "SpectralPopulation")
        .def_readonly("levels", &SpectralPopulation::levels)
        .def_readonly("solution_index", &SpectralPopulation::solution_index)
        .def_readonly("num_qubits", &SpectralPopulation::num_qubits)
        .def("solution_probability", &SpectralPopulation::solution_probability);

    py::class_<IterationBoundEstimate>(m, "IterationBoundEstimate")
        .def_readonly("kappa_varqite", &IterationBoundEstimate::kappa_varqite)
        .def_readonly("kappa_qipa2", &IterationBoundEstimate::kappa_qipa2);

    py::class_<MajorityResult>(m, "MajorityResult")
        .def_readonly("iterations", &MajorityResult::iterations)
        .def_readonly("budget_exceeded", &MajorityResult::budget_exceeded);

    m.def("init_uniform_population", &init_uniform_population, py::arg("spectrum"));
    m.def("apply_oracle_step", &apply_oracle_step, py::arg("population"), py::arg("oracle"));
    m.def("iterations_to_majority", &iterations_to_majority, py::arg("spectrum"), py::arg("oracle"),
          py::arg("max_iter"));
    m.def("closed_form_majority_count", &closed_form_majority_count, py::arg("n"),
          py::arg("lambda1"), py::arg("lambda2"), py::arg("oracle"));
    m.def("kappa_bounds", &kappa_bounds, py::arg("n"), py::arg("lambda1"), py::arg("lambda2"));

    // separation_analysis
    py::class_<SeparationConstants>(m, "SeparationConstants")
        .def(py::init([](double c, double d, double k) {
                 return SeparationConstants{c, d, k};
             }),
             py::arg("c") = 1.0, py::arg("d") = 1.0, py::arg("k") = 1.0)
        .def_readwrite("c", &SeparationConstants::c)
        .def_readwrite("d", &SeparationConstants::d)
        .def_readwrite("k", &SeparationConstants::k);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("ordering", &ConditionReport::ordering)
        .def_readonly("ineq_varqite_exponential", &ConditionReport::ineq_varqite_exponential)
        .def_readonly("ineq_qipa_polynomial", &ConditionReport::ineq_qipa_polynomial)
        .def_readonly("cond_I", &ConditionReport::cond_I)
        .def_readonly("cond_II", &ConditionReport::cond_II)
        .def_readonly("cond_III", &ConditionReport::cond_III)
        .def_readonly("separated", &ConditionReport::separated);

    py::class_<DivergenceRow>(m, "DivergenceRow")
        .def_readonly("n", &DivergenceRow::n)
        .def_readonly("bound", &DivergenceRow::bound);

    py::class_<DivergenceProbe>(m, "DivergenceProbe")
        .def_readonly("rows", &DivergenceProbe::rows)
        .def_readonly("monotone_from", &DivergenceProbe::monotone_from)
        .def_readonly("doubling_ratios", &DivergenceProbe::doubling_ratios);

    m.def("check_inequality_system", &check_inequality_system, py::arg("n"), py::arg("lambda1"),
          py::arg("lambda2"), py::arg("constants"));
    m.def("lambda2_lower_bound", &lambda2_lower_bound, py::arg("n"), py::arg("constants"));
    m.def("lambda1_lower_bound", &lambda1_lower_bound, py::arg("n"), py::arg("constants"));
    m.def("minimal_upscale_alpha", &minimal_upscale_alpha, py::arg("gap"), py::arg("n"),
          py::arg("constants"));
    m.def("divergence_probe", &divergence_probe, py::arg("constants"), py::arg("n_values"));

    // statevector
    py::class_<StateVector>(m, "StateVector")
        .def_readonly("num_qubits", &StateVector::num_qubits)
        .def_readonly("amplitudes", &StateVector::amplitudes)
        .def("norm", &StateVector::norm);

    py::enum_<AnsatzSpec::Initial>(m, "Initial")
        .value("PlusState", AnsatzSpec::Initial::PlusState)
        .value("ZeroState", AnsatzSpec::Initial::ZeroState);

    py::class_<AnsatzSpec>(m, "AnsatzSpec")
        .def(py::init([](int n, int layers, AnsatzSpec::Initial initial) {
                 AnsatzSpec s;
                 s.num_qubits = n;
                 s.layers = layers;
                 s.initial = initial;
                 return s;
             }),
             py::arg("num_qubits"), py::arg("layers") = 2,
             py::arg("initial") = AnsatzSpec::Initial::PlusState)
        .def_readwrite("num_qubits", &AnsatzSpec::num_qubits)
        .def_readwrite("layers", &AnsatzSpec::layers)
        .def_readwrite("initial", &AnsatzSpec::initial)
        .def("parameter_count", &AnsatzSpec::parameter_count);

    py::class_<DiagonalObservable>(m, "DiagonalObservable")
        .def(py::init([](int n, const std::vector<double>& values) {
                 if (values.size() != (std::size_t{1} << n))
                     throw std::invalid_argument("values length must be 2^n");
                 return DiagonalObservable{n, values};
             }),
             py::arg("num_qubits"), py::arg("values"))
        .def_readonly("num_qubits", &DiagonalObservable::num_qubits)
        .def_readonly("values", &DiagonalObservable::values);

    m.def("uniform_state", &uniform_state, py::arg("n"));
    m.def("basis_state", &basis_state, py::arg("n"), py::arg("index"));
    m.def("prepare_ansatz_state", &prepare_ansatz_state, py::arg("spec"), py::arg("theta"));
    m.def("parameter_derivative_state", &parameter_derivative_state, py::arg("spec"),
          py::arg("theta"), py::arg("i"));
    m.def("initial_parameters", &initial_parameters, py::arg("spec"), py::arg("seed"),
          py::arg("noise") = 0.01);
    m.def("expectation", &expectation, py::arg("state"), py::arg("observable"));
    m.def("variance", &variance, py::arg("state"), py::arg("observable"));
    m.def("diagonal_observable", &diagonal_observable, py::arg("H"));
    m.def("solution_probability", &solution_probability, py::arg("state"), py::arg("targets"));
    m.def("exact_imaginary_evolution",
          py::overload_cast<const IsingHamiltonian&, const StateVector&, double>(
              &exact_imaginary_evolution),
          py::arg("H"), py::arg("state0"), py::arg("tau"));
    m.def("bures_distance", &bures_distance, py::arg("a"), py::arg("b"));
    m.def("l2_distance", &l2_distance, py::arg("a"), py::arg("b"));

    // variational_engine
    py::enum_<EvolutionMode>(m, "EvolutionMode")
        .value("VarQITE", EvolutionMode::VarQITE)
        .value("QIPA2", EvolutionMode::QIPA2);

    py::class_<EvolutionConfig>(m, "EvolutionConfig")
        .def(py::init<>())
        .def_readwrite("delta_tau", &EvolutionConfig::delta_tau)
        .def_readwrite("delta_t", &EvolutionConfig::delta_t)
        .def_readwrite("num_steps", &EvolutionConfig::num_steps)
        .def_readwrite("regularization", &EvolutionConfig::regularization)
        .def_readwrite("mode", &EvolutionConfig::mode)
        .def_readwrite("seed", &EvolutionConfig::seed);

    py::class_<TrajectoryStep>(m, "TrajectoryStep")
        .def_readonly("step", &TrajectoryStep::step)
        .def_readonly("time", &TrajectoryStep::time)
        .def_readonly("theta", &TrajectoryStep::theta)
        .def_readonly("energy", &TrajectoryStep::energy)
        .def_readonly("solution_prob", &TrajectoryStep::solution_prob)
        .def_readonly("step_error", &TrajectoryStep::step_error)
        .def_readonly("bures_cum", &TrajectoryStep::bures_cum)
        .def_readonly("bures_exact", &TrajectoryStep::bures_exact)
        .def_readonly("diverged", &TrajectoryStep::diverged);

    m.def("evolution_generator",
          py::overload_cast<const IsingHamiltonian&, const EvolutionConfig&>(&evolution_generator),
          py::arg("H"), py::arg("config"));
    m.def(
        "run_evolution",
        [](const IsingHamiltonian& H, const AnsatzSpec& spec, const EvolutionConfig& config) {
            return run_evolution(H, spec, config);
        },
        py::arg("H"), py::arg("spec"), py::arg("config"));

    // error_model
    py::class_<VarianceScalingCheck>(m, "VarianceScalingCheck")
        .def_readonly("lhs", &VarianceScalingCheck::lhs)
        .def_readonly("rhs", &VarianceScalingCheck::rhs)
        .def_readonly("relative_error", &VarianceScalingCheck::relative_error);

    py::class_<BlowupRow>(m, "BlowupRow")
        .def_readonly("alpha", &BlowupRow::alpha)
        .def_readonly("var", &BlowupRow::var)
        .def_readonly("delta", &BlowupRow::delta)
        .def_readonly("qipa_floor", &BlowupRow::qipa_floor)
        .def_readonly("dt_used", &BlowupRow::dt_used)
        .def_readonly("log_delta_sq", &BlowupRow::log_delta_sq);

    m.def("delta_squared", &delta_squared, py::arg("state"), py::arg("H"), py::arg("dt"),
          py::arg("dtau"));
    m.def("qipa_error_floor", &qipa_error_floor, py::arg("eps_varqite"), py::arg("delta"),
          py::arg("dtau"));
    m.def("bures_accumulate", &bures_accumulate, py::arg("step_error_norms"), py::arg("dtau"));
    m.def("variance_scaling_check", &variance_scaling_check, py::arg("H"), py::arg("state"),
          py::arg("alpha"));
    m.def("alpha_blowup_scan", &alpha_blowup_scan, py::arg("H"), py::arg("state"),
          py::arg("alphas"), py::arg("dt"), py::arg("dtau"), py::arg("eps_varqite") = 0.0);
}
