// pyado: python bindings for the main operations (contexts, modules, braid
// compilation, the renormalized invariant, and the verification suite).

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ado/invariant.hpp"
#include "ado/verify.hpp"

namespace py = pybind11;
using namespace ado;

namespace {

Gen gen_from_string(const std::string& s) {
    if (s == "E") return Gen::E;
    if (s == "F") return Gen::F;
    if (s == "K") return Gen::K;
    if (s == "Kinv") return Gen::Kinv;
    if (s == "H") return Gen::H;
    throw ParseError("unknown generator '" + s + "' (expected E, F, K, Kinv, H)");
}

std::vector<Gen> word_from_strings(const std::vector<std::string>& word) {
    std::vector<Gen> out;
    out.reserve(word.size());
    for (const auto& s : word) out.push_back(gen_from_string(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(pyado, m) {
    m.doc() = "Renormalized quantum link invariants of braid closures from nilpotent "
              "representations of quantum sl2 at a 2N-th root of unity";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<RangeError>(m, "RangeError");
    py::register_exception<TypicalityError>(m, "TypicalityError");
    py::register_exception<GenericityError>(m, "GenericityError");
    py::register_exception<SignatureMismatch>(m, "SignatureMismatch");
    py::register_exception<SimplicityError>(m, "SimplicityError");
    py::register_exception<SingularMatrix>(m, "SingularMatrix");
    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<DisagreementError>(m, "DisagreementError");
    py::register_exception<ResourceError>(m, "ResourceError");

    py::class_<RootContext>(m, "RootContext")
        .def(py::init([](int N, double eps_abs, double eps_rel) {
                 return RootContext::make(N, eps_abs, eps_rel);
             }),
             py::arg("N"), py::arg("eps_abs") = 1e-9, py::arg("eps_rel") = 1e-9)
        .def_readonly("N", &RootContext::N)
        .def_readonly("q", &RootContext::q)
        .def_readonly("eps_abs", &RootContext::eps_abs)
        .def_readonly("eps_rel", &RootContext::eps_rel)
        .def("__repr__", [](const RootContext& c) {
            return "RootContext(N=" + std::to_string(c.N) + ")";
        });

    m.def("q_pow", &q_pow, py::arg("ctx"), py::arg("x"), "q^x = exp(i pi x / N)");
    m.def("qbracket", &qbracket, py::arg("ctx"), py::arg("a"), "{a} = q^a - q^-a");
    m.def("qbracket_factorial", &qbracket_factorial, py::arg("ctx"), py::arg("n"));
    m.def("approx_eq", &approx_eq, py::arg("ctx"), py::arg("a"), py::arg("b"));

    py::class_<WeightModule>(m, "WeightModule")
        .def_readonly("lam", &WeightModule::lambda)
        .def_readonly("N", &WeightModule::N)
        .def_readonly("E", &WeightModule::E)
        .def_readonly("F", &WeightModule::F)
        .def_readonly("K", &WeightModule::K)
        .def_readonly("Kinv", &WeightModule::Kinv)
        .def_readonly("H", &WeightModule::H)
        .def("weight", &WeightModule::weight, py::arg("i"));

    m.def("is_typical", &is_typical, py::arg("ctx"), py::arg("lam"));
    m.def("typical_module", &typical_module, py::arg("ctx"), py::arg("lam"));
    m.def(
        "check_relations",
        [](const RootContext& ctx, const WeightModule& mod) {
            py::dict out;
            for (const auto& [name, r] : check_relations(ctx, mod).residuals)
                out[py::str(name)] = r;
            return out;
        },
        py::arg("ctx"), py::arg("module"), "max-norm residual of each defining relation");
    m.def(
        "tensor_action",
        [](const RootContext& ctx, const std::vector<WeightModule>& mods,
           const std::vector<std::string>& word) {
            const auto gens = word_from_strings(word);
            return tensor_action(ctx, mods, gens);
        },
        py::arg("ctx"), py::arg("modules"), py::arg("word"),
        "iterated-coproduct action of a generator word, e.g. ['E','F']");

    py::class_<ObjectSignature>(m, "ObjectSignature")
        .def(py::init([](std::vector<Cplx> colors) { return ObjectSignature{std::move(colors)}; }),
             py::arg("colors"))
        .def_readonly("colors", &ObjectSignature::colors);

    py::class_<Morphism>(m, "Morphism")
        .def_readonly("domain", &Morphism::domain)
        .def_readonly("codomain", &Morphism::codomain)
        .def_readonly("matrix", &Morphism::matrix);

    m.def("identity", &identity, py::arg("ctx"), py::arg("signature"));
    m.def("compose", &compose, py::arg("g"), py::arg("f"));
    m.def("tensor", &tensor, py::arg("f"), py::arg("g"));
    m.def("r_matrix", &r_matrix, py::arg("ctx"), py::arg("V"), py::arg("W"));
    m.def("braiding", &braiding, py::arg("ctx"), py::arg("V"), py::arg("W"));
    m.def("braiding_inv", &braiding_inv, py::arg("ctx"), py::arg("V"), py::arg("W"));
    m.def("twist_scalar", &twist_scalar, py::arg("ctx"), py::arg("V"));
    m.def(
        "twist_action",
        [](const RootContext& ctx, const std::vector<WeightModule>& mods) {
            return twist_action(ctx, mods);
        },
        py::arg("ctx"), py::arg("modules"));
    m.def("coev", &coev, py::arg("ctx"), py::arg("V"));
    m.def("ev", &ev, py::arg("ctx"), py::arg("V"));
    m.def("coev_prime", &coev_prime, py::arg("ctx"), py::arg("V"));
    m.def("ev_prime", &ev_prime, py::arg("ctx"), py::arg("V"));
    m.def("partial_trace_left", &partial_trace_left, py::arg("ctx"), py::arg("f"),
          py::arg("strands") = 1);
    m.def("partial_trace_right", &partial_trace_right, py::arg("ctx"), py::arg("f"),
          py::arg("strands") = 1);
    m.def("quantum_trace", &quantum_trace, py::arg("ctx"), py::arg("f"));

    py::class_<BraidWord>(m, "BraidWord")
        .def(py::init([](int strands, std::vector<int> word) {
                 return BraidWord{strands, std::move(word)};
             }),
             py::arg("strands"), py::arg("word"))
        .def_readonly("strands", &BraidWord::strands)
        .def_readonly("word", &BraidWord::word);

    m.def("parse_braid", &parse_braid, py::arg("text"));
    m.def("closure_permutation", &closure_permutation, py::arg("braid"));
    m.def("closure_components", &closure_components, py::arg("braid"));

    py::class_<ColoredLink>(m, "ColoredLink")
        .def_readonly("braid", &ColoredLink::braid)
        .def_readonly("components", &ColoredLink::components)
        .def_readonly("colors", &ColoredLink::colors)
        .def_readonly("framing", &ColoredLink::framing)
        .def("component_of", &ColoredLink::component_of, py::arg("strand"));

    m.def("colored_link", &colored_link, py::arg("braid"), py::arg("colors"));
    m.def("writhe_per_component", &writhe_per_component, py::arg("link"));
    m.def("compile", &compile, py::arg("ctx"), py::arg("link"));

    m.def("scalar_of_endo", &scalar_of_endo, py::arg("ctx"), py::arg("m"));
    m.def("cut_value",
          py::overload_cast<const RootContext&, const ColoredLink&, int>(&cut_value),
          py::arg("ctx"), py::arg("link"), py::arg("strand"));
    m.def("modified_dim", &modified_dim, py::arg("ctx"), py::arg("lam"));
    m.def("s_prime_formula", &s_prime_formula, py::arg("ctx"), py::arg("lam"),
          py::arg("lam_prime"), "S'(loop color, open strand color)");
    m.def("qdim_via_diagram", &qdim_via_diagram, py::arg("ctx"), py::arg("lam"));

    py::class_<CutEntry>(m, "CutEntry")
        .def_readonly("component", &CutEntry::component)
        .def_readonly("strand", &CutEntry::strand)
        .def_readonly("tangle_scalar", &CutEntry::tangle_scalar)
        .def_readonly("mdim", &CutEntry::mdim)
        .def_readonly("product", &CutEntry::product);

    py::class_<InvariantReport>(m, "InvariantReport")
        .def_readonly("value", &InvariantReport::value)
        .def_readonly("per_cut", &InvariantReport::per_cut)
        .def_readonly("max_disagreement", &InvariantReport::max_disagreement);

    m.def("f_prime", &f_prime, py::arg("ctx"), py::arg("link"));

    py::class_<AmbidextrousReport>(m, "AmbidextrousReport")
        .def_readonly("commutant_dimension", &AmbidextrousReport::commutant_dimension)
        .def_readonly("trace_diff_residual", &AmbidextrousReport::trace_diff_residual)
        .def_readonly("full_trace_residual", &AmbidextrousReport::full_trace_residual)
        .def_readonly("braiding_commute_residual",
                      &AmbidextrousReport::braiding_commute_residual);

    m.def("ambidextrous_check", &ambidextrous_check, py::arg("ctx"), py::arg("lam0"));

    py::class_<verify::CheckResult>(m, "CheckResult")
        .def_readonly("name", &verify::CheckResult::name)
        .def_readonly("residual", &verify::CheckResult::residual)
        .def_readonly("threshold", &verify::CheckResult::threshold)
        .def_readonly("passed", &verify::CheckResult::passed)
        .def_readonly("detail", &verify::CheckResult::detail)
        .def("__repr__", [](const verify::CheckResult& r) {
            return "CheckResult(" + r.name + (r.passed ? ": ok)" : ": FAIL)");
        });

    m.def(
        "run_verification",
        [](std::vector<int> Ns, std::uint64_t seed, double eps_abs, double eps_rel) {
            verify::VerifyConfig cfg;
            cfg.Ns = std::move(Ns);
            cfg.params = verify::SuiteParams{eps_abs, eps_rel, seed};
            return verify::run_verification(cfg);
        },
        py::arg("Ns") = std::vector<int>{2, 3}, py::arg("seed") = 42,
        py::arg("eps_abs") = 1e-9, py::arg("eps_rel") = 1e-9);
}
