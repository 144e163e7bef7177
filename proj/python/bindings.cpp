#include "hypercount/curvecount.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/oracle.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <variant>

namespace py = pybind11;
using namespace hypercount;

namespace {

Family parse_family(const std::string& s)
{
    if (s == "A")
        return Family::A;
    if (s == "B")
        return Family::B;
    throw py::value_error("family must be 'A' or 'B'");
}

py::object char_value(const CharValue& v)
{
    if (const auto* c = std::get_if<std::complex<double>>(&v))
        return py::cast(*c);
    return py::int_(std::get<Residue>(v).value);
}

std::vector<MultChar> to_chars(const FieldCtx& f, const std::vector<std::int64_t>& idx)
{
    std::vector<MultChar> out;
    for (auto k : idx)
        out.emplace_back(f, k);
    return out;
}

py::dict check_dict(const IdentityCheck& c)
{
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed();
    d["cases"] = c.cases;
    d["skipped"] = c.skipped;
    d["mismatches"] = c.mismatches;
    d["max_residual"] = c.max_residual;
    d["failures"] = c.failures;
    return d;
}

/// One field plus a character-sum engine in the chosen backend. Values come
/// back as Python complex numbers (float) or residues modulo `modulus` (exact).
class Engine {
public:
    Engine(std::uint64_t q, const std::string& backend, double tolerance, int max_degree)
        : field_(build_field_of_order(q))
    {
        if (backend == "float")
            sums_ = std::make_unique<FloatSums>(field_, FloatRing(*field_, tolerance));
        else if (backend == "exact")
            sums_ = std::make_unique<ExactSums>(field_, ExactRing(*field_, max_degree));
        else
            throw py::value_error("backend must be 'exact' or 'float'");
    }

    const FieldCtx& field() const { return *field_; }

    std::string backend() const { return std::holds_alternative<FloatPtr>(sums_) ? "float" : "exact"; }

    py::object modulus() const
    {
        if (auto* e = std::get_if<ExactPtr>(&sums_))
            return py::int_((*e)->ring().modulus());
        return py::none();
    }

    template <class Fn>
    auto visit(Fn&& fn) const
    {
        return std::visit([&](const auto& ptr) { return fn(*ptr); }, sums_);
    }

    template <class Sums>
    static py::object value(const Sums& sums, const typename Sums::Value& v)
    {
        return char_value(sums.ring().to_char_value(v));
    }

private:
    using FloatPtr = std::unique_ptr<FloatSums>;
    using ExactPtr = std::unique_ptr<ExactSums>;
    FieldPtr field_;
    std::variant<FloatPtr, ExactPtr> sums_;
};

FieldElem elem(const FieldCtx& f, std::uint32_t code)
{
    return f.element(code);
}

py::dict count_dict(const CountResult& r)
{
    py::dict d;
    d["n_points"] = r.n_points;
    d["method"] = std::string(to_string(r.method));
    d["argument"] = r.argument.code;
    d["hgf_value"] = r.hgf_value ? char_value(*r.hgf_value) : py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Finite-field character sums, Gaussian hypergeometric series and hyperelliptic point counts";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<Engine>(m, "Engine")
        .def(py::init<std::uint64_t, const std::string&, double, int>(), py::arg("q"), py::arg("backend") = "exact",
             py::arg("tolerance") = kDefaultTolerance, py::arg("max_degree") = 5)
        .def_property_readonly("q", [](const Engine& e) { return e.field().q(); })
        .def_property_readonly("p", [](const Engine& e) { return e.field().p(); })
        .def_property_readonly("e", [](const Engine& e) { return e.field().e(); })
        .def_property_readonly("generator", [](const Engine& e) { return e.field().generator().code; })
        .def_property_readonly("backend", &Engine::backend)
        .def_property_readonly("modulus", &Engine::modulus, "Auxiliary prime of the exact backend, else None")
        .def("add", [](const Engine& e, std::uint32_t x, std::uint32_t y) {
            return e.field().add(elem(e.field(), x), elem(e.field(), y)).code;
        })
        .def("mul", [](const Engine& e, std::uint32_t x, std::uint32_t y) {
            return e.field().mul(elem(e.field(), x), elem(e.field(), y)).code;
        })
        .def("pow", [](const Engine& e, std::uint32_t x, std::int64_t n) {
            return e.field().pow(elem(e.field(), x), n).code;
        })
        .def("from_int", [](const Engine& e, std::int64_t n) { return e.field().from_int(n).code; })
        .def("dlog", [](const Engine& e, std::uint32_t x) { return e.field().dlog(elem(e.field(), x)); })
        .def("trace", [](const Engine& e, std::uint32_t x) { return e.field().trace(elem(e.field(), x)); })
        .def("char", [](const Engine& e, std::int64_t k, std::uint32_t x) {
            return e.visit([&](const auto& s) { return Engine::value(s, s.eval_power(k, elem(e.field(), x))); });
        }, py::arg("k"), py::arg("x"), "T^k(x)")
        .def("theta", [](const Engine& e, std::uint32_t x) {
            return e.visit([&](const auto& s) { return Engine::value(s, s.theta(elem(e.field(), x))); });
        })
        .def("gauss_sum", [](const Engine& e, std::int64_t k) {
            return e.visit([&](const auto& s) { return Engine::value(s, s.gauss(k)); });
        }, py::arg("k"), "G(T^k)")
        .def("jacobi_sum", [](const Engine& e, std::int64_t i, std::int64_t j) {
            return e.visit([&](const auto& s) { return Engine::value(s, s.jacobi_power(i, j)); });
        }, py::arg("i"), py::arg("j"), "J(T^i, T^j)")
        .def("binom", [](const Engine& e, std::int64_t i, std::int64_t j) {
            return e.visit([&](const auto& s) { return Engine::value(s, s.binom_power(i, j)); });
        }, py::arg("i"), py::arg("j"), "Greene's binomial (T^i choose T^j)")
        .def("hgf", [](const Engine& e, const std::vector<std::int64_t>& tops, const std::vector<std::int64_t>& bottoms,
                       std::uint32_t x) {
            return e.visit([&](const auto& s) {
                const HgfSpec spec{to_chars(e.field(), tops), to_chars(e.field(), bottoms), elem(e.field(), x)};
                return Engine::value(s, evaluate_hgf(s, spec));
            });
        }, py::arg("tops"), py::arg("bottoms"), py::arg("x"), "Series with T-exponent parameters at x")
        .def("count", [](const Engine& e, const std::string& family, int d, std::uint32_t a, std::uint32_t b) {
            return e.visit([&](const auto& s) {
                return count_dict(count_theorem(s, CurveParams{parse_family(family), d, elem(e.field(), a),
                                                               elem(e.field(), b)}));
            });
        }, py::arg("family"), py::arg("d"), py::arg("a"), py::arg("b"))
        .def("brute_count", [](const Engine& e, const std::string& family, int d, std::uint32_t a, std::uint32_t b) {
            return brute_count(e.field(), CurveParams{parse_family(family), d, elem(e.field(), a), elem(e.field(), b)});
        }, py::arg("family"), py::arg("d"), py::arg("a"), py::arg("b"))
        .def("alpha", [](const Engine& e, int d, std::uint32_t a, std::uint32_t b) {
            return alpha_param(e.field(), d, elem(e.field(), a), elem(e.field(), b)).code;
        })
        .def("beta", [](const Engine& e, int d, std::uint32_t a, std::uint32_t b) {
            return beta_param(e.field(), d, elem(e.field(), a), elem(e.field(), b)).code;
        })
        .def("trace_frobenius", [](const Engine& e, const std::string& family, std::uint32_t a, std::uint32_t b) {
            const Family fam = parse_family(family);
            return e.visit([&](const auto& s) {
                return fam == Family::A ? trace_frobenius_a(s, elem(e.field(), a), elem(e.field(), b))
                                        : trace_frobenius_b(s, elem(e.field(), a), elem(e.field(), b));
            });
        }, py::arg("family"), py::arg("a"), py::arg("b"),
           "q - N for y^2 = x^3 + a x + b (family A) or y^2 = x^3 + a x^2 + b (family B)")
        .def("verify_lemmas", [](const Engine& e) {
            return e.visit([](const auto& s) {
                py::list out;
                for (const auto& c : verify_lemmas(s).checks)
                    out.append(check_dict(c));
                return out;
            });
        })
        .def("verify_davenport_hasse", [](const Engine& e, std::uint64_t m, std::uint64_t psi) {
            return e.visit([&](const auto& s) {
                const auto r = verify_davenport_hasse(s, m, psi);
                py::list out;
                out.append(check_dict(r.relation));
                out.append(check_dict(r.product_formula));
                return out;
            });
        }, py::arg("m"), py::arg("psi"))
        .def("decompose", [](const Engine& e, const std::string& family, int d, std::uint32_t a, std::uint32_t b) {
            return e.visit([&](const auto& s) {
                const auto r = decompose_theta_sum(
                    s, CurveParams{parse_family(family), d, elem(e.field(), a), elem(e.field(), b)});
                py::dict out;
                out["a_term"] = Engine::value(s, r.a_term);
                out["b_term"] = Engine::value(s, r.b_term);
                out["c_term"] = Engine::value(s, r.c_term);
                out["d_term"] = Engine::value(s, r.d_term);
                out["d_half"] = Engine::value(s, r.d_half);
                out["n_reconstructed"] = r.n_reconstructed;
                return out;
            });
        }, py::arg("family"), py::arg("d"), py::arg("a"), py::arg("b"));

    m.def("series_template", [](const std::string& family, int d) {
        const auto t = series_template(theorem_for(parse_family(family), d), d);
        auto conv = [](const std::vector<TemplateChar>& cs) {
            py::list out;
            for (const auto& c : cs)
                out.append(py::make_tuple(c.base, c.base_order, c.power));
            return out;
        };
        return py::make_tuple(conv(t.tops), conv(t.bottoms));
    }, py::arg("family"), py::arg("d"), "Series characters as (name, order, power) tuples");
}
