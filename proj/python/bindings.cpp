#include "minrank/error.hpp"
#include "minrank/estimator.hpp"
#include "minrank/instance.hpp"
#include "minrank/support_minors.hpp"
#include "minrank/syzygy.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace minrank;

namespace {

using Rows = std::vector<std::vector<Fq>>;

MinRankInstance make_instance(std::uint32_t q, std::uint32_t r, const std::vector<Rows>& mats) {
    PrimeField F(q);
    if (mats.empty() || mats[0].empty()) throw InvalidArgument("need at least one nonempty matrix");
    const auto m = static_cast<std::uint32_t>(mats[0].size());
    const auto n = static_cast<std::uint32_t>(mats[0][0].size());
    std::vector<DenseMatrix> out;
    for (const auto& rows : mats) {
        std::vector<Fq> flat;
        for (const auto& row : rows) {
            if (row.size() != n) throw InvalidArgument("ragged matrix");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        if (rows.size() != m) throw InvalidArgument("matrices differ in shape");
        out.emplace_back(F, m, n, std::move(flat));
    }
    return MinRankInstance(F, m, n, r, std::move(out));
}

std::vector<Rows> matrices_of(const MinRankInstance& inst) {
    std::vector<Rows> out;
    for (const auto& M : inst.matrices()) {
        Rows rows;
        for (std::size_t i = 0; i < M.rows(); ++i) rows.emplace_back(M.row(i).begin(), M.row(i).end());
        out.push_back(std::move(rows));
    }
    return out;
}

py::list solutions_of(const std::vector<SolutionCandidate>& sols) {
    py::list out;
    for (const auto& s : sols) out.append(py::make_tuple(s.x, s.achieved_rank));
    return out;
}

py::object big(const BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_minrank, m) {
    m.doc() = "SupportMinors linearization for MinRank over prime fields";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    py::class_<MinRankInstance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("q"), py::arg("r"), py::arg("matrices"))
        .def_property_readonly("q", [](const MinRankInstance& i) { return i.field().q(); })
        .def_property_readonly("m", &MinRankInstance::m)
        .def_property_readonly("n", &MinRankInstance::n)
        .def_property_readonly("K", &MinRankInstance::K)
        .def_property_readonly("r", &MinRankInstance::r)
        .def_property_readonly("matrices", &matrices_of)
        .def("to_text", &format_instance)
        .def_static("from_text", &parse_instance)
        .def("pencil", [](const MinRankInstance& i, const Vector& x) {
            auto M = evaluate_pencil(i, x);
            Rows rows;
            for (std::size_t k = 0; k < M.rows(); ++k) rows.emplace_back(M.row(k).begin(), M.row(k).end());
            return rows;
        })
        .def("__eq__", [](const MinRankInstance& a, const MinRankInstance& b) { return a == b; })
        .def("__repr__", [](const MinRankInstance& i) {
            return "<Instance q=" + std::to_string(i.field().q()) + " m=" + std::to_string(i.m()) +
                   " n=" + std::to_string(i.n()) + " K=" + std::to_string(i.K()) + " r=" + std::to_string(i.r()) + ">";
        });

    m.def("gen_random", [](std::uint32_t q, std::uint32_t m_, std::uint32_t n, std::uint32_t K, std::uint32_t r,
                           std::uint64_t seed) { return gen_random(PrimeField(q), m_, n, K, r, seed); },
          py::arg("q"), py::arg("m"), py::arg("n"), py::arg("K"), py::arg("r"), py::arg("seed"));
    m.def("gen_planted",
          [](std::uint32_t q, std::uint32_t m_, std::uint32_t n, std::uint32_t K, std::uint32_t r, std::uint64_t seed) {
              auto p = gen_planted(PrimeField(q), m_, n, K, r, seed);
              return py::make_tuple(p.instance, p.witness);
          },
          py::arg("q"), py::arg("m"), py::arg("n"), py::arg("K"), py::arg("r"), py::arg("seed"));

    m.def("verify", [](const MinRankInstance& i, const Vector& x) { return verify_solution(i, x, i.r()); });
    m.def("brute_force",
          [](const MinRankInstance& i, std::uint64_t cap) { return solutions_of(brute_force_solve(i, i.r(), cap)); },
          py::arg("instance"), py::arg("cap") = kDefaultEnumerationCap);

    m.def("macaulay_shape", [](const MinRankInstance& i, std::uint32_t b) {
        auto L = MacaulayLayout::make(i.K(), i.m(), i.n(), i.r(), b);
        return py::make_tuple(L.rows(), L.cols());
    });
    m.def("macaulay_rank", [](const MinRankInstance& i, std::uint32_t b, std::uint64_t cap) {
        return rank(macaulay(i, b, cap).data);
    }, py::arg("instance"), py::arg("b"), py::arg("cap") = kDefaultMatrixCap);
    m.def("rank_check", [](const MinRankInstance& i, unsigned b) {
        auto rep = rank_check(i, b);
        py::dict d;
        d["b"] = rep.b;
        d["rows"] = rep.rows;
        d["cols"] = rep.cols;
        d["observed"] = rep.observed_rank;
        d["predicted"] = big(rep.predicted);
        d["precondition"] = rep.precondition_met;
        d["match"] = rep.match;
        return d;
    });

    m.def("solve",
          [](const MinRankInstance& i, unsigned b, std::optional<std::uint64_t> fix, std::uint64_t cap_enum) {
              SolveConfig cfg;
              cfg.fix_pluecker = fix;
              cfg.enumeration_cap = cap_enum;
              auto res = solve_linearization(i, b, cfg);
              const auto& d = res.diagnostics;
              py::dict diag;
              diag["rows"] = d.rows;
              diag["cols"] = d.cols;
              diag["rank"] = d.rank;
              diag["kernel_dim"] = d.kernel_dim;
              diag["strategy"] = d.strategy;
              diag["complete"] = d.complete;
              diag["message"] = d.message;
              return py::make_tuple(solutions_of(res.solutions), diag);
          },
          py::arg("instance"), py::arg("b") = 2, py::arg("fix_pluecker") = py::none(),
          py::arg("cap_enum") = kDefaultEnumerationCap);

    m.def("xonly_syzygy_dim", [](const MinRankInstance& i, std::uint32_t d) { return xonly_syzygy_dim(i, d); });
    m.def("span_check", [](const MinRankInstance& i) {
        auto rep = sprime_span_check(i);
        py::dict d;
        d["kernel_dim"] = rep.kernel_dim;
        d["generators"] = rep.generators;
        d["stacked_rank"] = rep.stacked_rank;
        d["all_annihilate"] = rep.all_annihilate;
        d["spans"] = rep.spans();
        return d;
    });
    m.def("submax_dim_formula", [](std::uint64_t m_, std::uint64_t n, std::uint64_t K, std::uint64_t b) {
        return big(submax_dim_formula(m_, n, K, b));
    });
    m.def("submax_dim", [](const MinRankInstance& i, std::uint32_t b) { return submax_dim_empirical(i, b); });

    m.def("estimate",
          [](std::uint64_t m_, std::uint64_t n, std::uint64_t K, std::uint64_t r, unsigned max_b) {
              ParameterSet p{m_, n, K, r};
              p.validate();
              py::list out;
              for (const auto& e : complexity_report(p, max_b).entries) {
                  py::dict d;
                  d["b"] = e.b;
                  d["rows"] = big(e.rows);
                  d["cols"] = big(e.cols);
                  d["predicted"] = e.predicted ? big(*e.predicted) : py::none();
                  d["precondition"] = e.precondition ? py::object(py::bool_(*e.precondition)) : py::none();
                  d["solvable"] = e.solvable ? py::object(py::bool_(*e.solvable)) : py::none();
                  d["cost_dense"] = big(e.cost_dense);
                  d["cost_sparse"] = big(e.cost_sparse);
                  out.append(d);
              }
              return out;
          },
          py::arg("m"), py::arg("n"), py::arg("K"), py::arg("r"), py::arg("max_b") = 2);
}
