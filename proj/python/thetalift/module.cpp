#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetalift/cm.hpp"
#include "thetalift/cocycle.hpp"
#include "thetalift/format.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/verify.hpp"

namespace py = pybind11;
using namespace thetalift;

namespace {

SeriesParams make_params(double tol) {
    SeriesParams p;
    if (tol > 0) p.tol = tol;
    return p;
}

cplx parse_z_arg(const py::object& z, const UpperHalfPoint& tau) {
    if (py::isinstance<py::str>(z)) {
        std::string s = z.cast<std::string>();
        if (s.find(',') != std::string::npos) return embed(parse_coord(s), tau);
        return parse_complex(s);
    }
    return z.cast<cplx>();
}

OrderElem parse_oe(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return OrderElem{std::stoll(s), 0};
    return OrderElem{std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

}  // namespace

PYBIND11_MODULE(_thetalift, m) {
    m.doc() = "Kronecker-Eisenstein series and the GL2 theta-lift cocycle";

    py::register_exception<ThetaError>(m, "ThetaError");

    m.def(
        "e1",
        [](cplx tau, const py::object& z, double tol) {
            UpperHalfPoint t(tau);
            SeriesParams p = make_params(tol);
            if (py::isinstance<py::str>(z)) {
                std::string s = z.cast<std::string>();
                if (s.find(',') != std::string::npos) return e1(t, parse_coord(s), p);
            }
            return e1(t, parse_z_arg(z, t), p);
        },
        py::arg("tau"), py::arg("z"), py::arg("tol") = 0.0);

    m.def(
        "e2",
        [](cplx tau, const py::object& z, double tol) {
            UpperHalfPoint t(tau);
            SeriesParams p = make_params(tol);
            if (py::isinstance<py::str>(z)) {
                std::string s = z.cast<std::string>();
                if (s.find(',') != std::string::npos) return e2(t, parse_coord(s), p);
            }
            return e2(t, parse_z_arg(z, t), p);
        },
        py::arg("tau"), py::arg("z"), py::arg("tol") = 0.0);

    m.def(
        "kronecker",
        [](int a, cplx s, cplx tau, const py::object& z, cplx u, double tol, bool direct) {
            UpperHalfPoint t(tau);
            SeriesParams p = make_params(tol);
            KroneckerArgs args{a, s, parse_z_arg(z, t), u};
            auto r = direct ? k_direct(t, args, p) : k_continued(t, args, p);
            return py::make_tuple(r.value, r.est_error);
        },
        py::arg("a"), py::arg("s"), py::arg("tau"), py::arg("z"), py::arg("u") = cplx(0, 0),
        py::arg("tol") = 0.0, py::arg("direct") = false);

    m.def(
        "theta",
        [](const std::string& matrix, const std::string& point, const std::string& tau,
           double tol, bool telescoped) {
            UpperHalfPoint t = parse_tau(tau);
            Evaluator ev(t, make_params(tol));
            Mat2Q g = parse_mat(matrix);
            TorsionPoint x = parse_point(point);
            cplx v = theta_gamma(ev, g, x);
            if (!telescoped) return py::object(py::cast(v));
            cplx tele = theta_telescoped(ev, bruhat_factor(g).factors, x);
            py::dict out;
            out["value"] = v;
            out["telescoped"] = tele;
            out["difference"] = std::abs(v - tele);
            return py::object(out);
        },
        py::arg("matrix"), py::arg("point"), py::arg("tau") = "i", py::arg("tol") = 0.0,
        py::arg("telescoped") = false);

    m.def(
        "theta_cycle",
        [](const std::string& matrix, const std::string& cycle, const std::string& tau,
           double tol, long long stabilized_c) {
            UpperHalfPoint t = parse_tau(tau);
            Evaluator ev(t, make_params(tol));
            Mat2Q g = parse_mat(matrix);
            TorsionCycle d = parse_cycle(cycle);
            if (stabilized_c > 0) return theta_stabilized(ev, g, d, stabilized_c);
            return theta_cycle(ev, g, d);
        },
        py::arg("matrix"), py::arg("cycle"), py::arg("tau") = "i", py::arg("tol") = 0.0,
        py::arg("stabilized_c") = 0);

    m.def("bruhat", [](const std::string& matrix) {
        auto f = bruhat_factor(parse_mat(matrix));
        py::list out;
        for (const auto& fac : f.factors) {
            switch (fac.kind) {
                case BruhatFactor::Kind::Unipotent:
                    out.append(py::make_tuple("unipotent", to_string(fac.u)));
                    break;
                case BruhatFactor::Kind::Diagonal:
                    out.append(py::make_tuple("diagonal", to_string(fac.d1), to_string(fac.d2)));
                    break;
                default:
                    out.append(py::make_tuple("weyl"));
            }
        }
        return out;
    });

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, double tol, long long p, long long N) {
            auto rep = run_suite(suite, seed, tol, p, N);
            py::dict out;
            out["suite"] = rep.suite;
            out["cases"] = rep.cases;
            out["failures"] = rep.failures;
            out["worst_error"] = rep.worst_error;
            if (rep.has_kappa) out["kappa"] = rep.kappa;
            return out;
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("tol") = 0.0, py::arg("p") = 0,
        py::arg("N") = 5);

    m.def(
        "hecke_equivariance",
        [](long long p, long long N, cplx tau, const std::string& gamma,
           const std::string& point, double tol) {
            auto rep = verify_equivariance(p, N, UpperHalfPoint(tau), parse_mat(gamma),
                                           parse_point(point), make_params(tol));
            py::dict out;
            out["lhs"] = rep.lhs;
            out["rhs"] = rep.rhs;
            out["difference"] = rep.difference;
            return out;
        },
        py::arg("p"), py::arg("N"), py::arg("tau"), py::arg("gamma"), py::arg("point"),
        py::arg("tol") = 0.0);

    m.def(
        "cm_theta",
        [](long long p, long long q, const std::string& matrix, const std::string& point,
           double tol) {
            UpperHalfPoint t = UpperHalfPoint::from_cm(p, q);
            CMContext ctx(t);
            Evaluator ev(t, make_params(tol));
            auto semi = matrix.find(';');
            if (semi == std::string::npos) throw ParseError("order matrix must be 'a,b;c,d'");
            auto split_pair = [](const std::string& row) {
                auto comma = row.find(',');
                if (comma == std::string::npos) throw ParseError("order matrix must be 'a,b;c,d'");
                return std::pair{row.substr(0, comma), row.substr(comma + 1)};
            };
            auto [a, b] = split_pair(matrix.substr(0, semi));
            auto [c, d] = split_pair(matrix.substr(semi + 1));
            Mat2O g{parse_oe(a), parse_oe(b), parse_oe(c), parse_oe(d)};
            return theta_gamma_cm(ev, ctx, g, parse_point(point));
        },
        py::arg("p"), py::arg("q"), py::arg("matrix"), py::arg("point"), py::arg("tol") = 0.0);

    m.def(
        "cusp_report",
        [](const std::string& matrix, const std::string& point, std::vector<double> ys,
           double tol) {
            auto rep = cusp_degeneration(parse_mat(matrix), parse_point(point), ys,
                                         make_params(tol));
            py::dict out;
            out["ys"] = rep.ys;
            out["theta"] = rep.theta_vals;
            out["bernoulli"] = rep.bernoulli_val;
            out["ratios"] = rep.ratios;
            out["stabilized"] = rep.stabilized;
            out["constant"] = rep.constant;
            return out;
        },
        py::arg("matrix"), py::arg("point"), py::arg("ys"), py::arg("tol") = 0.0);

    m.def("delta_p", [](long long p) {
        py::list out;
        for (const auto& [c, pt] : delta_p_cycle(p).terms)
            out.append(py::make_tuple(c, to_string(pt)));
        return out;
    });

    m.def("periodic_bernoulli", [](int k, const std::string& t) {
        return to_string(periodic_bernoulli(k, parse_rat(t)));
    });
}
