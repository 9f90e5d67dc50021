// Command-line surface: evaluate the series and the cocycle, run the
// verification suites, emit machine-readable tables.
//
// Exit codes: 0 ok, 1 verify failure, 2 parse error, 3 evaluation error.
// THETA_LAB_TOL overrides the default tolerance.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetalift/cm.hpp"
#include "thetalift/cocycle.hpp"
#include "thetalift/format.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;
using nlohmann::json;

namespace {

double default_tol() {
    if (const char* env = std::getenv("THETA_LAB_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 1e-8;
}

void emit(const json& j, const std::string& format, const std::string& output) {
    std::string text;
    if (format == "json") {
        text = j.dump();
        text.push_back('\n');
    } else {
        // csv: flat key=value columns in sorted key order
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) { header.push_back(','); row.push_back(','); }
            header += it.key();
            if (it->is_string())
                row += it->get<std::string>();
            else
                row += it->dump();
        }
        text = header + "\n" + row + "\n";
    }
    if (output.empty() || output == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(output);
        out << text;
    }
}

json complex_json(const cplx& z) {
    char re[40], im[40];
    std::snprintf(re, sizeof(re), "%.17g", z.real());
    std::snprintf(im, sizeof(im), "%.17g", z.imag());
    return json{{"re", std::stod(re)}, {"im", std::stod(im)}};
}

// order element "s" or "s:t" meaning s + t*tau
OrderElem parse_order_elem(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return OrderElem{std::stoll(s), 0};
    return OrderElem{std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

Mat2O parse_mat_order(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw ParseError("order matrix must be 'a,b;c,d'");
    auto split_pair = [](const std::string& row) {
        auto comma = row.find(',');
        if (comma == std::string::npos) throw ParseError("order matrix must be 'a,b;c,d'");
        return std::pair{row.substr(0, comma), row.substr(comma + 1)};
    };
    auto [a, b] = split_pair(s.substr(0, semi));
    auto [c, d] = split_pair(s.substr(semi + 1));
    return Mat2O{parse_order_elem(a), parse_order_elem(b), parse_order_elem(c),
                 parse_order_elem(d)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-lift laboratory: Kronecker-Eisenstein series and the GL2 cocycle"};
    app.require_subcommand(1);

    std::string tau_s = "i", z_s, point_s, cycle_s, matrix_s, output, format = "json";
    std::string u_s = "0";
    double tol = default_tol();
    int radius = 4000;
    double split = 1.0;
    long long a = 0;
    std::string s_s = "1";
    bool telescoped = false;
    long long stabil_c = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tau", tau_s, "base point: 'i', 'x+yi', or 'cm:p,q'");
        cmd->add_option("--tol", tol, "absolute error target");
        cmd->add_option("--radius", radius, "lattice truncation bound");
        cmd->add_option("--split", split, "Mellin split multiplier");
        cmd->add_option("--format", format, "json or csv");
        cmd->add_option("--output", output, "output path (default stdout)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate E1, E2, or K_a(s)");
    std::string kind;
    eval->add_option("kind", kind, "e1 | e2 | k")->required();
    eval->add_option("--z", z_s, "z as 'u,v' torsion coordinates or a complex number");
    eval->add_option("--a", a, "weight (k only)");
    eval->add_option("--s", s_s, "s parameter, complex (k only)");
    eval->add_option("--u", u_s, "character parameter u (k only)");
    add_common(eval);

    auto* theta = app.add_subcommand("theta", "evaluate the cocycle theta[g]");
    theta->add_option("--matrix", matrix_s, "g as 'a,b;c,d', rational entries")->required();
    theta->add_option("--point", point_s, "torsion point 'u1,v1;u2,v2'");
    theta->add_option("--cycle", cycle_s, "cycle 'c1*u1,v1;u2,v2 + ...'");
    theta->add_flag("--telescoped", telescoped, "also evaluate through the Bruhat word");
    theta->add_option("--stabilized", stabil_c, "auxiliary c for (1-c^4) stabilization");
    add_common(theta);

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    std::uint64_t seed = 1;
    long long vp = 0, vN = 5;
    verify->add_option("suite", suite, "parity|distribution|dbar|cocycle|modularity|hecke|cusp|cm")
        ->required();
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--p", vp, "prime for the hecke suite (default: both 2 and 3)");
    verify->add_option("--N", vN, "level for the hecke suite");
    add_common(verify);

    auto* hecke = app.add_subcommand("hecke", "Hecke equivariance report");
    long long hp = 2, hN = 5;
    std::string gamma_s = "1,0;1,1";
    hecke->add_option("--p", hp, "prime");
    hecke->add_option("--N", hN, "level");
    hecke->add_option("--gamma", gamma_s, "matrix in the fiberwise congruence group (b == 0 mod N)");
    hecke->add_option("--point", point_s, "section '0,0;u,v'");
    add_common(hecke);

    auto* cm = app.add_subcommand("cm-theta", "evaluate the CM cocycle");
    cm->add_option("--matrix", matrix_s, "entries 's' or 's:t' meaning s + t*tau: 'a,b;c,d'")
        ->required();
    cm->add_option("--point", point_s, "torsion point")->required();
    add_common(cm);

    auto* cusp = app.add_subcommand("cusp", "cusp degeneration report");
    std::string ys_s = "20,50,100";
    cusp->add_option("--matrix", matrix_s, "g as 'a,b;c,d'")->required();
    cusp->add_option("--point", point_s, "torsion point")->required();
    cusp->add_option("--ys", ys_s, "increasing y ladder");
    add_common(cusp);

    CLI11_PARSE(app, argc, argv);

    try {
        SeriesParams P;
        P.tol = tol;
        P.max_radius = radius;
        P.split = split;

        if (*eval) {
            UpperHalfPoint tau = parse_tau(tau_s);
            json out;
            cplx value;
            double est = 0;
            if (kind == "e1" || kind == "e2") {
                cplx zv;
                json zparam;
                if (z_s.find(',') != std::string::npos) {
                    TorsionCoord c = parse_coord(z_s);
                    value = (kind == "e1") ? e1(tau, c, P) : e2(tau, c, P);
                    zparam = to_string(c);
                } else {
                    zv = parse_complex(z_s.empty() ? "0" : z_s);
                    value = (kind == "e1") ? e1(tau, zv, P) : e2(tau, zv, P);
                    zparam = to_string(zv);
                }
                est = P.tol;
                out["params"] = json{{"kind", kind}, {"tau", tau_s}, {"z", zparam}};
            } else if (kind == "k") {
                KroneckerArgs args;
                args.a = static_cast<int>(a);
                args.s = parse_complex(s_s);
                args.z = (z_s.find(',') != std::string::npos)
                             ? embed(parse_coord(z_s), tau)
                             : parse_complex(z_s.empty() ? "0" : z_s);
                args.u_char = parse_complex(u_s);
                auto r = k_continued(tau, args, P);
                value = r.value;
                est = r.est_error;
                out["params"] = json{{"kind", "k"}, {"a", a},     {"s", s_s},
                                     {"tau", tau_s}, {"z", z_s}, {"u", u_s}};
            } else {
                std::fprintf(stderr, "ParseError: unknown eval kind '%s'\n", kind.c_str());
                return 2;
            }
            out["value"] = complex_json(value);
            out["est_error"] = est;
            emit(out, format, output);
            return 0;
        }

        if (*theta) {
            UpperHalfPoint tau = parse_tau(tau_s);
            Evaluator ev(tau, P);
            Mat2Q g = parse_mat(matrix_s);
            json out;
            out["params"] = json{{"matrix", matrix_s}, {"tau", tau_s}};
            cplx value;
            if (!cycle_s.empty()) {
                TorsionCycle D = parse_cycle(cycle_s);
                value = (stabil_c > 0) ? theta_stabilized(ev, g, D, stabil_c)
                                       : theta_cycle(ev, g, D);
                out["params"]["cycle"] = cycle_s;
            } else {
                TorsionPoint x = parse_point(point_s);
                value = theta_gamma(ev, g, x);
                out["params"]["point"] = to_string(x);
                if (telescoped) {
                    cplx tele = theta_telescoped(ev, bruhat_factor(g).factors, x);
                    out["telescoped"] = complex_json(tele);
                    out["difference"] = std::abs(value - tele);
                }
            }
            if (stabil_c > 0) out["params"]["stabilized_c"] = stabil_c;
            out["value"] = complex_json(value);
            out["est_error"] = P.tol;
            emit(out, format, output);
            return 0;
        }

        if (*verify) {
            auto rep = run_suite(suite, seed, tol == default_tol() ? 0.0 : tol, vp, vN);
            json out{{"suite", rep.suite},
                     {"cases", rep.cases},
                     {"failures", rep.failures},
                     {"worst_error", rep.worst_error}};
            if (rep.has_kappa) out["kappa"] = complex_json(rep.kappa);
            emit(out, format, output);
            return rep.passed() ? 0 : 1;
        }

        if (*hecke) {
            UpperHalfPoint tau = parse_tau(tau_s);
            Mat2Q gamma = parse_mat(gamma_s);
            TorsionPoint x = point_s.empty()
                                 ? TorsionPoint(TorsionCoord(Rat(0), Rat(0)),
                                                TorsionCoord(Rat(1, hN), Rat(0)))
                                 : parse_point(point_s);
            auto rep = verify_equivariance(hp, hN, tau, gamma, x, P);
            json out{{"params", json{{"p", hp}, {"N", hN}, {"gamma", gamma_s},
                                     {"point", to_string(x)}, {"tau", tau_s}}},
                     {"lhs", complex_json(rep.lhs)},
                     {"rhs", complex_json(rep.rhs)},
                     {"difference", rep.difference},
                     {"kappa", complex_json(cplx(1.0, 0.0))}};
            emit(out, format, output);
            return 0;
        }

        if (*cm) {
            UpperHalfPoint tau = parse_tau(tau_s);
            if (!tau.cm) throw ParseError("cm-theta needs tau in the form cm:p,q");
            CMContext ctx(tau);
            Evaluator ev(tau, P);
            Mat2O g = parse_mat_order(matrix_s);
            TorsionPoint x = parse_point(point_s);
            cplx value = theta_gamma_cm(ev, ctx, g, x);
            json out{{"params", json{{"matrix", matrix_s}, {"tau", tau_s}, {"point", point_s}}},
                     {"value", complex_json(value)},
                     {"est_error", P.tol}};
            emit(out, format, output);
            return 0;
        }

        if (*cusp) {
            Mat2Q g = parse_mat(matrix_s);
            TorsionPoint x = parse_point(point_s);
            std::vector<double> ys;
            std::string cur;
            for (char ch : ys_s + ",") {
                if (ch == ',') {
                    if (!cur.empty()) ys.push_back(std::stod(cur));
                    cur.clear();
                } else
                    cur.push_back(ch);
            }
            auto rep = cusp_degeneration(g, x, ys, P);
            json ratios = json::array();
            for (const auto& r : rep.ratios) ratios.push_back(complex_json(r));
            json out{{"params", json{{"matrix", matrix_s}, {"point", point_s}, {"ys", ys}}},
                     {"bernoulli", complex_json(rep.bernoulli_val)},
                     {"ratios", ratios},
                     {"stabilized", rep.stabilized},
                     {"constant", complex_json(rep.constant)}};
            emit(out, format, output);
            return 0;
        }
    } catch (const ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const ThetaError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
