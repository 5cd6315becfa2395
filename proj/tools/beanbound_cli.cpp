// beanbound: series computation, lemma evaluators, sharp-bound verification
// and figure-data emission for the bean-domain bounded-turning class.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "beanbound/bean.hpp"
#include "beanbound/bounds_engine.hpp"
#include "beanbound/btb_class.hpp"
#include "beanbound/functionals.hpp"
#include "beanbound/report_io.hpp"
#include "beanbound/search.hpp"

using namespace beanbound;
using nlohmann::json;

namespace {

// "p/q", "p", or a plain decimal like "0.25" -> exact rational
Rational parse_rational(const std::string& s) {
    if (s.find('/') != std::string::npos) return Rational::parse(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den(1);
    for (std::size_t i = dot + 1; i < s.size(); ++i) den = den * BigInt(10);
    return Rational(BigInt::from_string(digits), den);
}

double parse_real(const std::string& s) {
    if (s.find('/') != std::string::npos) return Rational::parse(s).to_double();
    return std::stod(s);
}

std::complex<double> parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_real(s), 0.0};
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

std::string csv_cell(double v) { return fmt_double(v); }

struct FunctionalRecord {
    std::string name;
    bool available = true;
    double value = 0.0;
    std::string exact;        // set for exact inputs
    double route_closed = 0.0;
    double route_series = 0.0;
    bool c_form_checked = false;
};

template <class C>
std::vector<FunctionalRecord> functional_records(const BtbFunction<C>& f) {
    std::vector<FunctionalRecord> recs;
    auto push = [&recs](const std::string& name, auto closed, auto series,
                        bool c_checked, const std::string& exact) {
        FunctionalRecord r;
        r.name = name;
        r.value = as_double(abs_value(closed));
        r.route_closed = as_double(abs_value(closed));
        r.route_series = as_double(abs_value(series));
        r.c_form_checked = c_checked;
        r.exact = exact;
        recs.push_back(r);
    };
    auto exact_str = [](const C& v) {
        if constexpr (field_traits<C>::exact)
            return abs_value(v).to_string();
        else
            return std::string();
    };

    auto g = log_coeffs(f);
    auto gs = log_coeffs_series(f);
    push("gamma1", g.g1, gs.g1, false, exact_str(g.g1));
    push("gamma2", g.g2, gs.g2, false, exact_str(g.g2));
    push("gamma3", g.g3, gs.g3, false, exact_str(g.g3));
    if (g.g4) {
        push("gamma4", *g.g4, *gs.g4, false, exact_str(*g.g4));
    } else {
        FunctionalRecord r;
        r.name = "gamma4";
        r.available = false;
        recs.push_back(r);
    }
    auto G = inv_log_coeffs(f);
    auto Gs = inv_log_coeffs_series(f);
    push("Gamma1", G.G1, Gs.G1, false, exact_str(G.G1));
    push("Gamma2", G.G2, Gs.G2, false, exact_str(G.G2));
    push("Gamma3", G.G3, Gs.G3, false, exact_str(G.G3));

    const bool has_c = f.from_c.has_value();
    const C h = hankel_log(f);
    push("hankel_log", h, h, has_c, exact_str(h));
    const C hi = hankel_inv_log(f);
    push("hankel_inv_log", hi, hi, has_c, exact_str(hi));
    const C z = zalcman_23(f);
    push("zalcman23", z, z, false, exact_str(z));

    auto push_signed = [&recs](const std::string& name, auto v) {
        FunctionalRecord r;
        r.name = name;
        r.value = as_double(v);
        r.route_closed = r.value;
        r.route_series = r.value;
        recs.push_back(r);
    };
    push_signed("gamma_diff", moduli_diff(ModuliKind::gamma, f));
    push_signed("Gamma_diff", moduli_diff(ModuliKind::inv_gamma, f));
    return recs;
}

std::string render_functionals(const std::vector<FunctionalRecord>& recs,
                               const std::string& provenance, const std::string& format) {
    if (format == "json") {
        std::string out;
        for (const auto& r : recs) {
            json j = {{"functional", r.name}, {"provenance", provenance}};
            if (!r.available) {
                j["value"] = "unavailable";
            } else {
                j["value"] = r.value;
                j["routes"] = {{"closed", r.route_closed}, {"series", r.route_series}};
                if (r.c_form_checked) j["routes"]["c_form_checked"] = true;
                if (!r.exact.empty()) j["exact"] = r.exact;
            }
            out += j.dump() + "\n";
        }
        return out;
    }
    std::string out;
    if (format == "csv") {
        out = "functional,value,exact\n";
        for (const auto& r : recs)
            out += r.name + "," + (r.available ? csv_cell(r.value) : "unavailable") + "," +
                   r.exact + "\n";
        return out;
    }
    for (const auto& r : recs) {
        out += r.name + " = ";
        if (!r.available) {
            out += "unavailable (needs c4)\n";
            continue;
        }
        if (!r.exact.empty()) out += r.exact + " = ";
        out += fmt_double(r.value);
        out += "\n";
    }
    out += "provenance: " + provenance + "\n";
    return out;
}

int run_verify(uint64_t seed, uint64_t samples, int refine, bool witnesses, bool serial,
               const std::string& functional, const std::string& format,
               const std::string& out_path) {
    std::vector<BoundReport> reports;
    const ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;
    if (!functional.empty()) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.refine_iters = refine;
        cfg.include_extremals = witnesses;
        cfg.functional_id = functional;
        reports.push_back(maximize_functional(cfg, mode));
    } else {
        reports = verify_all(seed, samples, refine, witnesses, mode);
    }

    std::string text;
    if (format == "json") {
        text = reports_to_jsonl(reports);
    } else if (format == "csv") {
        text = reports_to_csv(reports);
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-18s %-14s %-22s %-12s %s\n", "theorem", "bound",
                      "attained", "gap", "verdict");
        text = line;
        for (const auto& r : reports) {
            const double gap = r.kind == BoundKind::min_signed ? r.attained - r.bound.value
                                                               : r.bound.value - r.attained;
            std::snprintf(line, sizeof line, "%-18s %-14s %-22.17g %-12.3g %s\n",
                          r.theorem_id.c_str(), r.bound.exact.c_str(), r.attained, gap,
                          verdict_name(r.verdict));
            text += line;
        }
    }
    emit(text, out_path);

    bool violated = false, unconfirmed = false;
    for (const auto& r : reports) {
        violated |= r.verdict == Verdict::violated;
        unconfirmed |= r.verdict != Verdict::confirmed;
    }
    if (violated) return 2;
    if (unconfirmed) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp coefficient-bound toolkit for the bean-domain bounded-turning class"};
    app.require_subcommand(1);
    app.fallthrough(); // global --format/--out may follow the subcommand

    std::string format = "table", out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // ---- coeffs ----
    auto* coeffs = app.add_subcommand("coeffs", "Caratheodory and class coefficients from taus");
    std::string tau1_s = "0", tau2_s = "0", tau3_s = "0", tau4_s;
    coeffs->add_option("--tau1", tau1_s, "tau1 in [0,1]");
    coeffs->add_option("--tau2", tau2_s, "tau2 as re,im in the closed disk");
    coeffs->add_option("--tau3", tau3_s, "tau3 as re,im");
    coeffs->add_option("--tau4", tau4_s, "tau4 as re,im (pins c4)");

    // ---- extremal ----
    auto* ext = app.add_subcommand("extremal", "Taylor coefficients of the extremal f_k");
    int k = 1, order = 12;
    ext->add_option("--k", k, "which extremal function")->required()->check(CLI::Range(1, 4));
    ext->add_option("--order", order, "highest coefficient degree")->check(CLI::Range(1, 64));

    // ---- functionals ----
    auto* fns = app.add_subcommand("functionals", "all bounded functionals, both routes");
    int fk = 0;
    std::string ftau1, ftau2 = "0", ftau3 = "0", ftau4;
    fns->add_option("--k", fk, "evaluate at the extremal f_k")->check(CLI::Range(1, 4));
    fns->add_option("--tau1", ftau1, "tau1 of a sampled member");
    fns->add_option("--tau2", ftau2, "tau2 as re,im");
    fns->add_option("--tau3", ftau3, "tau3 as re,im");
    fns->add_option("--tau4", ftau4, "tau4 as re,im (enables gamma4)");

    // ---- lemma ----
    auto* lem = app.add_subcommand("lemma", "closed-form lemma evaluators (Y, C, D, E, F)");
    std::string lemma_name;
    lem->add_option("name", lemma_name, "one of Y, C, D, E, F")->required();
    std::string A_s, B_s, C_s, v_s, D_s, gamma_s, lambda_s, alpha_s, beta_s, B1_s, B2_s, B3_s;
    lem->add_option("--A", A_s);
    lem->add_option("--B", B_s);
    lem->add_option("--C", C_s);
    lem->add_option("--v", v_s);
    lem->add_option("--D", D_s);
    lem->add_option("--gamma", gamma_s);
    lem->add_option("--lambda", lambda_s);
    lem->add_option("--alpha", alpha_s);
    lem->add_option("--beta", beta_s);
    lem->add_option("--B1", B1_s);
    lem->add_option("--B2", B2_s);
    lem->add_option("--B3", B3_s);

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "numerically confirm every sharp bound");
    uint64_t seed = 1, samples = 100000;
    int refine = 2;
    bool no_witnesses = false, serial = false;
    std::string functional;
    ver->add_option("--seed", seed, "RNG seed");
    ver->add_option("--samples", samples, "samples per functional");
    ver->add_option("--refine", refine, "refinement rounds")->check(CLI::Range(0, 16));
    ver->add_option("--functional", functional, "restrict to one theorem row");
    ver->add_flag("--no-witnesses", no_witnesses, "skip extremal witness injection");
    ver->add_flag("--serial", serial, "use the serial reference kernel");

    // ---- plot ----
    auto* plot = app.add_subcommand("plot", "emit curve data as CSV (optionally SVG)");
    std::string target;
    int resolution = 256;
    bool scaled = false;
    std::string svg_path;
    plot->add_option("target", target, "psi, psi1, or bean")
        ->required()
        ->check(CLI::IsMember({"psi", "psi1", "bean"}));
    plot->add_option("--resolution", resolution, "number of sample points");
    plot->add_flag("--scaled", scaled, "divide psi values by 36864");
    plot->add_option("--svg", svg_path, "also write an SVG polyline to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // usage errors are always exit 1
    }

    try {
        if (*coeffs) {
            const double t1 = parse_real(tau1_s);
            const auto t2 = parse_complex(tau2_s), t3 = parse_complex(tau3_s);
            CarCoeffs<std::complex<double>> c = params_to_coeffs(t1, t2, t3);
            SchwarzParams sp;
            sp.tau1 = t1;
            sp.tau2 = t2;
            sp.tau3 = t3;
            if (!tau4_s.empty()) {
                sp.tau4 = parse_complex(tau4_s);
                c.c4 = schur_coeffs(t1, t2, t3, *sp.tau4)[3];
            }
            auto f = coeffs_from_c(c);
            if (format == "json") {
                json j = {{"params", to_json(sp)},
                          {"c", {{"c1", {c.c1.real(), c.c1.imag()}},
                                 {"c2", {c.c2.real(), c.c2.imag()}},
                                 {"c3", {c.c3.real(), c.c3.imag()}}}},
                          {"a", {{"a2", {f.a2.real(), f.a2.imag()}},
                                 {"a3", {f.a3.real(), f.a3.imag()}},
                                 {"a4", {f.a4.real(), f.a4.imag()}}}}};
                if (c.c4) j["c"]["c4"] = {c.c4->real(), c.c4->imag()};
                if (f.a5) j["a"]["a5"] = {f.a5->real(), f.a5->imag()};
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::string text = "name,re,im\n";
                auto row = [&text](const char* name, std::complex<double> v) {
                    text += std::string(name) + "," + csv_cell(v.real()) + "," +
                            csv_cell(v.imag()) + "\n";
                };
                row("c1", c.c1);
                row("c2", c.c2);
                row("c3", c.c3);
                if (c.c4) row("c4", *c.c4);
                row("a2", f.a2);
                row("a3", f.a3);
                row("a4", f.a4);
                if (f.a5) row("a5", *f.a5);
                emit(text, out_path);
            }
            return 0;
        }

        if (*ext) {
            auto s = extremal_series(k, order);
            if (format == "json") {
                emit(to_json(s).dump(2) + "\n", out_path);
            } else if (format == "csv") {
                std::string text = "n,coefficient\n";
                for (int i = 1; i <= order; ++i)
                    text += std::to_string(i) + "," + s[i].to_string() + "\n";
                emit(text, out_path);
            } else {
                std::string text = "f_" + std::to_string(k) + " Taylor coefficients a_1..a_" +
                                   std::to_string(order) + ":\n";
                for (int i = 1; i <= order; ++i)
                    text += (i > 1 ? ", " : "") + s[i].to_string();
                text += "\n";
                emit(text, out_path);
            }
            return 0;
        }

        if (*fns) {
            if (fk > 0) {
                auto f = extremal(fk);
                emit(render_functionals(functional_records(f),
                                        std::string("extremal f_") + std::to_string(fk), format),
                     out_path);
            } else {
                if (ftau1.empty())
                    throw CLI::ValidationError("functionals", "need --k or --tau1/--tau2/--tau3");
                const double t1 = parse_real(ftau1);
                const auto t2 = parse_complex(ftau2), t3 = parse_complex(ftau3);
                CarCoeffs<std::complex<double>> c = params_to_coeffs(t1, t2, t3);
                if (!ftau4.empty()) c.c4 = schur_coeffs(t1, t2, t3, parse_complex(ftau4))[3];
                emit(render_functionals(functional_records(coeffs_from_c(c)),
                                        "closed-form-from-c", format),
                     out_path);
            }
            return 0;
        }

        if (*lem) {
            std::string text;
            if (lemma_name == "Y") {
                auto y = y_eval(parse_real(A_s), parse_real(B_s), parse_real(C_s));
                text = format == "json"
                           ? json{{"value", y.value}, {"branch", y.branch}}.dump() + "\n"
                           : fmt_double(y.value) + ", branch \"" + y.branch + "\"\n";
            } else if (lemma_name == "C") {
                auto b = lemma_c_bound(parse_rational(v_s));
                text = format == "json"
                           ? json{{"bound", b.to_string()}}.dump() + "\n"
                           : b.to_string() + "\n";
            } else if (lemma_name == "D") {
                const bool ok = lemma_d_check(parse_rational(B_s), parse_rational(D_s));
                text = format == "json" ? json{{"holds", ok}}.dump() + "\n"
                                        : std::string(ok ? "true" : "false") + "\n";
            } else if (lemma_name == "E") {
                auto r = lemma_e_check(parse_rational(gamma_s), parse_rational(lambda_s),
                                       parse_rational(alpha_s), parse_rational(beta_s));
                text = format == "json"
                           ? json{{"holds", r.ok}, {"slack", r.slack.to_string()}}.dump() + "\n"
                           : std::string(r.ok ? "true" : "false") + ", slack " +
                                 r.slack.to_string() + "\n";
            } else if (lemma_name == "F") {
                auto r = lemma_f_bounds(parse_real(B1_s), {parse_real(B2_s), 0.0},
                                        parse_real(B3_s));
                text = format == "json"
                           ? json{{"psi_plus_bound", r.psi_plus_bound},
                                  {"psi_minus_bound", r.psi_minus_bound},
                                  {"plus_branch", r.plus_branch},
                                  {"minus_branch", r.minus_branch}}
                                     .dump() +
                                 "\n"
                           : "psi_plus <= " + fmt_double(r.psi_plus_bound) + " (" +
                                 r.plus_branch + "), psi_minus <= " +
                                 fmt_double(r.psi_minus_bound) + " (" + r.minus_branch + ")\n";
            } else {
                throw CLI::ValidationError("lemma", "unknown lemma " + lemma_name);
            }
            emit(text, out_path);
            return 0;
        }

        if (*ver)
            return run_verify(seed, samples, refine, !no_witnesses, serial, functional, format,
                              out_path);

        if (*plot) {
            if (resolution < 2)
                throw CLI::ValidationError("plot", "resolution must be >= 2");
            std::vector<std::pair<double, double>> pts;
            std::string text;
            if (target == "psi" || target == "psi1") {
                const HankelVariant variant =
                    target == "psi" ? HankelVariant::direct : HankelVariant::inverse;
                text = "t,value\n";
                for (int i = 0; i < resolution; ++i) {
                    const double t = static_cast<double>(i) / (resolution - 1);
                    double v = psi_poly(variant, t);
                    if (scaled) v /= 36864.0;
                    pts.emplace_back(t, v);
                    text += csv_cell(t) + "," + csv_cell(v) + "\n";
                }
            } else {
                const double residual = bean_series_residual();
                if (residual > 1e-8)
                    throw std::logic_error("bean series self-check failed: residual " +
                                           fmt_double(residual));
                auto curve = bean_boundary(resolution);
                const double dev = bean_boundary_identity_dev(curve);
                if (dev > 1e-9)
                    throw std::logic_error("bean boundary identity failed: deviation " +
                                           fmt_double(dev));
                text = "theta,re,im\n";
                for (const auto& pt : curve) {
                    pts.emplace_back(pt.w.real(), pt.w.imag());
                    text += csv_cell(pt.theta) + "," + csv_cell(pt.w.real()) + "," +
                            csv_cell(pt.w.imag()) + "\n";
                }
            }
            emit(text, out_path);
            if (!svg_path.empty()) {
                std::ofstream f(svg_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open SVG output: " + svg_path);
                f << svg_polyline(pts);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
