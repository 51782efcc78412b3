#pragma once

// Command-line front end: roots, eval, verify, suite, table.
// Exit codes: 0 all reports pass, 1 a verification failed, 2 bad input,
// 3 numerical non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <kosh/kosh.hpp>

namespace kosh::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_nonconvergence = 3;

inline const char* profile_env = "KOSH_PROFILE";

inline std::string default_profile()
{
    const char* v = std::getenv(profile_env);
    return (v && *v) ? v : "desk";
}

inline std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string num(cplx z) { return detail::fmt(z); }

// ---------------------------------------------------------------- report output

inline json report_json(const VerifyReport& r)
{
    json j;
    j["id"] = r.id;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    json sides = json::array();
    for (const auto& s : r.sides) sides.push_back({{"label", s.label}, {"re", s.value.real()}, {"im", s.value.imag()}});
    j["sides"] = sides;
    j["max_abs_dev"] = r.max_abs_dev;
    j["max_rel_dev"] = r.max_rel_dev;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["diag"] = {{"terms", r.diag.terms}, {"nodes", r.diag.nodes}, {"T", r.diag.T}};
    if (!r.checks.empty()) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"label", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"min_margin", c.min_margin}, {"ok", c.ok()}});
        j["checks"] = checks;
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Columns: identity, parameters, side values, deviations, pass. Side columns
/// carry their labels when every report has the same id and side layout.
inline std::string reports_csv(const std::vector<VerifyReport>& rs)
{
    std::vector<std::string> pnames;
    std::size_t nsides = 0;
    bool uniform = true;
    for (const auto& r : rs) {
        for (const auto& [k, v] : r.params)
            if (std::find(pnames.begin(), pnames.end(), k) == pnames.end()) pnames.push_back(k);
        nsides = std::max(nsides, r.sides.size());
        if (r.id != rs.front().id || r.sides.size() != rs.front().sides.size()) uniform = false;
    }
    bool any_imag = false;
    for (const auto& r : rs)
        for (const auto& s : r.sides) any_imag = any_imag || s.value.imag() != 0.0;
    std::ostringstream os;
    os << "identity";
    for (const auto& k : pnames) os << ',' << csv_field(k);
    for (std::size_t i = 0; i < nsides; ++i) {
        const std::string name = uniform && !rs.empty() ? rs.front().sides[i].label : "side" + std::to_string(i + 1);
        os << ',' << csv_field(any_imag ? name + " (re)" : name);
        if (any_imag) os << ',' << csv_field(name + " (im)");
    }
    os << ",max_abs_dev,max_rel_dev,tol,pass\n";
    for (const auto& r : rs) {
        os << r.id;
        for (const auto& k : pnames) {
            std::string v;
            for (const auto& [pk, pv] : r.params)
                if (pk == k) v = pv;
            os << ',' << csv_field(v);
        }
        for (std::size_t i = 0; i < nsides; ++i) {
            if (i < r.sides.size()) {
                os << ',' << num(r.sides[i].value.real());
                if (any_imag) os << ',' << num(r.sides[i].value.imag());
            } else {
                os << ',';
                if (any_imag) os << ',';
            }
        }
        os << ',' << num(r.max_abs_dev) << ',' << num(r.max_rel_dev) << ',' << num(r.tol) << ','
           << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

inline std::string report_text(const VerifyReport& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.id;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << "  max_abs_dev=" << num(r.max_abs_dev) << " max_rel_dev=" << num(r.max_rel_dev) << " tol=" << num(r.tol) << '\n';
    for (const auto& s : r.sides) os << "    " << s.label << ": " << num(s.value) << '\n';
    for (const auto& c : r.checks)
        os << "    " << (c.ok() ? "holds" : "FAILS") << ": " << c.label << "  (" << num(c.lhs) << " vs " << num(c.rhs) << ")\n";
    if (!r.error.empty()) os << "    error: " << r.error << '\n';
    return os.str();
}

inline int reports_exit_code(const std::vector<VerifyReport>& rs)
{
    int code = exit_ok;
    for (const auto& r : rs) {
        if (!r.error.empty()) return exit_nonconvergence;
        if (!r.pass) code = exit_fail;
    }
    return code;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::optional<std::string> p, s, x, k, m, alpha, n;

    KoshParam param() const
    {
        if (!p) throw domain_error("this function needs --p");
        return parse_param(*p);
    }
    cplx complex_arg() const
    {
        if (s) return parse_complex(*s);
        if (x) return detail::parse_real(*x);
        throw domain_error("this function needs --s");
    }
    double real_arg() const
    {
        if (x) return detail::parse_real(*x);
        if (s) {
            const cplx z = parse_complex(*s);
            if (z.imag() != 0.0) throw domain_error("this function needs a real argument");
            return z.real();
        }
        throw domain_error("this function needs --x");
    }
    long integer(const std::optional<std::string>& v, const char* name) const
    {
        if (!v) throw domain_error(std::string("this function needs --") + name);
        return detail::parse_int(*v);
    }
    double real(const std::optional<std::string>& v, const char* name) const
    {
        if (!v) throw domain_error(std::string("this function needs --") + name);
        return detail::parse_real(*v);
    }
};

struct EvalResult {
    cplx value;
    std::string method;
};

using EvalFn = std::function<EvalResult(const EvalArgs&)>;

inline const std::map<std::string, EvalFn>& eval_functions()
{
    auto zeval = [](ZetaEval z) { return EvalResult{z.value, to_string(z.method)}; };
    static const std::map<std::string, EvalFn> fns = {
        {"zeta_p", [=](const EvalArgs& a) { return zeval(zeta_p(a.param(), a.complex_arg())); }},
        {"eta_p", [=](const EvalArgs& a) { return zeval(eta_p(a.param(), a.complex_arg())); }},
        {"zeta_p_contour", [=](const EvalArgs& a) { return zeval(zeta_p_contour(a.param(), a.complex_arg())); }},
        {"zeta_p_series", [=](const EvalArgs& a) { return zeval(zeta_p_series_em(a.param(), a.complex_arg())); }},
        {"zeta_p_mellin", [=](const EvalArgs& a) { return zeval(zeta_p_mellin(a.param(), a.complex_arg())); }},
        {"eta_p_mellin", [=](const EvalArgs& a) { return zeval(eta_p_mellin(a.param(), a.complex_arg())); }},
        {"omega_p", [](const EvalArgs& a) { return EvalResult{omega_p(a.param(), a.complex_arg()), ""}; }},
        {"xi_p", [](const EvalArgs& a) { return EvalResult{xi_p(a.param(), a.complex_arg()), ""}; }},
        {"Xi_p", [](const EvalArgs& a) { return EvalResult{Xi_p(a.param(), a.real_arg()), ""}; }},
        {"classical_zeta", [](const EvalArgs& a) { return EvalResult{classical_zeta(a.complex_arg()), ""}; }},
        {"classical_xi", [](const EvalArgs& a) { return EvalResult{classical_xi(a.complex_arg()), ""}; }},
        {"classical_Xi", [](const EvalArgs& a) { return EvalResult{classical_Xi(a.real_arg()), ""}; }},
        {"sigma_p",
         [](const EvalArgs& a) {
             const cplx z = a.complex_arg();
             if (z.imag() == 0.0) return EvalResult{sigma_p(a.param(), z.real()), ""};
             return EvalResult{sigma_p(a.param(), z), ""};
         }},
        {"inv_sigma_exp",
         [](const EvalArgs& a) {
             const cplx z = a.complex_arg();
             if (z.imag() == 0.0) return EvalResult{inv_sigma_exp(a.param(), z.real()), ""};
             return EvalResult{inv_sigma_exp(a.param(), z), ""};
         }},
        {"lambda", [](const EvalArgs& a) { return EvalResult{solve_eigenvalue(a.param(), a.integer(a.k, "k")), ""}; }},
        {"weight",
         [](const EvalArgs& a) {
             const KoshParam p = a.param();
             return EvalResult{weight(p, solve_eigenvalue(p, a.integer(a.k, "k"))), ""};
         }},
        {"C1", [](const EvalArgs& a) { return EvalResult{euler_const_1(a.param()), ""}; }},
        {"C2", [](const EvalArgs& a) { return EvalResult{euler_const_2(a.param()), ""}; }},
        {"gen_bernoulli", [](const EvalArgs& a) { return EvalResult{gen_bernoulli(a.param(), int(a.integer(a.k, "k"))), ""}; }},
        {"phi_1p", [](const EvalArgs& a) { return EvalResult{phi_1p(a.param(), a.real_arg()), ""}; }},
        {"phi_2p", [](const EvalArgs& a) { return EvalResult{phi_2p(a.param(), a.real_arg()), ""}; }},
        {"psi_1p", [](const EvalArgs& a) { return EvalResult{psi_1p(a.param(), a.real_arg()), ""}; }},
        {"psi_2p", [](const EvalArgs& a) { return EvalResult{psi_2p(a.param(), a.real_arg()), ""}; }},
        {"capital_phi", [](const EvalArgs& a) { return EvalResult{capital_phi(a.param(), a.real_arg()), ""}; }},
        {"tau", [](const EvalArgs& a) { return EvalResult{tau(a.real_arg()), ""}; }},
        {"omega_fn", [](const EvalArgs& a) { return EvalResult{omega_fn(a.real_arg()), ""}; }},
        {"classical_phi", [](const EvalArgs& a) { return EvalResult{classical_phi(a.real_arg()), ""}; }},
        {"digamma", [](const EvalArgs& a) { return EvalResult{digamma(a.real_arg()), ""}; }},
        {"incomplete_gamma_Q",
         [](const EvalArgs& a) { return EvalResult{incomplete_gamma_Q(a.real(a.x, "x"), parse_complex(a.s.value_or("0"))), ""}; }},
        {"kernel_snu",
         [](const EvalArgs& a) {
             return EvalResult{kernel_snu(parse_complex(a.s.value_or("")), a.real(a.x, "x"), a.integer(a.k, "k")), ""};
         }},
        {"lambert_sum",
         [](const EvalArgs& a) {
             return EvalResult{lambert_sum(a.param(), int(a.integer(a.m, "m")), a.real(a.alpha, "alpha")).value, ""};
         }},
        {"lambert_sum_positive",
         [](const EvalArgs& a) {
             return EvalResult{lambert_sum_positive(a.param(), int(a.integer(a.m, "m")), a.real(a.alpha, "alpha")).value, ""};
         }},
        {"phi_sum", [](const EvalArgs& a) { return EvalResult{phi_sum(a.param(), a.real(a.alpha, "alpha")), ""}; }},
        {"tau_sum", [](const EvalArgs& a) { return EvalResult{tau_sum(a.real(a.alpha, "alpha")), ""}; }},
        {"omega_sum", [](const EvalArgs& a) { return EvalResult{omega_sum(a.real(a.alpha, "alpha")), ""}; }},
        {"F_p_real", [](const EvalArgs& a) { return EvalResult{F_p_real(a.param(), a.real(a.n, "n")).real(), ""}; }},
        {"F_p_spectral", [](const EvalArgs& a) { return EvalResult{F_p_spectral(a.param(), a.real(a.n, "n")).real(), ""}; }},
        {"G_alpha", [](const EvalArgs& a) { return EvalResult{G_alpha(a.real(a.alpha, "alpha")), ""}; }},
    };
    return fns;
}

// ---------------------------------------------------------------- driver

struct Output {
    std::ostream& out;
    std::ostream& err;
    std::string path;

    void write(const std::string& text)
    {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw domain_error("cannot open output file " + path);
        f << text;
    }
};

/// Linear sweep "name=start:stop:count" or list "name=v1,v2,...".
inline std::pair<std::string, std::vector<std::string>> parse_sweep(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw domain_error("sweep must look like name=start:stop:count or name=v1,v2");
    const std::string name = spec.substr(0, eq), body = spec.substr(eq + 1);
    std::vector<std::string> values;
    if (body.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(body);
        for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
        if (parts.size() != 3) throw domain_error("sweep range must be start:stop:count");
        const double a = detail::parse_real(parts[0]), b = detail::parse_real(parts[1]);
        const long n = detail::parse_int(parts[2]);
        if (n < 1) throw domain_error("sweep count must be >= 1");
        for (long i = 0; i < n; ++i) values.push_back(num(n == 1 ? a : a + (b - a) * double(i) / double(n - 1)));
    } else {
        std::stringstream ss(body);
        for (std::string t; std::getline(ss, t, ',');)
            if (!t.empty()) values.push_back(t);
    }
    if (values.empty()) throw domain_error("empty sweep");
    return {name, values};
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Koshliakov zeta functions: evaluation and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string profile_name = default_profile(), format, output_path;
    app.add_option("--profile", profile_name, std::string("fast, desk or deep (default from ") + profile_env + ")");
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("-o,--output", output_path, "write to a file instead of stdout");

    EvalArgs ea;
    auto add_params = [&](CLI::App* sub) {
        for (auto [name, slot] : std::vector<std::pair<const char*, std::optional<std::string>*>>{
                 {"--p", &ea.p}, {"--s", &ea.s}, {"--x", &ea.x}, {"--k", &ea.k}, {"--m", &ea.m}, {"--alpha", &ea.alpha}, {"--n", &ea.n}})
            sub->add_option_function<std::string>(name, [slot](const std::string& v) { *slot = v; });
    };

    long count = 10;
    auto* roots = app.add_subcommand("roots", "eigenvalues lambda_j, weights and residuals");
    roots->add_option("--p", ea.p, "p as a decimal, zero or inf")->required();
    roots->add_option("--count", count, "number of roots")->check(CLI::Range(1L, 10000000L));

    std::string fn_id;
    auto* eval = app.add_subcommand("eval", "evaluate one function");
    eval->add_option("function", fn_id, "function id")->required();
    add_params(eval);

    std::string ident;
    std::optional<std::string> a_opt;
    double tol = 0.0;
    bool spectral = false;
    auto add_verify_params = [&](CLI::App* sub) {
        add_params(sub);
        sub->add_option_function<std::string>("--a", [&](const std::string& v) { a_opt = v; });
        sub->add_option("--tol", tol, "override the identity's tolerance");
        sub->add_flag("--spectral", spectral, "page220: add the spectral side");
    };
    auto* verify = app.add_subcommand("verify", "run one identity");
    verify->add_option("identity", ident, "identity id")->required();
    add_verify_params(verify);

    unsigned threads = 0;
    auto* suite = app.add_subcommand("suite", "run every registered identity");
    suite->add_option("--threads", threads, "worker threads (0: hardware)");

    std::string sweep;
    auto* table = app.add_subcommand("table", "sweep one parameter of an identity");
    table->add_option("identity", ident, "identity id")->required();
    table->add_option("--sweep", sweep, "name=start:stop:count or name=v1,v2,...")->required();
    add_verify_params(table);

    auto* list = app.add_subcommand("list", "list identity ids and function ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Output o{out, err, output_path};
    try {
        const Profile prof = profile_by_name(profile_name);
        auto params_map = [&] {
            ParamMap m;
            if (ea.p) m["p"] = *ea.p;
            if (ea.s) m["s"] = *ea.s;
            if (ea.k) m["k"] = *ea.k;
            if (ea.m) m["m"] = *ea.m;
            if (ea.alpha) m["alpha"] = *ea.alpha;
            if (ea.n) m["n"] = *ea.n;
            if (a_opt) m["a"] = *a_opt;
            if (spectral) m["spectral"] = "1";
            return m;
        };

        if (*list) {
            std::ostringstream os;
            os << "identities:\n";
            for (const auto& e : registry()) {
                os << "  " << e.id << " (";
                for (std::size_t i = 0; i < e.param_names.size(); ++i) os << (i ? ", " : "") << e.param_names[i];
                os << ")\n";
            }
            os << "functions:\n";
            for (const auto& [name, f] : eval_functions()) os << "  " << name << '\n';
            o.write(os.str());
            return exit_ok;
        }

        if (*roots) {
            const KoshParam p = parse_param(*ea.p);
            const auto tab = build_table(p, std::size_t(count));
            std::ostringstream os;
            const std::string fmt = format.empty() ? "json" : format;
            if (fmt == "json") {
                json j;
                j["p"] = p.to_string();
                json arr = json::array();
                for (std::size_t i = 0; i < tab.size(); ++i)
                    arr.push_back({{"j", i + 1}, {"lambda", tab.lambdas[i]}, {"weight", tab.weights[i]}, {"residual", tab.residuals[i]}});
                j["roots"] = arr;
                os << j.dump(2) << '\n';
            } else {
                if (fmt == "csv") os << "j,lambda,weight,residual\n";
                for (std::size_t i = 0; i < tab.size(); ++i) {
                    const char* sep = fmt == "csv" ? "," : "  ";
                    os << i + 1 << sep << num(tab.lambdas[i]) << sep << num(tab.weights[i]) << sep << num(tab.residuals[i]) << '\n';
                }
            }
            o.write(os.str());
            return exit_ok;
        }

        if (*eval) {
            const auto& fns = eval_functions();
            const auto it = fns.find(fn_id);
            if (it == fns.end()) throw domain_error("unknown function id '" + fn_id + "'");
            const EvalResult r = it->second(ea);
            std::ostringstream os;
            const std::string fmt = format.empty() ? "json" : format;
            if (fmt == "json") {
                json j;
                j["function"] = fn_id;
                json params = json::object();
                for (const auto& [k, v] : params_map()) params[k] = v;
                if (ea.x) params["x"] = *ea.x;
                j["params"] = params;
                j["re"] = r.value.real();
                j["im"] = r.value.imag();
                if (!r.method.empty()) j["method"] = r.method;
                os << j.dump(2) << '\n';
            } else if (fmt == "csv") {
                os << "function,re,im\n" << fn_id << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << '\n';
            } else {
                os << num(r.value) << '\n';
            }
            o.write(os.str());
            return exit_ok;
        }

        if (*verify) {
            const VerifyReport r = run_identity(ident, params_map(), prof, tol);
            const std::string fmt = format.empty() ? "json" : format;
            if (fmt == "json")
                o.write(report_json(r).dump(2) + "\n");
            else if (fmt == "csv")
                o.write(reports_csv({r}));
            else
                o.write(report_text(r));
            return reports_exit_code({r});
        }

        if (*suite) {
            const auto rs = run_suite(prof, threads);
            long passed = 0;
            for (const auto& r : rs) passed += r.pass ? 1 : 0;
            const std::string summary = "suite (" + prof.name + "): " + std::to_string(passed) + " passed, "
                                        + std::to_string(long(rs.size()) - passed) + " failed";
            const std::string fmt = format.empty() ? "text" : format;
            if (fmt == "json") {
                json j;
                j["profile"] = prof.name;
                json arr = json::array();
                for (const auto& r : rs) arr.push_back(report_json(r));
                j["reports"] = arr;
                j["summary"] = {{"passed", passed}, {"failed", long(rs.size()) - passed}};
                o.write(j.dump(2) + "\n");
                err << summary << '\n';
            } else if (fmt == "csv") {
                o.write(reports_csv(rs));
                err << summary << '\n';
            } else {
                std::string text;
                for (const auto& r : rs) text += report_text(r);
                o.write(text + summary + "\n");
            }
            return reports_exit_code(rs);
        }

        if (*table) {
            const auto [name, values] = parse_sweep(sweep);
            std::vector<SuiteJob> jobs;
            for (const auto& v : values) {
                ParamMap m = params_map();
                m[name] = v;
                jobs.push_back({ident, m});
            }
            if (!find_entry(ident)) throw domain_error("unknown identity id '" + ident + "'");
            const auto rs = run_jobs(jobs, prof, 1);
            const std::string fmt = format.empty() ? "csv" : format;
            if (fmt == "json") {
                json arr = json::array();
                for (const auto& r : rs) arr.push_back(report_json(r));
                o.write(arr.dump(2) + "\n");
            } else if (fmt == "csv") {
                o.write(reports_csv(rs));
            } else {
                std::string text;
                for (const auto& r : rs) text += report_text(r);
                o.write(text);
            }
            return reports_exit_code(rs);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const convergence_error& e) {
        err << "non-convergence: " << e.what() << '\n';
        return exit_nonconvergence;
    }
    return exit_usage;
}

} // namespace kosh::cli
