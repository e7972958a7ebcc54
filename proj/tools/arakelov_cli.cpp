// Command-line surface: curve bound reports, user-fiber analysis, and the
// Green-identity self-test. Exit codes: 0 success, 2 bad input, 3 internal
// invariant violation.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arakelov/bounds.hpp"
#include "arakelov/curve_catalog.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/fiber_io.hpp"
#include "arakelov/fibral.hpp"
#include "arakelov/green.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace arakelov;

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitInternal = 3;

std::map<std::string, double> parse_bindings(
    const std::vector<std::string>& raw) {
    std::map<std::string, double> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("--bind expects name=value, got \"" + item +
                             "\"");
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("cannot parse binding value in \"" + item +
                             "\"");
        }
    }
    return out;
}

Json expression_terms(const BoundExpression& e) {
    Json terms = Json::array();
    for (const auto& [atom, coeff] : e.terms()) {
        Json t;
        t["coeff"] = coeff.str();
        t["syms"] = atom.syms;
        t["log"] = atom.n == 0 ? Json(nullptr) : Json(atom.n);
        terms.push_back(std::move(t));
    }
    return terms;
}

Json expression_json(const BoundExpression& e) {
    Json j;
    j["terms"] = expression_terms(e);
    j["display"] = e.str();
    return j;
}

Json logsum_json(const FormalLogSum& s) {
    Json atoms = Json::object();
    for (const auto& [atom, coeff] : s.terms())
        atoms[std::to_string(atom)] = coeff.str();
    Json j;
    j["atoms"] = std::move(atoms);
    j["display"] = s.str();
    return j;
}

Json rational_vec_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

std::string vec_display(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

// ------------------------------------------------------------------ x0n --

Json x0n_json(const X0NReport& rep,
              const std::optional<long long>& prime_filter,
              const std::map<std::string, double>& bindings) {
    Json j;
    j["curve"] = "X0(" + std::to_string(rep.n) + ")";
    j["N"] = rep.n;
    j["genus"] = rep.genus;
    j["index"] = rep.index;
    j["primes"] = rep.primes;
    j["cusps"] = Json::array();
    for (const auto& c : rep.cusps) {
        Json jc;
        jc["divisor"] = c.divisor;
        jc["width"] = c.width;
        j["cusps"].push_back(std::move(jc));
    }
    j["fibers"] = Json::array();
    for (const auto& pr : rep.per_prime) {
        if (prime_filter && *prime_filter != pr.p) continue;
        Json f;
        f["p"] = pr.p;
        f["q_product"] = pr.q_product;
        f["flag_u"] = pr.flag_u;
        f["flag_v"] = pr.flag_v;
        f["f_lines"] = pr.f_lines;
        f["chain_pairs"] = pr.chain_pairs;
        f["c0_cinf_crossing"] = pr.c0_cinf_crossing;
        f["component_genus"] = pr.component_genus;
        f["stats"] = {{"r", pr.stats.r},
                      {"u", pr.stats.u},
                      {"l", pr.stats.l},
                      {"c", pr.stats.c}};
        f["b_p"] = pr.bp.str();
        f["cusps"] = Json::array();
        for (const auto& sol : pr.cusps) {
            Json s;
            s["cusp"] = sol.cusp;
            s["width"] = sol.width;
            s["hits"] = sol.component_hit;
            s["G"] = rational_vec_json(sol.g_coefficients);
            s["G2"] = sol.g_self_intersection.str();
            s["F"] = rational_vec_json(sol.f_coefficients);
            s["F2"] = sol.f_self_intersection.str();
            f["cusps"].push_back(std::move(s));
        }
        f["sum_bj_G2"] = pr.sum_bj_g2.str();
        f["sum_bj_G2_closed_form"] = pr.sum_bj_g2_closed.str();
        f["sum_bj_F2"] = pr.sum_bj_f2.str();
        f["sum_bj_F2_closed_form"] = pr.sum_bj_f2_closed.str();
        f["a_p"] = pr.a_p.str();
        f["a_p_closed_form"] = pr.a_p_closed.str();
        f["ap_upper_bound"] = pr.ap_bound.str();
        f["checks"] = {{"lemma_G", pr.lemma_g_ok},
                       {"lemma_F", pr.lemma_f_ok},
                       {"a_p_closed_form", pr.a_p_ok},
                       {"a_p_within_bound", pr.ap_within_bound}};
        j["fibers"].push_back(std::move(f));
    }
    j["geometric"] = logsum_json(rep.geometric.value);
    j["geometric_closed_form"] = logsum_json(rep.geometric_closed);
    j["analytic"] = expression_json(rep.analytic);
    j["analytic_simplified"] = expression_json(rep.analytic_simplified);
    j["total"] = expression_json(rep.total);
    j["leading_term"] = expression_json(rep.leading_term);
    j["leading_coefficient"] = expression_json(rep.leading_coefficient);
    j["all_checks_pass"] = rep.all_checks_pass();
    if (!bindings.empty()) {
        Json num;
        num["bindings"] = bindings;
        num["geometric"] = rep.geometric.value.eval();
        num["analytic"] = rep.analytic.eval(bindings);
        num["total"] = rep.total.eval(bindings);
        num["leading_term"] = rep.leading_term.eval(bindings);
        j["numeric"] = std::move(num);
    }
    return j;
}

void x0n_table(std::ostream& os, const X0NReport& rep,
               const std::optional<long long>& prime_filter,
               const std::map<std::string, double>& bindings) {
    os << "X0(" << rep.n << "): genus " << rep.genus << ", index "
       << rep.index << "\n";
    os << "cusps:";
    for (const auto& c : rep.cusps)
        os << "  e" << c.divisor << " (width " << c.width << ")";
    os << "\n";
    for (const auto& pr : rep.per_prime) {
        if (prime_filter && *prime_filter != pr.p) continue;
        os << "fiber p=" << pr.p << ": C0.Cinf=" << pr.c0_cinf_crossing
           << ", F-lines " << pr.f_lines << ", GH-pairs " << pr.chain_pairs
           << ", component genus " << pr.component_genus << "\n";
        os << "  stats (r,u,l,c) = (" << pr.stats.r << "," << pr.stats.u
           << "," << pr.stats.l << "," << pr.stats.c
           << "), b_p = " << pr.bp << "\n";
        for (const auto& sol : pr.cusps) {
            os << "  cusp " << sol.cusp << " (width " << sol.width
               << ", hits " << sol.component_hit << ")\n";
            os << "    G = " << vec_display(sol.g_coefficients)
               << ", G^2 = " << sol.g_self_intersection << "\n";
            os << "    F = " << vec_display(sol.f_coefficients)
               << ", F^2 = " << sol.f_self_intersection << "\n";
        }
        os << "  sum b_j G^2 = " << pr.sum_bj_g2 << " (closed form "
           << pr.sum_bj_g2_closed << ") "
           << (pr.lemma_g_ok ? "[pass]" : "[FAIL]") << "\n";
        os << "  sum b_j F^2 = " << pr.sum_bj_f2 << " (closed form "
           << pr.sum_bj_f2_closed << ") "
           << (pr.lemma_f_ok ? "[pass]" : "[FAIL]") << "\n";
        os << "  a_p = " << pr.a_p << " (closed form " << pr.a_p_closed
           << ") " << (pr.a_p_ok ? "[pass]" : "[FAIL]")
           << ", 2g b_p = " << pr.ap_bound << " "
           << (pr.ap_within_bound ? "[pass]" : "[FAIL]") << "\n";
    }
    os << "geometric:   " << rep.geometric.value.str() << "\n";
    os << "analytic:    " << rep.analytic.str() << "\n";
    os << "simplified:  " << rep.analytic_simplified.str() << "\n";
    os << "total:       " << rep.total.str() << "\n";
    os << "leading:     " << rep.leading_term.str() << "\n";
    if (!bindings.empty()) {
        os << "numeric (bound symbols):\n";
        os << "  geometric    = " << rep.geometric.value.eval() << "\n";
        os << "  analytic     = " << rep.analytic.eval(bindings) << "\n";
        os << "  total        = " << rep.total.eval(bindings) << "\n";
        os << "  leading term = " << rep.leading_term.eval(bindings) << "\n";
    }
    os << "checks: "
       << (rep.all_checks_pass() ? "all exact identity checks passed"
                                 : "IDENTITY CHECK FAILED")
       << "\n";
}

int cmd_x0n(long long n, bool sweep, std::optional<long long> prime_filter,
            const std::string& format,
            const std::vector<std::string>& raw_bindings,
            std::optional<long long> emit_fiber, const std::string& out_path) {
    const auto bindings = parse_bindings(raw_bindings);

    if (sweep) {
        long long cap = 200;
        if (const char* env = std::getenv("ARAKELOV_MAX_N"))
            cap = std::min(cap, static_cast<long long>(std::atoll(env)));
        bool all_ok = true;
        Json arr = Json::array();
        for (long long level : x0n_levels_up_to(cap)) {
            const X0NReport rep = x0n_report(level);
            all_ok = all_ok && rep.all_checks_pass();
            if (format == "json") {
                Json row;
                row["N"] = level;
                row["genus"] = rep.genus;
                row["all_checks_pass"] = rep.all_checks_pass();
                arr.push_back(std::move(row));
            } else {
                std::cout << "N=" << level << " genus=" << rep.genus
                          << " checks="
                          << (rep.all_checks_pass() ? "pass" : "FAIL")
                          << "\n";
            }
        }
        if (format == "json") std::cout << arr.dump(2) << "\n";
        return all_ok ? kExitOk : kExitInternal;
    }

    if (emit_fiber) {
        const SpecialFiber fiber = x0n_fiber(n, *emit_fiber);
        if (out_path.empty())
            std::cout << fiber_to_json_text(fiber);
        else
            save_fiber(fiber, out_path);
        return kExitOk;
    }

    const X0NReport rep = x0n_report(n);
    if (format == "json")
        std::cout << x0n_json(rep, prime_filter, bindings).dump(2) << "\n";
    else
        x0n_table(std::cout, rep, prime_filter, bindings);
    return rep.all_checks_pass() ? kExitOk : kExitInternal;
}

// -------------------------------------------------------- fiber-analyze --

int cmd_fiber_analyze(const std::string& input_path,
                      std::optional<long long> genus,
                      std::optional<long long> degree,
                      bool sections_required, const std::string& format) {
    const SpecialFiber fiber = load_fiber(input_path);

    const auto violations = validate_fiber(fiber);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "error: " << v.message << "\n";
        return kExitUser;
    }
    if (sections_required && fiber.sections().empty()) {
        std::cerr << "error: fiber file carries no section data\n";
        return kExitUser;
    }

    Json j;
    j["input"] = input_path;
    j["prime_norm"] = fiber.prime_norm();
    j["components"] = Json::array();
    for (const auto& c : fiber.components()) {
        Json jc;
        jc["name"] = c.name;
        jc["multiplicity"] = c.multiplicity;
        jc["genus"] = c.genus;
        jc["local_degree"] =
            c.local_degree ? Json(c.local_degree->str()) : Json(nullptr);
        jc["self_intersection"] =
            self_intersections(fiber)[fiber.component_index(c.name)].str();
        j["components"].push_back(std::move(jc));
    }

    std::optional<DualStats> stats;
    if (fiber.size() >= 2) {
        stats = dual_graph_stats(fiber);
        j["stats"] = {{"r", stats->r},
                      {"u", stats->u},
                      {"l", stats->l},
                      {"c", stats->c}};
        j["b_p"] = compute_bp(*stats).str();
    } else {
        j["stats"] = {{"r", 1}};
        j["b_p"] = nullptr;
    }

    if (!fiber.sections().empty()) {
        if (!genus)
            throw InputError(
                "fiber has sections; pass --genus to solve the correction "
                "divisors");
        bool degrees_present = true;
        for (const auto& c : fiber.components())
            if (!c.local_degree) degrees_present = false;
        if (!degrees_present)
            throw InputError(
                "fiber sections need local degrees on every component");
        Rational derived;
        for (const auto& c : fiber.components())
            derived += Rational(c.multiplicity) * (*c.local_degree);
        if (!derived.is_integer() || derived <= Rational(0))
            throw InputError("local degrees sum to the non-degree " +
                             derived.str());
        const long long d = degree.value_or(derived.to_integer());
        if (Rational(d) != derived)
            throw InputError("--degree " + std::to_string(d) +
                             " contradicts the local-degree sum " +
                             derived.str());

        const GeometricContribution geo =
            geometric_contribution({fiber}, *genus, d);
        j["degree"] = d;
        j["genus"] = *genus;
        j["sections"] = Json::array();
        for (const auto& s : fiber.sections()) {
            Json js;
            js["name"] = s.name;
            js["width"] = s.width;
            const VerticalDivisor gd = solve_G(fiber, s, d);
            const VerticalDivisor fd = solve_F(fiber, s, *genus);
            js["G"] = rational_vec_json(gd.coefficients);
            js["G2"] = geo.per_cusp_G2.at({fiber.prime_norm(), s.name}).str();
            js["F"] = rational_vec_json(fd.coefficients);
            js["F2"] = geo.per_cusp_F2.at({fiber.prime_norm(), s.name}).str();
            j["sections"].push_back(std::move(js));
        }
        const Rational a_p = geo.per_prime.count(fiber.prime_norm())
                                 ? geo.per_prime.at(fiber.prime_norm())
                                 : Rational(0);
        j["a_p"] = a_p.str();
        if (stats) {
            const Rational bound =
                ap_upper_bound(*genus, compute_bp(*stats), false);
            j["ap_upper_bound"] = bound.str();
            j["a_p_within_bound"] = a_p <= bound;
        }
    }

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fiber above " << fiber.prime_norm() << " with "
                  << fiber.size() << " components\n";
        for (const auto& c : j["components"])
            std::cout << "  " << c["name"].get<std::string>()
                      << ": m=" << c["multiplicity"]
                      << " genus=" << c["genus"]
                      << " C^2=" << c["self_intersection"].get<std::string>()
                      << "\n";
        if (stats)
            std::cout << "stats (r,u,l,c) = (" << stats->r << "," << stats->u
                      << "," << stats->l << "," << stats->c
                      << "), b_p = " << j["b_p"].get<std::string>() << "\n";
        else
            std::cout << "single component; u, l, c undefined (r=1)\n";
        if (j.contains("sections")) {
            for (const auto& s : j["sections"])
                std::cout << "  section " << s["name"].get<std::string>()
                          << " (width " << s["width"]
                          << "): G2=" << s["G2"].get<std::string>()
                          << " F2=" << s["F2"].get<std::string>() << "\n";
            std::cout << "a_p = " << j["a_p"].get<std::string>();
            if (j.contains("ap_upper_bound"))
                std::cout << " (bound 2g b_p = "
                          << j["ap_upper_bound"].get<std::string>() << ", "
                          << (j["a_p_within_bound"].get<bool>() ? "pass"
                                                                : "FAIL")
                          << ")";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// --------------------------------------------------------------- fermat --

int cmd_fermat(long long p, const std::string& format) {
    const FermatReport rep = fermat_report(p);
    const std::string flag =
        rep.envelope_exceeded ? "ENVELOPE_EXCEEDED" : "OK";
    if (format == "json") {
        Json j;
        j["curve"] = "Fermat(" + std::to_string(p) + ")";
        j["p"] = p;
        j["genus"] = rep.genus;
        j["r_max"] = rep.params.r_max;
        j["u"] = rep.params.u;
        j["l"] = rep.params.l;
        j["c"] = rep.params.c;
        j["b_p_raw"] = rep.bp_raw.str();
        j["envelope_p7_over_2"] = rep.envelope.str();
        j["envelope_flag"] = flag;
        j["ap_envelope_galois"] = rep.ap_envelope.str();
        j["total"] = expression_json(rep.total);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Fermat curve, exponent " << p << ": genus "
                  << rep.genus << "\n";
        std::cout << "worst-case stats (r,u,l,c) = (" << rep.params.r_max
                  << "," << rep.params.u << "," << rep.params.l << ","
                  << rep.params.c << ")\n";
        std::cout << "b_p raw = " << rep.bp_raw << ", envelope p^7/2 = "
                  << rep.envelope << " (" << rep.envelope.to_double()
                  << "), flag " << flag << "\n";
        std::cout << "a_p envelope (Galois) = 2 b_p = " << rep.ap_envelope
                  << "\n";
        std::cout << "total: " << rep.total.str() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- xn --

int cmd_xn(long long n, const std::string& format) {
    const XNReport rep = xn_report(n);
    if (format == "json") {
        Json j;
        j["curve"] = "X(" + std::to_string(n) + ")";
        j["N"] = n;
        j["genus"] = rep.genus;
        j["field_degree"] = rep.field_degree;
        j["primes"] = Json::array();
        for (const auto& pr : rep.params) {
            Json jp;
            jp["p"] = pr.p;
            jp["k"] = pr.k;
            jp["m"] = pr.m;
            jp["r_p"] = pr.r;
            jp["s_p"] = pr.s.str();
            jp["m_p"] = pr.max_mult;
            jp["residue_degree"] = pr.residue_degree;
            jp["primes_above"] = pr.primes_above;
            jp["b_p_envelope"] = pr.bp_envelope.str();
            j["primes"].push_back(std::move(jp));
        }
        j["total"] = expression_json(rep.total);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "X(" << n << "): genus " << rep.genus
                  << ", [Q(zeta_N):Q] = " << rep.field_degree << "\n";
        for (const auto& pr : rep.params)
            std::cout << "  p=" << pr.p << ": r=" << pr.r << " s=" << pr.s
                      << " m_p=" << pr.max_mult << " (Nm P = " << pr.p << "^"
                      << pr.residue_degree << " at " << pr.primes_above
                      << " primes), b envelope = " << pr.bp_envelope << "\n";
        std::cout << "total: " << rep.total.str() << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------- green-selftest --

int cmd_green_selftest(long long n, long long seed, long long trials,
                       const std::string& format) {
    if (n < 2) throw InputError("--n must be at least 2");
    if (trials < 1) throw InputError("--trials must be positive");
    const GreenSelftest st = run_green_selftest(
        static_cast<std::size_t>(n), static_cast<std::uint64_t>(seed),
        static_cast<std::size_t>(trials));
    if (format == "json") {
        Json j;
        j["n"] = n;
        j["seed"] = seed;
        j["trials"] = trials;
        j["all_pass"] = st.all_pass;
        j["failures"] = Json::array();
        for (std::size_t t = 0; t < st.trials.size(); ++t)
            if (!(st.trials[t].identities_ok && st.trials[t].sandwich_ok)) {
                Json f;
                f["trial"] = t;
                f["failure"] = st.trials[t].first_failure;
                j["failures"].push_back(std::move(f));
            }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "green self-test: n<=" << n << ", seed " << seed << ", "
                  << trials << " trials\n";
        for (std::size_t t = 0; t < st.trials.size(); ++t) {
            const auto& tr = st.trials[t];
            if (tr.identities_ok && tr.sandwich_ok) continue;
            std::cout << "  trial " << t << " (size " << tr.size
                      << ") FAILED: " << tr.first_failure
                      << " (reproduce with --seed " << seed << ")\n";
        }
        std::cout << (st.all_pass ? "all identities exact, all sandwiches "
                                    "hold"
                                  : "FAILURES above")
                  << "\n";
    }
    return st.all_pass ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fibral intersection data and symbolic bounds for "
                 "the arithmetic self-intersection of the dualizing sheaf"};
    app.require_subcommand(1);

    std::string format = "table";
    std::vector<std::string> bindings;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
    };

    // x0n
    auto* x0n = app.add_subcommand("x0n", "X0(N) bound report");
    long long x0n_n = 0;
    bool x0n_do_sweep = false;
    long long x0n_prime = 0;
    long long x0n_emit = 0;
    std::string x0n_out;
    x0n->add_option("--N", x0n_n, "square-free level, coprime to 6");
    x0n->add_flag("--sweep", x0n_do_sweep,
                  "run identity checks for every valid N (capped by "
                  "ARAKELOV_MAX_N, default 200)");
    x0n->add_option("--prime,--p", x0n_prime, "restrict tables to one prime");
    x0n->add_option("--emit-fiber", x0n_emit,
                    "write the fiber above this prime as JSON and exit");
    x0n->add_option("--out", x0n_out, "output path for --emit-fiber");
    x0n->add_option("--bind", bindings, "name=value for numeric evaluation");
    add_format(x0n);

    // fiber-analyze
    auto* fib = app.add_subcommand("fiber-analyze",
                                   "analyze a fiber description file");
    std::string input_path;
    long long fib_genus = 0;
    long long fib_degree = 0;
    bool sections_required = false;
    fib->add_option("--input", input_path, "fiber JSON file")->required();
    fib->add_option("--genus", fib_genus, "genus of the total space curve");
    fib->add_option("--degree", fib_degree, "covering degree d");
    fib->add_flag("--sections-required", sections_required,
                  "fail when the file carries no sections");
    add_format(fib);

    // fermat
    auto* fermat = app.add_subcommand("fermat", "Fermat curve parameters");
    long long fermat_p = 0;
    fermat->add_option("--p", fermat_p, "prime exponent >= 5")->required();
    add_format(fermat);

    // xn
    auto* xn = app.add_subcommand("xn", "X(N) parameters");
    long long xn_n = 0;
    xn->add_option("--N", xn_n, "level coprime to 6 with >= 2 prime factors")
        ->required();
    add_format(xn);

    // green-selftest
    auto* green = app.add_subcommand("green-selftest",
                                     "exact Green-identity self-test");
    long long green_n = 8;
    long long green_seed = 1;
    long long green_trials = 100;
    green->add_option("--n", green_n, "maximal surface size");
    green->add_option("--seed", green_seed, "RNG seed");
    green->add_option("--trials", green_trials, "number of instances");
    add_format(green);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        if (x0n->parsed()) {
            if (!x0n_do_sweep && x0n_n == 0)
                throw InputError("x0n needs --N or --sweep");
            return cmd_x0n(x0n_n, x0n_do_sweep,
                           x0n_prime ? std::optional(x0n_prime)
                                     : std::nullopt,
                           format, bindings,
                           x0n_emit ? std::optional(x0n_emit) : std::nullopt,
                           x0n_out);
        }
        if (fib->parsed())
            return cmd_fiber_analyze(
                input_path, fib_genus ? std::optional(fib_genus) : std::nullopt,
                fib_degree ? std::optional(fib_degree) : std::nullopt,
                sections_required, format);
        if (fermat->parsed()) return cmd_fermat(fermat_p, format);
        if (xn->parsed()) return cmd_xn(xn_n, format);
        if (green->parsed())
            return cmd_green_selftest(green_n, green_seed, green_trials,
                                      format);
    } catch (const InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    }
    return kExitUser;
}
