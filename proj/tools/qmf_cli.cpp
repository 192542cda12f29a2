// qmf: expand catalog forms, build and verify F_k, run the identity suites,
// solve by Frobenius, and decompose forms over the graded rings.
//
// Exit codes: 0 success, 1 mathematical check failure, 2 usage/domain error.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/decompose.hpp"
#include "qmf/ode.hpp"
#include "qmf/polynomial.hpp"

using json = nlohmann::ordered_json;
using namespace qmf;

namespace {

constexpr int kSchemaVersion = 1;

long default_terms() {
    if (const char* env = std::getenv("QMF_DEFAULT_TERMS")) {
        long v = std::atol(env);
        if (v >= 8)
            return v;
    }
    return 150;
}

struct CheckRecord {
    std::string name;
    std::optional<long> k;
    long certified_prec = 0;
    bool pass = false;
    std::optional<long> first_failing_exponent;
    double wall_ms = 0;
};

json record_json(const CheckRecord& r) {
    json j;
    j["check"] = r.name;
    j["k"] = r.k ? json(*r.k) : json(nullptr);
    j["certified_prec"] = r.certified_prec;
    j["pass"] = r.pass;
    j["first_failing_exponent"] =
        r.first_failing_exponent ? json(*r.first_failing_exponent) : json(nullptr);
    j["wall_ms"] = static_cast<long>(r.wall_ms);
    return j;
}

int emit_report(const std::vector<CheckRecord>& records, const std::string& format) {
    bool all_pass = true;
    if (format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        json checks = json::array();
        for (const auto& r : records) {
            checks.push_back(record_json(r));
            all_pass = all_pass && r.pass;
        }
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : records) {
            all_pass = all_pass && r.pass;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (r.k)
                std::cout << " (k=" << *r.k << ")";
            std::cout << " certified below q^" << r.certified_prec;
            if (r.first_failing_exponent)
                std::cout << ", first failure at q^" << *r.first_failing_exponent;
            std::cout << " [" << static_cast<long>(r.wall_ms) << " ms]\n";
        }
    }
    return all_pass ? 0 : 1;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

CheckRecord timed_zero_check(const std::string& name, std::optional<long> k, const QSeries& s,
                             long upto, double wall_ms = 0) {
    CheckRecord r;
    r.name = name;
    r.k = k;
    r.certified_prec = std::min(upto, s.prec());
    auto first = s.truncated(r.certified_prec).effective_order();
    r.pass = !first.has_value();
    r.first_failing_exponent = first;
    r.wall_ms = wall_ms;
    return r;
}

int print_series(const QSeries& s, const std::string& label, long terms,
                 const std::string& format) {
    long hi = std::min(terms, s.prec());
    long lo = std::min(s.ord(), hi);
    if (format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["series"] = label;
        out["ord"] = s.ord();
        out["certified_below"] = hi;
        json coeffs = json::array();
        for (long e = lo; e < hi; ++e) {
            json c;
            c["exponent"] = e;
            c["value"] = s.coeff(e).to_string();
            coeffs.push_back(c);
        }
        out["coefficients"] = coeffs;
        std::cout << out.dump(2) << "\n";
    } else {
        for (long e = lo; e < hi; ++e)
            std::cout << e << ": " << s.coeff(e).to_string() << "\n";
    }
    return 0;
}

ODEFamily parse_family(const std::string& s) {
    if (s == "2A" || s == "TWO_A")
        return ODEFamily::two_a();
    if (s == "SL2Z")
        return ODEFamily::sl2z();
    throw CLI::ValidationError("--family", "expected 2A or SL2Z");
}

// Known catalog weights, for inferring the decomposition weight of a form.
std::optional<long> form_weight(FormName name) {
    switch (name) {
    case FormName::E2:
    case FormName::E2_2TAU:
    case FormName::E2A:
    case FormName::C:
        return 2;
    case FormName::E4:
    case FormName::E4_2TAU:
    case FormName::D:
    case FormName::G:
        return 4;
    case FormName::E6:
    case FormName::E6_2TAU:
        return 6;
    case FormName::DELTA_2A:
        return 8;
    case FormName::DELTA:
        return 12;
    default:
        return std::nullopt;
    }
}

std::vector<long> theorem_range(long kmin, long kmax) {
    std::vector<long> ks;
    for (long k = kmin; k <= kmax; ++k)
        if (k >= 3 && k % 4 == 3)
            ks.push_back(k);
    return ks;
}

std::vector<CheckRecord> verify_one_k(long k, long terms) {
    std::vector<CheckRecord> out;
    long prec = terms + 2;
    QSeries fk = build_Fk(k, prec);
    auto t0 = std::chrono::steady_clock::now();
    QSeries res = ode_residual(fk, Rational(k), ODEFamily::two_a());
    out.push_back(timed_zero_check("ode_residual(F_k) = 0", k, res, terms + 1, elapsed_ms(t0)));
    t0 = std::chrono::steady_clock::now();
    QSeries sres = sharp_prime_residual(fk, Rational(k));
    out.push_back(
        timed_zero_check("sharp_prime_residual(F_k) = 0", k, sres, terms + 1, elapsed_ms(t0)));

    CheckRecord ord_law;
    ord_law.name = "ord(F_k) = (k+1)/4";
    ord_law.k = k;
    ord_law.certified_prec = fk.prec();
    ord_law.pass = fk.effective_order() == (k + 1) / 4;
    out.push_back(ord_law);

    CheckRecord rec;
    rec.name = "recurrence and closed form agree";
    rec.k = k;
    QSeries closed = closed_form_Fk(k, prec);
    EqResult eq = eq_common(fk, closed);
    rec.certified_prec = eq.certified_upto;
    rec.pass = eq.equal;
    rec.first_failing_exponent = eq.first_difference;
    out.push_back(rec);
    return out;
}

int run_verify(long kmin, long kmax, long terms, long jobs, const std::string& format) {
    std::vector<long> ks = theorem_range(kmin, kmax);
    std::vector<std::vector<CheckRecord>> results(ks.size());
    if (jobs < 1)
        jobs = 1;
    // fixed-size batches keep the report order deterministic regardless of
    // completion order
    for (size_t base = 0; base < ks.size(); base += static_cast<size_t>(jobs)) {
        std::vector<std::future<std::vector<CheckRecord>>> batch;
        for (size_t i = base; i < std::min(ks.size(), base + static_cast<size_t>(jobs)); ++i)
            batch.push_back(
                std::async(std::launch::async, [&ks, i, terms] { return verify_one_k(ks[i], terms); }));
        for (size_t i = 0; i < batch.size(); ++i)
            results[base + i] = batch[i].get();
    }
    std::vector<CheckRecord> flat;
    for (auto& group : results)
        for (auto& r : group)
            flat.push_back(std::move(r));
    return emit_report(flat, format);
}

int run_identities(long terms, const std::string& format) {
    long n = terms + 1;
    QSeries e2 = get_form(FormName::E2, n);
    QSeries e2a = get_form(FormName::E2A, n);
    QSeries c = get_form(FormName::C, n);
    QSeries d = get_form(FormName::D, n);
    QSeries d2a = get_form(FormName::DELTA_2A, n);
    QSeries g = get_form(FormName::G, n);
    QSeries e4 = get_form(FormName::E4, n);
    QSeries e6 = get_form(FormName::E6, n);
    QSeries e4_2 = subst_q2(e4).truncated(n);
    QSeries e6_2 = subst_q2(e6).truncated(n);

    ODEFamily fam = ODEFamily::two_a();
    std::vector<CheckRecord> records;
    auto check = [&](const std::string& name, auto make_residual) {
        auto t0 = std::chrono::steady_clock::now();
        QSeries residual = make_residual();
        records.push_back(timed_zero_check(name, std::nullopt, residual, n, elapsed_ms(t0)));
    };
    check("theta_2(C) = -G/4",
          [&] { return theta_k({c, Rational(2)}, fam).series + Rational(1, 4) * g; });
    check("theta_4(G) = -C^3/2",
          [&] { return theta_k({g, Rational(4)}, fam).series + Rational(1, 2) * pow_int(c, 3); });
    check("theta_8(Delta_2A) = 0", [&] { return theta_k({d2a, Rational(8)}, fam).series; });
    check("G^2 - C^4 = -256 Delta_2A",
          [&] { return g * g - pow_int(c, 4) + Rational(256) * d2a; });
    check("E2A' = (E2A^2 - C^2)/8",
          [&] { return theta(e2a) - Rational(1, 8) * (e2a * e2a - c * c); });
    check("Delta_2A = D(C^2 - 64D)", [&] { return d2a - d * (c * c - Rational(64) * d); });
    check("C' = (E2 C - C^2)/6 + 32D",
          [&] { return theta(c) - Rational(1, 6) * (e2 * c - c * c) - Rational(32) * d; });
    check("C^2 = (E4 + 4 E4(2tau))/5",
          [&] { return c * c - Rational(1, 5) * (e4 + Rational(4) * e4_2); });
    check("C^3 - 128CD = (E6 + 8 E6(2tau))/9", [&] {
        return pow_int(c, 3) - Rational(128) * (c * d) -
               Rational(1, 9) * (e6 + Rational(8) * e6_2);
    });
    check("G = (4 E4(2tau) - E4)/3",
          [&] { return g - Rational(1, 3) * (Rational(4) * e4_2 - e4); });
    check("C matches its odd-divisor sums", [&] { return c - divisor_form_C(n); });
    check("D matches its odd-divisor sums", [&] { return d - divisor_form_D(n); });
    return emit_report(records, format);
}

int run_frobenius(const ODEFamily& family, const Rational& k, const std::string& rho_arg,
                  long terms, const std::string& format) {
    FrobeniusReport rep;
    if (rho_arg == "auto")
        rep = frobenius_solve(family, k, FrobeniusAuto{}, terms);
    else
        rep = frobenius_solve(family, k, Rational::from_string(rho_arg), terms);

    const char* status = rep.status == FrobeniusStatus::CLEAN            ? "CLEAN"
                         : rep.status == FrobeniusStatus::FREE_PARAMETER ? "FREE_PARAMETER"
                                                                         : "OBSTRUCTED";
    if (format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["rho"] = rep.rho.to_string();
        out["status"] = status;
        json events = json::array();
        for (auto& [m, val] : rep.resonance_events) {
            json e;
            e["step"] = m;
            e["obstruction"] = val.to_string();
            events.push_back(e);
        }
        out["resonance_events"] = events;
        if (rep.solution) {
            json coeffs = json::array();
            for (long e = rep.solution->ord(); e < std::min(rep.solution->prec(), rep.solution->ord() + terms); ++e) {
                json c;
                c["exponent"] = e;
                c["value"] = rep.solution->coeff(e).to_string();
                coeffs.push_back(c);
            }
            out["solution"] = coeffs;
        } else {
            out["solution"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "rho = " << rep.rho.to_string() << "\nstatus = " << status << "\n";
        for (auto& [m, val] : rep.resonance_events)
            std::cout << "resonance at step " << m << ", obstruction " << val.to_string() << "\n";
        if (rep.solution)
            print_series(*rep.solution, "solution", rep.solution->prec(), "text");
    }
    return 0;
}

int run_decompose(const QSeries& f, RingTag ring, long weight, const std::string& format) {
    DecompositionReport rep = decompose(f, enumerate_basis(ring, weight));
    if (format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["ring"] = ring_tag_str(ring);
        out["weight"] = weight;
        out["status"] = solve_status_str(rep.status);
        out["certified_prec"] = rep.certified_prec;
        json terms = json::array();
        if (rep.status == SolveStatus::UNIQUE) {
            for (size_t j = 0; j < rep.basis.exponent_tuples.size(); ++j) {
                json t;
                t["exponents"] = rep.basis.exponent_tuples[j];
                t["coefficient"] = rep.coefficients[j].to_string();
                terms.push_back(t);
            }
        }
        out["terms"] = terms;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << ring_tag_str(ring) << " weight " << weight << ": "
                  << solve_status_str(rep.status) << " (certified below q^" << rep.certified_prec
                  << ")\n";
        if (rep.status == SolveStatus::UNIQUE)
            for (size_t j = 0; j < rep.basis.exponent_tuples.size(); ++j) {
                if (rep.coefficients[j].is_zero())
                    continue;
                std::cout << "  " << rep.coefficients[j].to_string() << " * [";
                for (size_t i = 0; i < rep.basis.exponent_tuples[j].size(); ++i)
                    std::cout << (i ? "," : "") << rep.basis.exponent_tuples[j][i];
                std::cout << "]\n";
            }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for the Gamma_0*(2) hypergeometric-type equation"};
    app.require_subcommand(1);

    long terms = default_terms();
    std::string format = "text";
    long jobs = static_cast<long>(std::thread::hardware_concurrency());
    app.add_option("--terms", terms, "number of certified q-coefficients")->capture_default_str();
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker count for sweeps");

    auto* cmd_expand = app.add_subcommand("expand", "print the q-expansion of a catalog form");
    std::string form_arg;
    cmd_expand->add_option("--form", form_arg, "catalog form name")->required();

    auto* cmd_fk = app.add_subcommand("fk", "build the quasimodular solution F_k");
    long k_arg = 3;
    cmd_fk->add_option("--k", k_arg, "k = 3 mod 4")->required();

    auto* cmd_verify = app.add_subcommand("verify", "theorem sweep over a k range");
    long kmin = 3, kmax = 43;
    cmd_verify->add_option("--k-min", kmin);
    cmd_verify->add_option("--k-max", kmax);

    auto* cmd_identities = app.add_subcommand("identities", "the proof-identity suite");

    auto* cmd_poly = app.add_subcommand("poly", "print P_n or Q_n");
    std::string poly_family = "P";
    long n_arg = 0;
    cmd_poly->add_option("--family", poly_family)->check(CLI::IsMember({"P", "Q"}));
    cmd_poly->add_option("--n", n_arg, "index")->required();

    auto* cmd_frob = app.add_subcommand("frobenius", "power-series solution at an indicial root");
    std::string fam_arg = "2A";
    std::string k_str = "3";
    std::string rho_arg = "auto";
    cmd_frob->add_option("--family", fam_arg, "2A or SL2Z");
    cmd_frob->add_option("--k", k_str, "equation parameter (rational)")->required();
    cmd_frob->add_option("--rho", rho_arg, "indicial root or 'auto'");

    auto* cmd_dec = app.add_subcommand("decompose", "express a form over a graded-ring basis");
    std::string ring_arg;
    std::string dec_form;
    long dec_k = 0;
    cmd_dec->add_option("--ring", ring_arg, "QM_GAMMA02, MOD_GAMMA02, or MOD_GAMMA02_STAR")
        ->required();
    cmd_dec->add_option("--form", dec_form, "catalog form to decompose");
    cmd_dec->add_option("--k", dec_k, "decompose F_k instead of a catalog form");

    // global options (--terms, --format, --jobs) may be given after the subcommand
    for (CLI::App* sc : {cmd_expand, cmd_fk, cmd_verify, cmd_identities, cmd_poly, cmd_frob, cmd_dec})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_expand) {
            auto name = parse_form_name(form_arg);
            if (!name) {
                std::cerr << "unknown form name: " << form_arg << "\n";
                return 2;
            }
            return print_series(get_form(*name, terms), form_arg, terms, format);
        }
        if (*cmd_fk)
            return print_series(build_Fk(k_arg, terms), "F_" + std::to_string(k_arg), terms,
                                format);
        if (*cmd_verify)
            return run_verify(kmin, kmax, terms, jobs, format);
        if (*cmd_identities)
            return run_identities(terms, format);
        if (*cmd_poly) {
            auto [p, q] = pq_polys(n_arg);
            std::cout << (poly_family == "P" ? p : q).to_string() << "\n";
            return 0;
        }
        if (*cmd_frob)
            return run_frobenius(parse_family(fam_arg), Rational::from_string(k_str), rho_arg,
                                 terms, format);
        if (*cmd_dec) {
            if (dec_form.empty() == (dec_k == 0)) {
                std::cerr << "decompose needs exactly one of --form or --k\n";
                return 2;
            }
            auto ring = parse_ring_tag(ring_arg);
            if (!ring) {
                std::cerr << "unknown ring tag: " << ring_arg << "\n";
                return 2;
            }
            if (dec_k != 0)
                return run_decompose(build_Fk(dec_k, terms), *ring, dec_k + 1, format);
            auto name = parse_form_name(dec_form);
            if (!name) {
                std::cerr << "unknown form name: " << dec_form << "\n";
                return 2;
            }
            auto w = form_weight(*name);
            if (!w) {
                std::cerr << "form " << dec_form << " has no graded weight\n";
                return 2;
            }
            return run_decompose(get_form(*name, terms), *ring, *w, format);
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const NotAnIndicialRoot& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
