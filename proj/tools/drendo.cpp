// Command-line driver: charpoly / divisors / endo / recip / scan / find.
// Exit codes: 0 ok, 2 invalid input, 3 search exhausted, 4 internal
// invariant violation.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "drendo/config.hpp"
#include "drendo/reciprocity.hpp"
#include "drendo/scan.hpp"
#include "drendo/textio.hpp"

using namespace drendo;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string config;
    std::uint64_t seed = 1;
};

APoly parse_or_throw(const Fq& F, const std::string& s, const char* what) {
    try {
        return parse_poly(F, s);
    } catch (const invalid_input& e) {
        throw invalid_input(std::string(what) + ": " + e.what());
    }
}

// Field block in every JSON output, so results pin down the F_q presentation.
json field_json(const Fq& F) {
    json f;
    f["p"] = F.p();
    f["n"] = F.n();
    if (F.n() > 1) {
        Fq fp = Fq::prime_field(F.p());
        std::vector<FqElt> c(F.mod_coeffs().begin(), F.mod_coeffs().end());
        std::string s = to_string(fp, APoly(std::move(c)));
        size_t pos;
        while ((pos = s.find('T')) != std::string::npos) s.replace(pos, 1, F.label());
        f["modulus"] = s;
    }
    return f;
}

int run_charpoly(const CommonOpts& c, const std::string& prime_text) {
    LoadedModule lm = load_module_file(c.config);
    const Fq& F = *lm.field;
    APoly p = parse_or_throw(F, prime_text, "--prime");
    ResidueCtx R(F, p);
    ReducedDrinfeldModule red = reduce(lm.phi, R);
    FrobeniusData fd = frobenius_charpoly(red);
    json out;
    out["field"] = field_json(F);
    out["p"] = to_string(F, fd.prime);
    std::vector<std::string> as;
    for (auto& ai : fd.a) as.push_back(to_string(F, ai));
    out["P"] = as;
    out["epsilon"] = to_string(F, fd.epsilon);
    out["chi"] = to_string(F, euler_characteristic(F, fd));
    if (fd.rank == 2) out["a"] = to_string(F, trace(F, fd));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_divisors(const CommonOpts& c, const std::string& prime_text) {
    LoadedModule lm = load_module_file(c.config);
    const Fq& F = *lm.field;
    APoly p = parse_or_throw(F, prime_text, "--prime");
    ResidueCtx R(F, p);
    ReducedDrinfeldModule red = reduce(lm.phi, R);
    FrobeniusData fd = frobenius_charpoly(red);
    DivisorProfile prof = elementary_divisors(red, fd, c.seed);
    json out;
    out["field"] = field_json(F);
    out["p"] = to_string(F, p);
    out["exponent"] = to_string(F, prof.d.back());
    out["chi"] = to_string(F, euler_characteristic(F, fd));
    std::vector<std::string> ds, der;
    for (auto& di : prof.d) ds.push_back(to_string(F, di));
    out["divisors"] = ds;
    out["derivation"] = prof.derivation;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_endo(const CommonOpts& c, const std::string& prime_text) {
    LoadedModule lm = load_module_file(c.config);
    const Fq& F = *lm.field;
    APoly p = parse_or_throw(F, prime_text, "--prime");
    TableRow row = invariants_at(lm.phi, p, c.seed);
    json out;
    out["field"] = field_json(F);
    out["p"] = to_string(F, row.p);
    out["a"] = to_string(F, row.a);
    out["epsilon"] = to_string(F, row.epsilon);
    out["c_pi"] = to_string(F, row.c_pi);
    out["c_phi"] = to_string(F, row.c_phi);
    out["b"] = to_string(F, row.b);
    switch (row.kind) {
        case OrderCase::Odd:
            out["case"] = "odd";
            out["Delta_max"] = to_string(F, row.last);
            break;
        case OrderCase::EvenInsep:
            out["case"] = "even-inseparable";
            out["D_K"] = "sqrt(T)";
            break;
        case OrderCase::EvenSep:
            out["case"] = "even-separable";
            out["D_K"] = to_string(F, row.last);
            break;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_recip(const CommonOpts& c, const std::string& modulus_text, unsigned max_degree,
              const std::string& out_path) {
    LoadedModule lm = load_module_file(c.config);
    const Fq& F = *lm.field;
    APoly n = parse_or_throw(F, modulus_text, "--modulus");
    std::string csv =
        "p,n,splits,trace_congruence,index_congruence,b1,d1_predicted,d1_actual,d2_generator\n";
    bool p_divides_r = lm.phi.rank() % F.p() == 0;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (auto& p : primes_of_degree(F, d)) {
            if (!has_good_reduction(lm.phi, p)) continue;
            if (n.deg() > 0 && divides(F, p, n)) continue;
            ReciprocityReport rep = p_divides_r
                                        ? reciprocity_check_p_divides_r(lm.phi, p, n, c.seed)
                                        : reciprocity_check(lm.phi, p, n, c.seed);
            csv += to_string(F, rep.prime) + "," + to_string(F, rep.modulus) + "," +
                   (rep.splits_direct ? "1" : "0") + "," +
                   (rep.congruence_trace ? "1" : "0") + "," +
                   (rep.index_evaluated ? (rep.congruence_index ? "1" : "0") : "-") + "," +
                   (rep.index_evaluated ? to_string(F, rep.b1) : "-") + "," +
                   to_string(F, rep.d1_predicted) + "," + to_string(F, rep.d1_actual) + "," +
                   to_string(F, rep.d2_generator) + "\n";
        }
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw invalid_input("recip: cannot open " + out_path);
        out << csv;
    }
    return 0;
}

int run_scan(const CommonOpts& c, unsigned dmin, unsigned dmax, bool all,
             const std::string& format, const std::string& out_path, unsigned threads) {
    LoadedModule lm = load_module_file(c.config);
    ScanConfig cfg;
    cfg.degree_min = dmin;
    cfg.degree_max = dmax;
    cfg.keep_all = all;
    cfg.threads = threads;
    cfg.seed = c.seed;
    std::vector<APoly> skipped;
    auto rows = scan_table(lm.phi, cfg, &skipped);
    emit(*lm.field, rows, format, out_path);
    for (auto& p : skipped)
        std::cerr << "skipped bad-reduction prime " << to_string(*lm.field, p) << "\n";
    return 0;
}

int run_find(const CommonOpts& c, const std::string& b1_text, const std::string& cphi_text,
             unsigned dmax) {
    LoadedModule lm = load_module_file(c.config);
    const Fq& F = *lm.field;
    APoly n = b1_text.empty() ? APoly() : parse_or_throw(F, b1_text, "--target-b1");
    APoly m = cphi_text.empty() ? APoly() : parse_or_throw(F, cphi_text, "--target-cphi");
    if (n.is_zero() && m.is_zero())
        throw invalid_input("find: set --target-b1 and/or --target-cphi");
    FindTarget which = !n.is_zero() && !m.is_zero() ? FindTarget::BOTH
                       : !n.is_zero()               ? FindTarget::B1
                                                    : FindTarget::CPHI;
    ScanConfig cfg;
    cfg.degree_min = 1;
    cfg.degree_max = dmax;
    cfg.seed = c.seed;
    auto res = find_prime_with_index_divisor(lm.phi, which, n, m, cfg);
    if (!res) {
        std::cerr << "no prime found up to degree " << dmax << "\n";
        return 3;
    }
    json out;
    out["field"] = field_json(F);
    out["p"] = to_string(F, res->row.p);
    out["degree"] = res->degree;
    out["a"] = to_string(F, res->row.a);
    out["c_pi"] = to_string(F, res->row.c_pi);
    out["c_phi"] = to_string(F, res->row.c_phi);
    out["b"] = to_string(F, res->row.b);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Drinfeld modules over F_q[T]: Frobenius "
                 "characteristic polynomials, module structure, endomorphism-ring "
                 "indices, reciprocity checks and batch scans"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string prime_text, modulus_text, b1_text, cphi_text;
    std::string format = "csv", out_path = "-";
    unsigned dmin = 6, dmax = 6, max_degree = 6, find_max = 14, threads = 1;
    bool all = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "module config (JSON)")->required();
        sub->add_option("--seed", common.seed, "RNG seed for factorization");
    };

    CLI::App* sc = app.add_subcommand("charpoly", "characteristic polynomial of Frobenius");
    add_common(sc);
    sc->add_option("--prime", prime_text, "prime p of A")->required();

    CLI::App* sd = app.add_subcommand("divisors", "elementary divisors of phi over F_p");
    add_common(sd);
    sd->add_option("--prime", prime_text, "prime p of A")->required();

    CLI::App* se = app.add_subcommand("endo", "order chain A[pi] in E_phi in O_K (rank 2)");
    add_common(se);
    se->add_option("--prime", prime_text, "prime p of A")->required();

    CLI::App* sr = app.add_subcommand("recip", "reciprocity reports over a prime range");
    add_common(sr);
    sr->add_option("--modulus", modulus_text, "modulus n")->required();
    sr->add_option("--max-degree", max_degree, "largest prime degree");
    sr->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* ss = app.add_subcommand("scan", "table of invariants over a degree range");
    add_common(ss);
    ss->add_option("--degree", dmax, "prime degree (sets both ends of the range)");
    ss->add_option("--degree-min", dmin, "lowest prime degree");
    ss->add_flag("--all", all, "keep rows with b = 1 too");
    ss->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ss->add_option("--out", out_path, "output path (default stdout)");
    ss->add_option("--threads", threads, "worker threads");

    CLI::App* sf = app.add_subcommand("find", "smallest prime with prescribed index divisors");
    add_common(sf);
    sf->add_option("--target-b1", b1_text, "n with n | b");
    sf->add_option("--target-cphi", cphi_text, "m with m | c_phi");
    sf->add_option("--max-degree", find_max, "search bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc->parsed()) return run_charpoly(common, prime_text);
        if (sd->parsed()) return run_divisors(common, prime_text);
        if (se->parsed()) return run_endo(common, prime_text);
        if (sr->parsed()) return run_recip(common, modulus_text, max_degree, out_path);
        if (ss->parsed()) {
            if (!ss->count("--degree-min")) dmin = dmax;
            return run_scan(common, dmin, dmax, all, format, out_path, threads);
        }
        if (sf->parsed()) return run_find(common, b1_text, cphi_text, find_max);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
