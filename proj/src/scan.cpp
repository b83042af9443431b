#include "drendo/scan.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include "drendo/textio.hpp"

namespace drendo {

TableRow invariants_at(const GlobalDrinfeldModule& phi, const APoly& p, std::uint64_t seed) {
    const Fq& F = *phi.F;
    ResidueCtx R(F, p);
    ReducedDrinfeldModule red = reduce(phi, R);
    FrobeniusData fd = frobenius_charpoly(red);
    MaximalOrderData mo = maximal_order(F, fd, seed);
    EndoRingData er = endomorphism_index(red, fd, mo, seed);

    TableRow row;
    row.p = p;
    row.a = trace(F, fd);
    row.epsilon = fd.epsilon;
    row.c_pi = er.c_pi;
    row.c_phi = er.c_phi;
    row.b = er.b;
    row.kind = mo.kind;
    switch (mo.kind) {
        case OrderCase::Odd: row.last = mo.delta_max; break;
        case OrderCase::EvenSep: row.last = mo.different; break;
        case OrderCase::EvenInsep: row.insep = true; break;
    }
    return row;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    unsigned width = std::min<unsigned>(threads, static_cast<unsigned>(count));
    for (unsigned t = 0; t < width; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<TableRow> scan_table(const GlobalDrinfeldModule& phi, const ScanConfig& cfg,
                                 std::vector<APoly>* skipped) {
    const Fq& F = *phi.F;
    if (phi.rank() != 2) throw invalid_input("scan: rank must be 2");
    std::vector<APoly> primes;
    for (unsigned d = cfg.degree_min; d <= cfg.degree_max; ++d)
        for (auto& p : primes_of_degree(F, d)) primes.push_back(std::move(p));

    std::vector<std::optional<TableRow>> slots(primes.size());
    std::vector<char> bad(primes.size(), 0);
    parallel_for(primes.size(), cfg.threads, [&](size_t i) {
        if (!has_good_reduction(phi, primes[i])) {
            bad[i] = 1;
            return;
        }
        TableRow row = invariants_at(phi, primes[i], cfg.seed ^ (0x9e3779b97f4a7c15ull * i));
        if (cfg.keep_all || !row.b.is_one()) slots[i] = std::move(row);
    });

    std::vector<TableRow> rows;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (bad[i] && skipped) skipped->push_back(primes[i]);
        if (slots[i]) rows.push_back(std::move(*slots[i]));
    }
    return rows;
}

std::optional<FindResult> find_prime_with_index_divisor(const GlobalDrinfeldModule& phi,
                                                        FindTarget which, const APoly& n,
                                                        const APoly& m, const ScanConfig& cfg) {
    const Fq& F = *phi.F;
    if (phi.rank() != 2) throw invalid_input("find: rank must be 2");
    for (unsigned d = cfg.degree_min; d <= cfg.degree_max; ++d) {
        PrimeEnumerator en(F, d);
        while (auto p = en.next()) {
            if (!has_good_reduction(phi, *p)) continue;
            TableRow row = invariants_at(phi, *p, cfg.seed);
            bool hit_b1 = n.is_zero() ? false : divides(F, n, row.b);
            bool hit_cphi = m.is_zero() ? false : divides(F, m, row.c_phi);
            bool hit = which == FindTarget::B1     ? hit_b1
                       : which == FindTarget::CPHI ? hit_cphi
                                                   : (hit_b1 && hit_cphi);
            if (hit) return FindResult{std::move(row), d};
        }
    }
    return std::nullopt;
}

namespace {
std::string last_column(const Fq& F, const TableRow& r) {
    if (r.insep) return "sqrt(T)";
    return to_string(F, r.last);
}
}  // namespace

std::string rows_to_csv(const Fq& F, const std::vector<TableRow>& rows) {
    bool even = F.p() == 2;
    std::string out = even ? "p,a,epsilon,c_pi,c_phi,D_K\n" : "p,a,epsilon,c_pi,c_phi,Delta_max\n";
    for (const auto& r : rows) {
        out += to_string(F, r.p) + "," + to_string(F, r.a) + "," + to_string(F, r.epsilon) +
               "," + to_string(F, r.c_pi) + "," + to_string(F, r.c_phi) + "," +
               last_column(F, r) + "\n";
    }
    return out;
}

std::string rows_to_json(const Fq& F, const std::vector<TableRow>& rows) {
    auto esc = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out;
    for (const auto& r : rows) {
        out += "{\"p\":" + esc(to_string(F, r.p)) + ",\"a\":" + esc(to_string(F, r.a)) +
               ",\"epsilon\":" + esc(to_string(F, r.epsilon)) +
               ",\"c_pi\":" + esc(to_string(F, r.c_pi)) +
               ",\"c_phi\":" + esc(to_string(F, r.c_phi)) + ",\"b\":" +
               esc(to_string(F, r.b)) + ",\"last\":" + esc(last_column(F, r)) + "}\n";
    }
    return out;
}

void emit(const Fq& F, const std::vector<TableRow>& rows, const std::string& format,
          const std::string& path) {
    std::string text = format == "json" ? rows_to_json(F, rows) : rows_to_csv(F, rows);
    if (path.empty() || path == "-") {
        fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("emit: cannot open output path " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace drendo
