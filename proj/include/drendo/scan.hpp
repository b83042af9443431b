#ifndef DRENDO_SCAN_HPP
#define DRENDO_SCAN_HPP

#include <functional>
#include <optional>
#include <string>

#include "drendo/endoring.hpp"

namespace drendo {

struct ScanConfig {
    unsigned degree_min = 1, degree_max = 6;
    bool keep_all = false;     // keep rows with b = 1 too
    unsigned threads = 1;
    std::uint64_t seed = 1;
};

/// One table row: prime, trace, epsilon, c_pi, c_phi and the case-specific
/// last column (Delta_max, D_K, or the literal token sqrt(T)).
struct TableRow {
    APoly p, a;
    FqElt epsilon = 1;
    APoly c_pi, c_phi, b;
    OrderCase kind = OrderCase::Odd;
    APoly last;        // Delta_max or D_K; ignored when inseparable
    bool insep = false;
};

TableRow invariants_at(const GlobalDrinfeldModule& phi, const APoly& p, std::uint64_t seed = 1);

// Enumerates good primes with degree in [degree_min, degree_max] and keeps
// the rows with A[pi] != E_phi (all rows when keep_all).  Bad-reduction
// primes are skipped and reported through skipped (when non-null).
std::vector<TableRow> scan_table(const GlobalDrinfeldModule& phi, const ScanConfig& cfg,
                                 std::vector<APoly>* skipped = nullptr);

enum class FindTarget { B1, CPHI, BOTH };

struct FindResult {
    TableRow row;
    unsigned degree = 0;
};

// First prime (by degree, then enumeration order) whose invariants satisfy
// the divisibility target: n | b (B1), m | c_phi (CPHI), or both.
std::optional<FindResult> find_prime_with_index_divisor(const GlobalDrinfeldModule& phi,
                                                        FindTarget which, const APoly& n,
                                                        const APoly& m, const ScanConfig& cfg);

std::string rows_to_csv(const Fq& F, const std::vector<TableRow>& rows);
std::string rows_to_json(const Fq& F, const std::vector<TableRow>& rows);
void emit(const Fq& F, const std::vector<TableRow>& rows, const std::string& format,
          const std::string& path);

// Deterministic parallel map: out[i] = fn(i), order independent of width.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn);

}  // namespace drendo

#endif
