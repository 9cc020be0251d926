#pragma once

// Exotic sacks of two dice: factor redistributions of psi_k psi_k' with
// certified strictness, the S_l(k) scans, and the order-13 example.

#include "totalparts/dice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace totalparts {

/// A redistribution relative to the fair pair. Factors are named by the
/// reduced fraction q = m/k of chi_{m,k}; q = 1/2 stands for x + 1.
struct SwapSpec {
    int k = 0;
    int kprime = 0;
    std::vector<Rational> give; // factors the first die loses, ascending
    std::vector<Rational> take; // factors the first die gains, ascending

    /// "[3,7<->4,6]" with m = q k when integral, else the fraction q.
    std::string to_string() const;
    friend bool operator<(const SwapSpec& a, const SwapSpec& b);
    friend bool operator==(const SwapSpec& a, const SwapSpec& b) = default;
};

struct ExoticSack {
    Sack<CycElem> sack;
    SwapSpec swap;
    bool positive = false; // every probability > 0
};

struct ExoticCensus {
    int k = 0;
    int kprime = 0;
    std::vector<ExoticSack> sacks; // ordered by swap
    /// Number of exotic pairs; for k = k' each unordered pair counts once.
    std::size_t E() const { return sacks.size(); }
    /// Redistributions settled exactly because the float filter was inconclusive.
    long exact_fallbacks = 0;
};

/// All strict exotic sacks of type (k, k'), 2 <= k <= k'. Candidates are
/// screened in floating point with an a priori error bound; survivors and
/// unresolved cases are decided exactly.
ExoticCensus exotic_search(int k, int kprime, int workers = 1);

/// Same census with every candidate built and decided exactly.
ExoticCensus exotic_search_reference(int k, int kprime, int workers = 1);

/// Diagonal swaps in canonical order.
std::vector<SwapSpec> swap_census(int k, int workers = 1);

/// The first entry of the (3, 4) census; throws NotFound if it is empty.
Sack<CycElem> smallest_exotic_34();

struct TridecahedralReport {
    Die<CycElem> d;
    Die<CycElem> dhat;
    bool strict = false;
    bool palindromic = false;
    bool product_is_fair = false;
    std::vector<double> d_values;    // d_0..d_6
    std::vector<double> dhat_values;
    double max_deviation = 0;        // against the printed values
    bool matches() const { return strict && palindromic && product_is_fair && max_deviation < 5e-8; }
};

TridecahedralReport verify_tridecahedral();

/// Printed 7-place values for the order-13 example.
extern const double tridecahedral_d[7];
extern const double tridecahedral_dhat[7];

/// m with 1 <= m < k/2 such that swapping chi_{m,k} into an l-die
/// (l = 3 or 4) leaves both dice strict.
struct ScanRecord {
    int ell = 3;
    int k = 0;
    std::vector<int> S;
    std::optional<int> M;
    std::optional<Rational> R;
    long exact_fallbacks = 0;
};

/// Closed-form kernel: coefficient signs of psi_k g / chi_{m,k} evaluated
/// in floating point, with exact cyclotomic evaluation for values within
/// `tolerance` of zero.
ScanRecord s_scan(int ell, int k, double tolerance = 1e-11);

/// Exact division and certified signs for every coefficient.
ScanRecord s_scan_reference(int ell, int k);

/// s_scan for k = k_min..k_max, ordered by k.
std::vector<ScanRecord> s_scan_range(int ell, int k_min, int k_max, int workers = 1);

struct M3Exception {
    int k = 0;
    int difference = 0; // M3(k + 143) - M3(k)
    long a = 0;         // k = 603 a + 143 b
    long b = 0;
};

struct M3ExceptionReport {
    int k_max = 0;
    int checked = 0;
    std::vector<M3Exception> exceptions;
};

/// Every k <= k_max - 143 with M3(k + 143) - M3(k) != 60.
M3ExceptionReport m3_exception_scan(int k_max, int workers = 1);
M3ExceptionReport m3_exceptions_from(const std::vector<ScanRecord>& records);

/// Rows with R3 > 60/143.
std::vector<ScanRecord> r3_bound_violations(const std::vector<ScanRecord>& records);

/// CSV with columns k,M3,R3_num,R3_den,R3_decimal; empty fields when S is empty.
std::string scatter_csv(const std::vector<ScanRecord>& records, int decimals = 7);

} // namespace totalparts
