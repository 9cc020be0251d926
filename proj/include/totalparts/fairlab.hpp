#pragma once

// Totally fair pairs of k-dice over Q(zeta_k), their count and the
// ramification identity, plus the fairness checks for craps, a coin with a
// die, and Sicherman relabelings.

#include "totalparts/dice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace totalparts {

/// r_m = multiplicity of the root zeta_k^m in the first die, m = 1..k-1,
/// stored at r[m - 1].
struct MultiplicityVector {
    std::vector<int> r;

    /// Number of roots owned twice by the first die.
    int ell() const;
    MultiplicityVector complement() const;
    bool is_conjugation_symmetric() const;
    friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

struct FairPair {
    Die<CycElem> d;
    Die<CycElem> dhat;
    MultiplicityVector r;
    bool real = false;
    bool strict = false;
    bool palindromic = false;
};

/// sum_l C(k-1, l) C(k-1-l, k-1-2l).
Integer fair_pair_count(int k);

/// Calls visit for every multiplicity vector of order k, in canonical order
/// (by ell, then lexicographic on r).
void for_each_multiplicity_vector(int k, const std::function<void(const MultiplicityVector&)>& visit);

/// Number of multiplicity vectors with each ell, counted by enumeration.
std::vector<Integer> multiplicity_vectors_by_ell(int k, int workers = 1);

struct RamificationCheck {
    Integer lhs; // sum_l 2^{k-1-2l} * count_l
    Integer rhs; // fiber degree of type (k, k)
    std::vector<Integer> counts;
    bool holds() const { return lhs == rhs; }
};

RamificationCheck ramification_check(int k, int workers = 1);

/// The pair of dice with d ~ prod (x - zeta_k^m)^{r_m}.
FairPair make_fair_pair(int k, const MultiplicityVector& r);

/// All fair pairs of order k, canonically ordered. With real_only, only
/// conjugation-symmetric vectors are materialized.
std::vector<FairPair> enumerate_fair_pairs(int k, int workers = 1, bool real_only = false);

/// Strict fair pairs; only real vectors can qualify.
std::vector<FairPair> strict_fair_pairs(int k, int workers = 1);

struct CrapsFairReport {
    std::vector<FairPair> strict_pairs;
    bool only_fair_is_strict = false;
    FairPair candidate;                        // d ~ (x^2 - x + 1)^2 (x + 1)
    std::vector<Rational> candidate_unnormalized;
    int real_pairs = 0;
};

CrapsFairReport craps_fair_impossibility();

struct CoinDieReport {
    int k = 0;
    std::vector<Sack<CycElem>> outcomes;
    int strict = 0;
    int strict_nonfair = 0;
    bool only_fair_strict() const { return strict == 1 && strict_nonfair == 0; }
};

/// Redistributes the linear factors of psi_2 psi_k between a coin and a k-die.
CoinDieReport coin_die_fair_check(int k, int workers = 1);

struct LabeledPair {
    std::vector<int> first;  // face labels, ascending
    std::vector<int> second;
    /// Both dice labeled 1..k.
    bool is_standard() const;
    friend auto operator<=>(const LabeledPair&, const LabeledPair&) = default;
};

/// Unordered pairs of k-faced dice, all labels >= label_min, whose sums are
/// distributed like those of two standard dice labeled 1..k.
std::vector<LabeledPair> sicherman_search(int k, int label_min = 1);

} // namespace totalparts
