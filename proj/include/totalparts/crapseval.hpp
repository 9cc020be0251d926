#pragma once

// Exact craps under an arbitrary distribution of the two-dice total.

#include "totalparts/dice.hpp"

#include <array>
#include <string>
#include <vector>

namespace totalparts {

/// Probabilities of the totals 2..12; f[0] is total 2.
class CrapsTotals {
public:
    explicit CrapsTotals(std::vector<Rational> f);
    static CrapsTotals fair();

    const Rational& at(int total) const { return f_[static_cast<std::size_t>(total - 2)]; }
    const std::array<Rational, 11>& values() const { return f_; }

private:
    std::array<Rational, 11> f_;
};

/// Printed probability of winning with fair dice, kept to flag the discrepancy.
inline const Rational printed_fair_p_win(243, 495);

struct CrapsReport {
    std::array<Rational, 11> p_t;
    std::array<Rational, 11> p_w_given_t;
    std::array<Rational, 11> p_t_and_w;
    Rational p_win;
    Rational p_lose;
    /// Points t with f_t + f_7 = 0; their conditional was set to 0.
    std::vector<int> undefined_conditionals;
    /// Set for the fair totals, where the exact value differs from 243/495.
    bool differs_from_printed = false;

    /// Rows t | P(t) | P(w|t) | P(t and w) in the usual layout.
    std::string table() const;
};

bool is_point(int total);

CrapsReport craps_evaluate(const CrapsTotals& f);

struct GeometricTree {
    Rational first_term;
    Rational ratio;
    Rational closed_form;
    std::vector<Rational> partial_sums;
};

/// Partial sums of f_t (1 - f_t - f_7)^i for i < n_terms.
GeometricTree geometric_tree_check(const CrapsTotals& f, int t, int n_terms);

/// Requires a sack of type (6, 6); totals 0..10 are shifted to 2..12.
CrapsReport craps_from_sack(const Sack<Rational>& s);
/// The total must be rational even if the dice are not.
CrapsReport craps_from_sack(const Sack<CycElem>& s);

} // namespace totalparts
