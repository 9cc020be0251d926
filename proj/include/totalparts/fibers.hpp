#pragma once

// Inverse of the part-to-total map: fibers over a factored total, the
// degree formula, and the closed forms for coins and a coin with a die.

#include "totalparts/dice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace totalparts {

class SackType {
public:
    explicit SackType(std::vector<int> orders);
    std::span<const int> orders() const { return k_; }
    std::size_t size() const { return k_.size(); }
    int T() const;

private:
    std::vector<int> k_;
};

/// T! / prod (k_j - 1)!, the size of a general fiber.
Integer fiber_degree(const SackType& type);

/// One entry of a factor multiset: a monic irreducible factor over the
/// coefficient field, with multiplicity.
template <ExactScalar F>
struct Factor {
    Poly<F> poly;
    int multiplicity = 1;

    /// x - root
    static Factor linear(const F& root, int multiplicity = 1) { return {Poly<F>{-root, F(1)}, multiplicity}; }
    /// x^2 - tau x + 1
    static Factor chi(const F& tau, int multiplicity = 1) { return {Poly<F>{F(1), -tau, F(1)}, multiplicity}; }
};

template <ExactScalar F>
using FactorMultiset = std::vector<Factor<F>>;

template <ExactScalar F>
Poly<F> factor_product(const FactorMultiset<F>& factors)
{
    Poly<F> acc = Poly<F>::constant(F(1));
    for (const auto& f : factors) acc = acc * pow(f.poly, f.multiplicity);
    return acc;
}

/// Stable text key used for canonical ordering of sacks.
template <ExactScalar F>
std::string canonical_key(const Sack<F>& sack)
{
    std::string key;
    for (const auto& d : sack.dice()) {
        for (const F& v : d.probs()) {
            key += scalar_string(v);
            key += ',';
        }
        key += ';';
    }
    return key;
}

template <ExactScalar F>
void sort_canonically(std::vector<Sack<F>>& sacks)
{
    std::vector<std::pair<std::string, std::size_t>> keyed;
    for (std::size_t i = 0; i < sacks.size(); ++i) keyed.emplace_back(canonical_key(sacks[i]), i);
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<Sack<F>> out;
    out.reserve(keyed.size());
    for (const auto& [key, i] : keyed) out.push_back(sacks[i]);
    sacks = std::move(out);
}

namespace detail {

/// counts[i][j] = copies of distinct factor i given to slot j.
using Assignment = std::vector<std::vector<int>>;

std::vector<Assignment> enumerate_assignments(std::span<const int> multiplicities,
                                              std::span<const int> degrees,
                                              std::span<const int> capacities);

} // namespace detail

/// All sacks of the given type whose dice multiply to the product of the
/// factors: every way of handing the factors to the slots with slot j of
/// degree at most k_j - 1. Slots whose polynomial sums to zero are skipped.
/// Output is deduplicated and canonically sorted, independent of `workers`.
template <ExactScalar F>
std::vector<Sack<F>> enumerate_fiber(const FactorMultiset<F>& factors, const SackType& type, int workers = 1)
{
    // merge repeated entries
    std::vector<Poly<F>> distinct;
    std::vector<int> mult, degree;
    for (const auto& f : factors) {
        if (f.multiplicity <= 0) continue;
        auto it = std::find(distinct.begin(), distinct.end(), f.poly);
        if (it == distinct.end()) {
            distinct.push_back(f.poly);
            mult.push_back(f.multiplicity);
            degree.push_back(f.poly.degree());
        } else {
            mult[static_cast<std::size_t>(it - distinct.begin())] += f.multiplicity;
        }
    }
    int total_degree = 0;
    for (std::size_t i = 0; i < distinct.size(); ++i) total_degree += mult[i] * degree[i];
    if (total_degree > type.T()) return {};

    std::vector<int> capacity;
    for (int k : type.orders()) capacity.push_back(k - 1);
    const auto assignments = detail::enumerate_assignments(mult, degree, capacity);

    std::vector<std::optional<Sack<F>>> built(assignments.size());
    const long count = static_cast<long>(assignments.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long a = 0; a < count; ++a) {
        const auto& counts = assignments[static_cast<std::size_t>(a)];
        std::vector<Die<F>> dice;
        bool ok = true;
        for (std::size_t j = 0; j < type.size() && ok; ++j) {
            Poly<F> slot = Poly<F>::constant(F(1));
            for (std::size_t i = 0; i < distinct.size(); ++i) slot = slot * pow(distinct[i], counts[i][j]);
            if (is_zero(slot.coefficient_sum())) {
                ok = false;
                break;
            }
            dice.push_back(normalize_to_die(slot, type.orders()[j]).die);
        }
        if (ok) built[static_cast<std::size_t>(a)] = Sack<F>(std::move(dice));
    }
    std::vector<Sack<F>> out;
    for (auto& s : built)
        if (s) out.push_back(std::move(*s));
    sort_canonically(out);
    return out;
}

/// Head probabilities {p, q} (p = probability of face 0) of two coins with
/// total (r, s, t): the roots of p^2 - (2r + s) p + r.
struct CoinPairSolution {
    Rational sum;          // p + q = 2r + s
    Rational product;      // p q = r
    Rational discriminant; // s^2 - 4 r t
    /// Present when the discriminant is a rational square; p <= q.
    std::optional<std::pair<Rational, Rational>> roots;
    bool repeated() const { return sgn(discriminant) == 0; }
};

CoinPairSolution coin_pair_solve(const DistPoly<Rational>& total);

std::optional<Rational> exact_sqrt(const Rational& q);

struct RationalRoots {
    std::vector<Rational> roots; // with multiplicity, ascending
    Poly<Rational> residual;     // monic cofactor without rational roots
};

/// Rational roots of p found by numeric isolation and exact verification.
RationalRoots rational_roots(const Poly<Rational>& p);

struct CoinParts {
    std::vector<Rational> e;       // elementary symmetric values e_0..e_n
    Poly<Rational> monic;          // prod (y - p_j)
    std::vector<Rational> probs;   // rational p_j with multiplicity
    Poly<Rational> residual;       // remaining irrational part of `monic`
};

/// Recovers the coins' face-0 probabilities from the total of n coins.
CoinParts coins_parts_from_total(const DistPoly<Rational>& total, int n);

/// Monic degree-k polynomial in the coin's face-0 probability p whose roots
/// are the coins of the fiber over a (2, k) total f_0..f_k.
template <ExactScalar F>
Poly<F> coin_die_elimination(const DistPoly<F>& total)
{
    const int k = static_cast<int>(total.size()) - 1;
    std::vector<F> a(static_cast<std::size_t>(k) + 1, F(0));
    for (int i = 0; i < k; ++i) {
        F acc(0);
        for (int j = 0; j <= i; ++j) acc = acc + F(Rational(binomial(k - j, k - i))) * total[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)] = ((k - i) % 2 == 0) ? acc : -acc;
    }
    a[static_cast<std::size_t>(k)] = F(1);
    return Poly<F>(std::move(a));
}

} // namespace totalparts
