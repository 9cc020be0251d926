#pragma once

// Dice, sacks, distribution polynomials and the part-to-total map. Every
// type is parameterized over the exact scalar: Rational or CycElem.

#include "totalparts/errors.hpp"
#include "totalparts/exactnum.hpp"
#include "totalparts/poly.hpp"

#include <algorithm>
#include <concepts>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace totalparts {

template <class F>
concept ExactScalar = std::same_as<F, Rational> || std::same_as<F, CycElem>;

namespace detail {

template <ExactScalar F>
bool is_real_scalar(const F& v)
{
    if constexpr (std::is_same_v<F, Rational>) return true;
    else return v.is_real();
}

/// Certified sign; requires a real value.
template <ExactScalar F>
int certified_sign(const F& v)
{
    return sign_of(v);
}

template <ExactScalar F>
F sum_of(std::span<const F> values)
{
    F acc(0);
    for (const F& v : values) acc = acc + v;
    return acc;
}

} // namespace detail

/// Pseudodie of order k: k scalars indexed 0..k-1 summing to exactly 1.
/// Trailing zeros are kept; the order is declared, not inferred.
template <ExactScalar F>
class Die {
public:
    explicit Die(std::vector<F> probs) : p_(std::move(probs))
    {
        if (p_.size() < 2) throw InvalidDistribution("a die needs order >= 2");
        if (!(detail::sum_of<F>(p_) == F(1)))
            throw InvalidDistribution("die probabilities must sum to 1");
    }

    static Die fair(int k)
    {
        return Die(std::vector<F>(static_cast<std::size_t>(k), F(Rational(1, k))));
    }

    int order() const { return static_cast<int>(p_.size()); }
    std::span<const F> probs() const { return p_; }
    const F& operator[](std::size_t i) const { return p_[i]; }

    Poly<F> polynomial() const { return Poly<F>(p_); }

    Die reversed() const { return Die(std::vector<F>(p_.rbegin(), p_.rend())); }

    bool is_fair() const
    {
        const F target(Rational(1, order()));
        return std::all_of(p_.begin(), p_.end(), [&](const F& v) { return v == target; });
    }
    bool is_palindromic() const { return std::equal(p_.begin(), p_.end(), p_.rbegin()); }
    bool is_real() const
    {
        return std::all_of(p_.begin(), p_.end(), [](const F& v) { return detail::is_real_scalar(v); });
    }
    /// Real with every entry certified >= 0.
    bool is_strict() const
    {
        return is_real() &&
               std::all_of(p_.begin(), p_.end(), [](const F& v) { return detail::certified_sign(v) >= 0; });
    }
    /// Real with every entry certified > 0.
    bool is_positive() const
    {
        return is_real() &&
               std::all_of(p_.begin(), p_.end(), [](const F& v) { return detail::certified_sign(v) > 0; });
    }

    friend bool operator==(const Die& a, const Die& b) { return a.p_ == b.p_; }

private:
    std::vector<F> p_;
};

/// Ordered, nonempty list of dice.
template <ExactScalar F>
class Sack {
public:
    explicit Sack(std::vector<Die<F>> dice) : dice_(std::move(dice))
    {
        if (dice_.empty()) throw InvalidDistribution("a sack needs at least one die");
    }

    std::span<const Die<F>> dice() const { return dice_; }
    std::size_t size() const { return dice_.size(); }
    const Die<F>& operator[](std::size_t j) const { return dice_[j]; }

    std::vector<int> type() const
    {
        std::vector<int> k;
        for (const auto& d : dice_) k.push_back(d.order());
        return k;
    }
    /// sum (k_j - 1), the top total.
    int T() const
    {
        int t = 0;
        for (const auto& d : dice_) t += d.order() - 1;
        return t;
    }
    int U() const { return T() + static_cast<int>(dice_.size()); }

    bool is_strict() const
    {
        return std::all_of(dice_.begin(), dice_.end(), [](const Die<F>& d) { return d.is_strict(); });
    }

    friend bool operator==(const Sack& a, const Sack& b) { return a.dice_ == b.dice_; }

private:
    std::vector<Die<F>> dice_;
};

/// Total distribution f_0..f_T of a sack; coefficients sum to 1.
template <ExactScalar F>
class DistPoly {
public:
    explicit DistPoly(std::vector<F> coeffs) : f_(std::move(coeffs))
    {
        if (f_.empty() || !(detail::sum_of<F>(f_) == F(1)))
            throw InvalidDistribution("total distribution must sum to 1");
    }

    std::span<const F> coeffs() const { return f_; }
    std::size_t size() const { return f_.size(); }
    const F& operator[](std::size_t t) const { return f_[t]; }
    Poly<F> polynomial() const { return Poly<F>(f_); }
    DistPoly reversed() const { return DistPoly(std::vector<F>(f_.rbegin(), f_.rend())); }

    friend bool operator==(const DistPoly& a, const DistPoly& b) { return a.f_ == b.f_; }

private:
    std::vector<F> f_;
};

/// Product of the dice's distribution polynomials, padded to length T + 1.
template <ExactScalar F>
DistPoly<F> parts_to_total(const Sack<F>& sack)
{
    Poly<F> acc = Poly<F>::constant(F(1));
    for (const auto& d : sack.dice()) acc = acc * d.polynomial();
    return DistPoly<F>(acc.padded(static_cast<std::size_t>(sack.T()) + 1));
}

template <ExactScalar F>
Sack<F> reverse(const Sack<F>& sack)
{
    std::vector<Die<F>> out;
    for (const auto& d : sack.dice()) out.push_back(d.reversed());
    return Sack<F>(std::move(out));
}

template <ExactScalar F>
struct NormalizedDie {
    Die<F> die;
    /// die(x) = scale * p(x)
    F scale;
};

/// Scales p so its coefficients sum to 1, as a die of the given order
/// (default: deg p + 1, at least 2). Throws ZeroSum when p(1) = 0.
template <ExactScalar F>
NormalizedDie<F> normalize_to_die(const Poly<F>& p, int order = 0)
{
    if (order == 0) order = std::max(2, p.degree() + 1);
    if (p.degree() >= order) throw InvalidDistribution("polynomial degree exceeds die order");
    const F sum = p.coefficient_sum();
    if (is_zero(sum)) throw ZeroSum();
    const F scale = F(1) / sum;
    return {Die<F>((p * scale).padded(static_cast<std::size_t>(order))), scale};
}

/// Exact lift of a rational die into the cyclotomic scalar type.
Die<CycElem> to_cyc(const Die<Rational>& d);
Sack<CycElem> to_cyc(const Sack<Rational>& s);

/// Total distribution of the all-fair sack of the given type.
template <ExactScalar F>
DistPoly<F> fair_total(std::span<const int> type)
{
    std::vector<Die<F>> dice;
    for (int k : type) dice.push_back(Die<F>::fair(k));
    return parts_to_total(Sack<F>(std::move(dice)));
}

} // namespace totalparts
