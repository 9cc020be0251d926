#pragma once

// Dense univariate polynomials over an exact field. The coefficient type F
// needs construction from int, the four field operations, == and an
// is_zero(F) overload reachable by lookup.

#include "totalparts/errors.hpp"
#include "totalparts/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace totalparts {

template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(F value) { return Poly(std::vector<F>{std::move(value)}); }
    static Poly monomial(F value, std::size_t power)
    {
        std::vector<F> c(power + 1, F(0));
        c[power] = std::move(value);
        return Poly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    std::span<const F> coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& leading() const { return c_.back(); }

    /// Coefficients padded with zeros to exactly `length` entries.
    std::vector<F> padded(std::size_t length) const
    {
        std::vector<F> out(length, F(0));
        std::copy_n(c_.begin(), std::min(length, c_.size()), out.begin());
        return out;
    }

    F eval(const F& x) const
    {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    F coefficient_sum() const
    {
        F acc(0);
        for (const F& v : c_) acc = acc + v;
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(d));
    }

    Poly monic() const
    {
        if (c_.empty()) return {};
        return *this * (F(1) / leading());
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) { return a * F(-1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const F& s)
    {
        std::vector<F> r(a.c_);
        for (F& v : r) v = v * s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws std::domain_error on a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den)
    {
        if (den.c_.empty()) throw std::domain_error("polynomial division by zero");
        std::vector<F> rem(num.c_);
        if (num.degree() < den.degree()) return {Poly{}, num};
        const std::size_t dd = den.c_.size() - 1;
        std::vector<F> quot(rem.size() - dd, F(0));
        const F lead_inv = F(1) / den.leading();
        for (std::size_t i = rem.size(); i-- > dd;) {
            if (is_zero(rem[i])) continue;
            F q = rem[i] * lead_inv;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - q * den.c_[j];
            quot[i - dd] = std::move(q);
        }
        rem.resize(dd);
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Quotient of an exact division; throws InexactDivision otherwise.
template <class F>
Poly<F> poly_divide_exact(const Poly<F>& num, const Poly<F>& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero_poly()) throw InexactDivision();
    return q;
}

/// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero_poly()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// True when f has no repeated roots over the algebraic closure.
template <class F>
bool is_squarefree(const Poly<F>& f)
{
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

template <class F>
Poly<F> pow(const Poly<F>& base, int exponent)
{
    Poly<F> result = Poly<F>::constant(F(1));
    for (int i = 0; i < exponent; ++i) result = result * base;
    return result;
}

/// 1 + x + ... + x^{k-1}.
template <class F>
Poly<F> psi(int k)
{
    return Poly<F>(std::vector<F>(static_cast<std::size_t>(k), F(1)));
}

} // namespace totalparts
