#include "totalparts/fibers.hpp"

#include <cmath>
#include <complex>
#include <numeric>

namespace totalparts {

SackType::SackType(std::vector<int> orders) : k_(std::move(orders))
{
    if (k_.empty()) throw InvalidDistribution("sack type must be nonempty");
    for (int k : k_)
        if (k < 2) throw InvalidDistribution("every order in a sack type must be >= 2");
}

int SackType::T() const
{
    int t = 0;
    for (int k : k_) t += k - 1;
    return t;
}

Integer fiber_degree(const SackType& type)
{
    Integer result = factorial(type.T());
    for (int k : type.orders()) result /= factorial(k - 1);
    return result;
}

namespace detail {

namespace {

void distribute(std::span<const int> mult, std::span<const int> degree, std::vector<int>& room,
                std::size_t factor, std::size_t slot, int left, Assignment& current,
                std::vector<Assignment>& out)
{
    if (factor == mult.size()) {
        out.push_back(current);
        return;
    }
    const std::size_t slots = room.size();
    if (slot + 1 == slots) {
        // last slot takes the remainder
        const int need = left * degree[factor];
        if (need > room[slot]) return;
        current[factor][slot] = left;
        room[slot] -= need;
        distribute(mult, degree, room, factor + 1, 0,
                   factor + 1 < mult.size() ? mult[factor + 1] : 0, current, out);
        room[slot] += need;
        current[factor][slot] = 0;
        return;
    }
    for (int c = 0; c <= left; ++c) {
        const int need = c * degree[factor];
        if (need > room[slot]) break;
        current[factor][slot] = c;
        room[slot] -= need;
        distribute(mult, degree, room, factor, slot + 1, left - c, current, out);
        room[slot] += need;
    }
    current[factor][slot] = 0;
}

} // namespace

std::vector<Assignment> enumerate_assignments(std::span<const int> multiplicities,
                                              std::span<const int> degrees,
                                              std::span<const int> capacities)
{
    std::vector<Assignment> out;
    std::vector<int> room(capacities.begin(), capacities.end());
    Assignment current(multiplicities.size(), std::vector<int>(capacities.size(), 0));
    if (multiplicities.empty()) {
        out.push_back(current);
        return out;
    }
    distribute(multiplicities, degrees, room, 0, 0, multiplicities[0], current, out);
    return out;
}

} // namespace detail

std::optional<Rational> exact_sqrt(const Rational& q)
{
    if (sgn(q) < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    return Rational(a, b);
}

CoinPairSolution coin_pair_solve(const DistPoly<Rational>& total)
{
    if (total.size() != 3) throw InvalidDistribution("a pair of coins has a total of length 3");
    const Rational& r = total[0];
    const Rational& s = total[1];
    const Rational& t = total[2];
    CoinPairSolution out;
    out.sum = 2 * r + s;
    out.product = r;
    out.discriminant = s * s - 4 * r * t;
    if (auto root = exact_sqrt(out.discriminant)) {
        Rational p = (out.sum - *root) / 2;
        Rational q = (out.sum + *root) / 2;
        out.roots = std::make_pair(p, q);
    }
    return out;
}

namespace {

using Complex = std::complex<long double>;

/// Durand-Kerner approximations of all roots of a squarefree polynomial.
std::vector<Complex> approximate_roots(const Poly<Rational>& p)
{
    const int n = p.degree();
    std::vector<long double> c;
    for (const Rational& q : p.coeffs()) c.push_back(static_cast<long double>(q.get_d()));
    const long double lead = c.back();
    for (auto& v : c) v /= lead;
    long double bound = 1;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(c[static_cast<std::size_t>(i)]));

    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Complex seed(0.4L, 0.9L);
    Complex w = 1;
    for (auto& v : z) {
        v = w * bound * 0.5L;
        w *= seed;
    }
    auto eval = [&](Complex x) {
        Complex acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            Complex den = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) den *= z[i] - z[j];
            if (std::abs(den) == 0) den = 1e-30L;
            Complex step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L) break;
    }
    return z;
}

/// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(long double x, const Integer& max_den)
{
    std::vector<Rational> out;
    Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1; // h_{-1}, h_{-2} style seeds
    long double v = x;
    for (int step = 0; step < 64; ++step) {
        long double a = std::floor(v);
        if (std::abs(a) > 1e18L) break;
        Integer ai(static_cast<double>(a));
        Integer h = ai * h0 + h1, k = ai * k0 + k1;
        if (k > max_den) break;
        out.emplace_back(h, k);
        out.back().canonicalize();
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        long double frac = v - a;
        if (frac < 1e-30L) break;
        v = 1 / frac;
    }
    return out;
}

} // namespace

RationalRoots rational_roots(const Poly<Rational>& p)
{
    RationalRoots out;
    if (p.degree() < 1) {
        out.residual = p.is_zero_poly() ? p : Poly<Rational>::constant(1);
        return out;
    }
    Poly<Rational> rest = p.monic();
    const Poly<Rational> squarefree = poly_divide_exact(rest, gcd(rest, rest.derivative())).monic();

    // rational roots p/q of the primitive integer form have q | leading coefficient
    Integer den_lcm = 1;
    for (const Rational& c : squarefree.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer lead_bound = den_lcm;

    std::vector<Rational> found;
    if (squarefree.degree() == 1) {
        found.push_back(-squarefree.coeff(0));
    } else {
        for (const Complex& z : approximate_roots(squarefree)) {
            if (std::abs(z.imag()) > 1e-6L * (1 + std::abs(z.real()))) continue;
            for (const Rational& cand : convergents(z.real(), lead_bound)) {
                if (std::abs(cand.get_d() - static_cast<double>(z.real())) > 1e-9 * (1 + std::abs(cand.get_d()))) continue;
                if (is_zero(squarefree.eval(cand))) {
                    if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
                    break;
                }
            }
        }
    }
    for (const Rational& r : found) {
        const Poly<Rational> linear{-r, Rational(1)};
        for (;;) {
            auto [q, rem] = divmod(rest, linear);
            if (!rem.is_zero_poly()) break;
            out.roots.push_back(r);
            rest = q;
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual = rest.monic();
    return out;
}

CoinParts coins_parts_from_total(const DistPoly<Rational>& total, int n)
{
    if (static_cast<int>(total.size()) != n + 1) throw InvalidDistribution("a sack of n coins has a total of length n + 1");
    CoinParts out;
    // With p_j the face-0 probability, the count of face-0 outcomes is n - t,
    // so e_k = sum_{t >= k} C(t, k) f_{n - t}.
    out.e.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        for (int t = k; t <= n; ++t) out.e[static_cast<std::size_t>(k)] += Rational(binomial(t, k)) * total[static_cast<std::size_t>(n - t)];
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Rational& e = out.e[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(n - i)] = (i % 2 == 0) ? e : Rational(-e);
    }
    out.monic = Poly<Rational>(std::move(c));
    auto roots = rational_roots(out.monic);
    out.probs = std::move(roots.roots);
    out.residual = std::move(roots.residual);
    return out;
}

} // namespace totalparts
