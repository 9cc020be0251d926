#include "doctest.h"

#include "totalparts/dice.hpp"

#include <random>

using namespace totalparts;

namespace {

using Q = Rational;

Die<Q> die(std::initializer_list<Q> p) { return Die<Q>(std::vector<Q>(p)); }

Die<Q> random_die(std::mt19937& rng, int k)
{
    std::uniform_int_distribution<int> w(0, 9);
    std::vector<int> weights(static_cast<std::size_t>(k));
    int total = 0;
    while (total == 0) {
        total = 0;
        for (auto& x : weights) total += (x = w(rng));
    }
    std::vector<Q> p;
    for (int x : weights) {
        Q q(x, total);
        q.canonicalize();
        p.push_back(q);
    }
    return Die<Q>(std::move(p));
}

} // namespace

TEST_CASE("die validation")
{
    CHECK_THROWS_AS(die({Q(1, 2), Q(1, 3)}), InvalidDistribution);
    CHECK_THROWS_AS(die({Q(1)}), InvalidDistribution);
    auto d = die({Q(1, 2), Q(-1, 2), Q(1)});
    CHECK(d.is_real());
    CHECK_FALSE(d.is_strict());
    CHECK(Die<Q>::fair(6).is_fair());
    CHECK(Die<Q>::fair(6).is_positive());
    CHECK(die({Q(1), Q(0)}).is_strict());
    CHECK_FALSE(die({Q(1), Q(0)}).is_positive());
}

TEST_CASE("parts to total examples")
{
    auto coins = Sack<Q>({Die<Q>::fair(2), Die<Q>::fair(2)});
    CHECK(parts_to_total(coins) == DistPoly<Q>({Q(1, 4), Q(1, 2), Q(1, 4)}));

    auto single = Sack<Q>({die({Q(1, 5), Q(0), Q(4, 5)})});
    CHECK(parts_to_total(single) == DistPoly<Q>({Q(1, 5), Q(0), Q(4, 5)}));

    auto mixed = Sack<Q>({Die<Q>::fair(2), die({Q(2, 9), Q(5, 9), Q(2, 9)})});
    CHECK(parts_to_total(mixed) == DistPoly<Q>({Q(1, 9), Q(7, 18), Q(7, 18), Q(1, 9)}));

    // trailing zeros keep the declared length
    auto zeros = Sack<Q>({die({Q(1), Q(0)}), die({Q(1), Q(0), Q(0)})});
    CHECK(parts_to_total(zeros).size() == 4);
}

TEST_CASE("reverse")
{
    auto s = Sack<Q>({die({Q(1, 3), Q(2, 3)}), die({Q(1, 3), Q(1, 2), Q(1, 6)})});
    auto r = reverse(s);
    CHECK(r == Sack<Q>({die({Q(2, 3), Q(1, 3)}), die({Q(1, 6), Q(1, 2), Q(1, 3)})}));
    CHECK(parts_to_total(r) == DistPoly<Q>({Q(1, 9), Q(7, 18), Q(7, 18), Q(1, 9)}));
    CHECK(parts_to_total(r) == parts_to_total(s).reversed());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = Sack<Q>({random_die(rng, 3), random_die(rng, 5)});
        CHECK(reverse(reverse(t)) == t);
        CHECK(parts_to_total(reverse(t)) == parts_to_total(t).reversed());
    }
}

TEST_CASE("exact division")
{
    using P = Poly<Q>;
    const P x1{1, 1};
    const P trinom{1, 1, 1};
    CHECK(poly_divide_exact(trinom * x1, x1) == trinom);

    const P chi16{1, -1, 1};
    CHECK(poly_divide_exact(psi<Q>(6), chi16) == trinom * x1);
    CHECK_THROWS_AS(poly_divide_exact(psi<Q>(6), P{1, 2}), InexactDivision);

    // chi_{3,10} has coefficients in Q(zeta_10)
    using C = CycElem;
    const Poly<C> chi3{C(1), -C::two_cos(10, 3), C(1)};
    const Poly<C> psi10 = psi<C>(10);
    const Poly<C> q = poly_divide_exact(psi10, chi3);
    CHECK(q.degree() == 7);
    CHECK(q * chi3 == psi10);
}

TEST_CASE("normalize to die")
{
    using P = Poly<Q>;
    auto fair = normalize_to_die(psi<Q>(6));
    CHECK(fair.die.is_fair());
    CHECK(fair.scale == Q(1, 6));

    const P chi16{1, -1, 1};
    auto row2 = normalize_to_die(chi16 * chi16 * P{1, 1});
    CHECK(row2.die == die({Q(1, 2), Q(-1, 2), Q(1, 2), Q(1, 2), Q(-1, 2), Q(1, 2)}));
    CHECK_THROWS_AS(normalize_to_die(P{-1, 1}), ZeroSum);
    CHECK(normalize_to_die(P{1}, 3).die == die({Q(1), Q(0), Q(0)}));
    CHECK_THROWS_AS(normalize_to_die(psi<Q>(4), 3), InvalidDistribution);
}

TEST_CASE("total properties")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_die(rng, 4), b = random_die(rng, 3), c = random_die(rng, 2);
        auto s1 = Sack<Q>({a, b, c});
        auto s2 = Sack<Q>({c, a, b});
        CHECK(parts_to_total(s1) == parts_to_total(s2));
        // strict sacks have nonnegative totals
        const auto total = parts_to_total(s1);
        for (const auto& f : total.coeffs()) CHECK(sgn(f) >= 0);
        // adding a fair die multiplies by psi_k / k
        auto with_fair = Sack<Q>({a, b, Die<Q>::fair(5)});
        auto expected = parts_to_total(Sack<Q>({a, b})).polynomial() * psi<Q>(5) * Q(1, 5);
        CHECK(parts_to_total(with_fair).polynomial() == expected);
    }
}

TEST_CASE("cyclotomic dice")
{
    auto lifted = to_cyc(Sack<Q>({Die<Q>::fair(2), Die<Q>::fair(3)}));
    CHECK(lifted.is_strict());
    CHECK(parts_to_total(lifted) == fair_total<CycElem>(std::vector<int>{2, 3}));
    const CycElem z = CycElem::zeta(3);
    // (1 - z, z) is a complex pseudodie
    Die<CycElem> complex_die({CycElem(1) - z, z});
    CHECK_FALSE(complex_die.is_real());
    CHECK_FALSE(complex_die.is_strict());
}
