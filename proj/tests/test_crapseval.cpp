#include "doctest.h"

#include "totalparts/crapseval.hpp"
#include "totalparts/fairlab.hpp"

using namespace totalparts;

namespace {

using Q = Rational;

Q canon(Q q)
{
    q.canonicalize();
    return q;
}

/// Totals of two fair dice counted over the 36 outcomes.
std::vector<Q> brute_fair_totals()
{
    std::vector<int> count(11, 0);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) ++count[static_cast<std::size_t>(a + b - 2)];
    std::vector<Q> f;
    for (int c : count) f.push_back(canon(Q(c, 36)));
    return f;
}

/// Game value by iterating the point stage as a Markov chain until the
/// unresolved mass is negligible; independent of the closed form.
double simulate_chain(const std::vector<Q>& f, int rounds)
{
    auto p = [&](int t) { return f[static_cast<std::size_t>(t - 2)].get_d(); };
    double win = p(7) + p(11);
    for (int t : {4, 5, 6, 8, 9, 10}) {
        double alive = p(t);
        for (int i = 0; i < rounds; ++i) {
            win += alive * p(t);
            alive *= 1 - p(t) - p(7);
        }
    }
    return win;
}

} // namespace

TEST_CASE("fair craps")
{
    const auto fair = CrapsTotals::fair();
    CHECK(std::vector<Q>(fair.values().begin(), fair.values().end()) == brute_fair_totals());
    const auto r = craps_evaluate(fair);
    const std::vector<Q> row = {0, 0, canon(Q(3, 9)), canon(Q(4, 10)), canon(Q(5, 11)), 1,
                                canon(Q(5, 11)), canon(Q(4, 10)), canon(Q(3, 9)), 1, 0};
    CHECK(std::vector<Q>(r.p_w_given_t.begin(), r.p_w_given_t.end()) == row);

    // oracle: P(7) + P(11) + sum over points of P(t)^2 / (P(t) + P(7))
    const auto f = brute_fair_totals();
    Q oracle = f[5] + f[9];
    for (int t : {4, 5, 6, 8, 9, 10}) {
        const Q& pt = f[static_cast<std::size_t>(t - 2)];
        oracle += pt * pt / (pt + f[5]);
    }
    CHECK(canon(oracle) == Q(244, 495));
    CHECK(r.p_win == Q(244, 495));
    CHECK(std::abs(simulate_chain(f, 400) - 244.0 / 495.0) < 1e-12);
    CHECK(r.p_win + r.p_lose == 1);
    CHECK(r.differs_from_printed);
    CHECK(r.undefined_conditionals.empty());
    for (std::size_t i = 0; i < 11; ++i) CHECK(r.p_t_and_w[i] == r.p_t[i] * r.p_w_given_t[i]);
    CHECK(r.p_t_and_w[5] == Q(1, 6));
    CHECK(r.p_t_and_w[9] == canon(Q(2, 36)));
    CHECK(r.table().find("244/495") != std::string::npos);
}

TEST_CASE("degenerate totals")
{
    std::vector<Q> sevens(11, 0);
    sevens[5] = 1;
    CHECK(craps_evaluate(CrapsTotals(sevens)).p_win == 1);

    std::vector<Q> nines(11, 0);
    nines[7] = 1;
    auto r = craps_evaluate(CrapsTotals(nines));
    CHECK(r.p_win == 1); // cannot seven out
    CHECK(geometric_tree_check(CrapsTotals(nines), 9, 3).closed_form == 1);

    std::vector<Q> split(11, 0);
    split[0] = Q(1, 2);
    split[2] = Q(1, 2);
    auto u = craps_evaluate(CrapsTotals(split));
    // 4 always converts without sevens; the other points carry no mass
    CHECK(u.undefined_conditionals == std::vector<int>{5, 6, 8, 9, 10});
    CHECK(u.p_win == Q(1, 2));
    CHECK_FALSE(u.differs_from_printed);

    CHECK_THROWS_AS(CrapsTotals(std::vector<Q>(10, Q(1, 10))), InvalidDistribution);
    std::vector<Q> negative = brute_fair_totals();
    negative[0] = -negative[0];
    negative[1] += 2 * negative[1];
    CHECK_THROWS_AS(CrapsTotals{negative}, InvalidDistribution);
    CHECK_THROWS_AS(CrapsTotals(std::vector<Q>(11, Q(1, 12))), InvalidDistribution);
}

TEST_CASE("geometric tree")
{
    const auto g = geometric_tree_check(CrapsTotals::fair(), 9, 50);
    CHECK(g.first_term == Q(1, 9));
    CHECK(g.ratio == canon(Q(26, 36)));
    CHECK(g.closed_form == canon(Q(4, 10)));
    REQUIRE(g.partial_sums.size() == 50);
    for (std::size_t i = 1; i < g.partial_sums.size(); ++i) CHECK(g.partial_sums[i - 1] < g.partial_sums[i]);
    CHECK(g.partial_sums.back() < g.closed_form);
    CHECK(Q(g.closed_form - g.partial_sums.back()) < Q(1, 1000000));
    // the tail is first_term * ratio^n / (1 - ratio)
    Q tail = g.first_term / (1 - g.ratio);
    for (int i = 0; i < 50; ++i) tail *= g.ratio;
    CHECK(g.closed_form - g.partial_sums.back() == tail);
    CHECK_THROWS_AS(geometric_tree_check(CrapsTotals::fair(), 7, 3), InvalidDistribution);
}

TEST_CASE("craps from sacks")
{
    const auto fair_report = craps_evaluate(CrapsTotals::fair());
    const auto fair_sack = Sack<Q>({Die<Q>::fair(6), Die<Q>::fair(6)});
    CHECK(craps_from_sack(fair_sack).p_w_given_t == fair_report.p_w_given_t);
    CHECK(craps_from_sack(fair_sack).p_win == fair_report.p_win);

    // every fair-total pair of order 6 that is strict gives the fair game
    for (const auto& p : strict_fair_pairs(6)) {
        auto r = craps_from_sack(Sack<CycElem>({p.d, p.dhat}));
        CHECK(r.p_win == fair_report.p_win);
    }
    // a nonstrict pair with fair total plays identically
    auto candidate = craps_fair_impossibility().candidate;
    CHECK(craps_from_sack(Sack<CycElem>({candidate.d, candidate.dhat})).p_t_and_w == fair_report.p_t_and_w);

    Die<Q> ones({1, 0, 0, 0, 0, 0});
    CHECK(craps_from_sack(Sack<Q>({ones, ones})).p_win == 0);
    CHECK_THROWS_AS(craps_from_sack(Sack<Q>({Die<Q>::fair(6), Die<Q>::fair(5)})), InvalidDistribution);
}
