#include "doctest.h"

#include "totalparts/fairlab.hpp"
#include "totalparts/fibers.hpp"

#include <fstream>
#include <sstream>

using namespace totalparts;

namespace {

using Q = Rational;

struct OrderedPair {
    Die<CycElem> d;
    Die<CycElem> dhat;
};

std::vector<OrderedPair> table_pairs_6()
{
    std::ifstream in(TOTALPARTS_TEST_DATA "/fair_pairs_6.txt");
    REQUIRE(in);
    std::vector<OrderedPair> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::vector<CycElem> v;
        std::string cell;
        while (cells >> cell) v.push_back(parse_cyc(cell, 6));
        REQUIRE(v.size() == 12);
        rows.push_back({Die<CycElem>({v.begin(), v.begin() + 6}), Die<CycElem>({v.begin() + 6, v.end()})});
    }
    return rows;
}

bool contains(const std::vector<OrderedPair>& pairs, const Die<CycElem>& d, const Die<CycElem>& dhat)
{
    return std::any_of(pairs.begin(), pairs.end(), [&](const OrderedPair& p) { return p.d == d && p.dhat == dhat; });
}

} // namespace

TEST_CASE("fair pair counts")
{
    CHECK(fair_pair_count(2) == 1);
    CHECK(fair_pair_count(3) == 3);
    CHECK(fair_pair_count(6) == 51);
    CHECK(fair_pair_count(20) == Integer("128996853"));
    for (int k = 2; k <= 20; ++k) {
        Integer enumerated = 0;
        for (const auto& c : multiplicity_vectors_by_ell(k)) enumerated += c;
        CHECK(enumerated == fair_pair_count(k));
    }
    int visited = 0;
    for_each_multiplicity_vector(3, [&](const MultiplicityVector& v) {
        CHECK(v.r.size() == 2);
        ++visited;
    });
    CHECK(visited == 3);
}

TEST_CASE("ramification identity")
{
    auto six = ramification_check(6);
    CHECK(six.counts == std::vector<Integer>{1, 20, 30});
    CHECK(six.lhs == 252);
    CHECK(six.rhs == 252);
    CHECK(ramification_check(2).lhs == 2);
    auto five = ramification_check(5);
    CHECK(five.lhs == 70);
    CHECK(five.rhs == 70);
    for (int k = 2; k <= 20; ++k) CHECK(ramification_check(k).holds());
}

TEST_CASE("fair pairs of order 6 match the table")
{
    auto pairs = enumerate_fair_pairs(6);
    REQUIRE(pairs.size() == 51);

    // the table lists one pair per unordered class; add the swaps
    std::vector<OrderedPair> expected;
    for (const auto& row : table_pairs_6()) {
        expected.push_back(row);
        if (!(row.d == row.dhat)) expected.push_back({row.dhat, row.d});
    }
    CHECK(expected.size() == 51);
    for (const auto& p : pairs) CHECK(contains(expected, p.d, p.dhat));
    std::vector<OrderedPair> got;
    for (const auto& p : pairs) got.push_back({p.d, p.dhat});
    for (const auto& e : expected) CHECK(contains(got, e.d, e.dhat));

    int strict = 0, real = 0;
    for (const auto& p : pairs) {
        strict += p.strict;
        real += p.real;
    }
    CHECK(strict == 1);
    CHECK(real == 3); // the fair pair and both orientations of the second row

    const Poly<CycElem> target = psi<CycElem>(6) * psi<CycElem>(6) * CycElem(Q(1, 36));
    for (const auto& p : pairs) CHECK(p.d.polynomial() * p.dhat.polynomial() == target);

    // canonical order starts with ell = 0, which is the fair pair
    CHECK(pairs.front().d.is_fair());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto& a = pairs[i - 1].r;
        const auto& b = pairs[i].r;
        CHECK((a.ell() < b.ell() || (a.ell() == b.ell() && a.r < b.r)));
    }
}

TEST_CASE("complement swaps the dice")
{
    for (int k : {4, 5, 7}) {
        for (const auto& p : enumerate_fair_pairs(k)) {
            auto q = make_fair_pair(k, p.r.complement());
            CHECK(q.d == p.dhat);
            CHECK(q.dhat == p.d);
        }
    }
    auto two = enumerate_fair_pairs(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].d.is_fair());
    CHECK(two[0].strict);
}

TEST_CASE("strict fair pairs by order")
{
    for (int k : {2, 3, 4, 5, 6, 7, 8, 9, 11}) CHECK_MESSAGE(strict_fair_pairs(k).size() == 1, "k = " << k);
    for (int k : {10, 12, 13}) CHECK_MESSAGE(strict_fair_pairs(k).size() > 1, "k = " << k);
}

TEST_CASE("craps cannot be made fair")
{
    auto report = craps_fair_impossibility();
    CHECK(report.only_fair_is_strict);
    CHECK(report.real_pairs == 3);
    CHECK(report.candidate_unnormalized == std::vector<Q>{1, -1, 1, 1, -1, 1});
    CHECK_FALSE(report.candidate.strict);
    CHECK(report.candidate.real);
    auto rows = table_pairs_6();
    CHECK(report.candidate.d == rows[1].d);
    CHECK(report.candidate.dhat == rows[1].dhat);
}

TEST_CASE("coin with a die")
{
    for (int k : {3, 4, 6, 7}) {
        auto report = coin_die_fair_check(k);
        CHECK_MESSAGE(report.only_fair_strict(), "k = " << k);
        // one outcome per distinct root handed to the coin
        CHECK(static_cast<int>(report.outcomes.size()) == (k % 2 == 0 ? k - 1 : k));
    }
}

TEST_CASE("sicherman dice")
{
    auto six = sicherman_search(6, 1);
    REQUIRE(six.size() == 2);
    int standard = 0;
    for (const auto& p : six) {
        if (p.is_standard()) {
            ++standard;
            continue;
        }
        CHECK(p.first == std::vector<int>{1, 2, 2, 3, 3, 4});
        CHECK(p.second == std::vector<int>{1, 3, 4, 5, 6, 8});
    }
    CHECK(standard == 1);

    auto four = sicherman_search(4, 1);
    CHECK(four.size() == 2);
    CHECK(std::count_if(four.begin(), four.end(), [](const LabeledPair& p) { return !p.is_standard(); }) == 1);
    // allowing label 0 admits shifted pairs as well
    CHECK(sicherman_search(6, 0).size() > six.size());
}
