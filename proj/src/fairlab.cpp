#include "totalparts/fairlab.hpp"

#include "totalparts/fibers.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace totalparts {

int MultiplicityVector::ell() const
{
    return static_cast<int>(std::count(r.begin(), r.end(), 2));
}

MultiplicityVector MultiplicityVector::complement() const
{
    MultiplicityVector out{r};
    for (int& v : out.r) v = 2 - v;
    return out;
}

bool MultiplicityVector::is_conjugation_symmetric() const
{
    return std::equal(r.begin(), r.end(), r.rbegin());
}

Integer fair_pair_count(int k)
{
    if (k < 2) throw DomainError("order must be >= 2");
    Integer total = 0;
    for (int l = 0; 2 * l <= k - 1; ++l) total += binomial(k - 1, l) * binomial(k - 1 - l, k - 1 - 2 * l);
    return total;
}

namespace {

/// Lexicographic walk over vectors with the given numbers of 0s, 1s and 2s.
template <class Visit>
void walk(std::vector<int>& r, std::size_t pos, int zeros, int ones, int twos, Visit& visit)
{
    if (pos == r.size()) {
        visit(r);
        return;
    }
    if (zeros > 0) {
        r[pos] = 0;
        walk(r, pos + 1, zeros - 1, ones, twos, visit);
    }
    if (ones > 0) {
        r[pos] = 1;
        walk(r, pos + 1, zeros, ones - 1, twos, visit);
    }
    if (twos > 0) {
        r[pos] = 2;
        walk(r, pos + 1, zeros, ones, twos - 1, visit);
    }
}

/// Counts leaves of the same walk without touching a vector.
long long count_leaves(int zeros, int ones, int twos)
{
    if (zeros + ones + twos == 0) return 1;
    long long n = 0;
    if (zeros > 0) n += count_leaves(zeros - 1, ones, twos);
    if (ones > 0) n += count_leaves(zeros, ones - 1, twos);
    if (twos > 0) n += count_leaves(zeros, ones, twos - 1);
    return n;
}

/// prod (x - zeta_k^m)^{r_m}
Poly<CycElem> root_product(int k, const MultiplicityVector& r)
{
    std::vector<CycElem> c{CycElem(1)};
    for (int m = 1; m < k; ++m) {
        const CycElem root = CycElem::zeta(k, m);
        for (int rep = 0; rep < r.r[static_cast<std::size_t>(m - 1)]; ++rep) {
            std::vector<CycElem> next(c.size() + 1, CycElem(0));
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] = next[i + 1] + c[i];
                next[i] = next[i] - root * c[i];
            }
            c = std::move(next);
        }
    }
    return Poly<CycElem>(std::move(c));
}

} // namespace

void for_each_multiplicity_vector(int k, const std::function<void(const MultiplicityVector&)>& visit)
{
    const int n = k - 1;
    MultiplicityVector v{std::vector<int>(static_cast<std::size_t>(n), 0)};
    auto leaf = [&](const std::vector<int>& r) {
        v.r = r;
        visit(v);
    };
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    for (int l = 0; 2 * l <= n; ++l) walk(r, 0, l, n - 2 * l, l, leaf);
}

std::vector<Integer> multiplicity_vectors_by_ell(int k, int workers)
{
    const int n = k - 1;
    const int levels = n / 2 + 1;
    std::vector<long long> counts(static_cast<std::size_t>(levels), 0);
    // split on the first entry so workers share the walk
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(workers)
    for (int l = 0; l < levels; ++l) {
        for (int first = 0; first < 3; ++first) {
            int zeros = l, ones = n - 2 * l, twos = l;
            int& slot = first == 0 ? zeros : (first == 1 ? ones : twos);
            if (n == 0 || slot == 0) continue;
            --slot;
            const long long c = count_leaves(zeros, ones, twos);
#pragma omp atomic
            counts[static_cast<std::size_t>(l)] += c;
        }
    }
    if (n == 0) counts[0] = 1;
    std::vector<Integer> out;
    for (long long c : counts) out.emplace_back(static_cast<long>(c));
    return out;
}

RamificationCheck ramification_check(int k, int workers)
{
    RamificationCheck out;
    out.counts = multiplicity_vectors_by_ell(k, workers);
    out.lhs = 0;
    for (std::size_t l = 0; l < out.counts.size(); ++l) {
        Integer weight;
        mpz_ui_pow_ui(weight.get_mpz_t(), 2, static_cast<unsigned long>(k - 1 - 2 * static_cast<int>(l)));
        out.lhs += weight * out.counts[l];
    }
    out.rhs = fiber_degree(SackType({k, k}));
    return out;
}

FairPair make_fair_pair(int k, const MultiplicityVector& r)
{
    FairPair p{normalize_to_die(root_product(k, r), k).die,
               normalize_to_die(root_product(k, r.complement()), k).die, r};
    p.real = r.is_conjugation_symmetric();
    p.strict = p.real && p.d.is_strict() && p.dhat.is_strict();
    p.palindromic = p.d.is_palindromic() && p.dhat.is_palindromic();
    return p;
}

std::vector<FairPair> enumerate_fair_pairs(int k, int workers, bool real_only)
{
    std::vector<MultiplicityVector> vectors;
    for_each_multiplicity_vector(k, [&](const MultiplicityVector& v) {
        if (!real_only || v.is_conjugation_symmetric()) vectors.push_back(v);
    });
    std::vector<std::optional<FairPair>> built(vectors.size());
    const long count = static_cast<long>(vectors.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long i = 0; i < count; ++i) built[static_cast<std::size_t>(i)] = make_fair_pair(k, vectors[static_cast<std::size_t>(i)]);
    std::vector<FairPair> out;
    out.reserve(built.size());
    for (auto& p : built) out.push_back(std::move(*p));
    return out;
}

std::vector<FairPair> strict_fair_pairs(int k, int workers)
{
    auto real = enumerate_fair_pairs(k, workers, true);
    std::vector<FairPair> out;
    for (auto& p : real)
        if (p.strict) out.push_back(std::move(p));
    return out;
}

CrapsFairReport craps_fair_impossibility()
{
    // chi_{1,6} twice (roots zeta^1, zeta^5) and x + 1 (root zeta^3)
    const MultiplicityVector r{{2, 0, 1, 0, 2}};
    std::vector<FairPair> strict;
    int real = 0;
    for (auto& p : enumerate_fair_pairs(6)) {
        if (p.real) ++real;
        if (p.strict) strict.push_back(p);
    }
    const bool only_fair = strict.size() == 1 && strict[0].d.is_fair() && strict[0].dhat.is_fair();
    std::vector<Rational> unnormalized;
    const Poly<CycElem> product = root_product(6, r);
    for (const CycElem& c : product.coeffs()) unnormalized.push_back(c.to_rational());
    return {std::move(strict), only_fair, make_fair_pair(6, r), std::move(unnormalized), real};
}

CoinDieReport coin_die_fair_check(int k, int workers)
{
    FactorMultiset<CycElem> factors{Factor<CycElem>::linear(CycElem(-1))};
    for (int m = 1; m < k; ++m) factors.push_back(Factor<CycElem>::linear(CycElem::zeta(k, m)));
    CoinDieReport report;
    report.k = k;
    report.outcomes = enumerate_fiber(factors, SackType({2, k}), workers);
    for (const auto& s : report.outcomes) {
        if (!s.is_strict()) continue;
        ++report.strict;
        if (!(s[0].is_fair() && s[1].is_fair())) ++report.strict_nonfair;
    }
    return report;
}

bool LabeledPair::is_standard() const
{
    for (std::size_t i = 0; i < first.size(); ++i)
        if (first[i] != static_cast<int>(i) + 1) return false;
    return first == second;
}

std::vector<LabeledPair> sicherman_search(int k, int label_min)
{
    if (k < 2) throw DomainError("order must be >= 2");
    using P = Poly<Rational>;
    std::vector<P> phis;
    for (int d = 2; d <= k; ++d)
        if (k % d == 0) phis.push_back(cyclotomic_polynomial(d));
    const P x{0, 1};

    auto labels_of = [&](const P& p) -> std::optional<std::vector<int>> {
        std::vector<int> labels;
        for (int i = 0; i <= p.degree(); ++i) {
            const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
            if (sgn(c) < 0 || c.get_den() != 1) return std::nullopt;
            if (sgn(c) > 0 && i < label_min) return std::nullopt;
            for (long rep = 0; rep < c.get_num().get_si(); ++rep) labels.push_back(i);
        }
        if (static_cast<int>(labels.size()) != k) return std::nullopt;
        return labels;
    };

    std::set<LabeledPair> found;
    // odometer over exponents in {0, 1, 2} for x and each Phi_d
    const std::size_t slots = phis.size() + 1;
    std::vector<int> digit(slots, 0);
    for (;;) {
        P a = pow(x, digit[0]), b = pow(x, 2 - digit[0]);
        for (std::size_t i = 0; i < phis.size(); ++i) {
            a = a * pow(phis[i], digit[i + 1]);
            b = b * pow(phis[i], 2 - digit[i + 1]);
        }
        auto la = labels_of(a), lb = labels_of(b);
        if (la && lb) {
            LabeledPair pair{*la, *lb};
            if (pair.second < pair.first) std::swap(pair.first, pair.second);
            found.insert(pair);
        }
        std::size_t i = 0;
        while (i < slots && digit[i] == 2) digit[i++] = 0;
        if (i == slots) break;
        ++digit[i];
    }
    return {found.begin(), found.end()};
}

} // namespace totalparts
