#include "totalparts/exotica.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace totalparts {

const double tridecahedral_d[7] = {0.0992916, 0.0210685, 0.1381701, 0.0410895, 0.0693196, 0.1241391, 0.0138431};
const double tridecahedral_dhat[7] = {0.0595938, 0.1065425, 0.0732460, 0.0499115, 0.0997570, 0.0877406, 0.0464172};

namespace {

const Rational half(1, 2);

/// A real irreducible factor of psi_k psi_k'.
struct RealFactor {
    Rational q;
    int multiplicity = 0;
    int fair = 0; // copies owned by the fair first die
    std::vector<double> coeffs;
    Poly<CycElem> exact;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

std::vector<RealFactor> real_factors(int k, int kprime)
{
    std::map<Rational, RealFactor> byq;
    auto add = [&](const Rational& q, bool first) {
        auto& f = byq[q];
        f.q = q;
        ++f.multiplicity;
        if (first) ++f.fair;
    };
    for (int which = 0; which < 2; ++which) {
        const int order = which == 0 ? k : kprime;
        for (int m = 1; 2 * m < order; ++m) {
            Rational q(m, order);
            q.canonicalize();
            add(q, which == 0);
        }
        if (order % 2 == 0) add(half, which == 0);
    }
    std::vector<RealFactor> out;
    for (auto& [q, f] : byq) {
        if (q == half) {
            f.coeffs = {1.0, 1.0};
            f.exact = Poly<CycElem>{CycElem(1), CycElem(1)};
        } else {
            const int den = static_cast<int>(q.get_den().get_si());
            const long num = q.get_num().get_si();
            f.coeffs = {1.0, -2.0 * std::cos(2.0 * M_PI * q.get_d()), 1.0};
            f.exact = Poly<CycElem>{CycElem(1), -CycElem::two_cos(den, num), CycElem(1)};
        }
        out.push_back(std::move(f));
    }
    return out;
}

void enumerate_exponents(const std::vector<RealFactor>& factors, std::size_t i, int left, std::vector<int>& c,
                         std::vector<std::vector<int>>& out)
{
    if (i == factors.size()) {
        if (left == 0) out.push_back(c);
        return;
    }
    const int deg = factors[i].degree();
    for (int e = 0; e <= factors[i].multiplicity && e * deg <= left; ++e) {
        c[i] = e;
        enumerate_exponents(factors, i + 1, left - e * deg, c, out);
    }
    c[i] = 0;
}

/// +1: every coefficient certainly positive; -1: some coefficient certainly
/// negative; 0: undecided. The bound covers rounding in the cosines and in
/// the sequential products.
int float_verdict(const std::vector<RealFactor>& factors, const std::vector<int>& exps)
{
    std::vector<double> p{1.0}, a{1.0};
    int steps = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (int rep = 0; rep < exps[i]; ++rep) {
            const auto& f = factors[i].coeffs;
            std::vector<double> np(p.size() + f.size() - 1, 0.0), na(np.size(), 0.0);
            for (std::size_t s = 0; s < p.size(); ++s)
                for (std::size_t t = 0; t < f.size(); ++t) {
                    np[s + t] += p[s] * f[t];
                    // cosines carry absolute error, so no magnitude below 1
                    na[s + t] += a[s] * std::max(std::abs(f[t]), 1.0);
                }
            p = std::move(np);
            a = std::move(na);
            ++steps;
        }
    }
    const double u = std::numeric_limits<double>::epsilon();
    int verdict = 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double tol = 64.0 * (steps + 2) * u * a[j];
        if (p[j] < -tol) return -1;
        if (p[j] <= tol) verdict = 0;
    }
    return verdict;
}

Poly<CycElem> exact_product(const std::vector<RealFactor>& factors, const std::vector<int>& exps)
{
    Poly<CycElem> acc = Poly<CycElem>::constant(CycElem(1));
    for (std::size_t i = 0; i < factors.size(); ++i) acc = acc * pow(factors[i].exact, exps[i]);
    return acc;
}

SwapSpec swap_of(int k, int kprime, const std::vector<RealFactor>& factors, const std::vector<int>& c)
{
    SwapSpec s{k, kprime, {}, {}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (int rep = c[i]; rep < factors[i].fair; ++rep) s.give.push_back(factors[i].q);
        for (int rep = factors[i].fair; rep < c[i]; ++rep) s.take.push_back(factors[i].q);
    }
    return s;
}

ExoticCensus census(int k, int kprime, int workers, bool filter)
{
    if (k < 2 || kprime < k) throw DomainError("exotic search needs 2 <= k <= k'");
    const auto factors = real_factors(k, kprime);
    std::vector<std::vector<int>> candidates;
    {
        std::vector<int> c(factors.size(), 0);
        enumerate_exponents(factors, 0, k - 1, c, candidates);
    }
    // drop the fair assignment and, on the diagonal, one orientation of each pair
    std::vector<std::vector<int>> kept;
    for (auto& c : candidates) {
        const SwapSpec s = swap_of(k, kprime, factors, c);
        if (s.give.empty() && s.take.empty()) continue;
        if (k == kprime && !(s.give < s.take)) continue;
        kept.push_back(std::move(c));
    }

    std::vector<std::optional<ExoticSack>> found(kept.size());
    long fallbacks = 0;
    const long count = static_cast<long>(kept.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : fallbacks)
    for (long idx = 0; idx < count; ++idx) {
        const auto& c = kept[static_cast<std::size_t>(idx)];
        std::vector<int> rest(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) rest[i] = factors[i].multiplicity - c[i];
        if (filter) {
            const int v1 = float_verdict(factors, c);
            if (v1 < 0) continue;
            const int v2 = float_verdict(factors, rest);
            if (v2 < 0) continue;
            if (v1 == 0 || v2 == 0) ++fallbacks;
        }
        Die<CycElem> d = normalize_to_die(exact_product(factors, c), k).die;
        if (!d.is_strict()) continue;
        Die<CycElem> dhat = normalize_to_die(exact_product(factors, rest), kprime).die;
        if (!dhat.is_strict()) continue;
        const bool positive = d.is_positive() && dhat.is_positive();
        found[static_cast<std::size_t>(idx)] =
            ExoticSack{Sack<CycElem>({std::move(d), std::move(dhat)}), swap_of(k, kprime, factors, c), positive};
    }
    ExoticCensus out;
    out.k = k;
    out.kprime = kprime;
    out.exact_fallbacks = fallbacks;
    for (auto& s : found)
        if (s) out.sacks.push_back(std::move(*s));
    std::sort(out.sacks.begin(), out.sacks.end(),
              [](const ExoticSack& a, const ExoticSack& b) { return a.swap < b.swap; });
    return out;
}

std::vector<int> scan_weights(int ell)
{
    if (ell == 3) return {1, 1, 1};
    if (ell == 4) return {1, 0, 1};
    throw DomainError("scan order must be 3 or 4");
}

bool small_die_strict(int ell, int k, int m)
{
    // chi_{m,k} (x + 1)^{ell - 3} is nonnegative iff cos(2 pi m / k) <= 0 or <= 1/2
    return ell == 3 ? 4 * m >= k : 6 * m >= k;
}

ScanRecord finish(ScanRecord r)
{
    if (!r.S.empty()) {
        r.M = r.S.back();
        Rational q(*r.M, r.k);
        q.canonicalize();
        r.R = q;
    }
    return r;
}

} // namespace

std::string SwapSpec::to_string() const
{
    auto render = [&](const std::vector<Rational>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            const Rational m = v[i] * k;
            out += m.get_den() == 1 ? m.get_num().get_str() : totalparts::to_string(v[i]);
        }
        return out;
    };
    return "[" + render(give) + "<->" + render(take) + "]";
}

bool operator<(const SwapSpec& a, const SwapSpec& b)
{
    if (a.give.size() != b.give.size()) return a.give.size() < b.give.size();
    if (a.give != b.give) return a.give < b.give;
    return a.take < b.take;
}

ExoticCensus exotic_search(int k, int kprime, int workers) { return census(k, kprime, workers, true); }

ExoticCensus exotic_search_reference(int k, int kprime, int workers) { return census(k, kprime, workers, false); }

std::vector<SwapSpec> swap_census(int k, int workers)
{
    std::vector<SwapSpec> out;
    for (const auto& s : exotic_search(k, k, workers).sacks) out.push_back(s.swap);
    return out;
}

Sack<CycElem> smallest_exotic_34()
{
    auto c = exotic_search(3, 4);
    if (c.sacks.empty()) throw NotFound("no exotic sack of type (3, 4)");
    return c.sacks.front().sack;
}

TridecahedralReport verify_tridecahedral()
{
    auto chi = [](int m) { return Poly<CycElem>{CycElem(1), -CycElem::two_cos(13, m), CycElem(1)}; };
    const Poly<CycElem> common = chi(1) * chi(2) * chi(3) * chi(6);
    TridecahedralReport r{normalize_to_die(common * chi(4) * chi(4), 13).die,
                          normalize_to_die(common * chi(5) * chi(5), 13).die, false, false, false, {}, {}, 0};
    r.strict = r.d.is_strict() && r.dhat.is_strict();
    r.palindromic = r.d.is_palindromic() && r.dhat.is_palindromic();
    const Poly<CycElem> fair = psi<CycElem>(13) * psi<CycElem>(13) * CycElem(Rational(1, 169));
    r.product_is_fair = r.d.polynomial() * r.dhat.polynomial() == fair;
    for (std::size_t i = 0; i < 7; ++i) {
        r.d_values.push_back(approx(r.d[i]));
        r.dhat_values.push_back(approx(r.dhat[i]));
        r.max_deviation = std::max(r.max_deviation, std::abs(r.d_values.back() - tridecahedral_d[i]));
        r.max_deviation = std::max(r.max_deviation, std::abs(r.dhat_values.back() - tridecahedral_dhat[i]));
    }
    return r;
}

ScanRecord s_scan(int ell, int k, double tolerance)
{
    const auto g = scan_weights(ell);
    ScanRecord r;
    r.ell = ell;
    r.k = k;
    const int n2 = 2 * k;
    // c[t] = cos(pi t / k)
    std::vector<double> c(static_cast<std::size_t>(n2));
    for (int t = 0; t < n2; ++t) c[static_cast<std::size_t>(t)] = std::cos(M_PI * t / k);
    auto wrap = [n2](long a) { return static_cast<std::size_t>(((a % n2) + n2) % n2); };
    const double tol = tolerance;

    for (int m = 1; 2 * m < k; ++m) {
        if (!small_die_strict(ell, k, m)) continue;
        // coefficient j of psi_k g / chi_{m,k} is a positive multiple of
        // sum_i g_i (cos phi - cos((2(j-i)+3) phi)) with phi = pi m / k
        const double cphi = c[static_cast<std::size_t>(m)];
        bool strict = true;
        for (int j = 0; j < k && strict; ++j) {
            double v = 0;
            for (int i = 0; i < 3; ++i)
                if (g[static_cast<std::size_t>(i)]) v += g[static_cast<std::size_t>(i)] * (cphi - c[wrap(static_cast<long>(2 * (j - i) + 3) * m)]);
            if (v < -tol) strict = false;
            else if (v <= tol) {
                ++r.exact_fallbacks;
                const int d = std::gcd(m, k);
                const int mm = m / d, n = 2 * (k / d);
                CycElem e(0);
                for (int i = 0; i < 3; ++i) {
                    if (!g[static_cast<std::size_t>(i)]) continue;
                    const long a = static_cast<long>(2 * (j - i) + 3) * mm;
                    e = e + CycElem(g[static_cast<std::size_t>(i)]) * (CycElem::two_cos(n, mm) - CycElem::two_cos(n, a));
                }
                if (cyc_sign(e).sign == Sign::negative) strict = false;
            }
        }
        if (strict) r.S.push_back(m);
    }
    return finish(std::move(r));
}

ScanRecord s_scan_reference(int ell, int k)
{
    const auto g = scan_weights(ell);
    ScanRecord r;
    r.ell = ell;
    r.k = k;
    Poly<CycElem> gp(std::vector<CycElem>(g.begin(), g.end()));
    const Poly<CycElem> num = psi<CycElem>(k) * gp;
    for (int m = 1; 2 * m < k; ++m) {
        const Poly<CycElem> chi{CycElem(1), -CycElem::two_cos(k, m), CycElem(1)};
        Poly<CycElem> small = chi;
        if (ell == 4) small = small * Poly<CycElem>{CycElem(1), CycElem(1)};
        auto nonnegative = [](const Poly<CycElem>& p) {
            return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                               [](const CycElem& v) { return cyc_sign(v).sign != Sign::negative; });
        };
        if (!nonnegative(small)) continue;
        if (nonnegative(poly_divide_exact(num, chi))) r.S.push_back(m);
    }
    return finish(std::move(r));
}

std::vector<ScanRecord> s_scan_range(int ell, int k_min, int k_max, int workers)
{
    if (k_min < 2 || k_max < k_min) return {};
    std::vector<ScanRecord> out(static_cast<std::size_t>(k_max - k_min + 1));
    const int count = k_max - k_min + 1;
    // larger k cost more; hand them out first
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < count; ++i) {
        const int k = k_max - i;
        out[static_cast<std::size_t>(k - k_min)] = s_scan(ell, k);
    }
    return out;
}

M3ExceptionReport m3_exceptions_from(const std::vector<ScanRecord>& records)
{
    M3ExceptionReport out;
    std::map<int, int> M;
    for (const auto& r : records) {
        out.k_max = std::max(out.k_max, r.k);
        if (r.M) M[r.k] = *r.M;
    }
    // 603 = 31 mod 143 and 31 * 60 = 1 mod 143
    constexpr long inv31 = 60;
    for (const auto& [k, m] : M) {
        auto it = M.find(k + 143);
        if (it == M.end()) continue;
        ++out.checked;
        const int diff = it->second - m;
        if (diff == 60) continue;
        M3Exception e{k, diff, 0, 0};
        long a = (static_cast<long>(k % 143) * inv31) % 143;
        if (a == 0) a = 143;
        while (k - 603 * (a + 143) >= 0) a += 143;
        e.a = a;
        e.b = (k - 603 * a) / 143;
        out.exceptions.push_back(e);
    }
    return out;
}

M3ExceptionReport m3_exception_scan(int k_max, int workers)
{
    return m3_exceptions_from(s_scan_range(3, 2, k_max, workers));
}

std::vector<ScanRecord> r3_bound_violations(const std::vector<ScanRecord>& records)
{
    const Rational bound(60, 143);
    std::vector<ScanRecord> out;
    for (const auto& r : records)
        if (r.R && *r.R > bound) out.push_back(r);
    return out;
}

std::string scatter_csv(const std::vector<ScanRecord>& records, int decimals)
{
    std::ostringstream out;
    out << "k,M3,R3_num,R3_den,R3_decimal\n";
    for (const auto& r : records) {
        out << r.k << ',';
        if (r.M) out << *r.M << ',' << r.R->get_num() << ',' << r.R->get_den() << ',' << to_decimal(*r.R, decimals);
        else out << ",,,";
        out << '\n';
    }
    return out.str();
}

} // namespace totalparts
