#include "totalparts/crapseval.hpp"

#include <cstdlib>
#include <sstream>

namespace totalparts {

CrapsTotals::CrapsTotals(std::vector<Rational> f)
{
    if (f.size() != 11) throw InvalidDistribution("craps totals need 11 entries for 2..12");
    Rational sum = 0;
    for (std::size_t i = 0; i < 11; ++i) {
        if (sgn(f[i]) < 0) throw InvalidDistribution("craps totals must be nonnegative");
        f_[i] = f[i];
        f_[i].canonicalize();
        sum += f[i];
    }
    if (sum != 1) throw InvalidDistribution("craps totals must sum to 1");
}

CrapsTotals CrapsTotals::fair()
{
    std::vector<Rational> f;
    for (int t = 2; t <= 12; ++t) f.emplace_back(6 - std::abs(t - 7), 36);
    return CrapsTotals(std::move(f));
}

bool is_point(int total) { return total >= 4 && total <= 10 && total != 7; }

CrapsReport craps_evaluate(const CrapsTotals& f)
{
    CrapsReport r;
    r.p_win = 0;
    r.p_lose = 0;
    const Rational& seven = f.at(7);
    for (int t = 2; t <= 12; ++t) {
        const auto i = static_cast<std::size_t>(t - 2);
        const Rational& pt = f.at(t);
        r.p_t[i] = pt;
        Rational win = 0, lose = 0;
        if (t == 7 || t == 11) {
            win = 1;
        } else if (t == 2 || t == 3 || t == 12) {
            lose = 1;
        } else if (sgn(pt + seven) == 0) {
            r.undefined_conditionals.push_back(t);
        } else {
            win = pt / (pt + seven);
            win.canonicalize();
            lose = 1 - win;
        }
        r.p_w_given_t[i] = win;
        r.p_t_and_w[i] = pt * win;
        r.p_win += r.p_t_and_w[i];
        r.p_lose += pt * lose;
    }
    r.p_win.canonicalize();
    r.p_lose.canonicalize();
    r.differs_from_printed = f.values() == CrapsTotals::fair().values() && r.p_win != printed_fair_p_win;
    return r;
}

std::string CrapsReport::table() const
{
    std::ostringstream out;
    out << "t\tP(t)\tP(w|t)\tP(t&w)\n";
    for (int t = 2; t <= 12; ++t) {
        const auto i = static_cast<std::size_t>(t - 2);
        out << t << '\t' << to_string(p_t[i]) << '\t' << to_string(p_w_given_t[i]) << '\t' << to_string(p_t_and_w[i])
            << '\n';
    }
    out << "P(w)\t" << to_string(p_win) << '\t' << p_win.get_d() << '\n';
    out << "P(l)\t" << to_string(p_lose) << '\n';
    for (int t : undefined_conditionals) out << "note\tP(w|" << t << ") undefined, set to 0\n";
    if (differs_from_printed) out << "note\tprinted value " << to_string(printed_fair_p_win) << " differs\n";
    return out.str();
}

GeometricTree geometric_tree_check(const CrapsTotals& f, int t, int n_terms)
{
    if (!is_point(t)) throw InvalidDistribution("geometric tree needs a point total");
    GeometricTree g;
    g.first_term = f.at(t);
    g.ratio = 1 - f.at(t) - f.at(7);
    const Rational denom = f.at(t) + f.at(7);
    g.closed_form = sgn(denom) == 0 ? Rational(0) : Rational(f.at(t) / denom);
    g.closed_form.canonicalize();
    Rational term = g.first_term, sum = 0;
    for (int i = 0; i < n_terms; ++i) {
        sum += term;
        g.partial_sums.push_back(sum);
        term *= g.ratio;
    }
    return g;
}

namespace {

void require_66(const std::vector<int>& type)
{
    if (type != std::vector<int>{6, 6}) throw InvalidDistribution("craps needs a sack of two 6-dice");
}

} // namespace

CrapsReport craps_from_sack(const Sack<Rational>& s)
{
    require_66(s.type());
    const auto total = parts_to_total(s);
    return craps_evaluate(CrapsTotals(std::vector<Rational>(total.coeffs().begin(), total.coeffs().end())));
}

CrapsReport craps_from_sack(const Sack<CycElem>& s)
{
    require_66(s.type());
    const auto total = parts_to_total(s);
    std::vector<Rational> f;
    for (const CycElem& v : total.coeffs()) {
        if (!v.is_rational()) throw NotReal();
        f.push_back(v.to_rational());
    }
    return craps_evaluate(CrapsTotals(std::move(f)));
}

} // namespace totalparts
