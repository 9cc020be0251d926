#include "totalparts/dice.hpp"

namespace totalparts {

Die<CycElem> to_cyc(const Die<Rational>& d)
{
    std::vector<CycElem> p;
    for (const Rational& q : d.probs()) p.emplace_back(q);
    return Die<CycElem>(std::move(p));
}

Sack<CycElem> to_cyc(const Sack<Rational>& s)
{
    std::vector<Die<CycElem>> dice;
    for (const auto& d : s.dice()) dice.push_back(to_cyc(d));
    return Sack<CycElem>(std::move(dice));
}

} // namespace totalparts
