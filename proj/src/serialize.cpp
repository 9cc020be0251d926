#include "totalparts/serialize.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace totalparts {

int common_conductor(std::span<const CycElem> values)
{
    int n = 1;
    for (const CycElem& v : values)
        if (!v.is_rational()) n = std::lcm(n, v.conductor());
    return n;
}

std::vector<std::string> scalar_strings(std::span<const CycElem> values, int conductor)
{
    std::vector<std::string> out;
    for (const CycElem& v : values) {
        if (v.is_rational()) out.push_back(to_string(v.to_rational()));
        else out.push_back(v.promote(conductor).to_string());
    }
    return out;
}

std::vector<std::string> scalar_strings(std::span<const Rational> values)
{
    std::vector<std::string> out;
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

namespace {

Json values_json(std::span<const CycElem> values)
{
    Json j = Json::object();
    const int n = common_conductor(values);
    j["probs"] = scalar_strings(values, n);
    if (n > 1) j["conductor"] = n;
    return j;
}

std::vector<CycElem> parse_values(const Json& probs, int conductor)
{
    if (!probs.is_array()) throw ParseError("expected an array of scalar strings");
    std::vector<CycElem> out;
    for (const auto& v : probs) {
        if (v.is_string()) out.push_back(parse_cyc(v.get<std::string>(), conductor));
        else if (v.is_number_integer()) out.emplace_back(Rational(v.get<long>()));
        else throw ParseError("scalars must be strings or integers");
    }
    return out;
}

int conductor_of(const Json& j)
{
    if (!j.is_object() || !j.contains("conductor")) return 1;
    const int n = j.at("conductor").get<int>();
    if (n < 1) throw ParseError("conductor must be positive");
    return n;
}

} // namespace

Json die_to_json(const Die<Rational>& d)
{
    Json j;
    j["order"] = d.order();
    j["probs"] = scalar_strings(d.probs());
    return j;
}

Json die_to_json(const Die<CycElem>& d)
{
    Json j;
    j["order"] = d.order();
    Json v = values_json(d.probs());
    j["probs"] = v["probs"];
    if (v.contains("conductor")) j["conductor"] = v["conductor"];
    return j;
}

Json sack_to_json(const Sack<Rational>& s)
{
    Json dice = Json::array();
    for (const auto& d : s.dice()) dice.push_back(die_to_json(d));
    return Json{{"dice", dice}};
}

Json sack_to_json(const Sack<CycElem>& s)
{
    Json dice = Json::array();
    for (const auto& d : s.dice()) dice.push_back(die_to_json(d));
    return Json{{"dice", dice}};
}

Json total_to_json(const DistPoly<Rational>& t) { return Json{{"probs", scalar_strings(t.coeffs())}}; }

Json total_to_json(const DistPoly<CycElem>& t) { return values_json(t.coeffs()); }

Die<CycElem> die_from_json(const Json& j)
{
    if (j.is_array()) return Die<CycElem>(parse_values(j, 1));
    if (!j.is_object() || !j.contains("probs")) throw ParseError("a die needs \"probs\"");
    auto probs = parse_values(j.at("probs"), conductor_of(j));
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(probs.size()))
        throw InvalidDistribution("die \"order\" disagrees with the number of probabilities");
    return Die<CycElem>(std::move(probs));
}

Sack<CycElem> sack_from_json(const Json& j)
{
    const Json& dice = j.is_object() && j.contains("dice") ? j.at("dice") : j;
    if (!dice.is_array()) throw ParseError("a sack needs \"dice\"");
    std::vector<Die<CycElem>> out;
    for (const auto& d : dice) out.push_back(die_from_json(d));
    return Sack<CycElem>(std::move(out));
}

DistPoly<CycElem> total_from_json(const Json& j)
{
    if (j.is_array()) return DistPoly<CycElem>(parse_values(j, 1));
    if (!j.is_object() || !j.contains("probs")) throw ParseError("a total needs \"probs\"");
    return DistPoly<CycElem>(parse_values(j.at("probs"), conductor_of(j)));
}

FactorMultiset<CycElem> factors_from_json(const Json& j)
{
    const int n = conductor_of(j);
    const Json& list = j.is_object() ? j.at("factors") : j;
    if (!list.is_array()) throw ParseError("factors must be an array");
    FactorMultiset<CycElem> out;
    for (const auto& f : list) {
        if (!f.is_object()) throw ParseError("each factor is an object with \"root\" or \"poly\"");
        const int mult = f.value("mult", 1);
        if (mult < 1) throw ParseError("factor multiplicity must be positive");
        const int local = f.contains("conductor") ? conductor_of(f) : n;
        if (f.contains("root")) {
            out.push_back(Factor<CycElem>::linear(parse_cyc(f.at("root").get<std::string>(), local), mult));
        } else if (f.contains("poly")) {
            Poly<CycElem> p(parse_values(f.at("poly"), local));
            if (p.degree() < 1) throw ParseError("factor polynomials must have degree >= 1");
            out.push_back({p, mult});
        } else {
            throw ParseError("each factor is an object with \"root\" or \"poly\"");
        }
    }
    return out;
}

Json load_json_argument(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\n");
    try {
        if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
        std::ifstream in(text);
        if (!in) throw ParseError("cannot open " + text);
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::optional<Sack<Rational>> as_rational(const Sack<CycElem>& s)
{
    std::vector<Die<Rational>> dice;
    for (const auto& d : s.dice()) {
        std::vector<Rational> p;
        for (const CycElem& v : d.probs()) {
            if (!v.is_rational()) return std::nullopt;
            p.push_back(v.to_rational());
        }
        dice.emplace_back(std::move(p));
    }
    return Sack<Rational>(std::move(dice));
}

std::optional<DistPoly<Rational>> as_rational(const DistPoly<CycElem>& t)
{
    std::vector<Rational> f;
    for (const CycElem& v : t.coeffs()) {
        if (!v.is_rational()) return std::nullopt;
        f.push_back(v.to_rational());
    }
    return DistPoly<Rational>(std::move(f));
}

} // namespace totalparts
