#include "totalparts/rational.hpp"

#include "totalparts/errors.hpp"

#include <cctype>
#include <string>

namespace totalparts {

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
        if (part.empty()) return false;
        for (char ch : part)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
        if (!digits_ok(sv, true)) throw ParseError("malformed rational '" + s + "'");
    } else if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false)) {
        throw ParseError("malformed rational '" + s + "'");
    }
    Rational q;
    q.set_str(s, 10);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::string to_decimal(const Rational& q, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(q) * scale;
    // round half up on the magnitude
    Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(q) < 0 && sgn(rounded) != 0) body.insert(0, "-");
    return body;
}

} // namespace totalparts
