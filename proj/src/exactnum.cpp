#include "totalparts/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace totalparts {

// ---------------------------------------------------------------- Enclosure

Enclosure::Enclosure(int bits) : bits_(bits)
{
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) : bits_(other.bits_)
{
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(other.bits_)
{
    swap(other);
}

Enclosure& Enclosure::operator=(Enclosure other) noexcept
{
    swap(other);
    return *this;
}

Enclosure::~Enclosure()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Enclosure::swap(Enclosure& other) noexcept
{
    std::swap(bits_, other.bits_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

bool Enclosure::contains(double x) const
{
    return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const
{
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

double Enclosure::width() const
{
    mpfr_t w;
    mpfr_init2(w, bits_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

// ---------------------------------------------------------- cyclotomic polys

long euler_phi(long n)
{
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::shared_mutex phi_mutex;
std::unordered_map<int, Poly<Rational>> phi_cache;

std::shared_mutex field_mutex;
std::unordered_map<int, std::shared_ptr<const CyclotomicField>> field_cache;

} // namespace

Poly<Rational> cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    {
        std::shared_lock lock(phi_mutex);
        if (auto it = phi_cache.find(n); it != phi_cache.end()) return it->second;
    }
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rational> xn(static_cast<std::size_t>(n) + 1, Rational(0));
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    Poly<Rational> result(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(result, cyclotomic_polynomial(d));
    std::unique_lock lock(phi_mutex);
    return phi_cache.emplace(n, std::move(result)).first->second;
}

// ----------------------------------------------------------- CyclotomicField

CyclotomicField::CyclotomicField(int n) : n_(n)
{
    auto phi = cyclotomic_polynomial(n);
    for (const Rational& c : phi.coeffs()) phi_.push_back(c.get_num());
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int conductor)
{
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    {
        std::shared_lock lock(field_mutex);
        if (auto it = field_cache.find(conductor); it != field_cache.end()) return it->second;
    }
    std::shared_ptr<const CyclotomicField> made(new CyclotomicField(conductor));
    std::unique_lock lock(field_mutex);
    return field_cache.emplace(conductor, std::move(made)).first->second;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const
{
    const auto n = static_cast<std::size_t>(n_);
    if (poly.size() > n) {
        for (std::size_t i = n; i < poly.size(); ++i)
            if (sgn(poly[i]) != 0) poly[i % n] += poly[i];
        poly.resize(n);
    }
    const auto deg = static_cast<std::size_t>(degree());
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) continue;
        const Rational lead = poly[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (sgn(phi_[j]) != 0) poly[i - deg + j] -= lead * phi_[j];
        poly[i] = 0;
    }
    poly.resize(deg, Rational(0));
    return poly;
}

std::shared_ptr<const std::vector<Enclosure>> CyclotomicField::cosines(int bits) const
{
    std::lock_guard lock(cos_mutex_);
    if (auto it = cos_cache_.find(bits); it != cos_cache_.end()) return it->second;

    const int work = bits + 32;
    mpfr_t pi_lo, pi_hi, x_lo, x_hi;
    mpfr_inits2(work, pi_lo, pi_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);

    auto table = std::make_shared<std::vector<Enclosure>>();
    table->reserve(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        Enclosure e(work);
        const int r = std::min(j, n_ - j); // angle 2 pi r / n in [0, pi]
        if (r == 0) {
            mpfr_set_si(e.lo(), 1, MPFR_RNDD);
            mpfr_set_si(e.hi(), 1, MPFR_RNDU);
        } else if (2 * r == n_) {
            mpfr_set_si(e.lo(), -1, MPFR_RNDD);
            mpfr_set_si(e.hi(), -1, MPFR_RNDU);
        } else if (4 * r == n_) {
            mpfr_set_zero(e.lo(), 1);
            mpfr_set_zero(e.hi(), 1);
        } else {
            // cos is decreasing on [0, pi]
            mpfr_mul_si(x_lo, pi_lo, 2L * r, MPFR_RNDD);
            mpfr_div_si(x_lo, x_lo, n_, MPFR_RNDD);
            mpfr_mul_si(x_hi, pi_hi, 2L * r, MPFR_RNDU);
            mpfr_div_si(x_hi, x_hi, n_, MPFR_RNDU);
            mpfr_cos(e.lo(), x_hi, MPFR_RNDD);
            mpfr_cos(e.hi(), x_lo, MPFR_RNDU);
        }
        table->push_back(std::move(e));
    }
    mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
    return cos_cache_.emplace(bits, std::move(table)).first->second;
}

// ------------------------------------------------------------------ CycElem

CycElem::CycElem() : CycElem(Rational(0)) {}

CycElem::CycElem(int value) : CycElem(Rational(value)) {}

CycElem::CycElem(const Rational& value) : c_{value}
{
    static const auto rationals = CyclotomicField::get(1);
    field_ = rationals;
}

CycElem::CycElem(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords))
{
}

CycElem CycElem::from_powers(int n, std::vector<Rational> coeffs)
{
    auto field = CyclotomicField::get(n);
    auto coords = field->reduce(std::move(coeffs));
    return CycElem(std::move(field), std::move(coords));
}

CycElem CycElem::from_terms(int n, std::span<const std::pair<long, Rational>> terms)
{
    std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [exponent, coeff] : terms) {
        long e = exponent % n;
        if (e < 0) e += n;
        poly[static_cast<std::size_t>(e)] += coeff;
    }
    return from_powers(n, std::move(poly));
}

CycElem CycElem::zeta(int n, long power)
{
    const std::pair<long, Rational> term{power, Rational(1)};
    return from_terms(n, std::span(&term, 1));
}

CycElem CycElem::two_cos(int n, long power)
{
    const std::pair<long, Rational> terms[] = {{power, Rational(1)}, {-power, Rational(1)}};
    return from_terms(n, terms);
}

bool CycElem::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CycElem::is_rational() const
{
    if (c_.size() <= 1) return true;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational CycElem::to_rational() const
{
    if (!is_rational()) throw std::logic_error("CycElem::to_rational on an irrational element");
    return c_.empty() ? Rational(0) : c_.front();
}

CycElem CycElem::promote(int m) const
{
    const int n = conductor();
    if (m == n) return *this;
    if (m % n != 0) throw std::invalid_argument("promote: conductor must divide target");
    const std::size_t step = static_cast<std::size_t>(m / n);
    std::vector<Rational> poly(step * c_.size(), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
    return from_powers(m, std::move(poly));
}

CycElem CycElem::conj() const
{
    const int n = conductor();
    std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
        poly[(static_cast<std::size_t>(n) - j) % static_cast<std::size_t>(n)] += c_[j];
    return from_powers(n, std::move(poly));
}

CycElem CycElem::times_zeta(long power) const
{
    const long n = conductor();
    long shift = power % n;
    if (shift < 0) shift += n;
    std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) poly[(j + static_cast<std::size_t>(shift)) % static_cast<std::size_t>(n)] += c_[j];
    return from_powers(static_cast<int>(n), std::move(poly));
}

namespace {

int common_conductor(const CycElem& a, const CycElem& b)
{
    return std::lcm(a.conductor(), b.conductor());
}

} // namespace

CycElem operator+(const CycElem& a, const CycElem& b)
{
    if (a.conductor() != b.conductor()) {
        const int m = common_conductor(a, b);
        return a.promote(m) + b.promote(m);
    }
    std::vector<Rational> out(a.c_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += b.c_[j];
    return CycElem(a.field_, std::move(out));
}

CycElem operator-(const CycElem& a)
{
    std::vector<Rational> out(a.c_);
    for (Rational& q : out) q = -q;
    return CycElem(a.field_, std::move(out));
}

CycElem operator-(const CycElem& a, const CycElem& b)
{
    return a + (-b);
}

CycElem operator*(const CycElem& a, const CycElem& b)
{
    if (a.conductor() != b.conductor()) {
        const int m = common_conductor(a, b);
        return a.promote(m) * b.promote(m);
    }
    if (a.c_.size() == 1) {
        std::vector<Rational> out(b.c_);
        for (Rational& q : out) q *= a.c_[0];
        return CycElem(a.field_, std::move(out));
    }
    std::vector<Rational> prod(2 * a.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CycElem(a.field_, a.field_->reduce(std::move(prod)));
}

CycElem CycElem::inverse() const
{
    if (is_zero()) throw std::domain_error("CycElem: inverse of zero");
    if (c_.size() == 1) return CycElem(field_, {Rational(1) / c_[0]});
    // extended Euclid: s * a + t * Phi = 1
    std::vector<Rational> phi_coeffs;
    for (const Integer& z : field_->modulus()) phi_coeffs.emplace_back(z);
    Poly<Rational> r0(std::move(phi_coeffs));
    Poly<Rational> r1(std::vector<Rational>(c_.begin(), c_.end()));
    Poly<Rational> s0, s1 = Poly<Rational>::constant(Rational(1));
    while (r1.degree() > 0) {
        auto [q, r] = divmod(r0, r1);
        Poly<Rational> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because Phi_n is irreducible
    Poly<Rational> inv = s1 * (Rational(1) / r1.coeff(0));
    return from_powers(conductor(), inv.padded(static_cast<std::size_t>(std::max(inv.degree() + 1, 1))));
}

CycElem operator/(const CycElem& a, const CycElem& b)
{
    return a * b.inverse();
}

bool operator==(const CycElem& a, const CycElem& b)
{
    if (a.conductor() != b.conductor()) {
        const int m = common_conductor(a, b);
        return a.promote(m).c_ == b.promote(m).c_;
    }
    return a.c_ == b.c_;
}

bool CycElem::canonical_less(const CycElem& other) const
{
    if (conductor() != other.conductor()) return conductor() < other.conductor();
    return std::lexicographical_compare(c_.begin(), c_.end(), other.c_.begin(), other.c_.end());
}

std::string CycElem::to_string(char var) const
{
    if (is_rational()) return totalparts::to_string(c_.front());
    Integer den = 1;
    for (const Rational& q : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::ostringstream num;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
        Integer coef = c_[j].get_num() * (den / c_[j].get_den());
        if (sgn(coef) == 0) continue;
        if (sgn(coef) < 0) num << '-';
        else if (!first) num << '+';
        first = false;
        Integer mag = abs(coef);
        if (j == 0) {
            num << mag.get_str();
            continue;
        }
        if (mag != 1) num << mag.get_str() << '*';
        num << var;
        if (j > 1) num << '^' << j;
    }
    if (den == 1) return num.str();
    return "(" + num.str() + ")/" + den.get_str();
}

// ------------------------------------------------------------------- parsing

namespace {

class CycParser {
public:
    CycParser(std::string_view text, int n, char var) : n_(n), var_(var)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    CycElem parse()
    {
        if (s_.empty()) throw ParseError("empty cyclotomic value");
        CycElem value;
        if (peek() == '(') {
            ++pos_;
            value = sum();
            expect(')');
            if (!done()) {
                expect('/');
                value = value * CycElem(Rational(Integer(1), integer()));
            }
        } else {
            value = sum();
        }
        if (!done()) throw ParseError("trailing characters in '" + s_ + "'");
        return value;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool done() const { return pos_ >= s_.size(); }
    void expect(char ch)
    {
        if (peek() != ch) throw ParseError(std::string("expected '") + ch + "' in '" + s_ + "'");
        ++pos_;
    }

    Integer integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected digits in '" + s_ + "'");
        return Integer(s_.substr(start, pos_ - start));
    }

    CycElem sum()
    {
        CycElem acc;
        bool first = true;
        while (!done() && peek() != ')') {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-' in '" + s_ + "'");
            }
            first = false;
            acc = acc + term() * CycElem(sign);
        }
        if (first) throw ParseError("empty expression in '" + s_ + "'");
        return acc;
    }

    CycElem term()
    {
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = integer();
            coef = Rational(num);
            if (peek() == '/') {
                ++pos_;
                coef = Rational(num, integer());
                coef.canonicalize();
            }
            have_coef = true;
            if (peek() == '*') ++pos_;
            else if (peek() != var_) return CycElem(coef);
        }
        if (peek() != var_) {
            if (have_coef) return CycElem(coef);
            throw ParseError("expected term in '" + s_ + "'");
        }
        ++pos_;
        long power = 1;
        if (peek() == '^') {
            ++pos_;
            power = integer().get_si();
        }
        if (peek() == '/') {
            ++pos_;
            coef /= Rational(integer());
        }
        return CycElem::zeta(n_, power) * CycElem(coef);
    }

    std::string s_;
    std::size_t pos_ = 0;
    int n_;
    char var_;
};

} // namespace

CycElem parse_cyc(std::string_view text, int conductor, char var)
{
    return CycParser(text, conductor, var).parse();
}

// --------------------------------------------------------------------- signs

SignPolicy& default_sign_policy()
{
    static SignPolicy policy;
    return policy;
}

Enclosure cyc_embed(const CycElem& e, int bits)
{
    if (bits < 32) throw std::invalid_argument("cyc_embed: bits must be >= 32");
    Enclosure out(bits);
    auto coords = e.coords();
    Integer den = 1;
    for (const Rational& q : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());

    auto field = CyclotomicField::get(e.conductor());
    auto cos = field->cosines(bits);
    const int work = (*cos)[0].precision();
    mpfr_t lo, hi, term;
    mpfr_inits2(work, lo, hi, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (sgn(coords[j]) == 0) continue;
        Integer a = coords[j].get_num() * (den / coords[j].get_den());
        const Enclosure& c = (*cos)[j];
        const bool positive = sgn(a) > 0;
        mpfr_mul_z(term, positive ? c.lo() : c.hi(), a.get_mpz_t(), MPFR_RNDD);
        mpfr_add(lo, lo, term, MPFR_RNDD);
        mpfr_mul_z(term, positive ? c.hi() : c.lo(), a.get_mpz_t(), MPFR_RNDU);
        mpfr_add(hi, hi, term, MPFR_RNDU);
    }
    mpfr_div_z(out.lo(), lo, den.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(out.hi(), hi, den.get_mpz_t(), MPFR_RNDU);
    mpfr_clears(lo, hi, term, static_cast<mpfr_ptr>(nullptr));
    return out;
}

SignCertificate cyc_sign(const CycElem& e, const SignPolicy& policy)
{
    if (!e.is_real()) throw NotReal();
    if (e.is_zero()) return {e, Sign::zero, 0};
    if (e.is_rational()) return {e, sgn(e.coords()[0]) > 0 ? Sign::positive : Sign::negative, 0};
    for (int bits = std::max(policy.start_bits, 32); bits <= policy.cap_bits; bits *= 2) {
        Enclosure enc = cyc_embed(e, bits);
        if (mpfr_sgn(enc.lo()) > 0) return {e, Sign::positive, bits};
        if (mpfr_sgn(enc.hi()) < 0) return {e, Sign::negative, bits};
    }
    throw PrecisionExhausted(policy.cap_bits);
}

double approx(const CycElem& e)
{
    if (e.is_rational()) return e.coords()[0].get_d();
    Enclosure enc = cyc_embed(e, 64);
    return 0.5 * (enc.lo_double() + enc.hi_double());
}

} // namespace totalparts
