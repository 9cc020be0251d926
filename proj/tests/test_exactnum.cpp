#include "doctest.h"

#include "totalparts/exactnum.hpp"

#include <cmath>
#include <random>

using namespace totalparts;

namespace {

CycElem random_elem(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<Rational> c;
    for (int j = 0; j < n; ++j) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return CycElem::from_powers(n, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == Poly<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == Poly<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == Poly<Rational>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient outside {-1, 0, 1}
    auto phi105 = cyclotomic_polynomial(105);
    CHECK(phi105.degree() == 48);
    bool has_minus_two = false;
    for (const auto& c : phi105.coeffs()) has_minus_two |= (c == -2);
    CHECK(has_minus_two);
    for (int n : {7, 10, 30, 36, 143})
        CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("zeta relations hold under the arithmetic")
{
    for (int n : {3, 5, 6, 12, 13, 20}) {
        CycElem z = CycElem::zeta(n);
        CycElem acc = 1;
        for (int i = 0; i < n; ++i) acc = acc * z;
        CHECK(acc == CycElem(1));
        CHECK(CycElem::zeta(n, -1) == z.conj());
        CHECK(z * z.inverse() == CycElem(1));
        CHECK(z.conj().conj() == z);
    }
}

TEST_CASE("mixed conductors promote to the lcm")
{
    CycElem a = CycElem::zeta(4); // i
    CycElem b = CycElem::zeta(6);
    CycElem s = a + b;
    CHECK(s.conductor() == 12);
    CHECK(CycElem::zeta(12, 3) == a);
    CHECK(CycElem::zeta(12, 2) == b);
    CHECK(CycElem(Rational(1, 2)) * CycElem::zeta(5) == CycElem::zeta(5) * CycElem(Rational(1, 2)));
}

TEST_CASE("cyc_embed examples")
{
    auto one = CycElem(1).promote(6);
    CHECK(cyc_embed(one, 64).contains(1.0));

    CycElem e = CycElem::two_cos(6, 1);
    CHECK(cyc_embed(e, 64).contains(1.0));
    CHECK((e - CycElem(1)).is_zero());
    CHECK(cyc_sign(e - CycElem(1)).sign == Sign::zero);

    // independent oracle: 2 cos 72 deg = (sqrt 5 - 1) / 2
    CycElem g = CycElem::two_cos(5, 1);
    Enclosure enc = cyc_embed(g, 128);
    const long double oracle = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    CHECK(enc.lo_double() <= static_cast<double>(oracle) + 1e-15);
    CHECK(enc.hi_double() >= static_cast<double>(oracle) - 1e-15);
    CHECK(enc.width() < 1e-30);
    CHECK(std::abs(approx(g) - 0.6180339887498949) < 1e-15);
}

TEST_CASE("cyc_sign examples")
{
    CHECK(cyc_sign(CycElem(0)).sign == Sign::zero);
    // 2 - sqrt 3
    CycElem v = CycElem(2) - CycElem::two_cos(12, 1);
    auto cert = cyc_sign(v);
    CHECK(cert.sign == Sign::positive);
    CHECK(cert.precision_bits == 128);
    CHECK(cyc_sign(CycElem::two_cos(10, 1) - CycElem::two_cos(10, 2)).sign == Sign::positive);
    CHECK(cyc_sign(CycElem::two_cos(10, 3)).sign == Sign::negative);
    CHECK_THROWS_AS(cyc_sign(CycElem::zeta(5)), NotReal);
}

TEST_CASE("near-zero values need more precision")
{
    // a - b * 2cos(2 pi / 97) with a = floor(b * 2cos(2 pi / 97)) and b = 10^50:
    // negative, with magnitude below 1 while b * 2cos is about 2^166
    Integer b("1" + std::string(50, '0'));
    mpfr_t x;
    mpfr_init2(x, 2000);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_ui(x, x, 2, MPFR_RNDN);
    mpfr_div_ui(x, x, 97, MPFR_RNDN);
    mpfr_cos(x, x, MPFR_RNDN);
    mpfr_mul_ui(x, x, 2, MPFR_RNDN);
    mpfr_mul_z(x, x, b.get_mpz_t(), MPFR_RNDN);
    Integer a;
    mpfr_get_z(a.get_mpz_t(), x, MPFR_RNDD);
    mpfr_clear(x);
    CycElem v = CycElem(Rational(a)) - CycElem(Rational(b)) * CycElem::two_cos(97, 1);
    auto cert = cyc_sign(v);
    CHECK(cert.sign == Sign::negative);
    CHECK(cert.precision_bits > 128);
    CHECK_THROWS_AS(cyc_sign(v, SignPolicy{64, 128}), PrecisionExhausted);
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937 rng(7);
    for (int n : {5, 7, 8, 12, 15}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycElem a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b).conj() == a.conj() * b.conj());
            if (!a.is_zero()) CHECK(a * a.inverse() == CycElem(1));
            CHECK(a - a == CycElem(0));
        }
    }
}

TEST_CASE("embedding refinement and sign soundness")
{
    std::mt19937 rng(11);
    for (int n : {7, 9, 20}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycElem a = random_elem(rng, n);
            CycElem re = a + a.conj();
            Enclosure coarse = cyc_embed(re, 64);
            Enclosure fine = cyc_embed(re, 128);
            CHECK(coarse.contains(fine));
            auto s = cyc_sign(re);
            CHECK((s.sign == Sign::zero) == re.is_zero());
            CHECK(cyc_sign(re - re).sign == Sign::zero);
        }
    }
}

TEST_CASE("rendering round trips")
{
    CycElem z = CycElem::zeta(6);
    CycElem v = (CycElem(-4) * z + CycElem(1)) * CycElem(Rational(1, 6));
    CHECK(v.to_string() == "(-4*z+1)/6");
    CHECK(parse_cyc("(-4*z+1)/6", 6) == v);
    CHECK(parse_cyc("1/6", 6) == CycElem(Rational(1, 6)));
    CHECK(parse_cyc("-z/12", 6) == z * CycElem(Rational(-1, 12)));
    CHECK(parse_cyc("(z-1)/1", 6) == z - CycElem(1));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        CycElem a = random_elem(rng, 12);
        CHECK(parse_cyc(a.to_string(), 12) == a);
    }
    CHECK_THROWS_AS(parse_cyc("(z+", 6), ParseError);
    CHECK(parse_rational(" 14/4") == Rational(7, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK(to_decimal(Rational(244, 495), 5) == "0.49293");
}
