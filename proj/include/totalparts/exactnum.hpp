#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n) and certified signs of
// their real elements.

#include "totalparts/errors.hpp"
#include "totalparts/poly.hpp"
#include "totalparts/rational.hpp"

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace totalparts {

/// Closed real interval with MPFR endpoints, lo rounded down and hi rounded up.
class Enclosure {
public:
    explicit Enclosure(int bits);
    Enclosure(const Enclosure& other);
    Enclosure(Enclosure&& other) noexcept;
    Enclosure& operator=(Enclosure other) noexcept;
    ~Enclosure();

    int precision() const { return bits_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    bool contains(double x) const;
    bool contains(const Enclosure& inner) const;
    bool excludes_zero() const { return mpfr_sgn(lo_) > 0 || mpfr_sgn(hi_) < 0; }
    /// hi - lo, rounded up.
    double width() const;

private:
    void swap(Enclosure& other) noexcept;

    int bits_;
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Arithmetic context for one conductor n: Phi_n and cached cosine enclosures.
class CyclotomicField {
public:
    /// Shared per-conductor instance. Safe for concurrent callers.
    static std::shared_ptr<const CyclotomicField> get(int conductor);

    int conductor() const { return n_; }
    /// phi(n) = deg Phi_n.
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Phi_n coefficients, ascending, monic.
    std::span<const Integer> modulus() const { return phi_; }

    /// Reduces a polynomial in zeta (arbitrary length, exponents >= 0) to
    /// canonical coordinates of length phi(n).
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    /// Enclosures of cos(2 pi j / n) for j = 0..n-1 at the given precision.
    std::shared_ptr<const std::vector<Enclosure>> cosines(int bits) const;

private:
    explicit CyclotomicField(int n);

    int n_;
    std::vector<Integer> phi_;
    mutable std::mutex cos_mutex_;
    mutable std::map<int, std::shared_ptr<const std::vector<Enclosure>>> cos_cache_;
};

/// n-th cyclotomic polynomial with integer coefficients (cached).
Poly<Rational> cyclotomic_polynomial(int n);

long euler_phi(long n);

/// Element of Q(zeta_n), stored as coordinates in the basis 1, zeta, ...,
/// zeta^{phi(n)-1}. Values are immutable once built; rationals live in
/// conductor 1.
class CycElem {
public:
    CycElem();
    CycElem(int value); // NOLINT(google-explicit-constructor)
    CycElem(const Rational& value); // NOLINT(google-explicit-constructor)

    /// zeta_n^power (power may be negative).
    static CycElem zeta(int n, long power = 1);
    /// 2 cos(2 pi power / n) = zeta_n^power + zeta_n^-power.
    static CycElem two_cos(int n, long power);
    /// sum_j coeffs[j] * zeta_n^j for any length.
    static CycElem from_powers(int n, std::vector<Rational> coeffs);
    /// sum_i coeff_i * zeta_n^{exponent_i} (exponents taken mod n).
    static CycElem from_terms(int n, std::span<const std::pair<long, Rational>> terms);

    int conductor() const { return field_->conductor(); }
    std::span<const Rational> coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational to_rational() const;

    /// Same element expressed in conductor m (n must divide m).
    CycElem promote(int m) const;
    /// Complex conjugation zeta -> zeta^{-1}.
    CycElem conj() const;
    bool is_real() const { return *this == conj(); }
    CycElem inverse() const;
    /// Multiplication by zeta_n^power without a general product.
    CycElem times_zeta(long power) const;

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);
    friend bool operator==(const CycElem& a, const CycElem& b);

    /// Renders as "(num)/den" with num a polynomial in `var`, e.g. "(-4*z+1)/6".
    std::string to_string(char var = 'z') const;
    /// Lexicographic key over canonical coordinates; only meaningful within
    /// one conductor.
    bool canonical_less(const CycElem& other) const;

private:
    CycElem(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const CycElem& e) { return e.is_zero(); }

/// Parses the rendering produced by CycElem::to_string in conductor n.
CycElem parse_cyc(std::string_view text, int conductor, char var = 'z');

enum class Sign { negative = -1, zero = 0, positive = 1 };

struct SignPolicy {
    int start_bits = 128;
    int cap_bits = 8192;
};

/// Process-wide default; the CLI sets it once at startup.
SignPolicy& default_sign_policy();

struct SignCertificate {
    CycElem value;
    Sign sign;
    /// Precision of the deciding interval (0 when zero was decided exactly).
    int precision_bits;
};

/// Enclosure of Re(e) under zeta_n -> exp(2 pi i / n). Requires bits >= 32.
Enclosure cyc_embed(const CycElem& e, int bits);

/// Certified sign of a real element. Zero is decided exactly from the
/// coordinates; otherwise precision doubles until the enclosure excludes 0.
SignCertificate cyc_sign(const CycElem& e, const SignPolicy& policy = default_sign_policy());

inline int sign_of(const CycElem& e) { return static_cast<int>(cyc_sign(e).sign); }

/// Double approximation of Re(e), for display.
double approx(const CycElem& e);
inline double approx(const Rational& q) { return q.get_d(); }

/// Conductor-aware rendering for rationals and cyclotomics alike.
inline std::string scalar_string(const Rational& q) { return to_string(q); }
inline std::string scalar_string(const CycElem& e) { return e.to_string(); }

} // namespace totalparts
