#pragma once

// Exact integer and rational arithmetic, plus dense univariate polynomials
// with rational coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumprod {

using BigInt = mpz_class;

/// Rational number kept in canonical form: gcd(|num|, den) = 1, den >= 1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input
    /// or a zero denominator.
    static Rat parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(); }
    const mpq_class& raw() const { return q_; }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, unsigned exp);
Rat abs(const Rat& r);

/// floor(m^(1/k)). Throws std::invalid_argument for k < 1 or m < 0.
BigInt int_nth_root(const BigInt& m, long k);

/// The b with b^s == m, if one exists.
std::optional<BigInt> perfect_sth_power(const BigInt& m, long s);

/// All positive divisors of n in ascending order (trial division).
std::vector<BigInt> divisors(const BigInt& n);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Parses an unbounded decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is
/// non-zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly monomial(const Rat& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const Rat& leading() const { return coeffs_.back(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Exact long division: numer = q * denom + r with deg r < deg denom.
/// Throws std::invalid_argument when denom is zero.
std::pair<Poly, Poly> poly_divrem(const Poly& numer, const Poly& denom);

/// Horner evaluation.
Rat poly_eval(const Poly& p, const Rat& x);

}  // namespace sumprod
