#include "sumprod/exactmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sumprod {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, unsigned exp) {
    Rat result(1);
    Rat b = base;
    while (exp) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp) b *= b;
    }
    return result;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    BigInt v;
    v.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10);
    return v;
}

BigInt int_nth_root(const BigInt& m, long k) {
    if (k < 1) throw std::invalid_argument("int_nth_root: k must be >= 1");
    if (m < 0) throw std::invalid_argument("int_nth_root: m must be non-negative");
    BigInt r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

std::optional<BigInt> perfect_sth_power(const BigInt& m, long s) {
    if (m < 1) throw std::invalid_argument("perfect_sth_power: m must be positive");
    if (s < 1) throw std::invalid_argument("perfect_sth_power: s must be >= 1");
    BigInt r;
    const int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(s));
    if (!exact) return std::nullopt;
    return r;
}

std::vector<BigInt> divisors(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("divisors: N must be positive");
    std::vector<BigInt> low;
    std::vector<BigInt> high;
    if (n.fits_ulong_p()) {
        const unsigned long v = n.get_ui();
        for (unsigned long d = 1; d <= v / d; ++d) {
            if (v % d) continue;
            low.emplace_back(d);
            if (d != v / d) high.emplace_back(v / d);
        }
    } else {
        for (BigInt d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            low.push_back(d);
            BigInt other = n / d;
            if (other != d) high.push_back(std::move(other));
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& p) {
    std::vector<Rat> out = p.coeffs_;
    for (auto& x : out) x *= c;
    return Poly(std::move(out));
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rat(1);
        if (i == 0 || !unit) os << mag;
        if (i >= 1) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> poly_divrem(const Poly& numer, const Poly& denom) {
    if (denom.is_zero()) throw std::invalid_argument("poly_divrem: division by the zero polynomial");
    if (numer.degree() < denom.degree()) return {Poly{}, numer};

    std::vector<Rat> rem = numer.coeffs();
    const std::size_t dn = static_cast<std::size_t>(denom.degree());
    std::vector<Rat> quot(rem.size() - dn);
    const Rat& lead = denom.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rat c = rem[i + dn] / lead;
        quot[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= c * denom.coeffs()[j];
    }
    rem.resize(dn);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace sumprod
