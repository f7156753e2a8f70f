#include "sumprod/elliptic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace sumprod {

namespace {

void require_on_curve(const WeierstrassCurve& curve, const CurvePoint& p, const char* what) {
    if (!on_curve(curve, p)) {
        throw std::invalid_argument(std::string(what) + ": point " + p.str() + " is not on " + curve.str());
    }
}

// Integer roots of the monic polynomial with the given integer coefficients
// (ascending, leading 1 omitted), by the rational root test.
std::vector<BigInt> monic_integer_roots(std::vector<BigInt> low) {
    std::vector<BigInt> roots;
    // Strip zero roots.
    while (!low.empty() && low.front() == 0) {
        if (roots.empty()) roots.emplace_back(0);
        low.erase(low.begin());
    }
    if (low.empty()) return roots;

    const auto eval = [&](const BigInt& x) {
        BigInt acc = 1;
        for (auto it = low.rbegin(); it != low.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    BigInt constant = abs(low.front());
    for (const BigInt& d : divisors(constant)) {
        for (const BigInt& cand : {BigInt(d), BigInt(-d)}) {
            if (eval(cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (cubic_discriminant(a_, b_, c_).is_zero()) {
        throw std::invalid_argument("singular curve " + str());
    }
}

std::string WeierstrassCurve::str() const {
    std::ostringstream os;
    os << "y^2 = " << Poly({c_, b_, a_, Rat(1)}).str("x");
    return os.str();
}

const Rat& CurvePoint::x() const {
    if (!xy_) throw std::logic_error("point at infinity has no x coordinate");
    return xy_->x;
}

const Rat& CurvePoint::y() const {
    if (!xy_) throw std::logic_error("point at infinity has no y coordinate");
    return xy_->y;
}

std::string CurvePoint::str() const {
    if (!xy_) return "O";
    return "(" + xy_->x.str() + ", " + xy_->y.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e) { return os << e.str(); }

Rat cubic_discriminant(const Rat& a, const Rat& b, const Rat& c) {
    return Rat(-4) * pow(a, 3) * c + a * a * b * b + Rat(18) * a * b * c - Rat(4) * pow(b, 3) - Rat(27) * c * c;
}

Rat discriminant(const WeierstrassCurve& curve) { return cubic_discriminant(curve.a(), curve.b(), curve.c()); }

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve.rhs(p.x());
}

CurvePoint neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return {p.x(), -p.y()};
}

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(curve, p, "add");
    require_on_curve(curve, q, "add");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    Rat slope;
    if (p.x() == q.x()) {
        if ((p.y() + q.y()).is_zero()) return CurvePoint::infinity();
        // tangent
        slope = (Rat(3) * p.x() * p.x() + Rat(2) * curve.a() * p.x() + curve.b()) / (Rat(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rat x3 = slope * slope - curve.a() - p.x() - q.x();
    Rat y3 = slope * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}

CurvePoint dbl(const WeierstrassCurve& curve, const CurvePoint& p) { return add(curve, p, p); }

CurvePoint scalar_mul(const WeierstrassCurve& curve, long k, const CurvePoint& p) {
    require_on_curve(curve, p, "scalar_mul");
    CurvePoint base = k < 0 ? neg(p) : p;
    unsigned long n = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    CurvePoint acc;
    while (n) {
        if (n & 1UL) acc = add(curve, acc, base);
        n >>= 1UL;
        if (n) base = dbl(curve, base);
    }
    return acc;
}

std::vector<CurvePoint> nagell_lutz_candidates(const WeierstrassCurve& curve) {
    if (!curve.has_integer_coefficients()) {
        throw std::invalid_argument("nagell_lutz_candidates: coefficients must be integers");
    }
    const BigInt a = curve.a().num();
    const BigInt b = curve.b().num();
    const BigInt c = curve.c().num();
    const BigInt disc = abs(discriminant(curve).num());

    std::vector<BigInt> ys{BigInt(0)};
    for (const BigInt& d : divisors(disc)) {
        ys.push_back(d);
        ys.push_back(-d);
    }

    std::vector<CurvePoint> out;
    for (const BigInt& y : ys) {
        for (const BigInt& x : monic_integer_roots({c - y * y, b, a})) out.emplace_back(Rat(x), Rat(y));
    }
    std::sort(out.begin(), out.end(), [](const CurvePoint& l, const CurvePoint& r) {
        if (l.x() != r.x()) return l.x() < r.x();
        return l.y() < r.y();
    });
    return out;
}

bool certify_infinite_order(const WeierstrassCurve& curve, const CurvePoint& p) {
    if (!curve.has_integer_coefficients()) {
        throw std::invalid_argument("certify_infinite_order: coefficients must be integers");
    }
    require_on_curve(curve, p, "certify_infinite_order");
    if (p.is_infinity()) throw std::invalid_argument("certify_infinite_order: point at infinity");

    CurvePoint multiple = p;
    for (long k = 1; k <= kMazurBound; ++k) {
        if (multiple.is_infinity()) return false;
        if (!multiple.is_integral()) return true;
        multiple = add(curve, multiple, p);
    }
    return true;
}

}  // namespace sumprod
