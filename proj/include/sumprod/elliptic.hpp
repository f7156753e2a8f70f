#pragma once

// Elliptic curves y^2 = x^3 + a x^2 + b x + c over Q with the chord-tangent
// group law in affine coordinates.

#include "sumprod/exactmath.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumprod {

class WeierstrassCurve {
public:
    /// Throws std::invalid_argument if the cubic has a repeated root.
    WeierstrassCurve(Rat a, Rat b, Rat c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }
    bool has_integer_coefficients() const { return a_.is_integer() && b_.is_integer() && c_.is_integer(); }

    /// x^3 + a x^2 + b x + c
    Rat rhs(const Rat& x) const { return ((x + a_) * x + b_) * x + c_; }

    std::string str() const;
    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    Rat a_, b_, c_;
};

/// Either the point at infinity or an affine point (x, y).
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rat x, Rat y) : xy_(Affine{std::move(x), std::move(y)}) {}
    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !xy_.has_value(); }
    const Rat& x() const;
    const Rat& y() const;
    bool is_integral() const { return is_infinity() || (xy_->x.is_integer() && xy_->y.is_integer()); }

    std::string str() const;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    struct Affine {
        Rat x, y;
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    std::optional<Affine> xy_;
};

std::ostream& operator<<(std::ostream& os, const CurvePoint& p);
std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e);

/// -4a^3c + a^2b^2 + 18abc - 4b^3 - 27c^2
Rat discriminant(const WeierstrassCurve& curve);
/// Same polynomial, usable before a curve object exists.
Rat cubic_discriminant(const Rat& a, const Rat& b, const Rat& c);

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p);

CurvePoint neg(const CurvePoint& p);

/// Group law. Points must lie on the curve (std::invalid_argument otherwise).
CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint dbl(const WeierstrassCurve& curve, const CurvePoint& p);

/// [k]P by double-and-add; negative k multiplies -P.
CurvePoint scalar_mul(const WeierstrassCurve& curve, long k, const CurvePoint& p);

/// Integral points with y = 0 or y | disc. This is the Nagell-Lutz filter:
/// every rational torsion point is in the list, not the converse. Requires
/// integer coefficients.
std::vector<CurvePoint> nagell_lutz_candidates(const WeierstrassCurve& curve);

/// Largest order of a rational torsion point (Mazur).
inline constexpr long kMazurBound = 12;

/// True unless [k]P = O for some 1 <= k <= 12. Short-circuits as soon as
/// some multiple has a non-integral coordinate, since Nagell-Lutz then rules
/// out finite order. Requires integer coefficients and P affine on the curve.
bool certify_infinite_order(const WeierstrassCurve& curve, const CurvePoint& p);

}  // namespace sumprod
