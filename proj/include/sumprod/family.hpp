#pragma once

// Parametric solutions for s >= 5.
//
// Write x = b1, y = b2, z = b3 = t*y, u = b4*...*b_{s-1}, v = b4+...+b_{s-1}.
// The identity xyzu(x+y+z+v) = 1 becomes a quadratic in x whose discriminant
// must be a square, giving the quartic
//
//     C: w^2 = u^2 t^2 (t+1)^2 y^4 + 2u^2 v (t+1) t^2 y^3 + u^2 v^2 t^2 y^2 + 4tu,
//
// which is birational to E: Y^2 = X (X^2 + u^2 v^2 t^2 X - 16 u^3 t^3 (t+1)^2).
// Setting t = u*t0^2 gives E' with the point
// P = (4u^3 t0^3 (u t0^2 + 1), 4 v u^5 t0^5 (u t0^2 + 1)); the reflection of
// [2]P pulls back to a positive (x, y, z) whenever
//
//     D = 4u t0^2 - u v^2 t0 + 4 > 0.

#include "sumprod/elliptic.hpp"
#include "sumprod/exactmath.hpp"
#include "sumprod/transforms.hpp"

#include <stdexcept>
#include <vector>

namespace sumprod {

/// D <= 0 where a positive solution was requested.
class PositivityError : public std::domain_error {
public:
    PositivityError(const std::string& what, Rat d) : std::domain_error(what), d_(std::move(d)) {}
    const Rat& quadratic_value() const { return d_; }

private:
    Rat d_;
};

class FamilyParams {
public:
    /// Throws std::invalid_argument unless s >= 5, tail has s-4 positive
    /// entries and t0 > 0.
    FamilyParams(int s, std::vector<Rat> tail, Rat t0);
    /// Direct (u, v, t0) point, as if the tail were arbitrary with that
    /// product and sum. s is reported as 5 but no tail is stored.
    static FamilyParams from_uv(Rat u, Rat v, Rat t0);

    int s() const { return s_; }
    const std::vector<Rat>& tail() const { return tail_; }
    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const Rat& t0() const { return t0_; }
    const Rat& t() const { return t_; }

    /// u (u v^4 - 64)
    Rat delta() const;
    /// 4u t0^2 - u v^2 t0 + 4
    Rat quadratic_value() const;

private:
    FamilyParams() = default;
    int s_ = 0;
    std::vector<Rat> tail_;
    Rat u_, v_, t0_, t_;
};

struct QuarticPoint {
    Rat y, w;
};

/// w^2 = A4 y^4 + A3 y^3 + A2 y^2 + A1 y + A0
class QuarticCurve {
public:
    /// Throws std::invalid_argument when the quartic discriminant vanishes.
    explicit QuarticCurve(const FamilyParams& params);

    const Rat& a4() const { return a4_; }
    const Rat& a3() const { return a3_; }
    const Rat& a2() const { return a2_; }
    const Rat& a1() const { return a1_; }
    const Rat& a0() const { return a0_; }

    Rat value_at(const Rat& y) const;
    bool contains(const QuarticPoint& q) const { return q.w * q.w == value_at(q.y); }
    /// 256 (t+1)^4 (64t^2 + (128 + v^4 u) t + 64) u^9 t^9
    Rat discriminant() const { return disc_; }

private:
    Rat a4_, a3_, a2_, a1_, a0_, disc_;
};

struct TripleXYZ {
    Rat x, y, z;
};

/// Closed-form s = 5 parameters (t1 = t0, t2 = b4 = u = v).
struct FamilySubstitution {
    BigInt t1, t2;
};

QuarticCurve quartic_curve(const FamilyParams& params);

/// E: Y^2 = X^3 + u^2 v^2 t^2 X^2 - 16 u^3 t^3 (t+1)^2 X, for the stored t.
WeierstrassCurve e_curve(const FamilyParams& params);
/// E' = E with t = u t0^2: a = u^4 v^2 t0^4, b = -16 u^6 t0^6 (u t0^2 + 1)^2.
WeierstrassCurve eprime_curve(const FamilyParams& params);

CurvePoint base_point_P(const FamilyParams& params);
CurvePoint closed_2P(const FamilyParams& params);
CurvePoint closed_4P(const FamilyParams& params);

/// Remainder of numer(X([4]P)) divided by denom(X([4]P)) as polynomials in t0,
/// for fixed numeric u, v > 0. Equals u^3 v^8 (3u t0^2 + 2).
Poly remainder_certificate(const Rat& u, const Rat& v);

/// (X, Y) on E -> (y, w) on C. Throws DegenerateError for infinity or X = 0.
QuarticPoint phi_inverse(const FamilyParams& params, const CurvePoint& q);
/// (y, w) on C -> (X, Y) on E. Throws std::invalid_argument off C.
CurvePoint phi_forward(const FamilyParams& params, const QuarticPoint& q);

/// Both roots of t u y^2 x^2 + u t (y t + y + v) y^2 x - 1 = 0 (w is the
/// square root of the quartic at y). Throws DegenerateError when y = 0.
std::vector<Rat> solve_x_quadratic(const FamilyParams& params, const QuarticPoint& q);

/// (x, y, z) from -[2]P in closed form. Throws DegenerateError when D = 0.
TripleXYZ xyz_from_neg2P(const FamilyParams& params);

bool positivity_check(const FamilyParams& params);

enum class PositivityKind { AlwaysPositive, TwoIntervals };

/// D(t0) > 0 for every t0 > 0 (delta < 0), or only for t0 in (0, r1) and
/// (r2, inf) where r1 <= r2 are the roots of D. Roots are irrational unless
/// delta is a square; lo/hi bracket each root with lo <= root <= hi.
struct PositivityRegion {
    PositivityKind kind = PositivityKind::AlwaysPositive;
    Rat r1_lo, r1_hi, r2_lo, r2_hi;
};

PositivityRegion positivity_classify(const Rat& u, const Rat& v);

/// BVector (x, y, z, b4, ..., b_{s-1}) cleared to integers.
/// Throws PositivityError when D <= 0.
DioSolution general_solution(int s, const std::vector<Rat>& tail, const Rat& t0);
BVector general_bvector(const FamilyParams& params);

/// The s = 5 polynomial family evaluated at (t1, t2). Throws PositivityError
/// unless 4 t1^2 t2 - t1 t2^3 + 4 > 0 and std::invalid_argument for t1, t2 < 1.
DioSolution s5_polynomial_family(const FamilySubstitution& sub);

}  // namespace sumprod
