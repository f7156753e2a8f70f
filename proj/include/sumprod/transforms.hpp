#pragma once

// Solutions of the sum-product system
//
//     n = a_1 + ... + a_{s-1},    a_1 ... a_{s-1} * n = b^s,
//
// their normalized form b_i = a_i / b (so that prod(b_i) * sum(b_i) = 1),
// and the changes of variables that put s = 3 and s = 4 onto elliptic curves.

#include "sumprod/elliptic.hpp"
#include "sumprod/exactmath.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumprod {

/// Raised when a rational map is evaluated on its exceptional locus.
class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Normalized rational vector (b_1, ..., b_{s-1}).
struct BVector {
    int s = 0;
    std::vector<Rat> entries;

    BVector() = default;
    /// Throws std::invalid_argument unless s >= 3 and entries.size() == s - 1.
    BVector(int s, std::vector<Rat> entries);

    Rat product() const;
    Rat sum() const;
    /// prod * sum == 1
    bool satisfies_identity() const { return product() * sum() == Rat(1); }
    bool all_positive() const;
};

/// A verified solution. Parts are kept in ascending order.
class DioSolution {
public:
    /// Computes n and b from the parts; returns nullopt if (prod parts) * n is
    /// not a perfect s-th power. Throws std::invalid_argument when s < 3, the
    /// part count is not s - 1, or some part is not positive.
    static std::optional<DioSolution> from_parts(int s, std::vector<BigInt> parts);
    /// Like from_parts but also checks the claimed b; throws std::invalid_argument
    /// if the system does not hold.
    static DioSolution checked(int s, std::vector<BigInt> parts, const BigInt& b);

    int s() const { return s_; }
    const std::vector<BigInt>& parts() const { return parts_; }
    const BigInt& n() const { return n_; }
    const BigInt& b() const { return b_; }

    /// (prod parts) * n
    BigInt product_times_sum() const;
    /// Re-checks n = sum(parts) and product_times_sum() = b^s from scratch.
    bool verify() const;

    friend bool operator==(const DioSolution&, const DioSolution&) = default;
    /// Orders by (n, parts) lexicographically, then s and b.
    friend bool operator<(const DioSolution& l, const DioSolution& r);

private:
    DioSolution() = default;
    int s_ = 0;
    std::vector<BigInt> parts_;
    BigInt n_;
    BigInt b_;
};

/// u = b1/b2, v = 1/b2 for s = 3: u^2 + u = v^3.
struct S3Chart {
    Rat u, v;
};

/// u = b2/b1, v = 1/b1 for s = 4 on the fiber prod = 2/9, sum = 9/2:
/// 18u + 18u^2 - 81uv + 4v^3 = 0.
struct S4Chart {
    Rat u, v;
};

// s = 3 ---------------------------------------------------------------------

/// y^2 = x^3 + 16, the image of u^2 + u = v^3 under y = 8u + 4, x = 4v.
WeierstrassCurve s3_curve();
S3Chart s3_chart(const Rat& b1, const Rat& b2);
CurvePoint s3_chart_to_point(const S3Chart& chart);
/// (b1, b2) = (u/v, 1/v) with u = (y-4)/8, v = x/4; nullopt when v = 0.
/// Throws std::invalid_argument off the curve or at infinity.
std::optional<std::pair<Rat, Rat>> s3_trace_back(const CurvePoint& p);

// s = 4 ---------------------------------------------------------------------

inline const Rat kS4FiberProduct{2, 9};
inline const Rat kS4FiberSum{9, 2};

/// y^2 = x^3 - 166779 x + 26215254
WeierstrassCurve s4_curve();
/// (235, 8), the image of (4, 1/3, 1/6).
CurvePoint s4_base_point();
S4Chart s4_chart(const BVector& b);
/// Throws std::invalid_argument unless s = 4, b1 != 0 and b lies on the fiber.
CurvePoint s4_forward(const BVector& b);
/// b1 = 32/(243-x), b2 = (y - 27x + 6369)/(12(243-x)), b3 = (-y - 27x + 6369)/(12(243-x)).
/// Throws DegenerateError at x = 243 and std::invalid_argument off the curve.
BVector s4_inverse(const CurvePoint& p);
/// x < 243 and |y| < 6369 - 27x, i.e. every b_i from s4_inverse is positive.
bool s4_in_positive_region(const CurvePoint& p);

// Integer solutions ----------------------------------------------------------

/// Multiplies by the lcm of the denominators. Requires positive entries with
/// prod * sum = 1; throws std::invalid_argument otherwise.
DioSolution clear_denominators(const BVector& b);
/// Divides parts and b by gcd(gcd(parts), b).
DioSolution primitive_reduce(const DioSolution& sol);

}  // namespace sumprod
