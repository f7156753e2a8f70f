#include "sumprod/family.hpp"

#include <algorithm>

namespace sumprod {

namespace {

Rat sq(const Rat& r) { return r * r; }

void require_affine_nonzero_x(const CurvePoint& q, const char* what) {
    if (q.is_infinity()) throw DegenerateError(std::string(what) + ": point at infinity");
    if (q.x().is_zero()) throw DegenerateError(std::string(what) + ": X = 0 is exceptional");
}

// Exact rational square root, if there is one.
std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    auto num = perfect_sth_power(r.num() == 0 ? BigInt(1) : r.num(), 2);
    auto den = perfect_sth_power(r.den(), 2);
    if (!num || !den) return std::nullopt;
    if (r.is_zero()) return Rat(0);
    return Rat(*num, *den);
}

}  // namespace

FamilyParams::FamilyParams(int s, std::vector<Rat> tail, Rat t0) : s_(s), tail_(std::move(tail)), t0_(std::move(t0)) {
    if (s_ < 5) throw std::invalid_argument("family: s must be >= 5");
    if (tail_.size() != static_cast<std::size_t>(s_ - 4)) {
        throw std::invalid_argument("family: tail must have s-4 = " + std::to_string(s_ - 4) + " entries");
    }
    if (!std::all_of(tail_.begin(), tail_.end(), [](const Rat& b) { return b.sign() > 0; })) {
        throw std::invalid_argument("family: tail entries must be positive");
    }
    if (t0_.sign() <= 0) throw std::invalid_argument("family: t0 must be positive");
    u_ = Rat(1);
    v_ = Rat(0);
    for (const auto& b : tail_) {
        u_ *= b;
        v_ += b;
    }
    t_ = u_ * sq(t0_);
}

FamilyParams FamilyParams::from_uv(Rat u, Rat v, Rat t0) {
    if (u.sign() <= 0 || v.sign() <= 0 || t0.sign() <= 0) {
        throw std::invalid_argument("family: u, v and t0 must be positive");
    }
    FamilyParams p;
    p.s_ = 5;
    p.t_ = u * sq(t0);
    p.u_ = std::move(u);
    p.v_ = std::move(v);
    p.t0_ = std::move(t0);
    return p;
}

Rat FamilyParams::delta() const { return u_ * (u_ * pow(v_, 4) - Rat(64)); }

Rat FamilyParams::quadratic_value() const { return Rat(4) * u_ * sq(t0_) - u_ * sq(v_) * t0_ + Rat(4); }

// ---------------------------------------------------------------------------

QuarticCurve::QuarticCurve(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t = params.t();
    const Rat t1 = t + Rat(1);
    a4_ = sq(u) * sq(t) * sq(t1);
    a3_ = Rat(2) * sq(u) * v * t1 * sq(t);
    a2_ = sq(u) * sq(v) * sq(t);
    a1_ = Rat(0);
    a0_ = Rat(4) * t * u;
    disc_ = Rat(256) * pow(t1, 4) * (Rat(64) * sq(t) + (Rat(128) + pow(v, 4) * u) * t + Rat(64)) * pow(u, 9) *
            pow(t, 9);
    if (disc_.is_zero()) throw std::invalid_argument("quartic curve is singular");
}

Rat QuarticCurve::value_at(const Rat& y) const { return (((a4_ * y + a3_) * y + a2_) * y + a1_) * y + a0_; }

QuarticCurve quartic_curve(const FamilyParams& params) { return QuarticCurve(params); }

WeierstrassCurve e_curve(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& t = params.t();
    return {sq(u) * sq(params.v()) * sq(t), Rat(-16) * pow(u, 3) * pow(t, 3) * sq(t + Rat(1)), Rat(0)};
}

WeierstrassCurve eprime_curve(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& t0 = params.t0();
    const Rat w = u * sq(t0) + Rat(1);
    return {pow(u, 4) * sq(params.v()) * pow(t0, 4), Rat(-16) * pow(u, 6) * pow(t0, 6) * sq(w), Rat(0)};
}

CurvePoint base_point_P(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& t0 = params.t0();
    const Rat w = u * sq(t0) + Rat(1);
    return {Rat(4) * pow(u, 3) * pow(t0, 3) * w, Rat(4) * params.v() * pow(u, 5) * pow(t0, 5) * w};
}

CurvePoint closed_2P(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t0 = params.t0();
    const Rat w = u * sq(t0) + Rat(1);
    return {Rat(16) * sq(u) * sq(t0) * sq(w) / sq(v), Rat(-64) * pow(u, 3) * pow(t0, 3) * pow(w, 3) / pow(v, 3)};
}

CurvePoint closed_4P(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t0 = params.t0();
    const Rat w = u * sq(t0) + Rat(1);
    const Rat v4 = pow(v, 4);
    const Rat k = Rat(16) * sq(u) * pow(t0, 4) + (Rat(32) * u + v4 * sq(u)) * sq(t0) + Rat(16);
    const Rat x = sq(u) * sq(t0) * sq(k) / (Rat(64) * sq(v) * sq(w));
    const Rat m = Rat(256) * pow(u, 4) * pow(t0, 8) + (Rat(1024) * pow(u, 3) - Rat(64) * pow(u, 4) * v4) * pow(t0, 6) +
                  (-pow(u, 4) * pow(v, 8) - Rat(128) * pow(u, 3) * v4 + Rat(1536) * sq(u)) * pow(t0, 4) +
                  (Rat(-64) * v4 * sq(u) + Rat(1024) * u) * sq(t0) + Rat(256);
    const Rat y = -(pow(u, 3) * pow(t0, 3) * k * m) / (Rat(512) * pow(v, 3) * pow(w, 3));
    return {x, y};
}

Poly remainder_certificate(const Rat& u, const Rat& v) {
    if (u.sign() <= 0 || v.sign() <= 0) throw std::invalid_argument("remainder_certificate: u, v must be positive");
    // Polynomials in t0.
    const Poly k({Rat(16), Rat(0), Rat(32) * u + pow(v, 4) * sq(u), Rat(0), Rat(16) * sq(u)});
    const Poly numer = Poly::monomial(sq(u), 2) * k * k;
    const Poly w({Rat(1), Rat(0), u});
    const Poly denom = (Rat(64) * sq(v)) * (w * w);
    auto [quot, rem] = poly_divrem(numer, denom);
    if (rem.is_zero()) throw std::logic_error("remainder_certificate: X([4]P) is a polynomial in t0");
    return rem;
}

QuarticPoint phi_inverse(const FamilyParams& params, const CurvePoint& q) {
    require_affine_nonzero_x(q, "phi_inverse");
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t = params.t();
    const Rat t1 = t + Rat(1);
    if (t.is_zero() || t1.is_zero()) throw DegenerateError("phi_inverse: t must not be 0 or -1");
    const Rat& X = q.x();
    const Rat& Y = q.y();
    Rat y = (Y - u * v * t * X) / (Rat(2) * u * t * t1 * X);
    Rat w = (sq(Y) - sq(u) * sq(v) * sq(t) * sq(X) - Rat(2) * pow(X, 3)) / (Rat(4) * u * t * t1 * sq(X));
    return {std::move(y), std::move(w)};
}

CurvePoint phi_forward(const FamilyParams& params, const QuarticPoint& q) {
    if (!quartic_curve(params).contains(q)) throw std::invalid_argument("phi_forward: point is not on the quartic");
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t = params.t();
    const Rat t1 = t + Rat(1);
    const Rat inner = u * t * t1 * sq(q.y) + u * v * t * q.y - q.w;
    return {Rat(2) * u * t * t1 * inner, Rat(2) * sq(u) * sq(t) * t1 * inner * (Rat(2) * t1 * q.y + v)};
}

std::vector<Rat> solve_x_quadratic(const FamilyParams& params, const QuarticPoint& q) {
    if (q.y.is_zero()) throw DegenerateError("solve_x_quadratic: y = 0");
    const Rat& u = params.u();
    const Rat& t = params.t();
    const Rat y2 = sq(q.y);
    const Rat lin = -t * u * y2 * ((Rat(1) + t) * q.y + params.v());
    const Rat root = q.y * q.w;
    const Rat den = Rat(2) * t * u * y2;
    return {(lin + root) / den, (lin - root) / den};
}

TripleXYZ xyz_from_neg2P(const FamilyParams& params) {
    const Rat& u = params.u();
    const Rat& v = params.v();
    const Rat& t0 = params.t0();
    const Rat d = params.quadratic_value();
    if (d.is_zero()) throw DegenerateError("xyz_from_neg2P: 4u t0^2 - u v^2 t0 + 4 = 0");
    const Rat w = u * sq(t0) + Rat(1);
    TripleXYZ out{u * pow(v, 3) * t0 / (Rat(2) * d), d / (Rat(2) * u * v * t0 * w), d * t0 / (Rat(2) * v * w)};
    if (out.x * out.y * out.z * u * (out.x + out.y + out.z + v) != Rat(1)) {
        throw std::logic_error("xyz_from_neg2P: identity xyzu(x+y+z+v) = 1 violated");
    }
    return out;
}

bool positivity_check(const FamilyParams& params) { return params.quadratic_value().sign() > 0; }

PositivityRegion positivity_classify(const Rat& u, const Rat& v) {
    if (u.sign() <= 0 || v.sign() <= 0) throw std::invalid_argument("positivity_classify: u, v must be positive");
    PositivityRegion region;
    const Rat delta = u * (u * pow(v, 4) - Rat(64));
    if (delta.sign() < 0) return region;
    region.kind = PositivityKind::TwoIntervals;

    // Roots of 4u t^2 - u v^2 t + 4: (u v^2 -+ sqrt(u^2 v^4 - 64u)) / (8u).
    const Rat center = sq(v) / Rat(8);
    if (auto root = rational_sqrt(delta)) {
        region.r1_lo = region.r1_hi = center - *root / (Rat(8) * u);
        region.r2_lo = region.r2_hi = center + *root / (Rat(8) * u);
        return region;
    }
    const auto value = [&](const Rat& t) { return Rat(4) * u * sq(t) - u * sq(v) * t + Rat(4); };
    // D > 0 at 0, D < 0 at the vertex, D > 0 at v^2/4 (the root sum).
    const auto bisect = [&](Rat lo, Rat hi, bool rising) {
        for (int i = 0; i < 48; ++i) {
            Rat mid = (lo + hi) / Rat(2);
            const bool positive = value(mid).sign() > 0;
            if (positive == rising) hi = mid;
            else lo = mid;
        }
        return std::pair{lo, hi};
    };
    std::tie(region.r1_lo, region.r1_hi) = bisect(Rat(0), center, false);
    std::tie(region.r2_lo, region.r2_hi) = bisect(center, sq(v) / Rat(4), true);
    return region;
}

BVector general_bvector(const FamilyParams& params) {
    if (params.tail().empty()) throw std::invalid_argument("general_bvector: parameters carry no tail");
    const Rat d = params.quadratic_value();
    if (d.is_zero()) throw DegenerateError("general_solution: 4u t0^2 - u v^2 t0 + 4 = 0");
    if (d.sign() < 0) {
        throw PositivityError("positivity violated: 4u t0^2 - u v^2 t0 + 4 = " + d.str() + " <= 0", d);
    }
    const TripleXYZ xyz = xyz_from_neg2P(params);
    std::vector<Rat> entries{xyz.x, xyz.y, xyz.z};
    entries.insert(entries.end(), params.tail().begin(), params.tail().end());
    return BVector(params.s(), std::move(entries));
}

DioSolution general_solution(int s, const std::vector<Rat>& tail, const Rat& t0) {
    return clear_denominators(general_bvector(FamilyParams(s, tail, t0)));
}

DioSolution s5_polynomial_family(const FamilySubstitution& sub) {
    const BigInt& t1 = sub.t1;
    const BigInt& t2 = sub.t2;
    if (t1 < 1 || t2 < 1) throw std::invalid_argument("s5_polynomial_family: t1, t2 must be positive integers");
    const BigInt d = 4 * t1 * t1 * t2 - t1 * t2 * t2 * t2 + 4;
    if (d <= 0) {
        throw PositivityError("positivity violated: 4 t1^2 t2 - t1 t2^3 + 4 = " + d.get_str() + " <= 0", Rat(d));
    }
    const BigInt w = t1 * t1 * t2 + 1;
    BigInt t2_3 = t2 * t2 * t2;
    std::vector<BigInt> parts{
        t1 * t1 * t2_3 * t2_3 * w,
        d * d,
        t1 * t1 * t2 * d * d,
        2 * t1 * t2_3 * w * d,
    };
    const BigInt b = 2 * t1 * t2 * t2 * w * d;
    return DioSolution::checked(5, std::move(parts), b);
}

}  // namespace sumprod
