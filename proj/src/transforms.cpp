#include "sumprod/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace sumprod {

BVector::BVector(int s_, std::vector<Rat> entries_) : s(s_), entries(std::move(entries_)) {
    if (s < 3) throw std::invalid_argument("BVector: s must be >= 3");
    if (entries.size() != static_cast<std::size_t>(s - 1)) {
        throw std::invalid_argument("BVector: expected s-1 entries");
    }
}

Rat BVector::product() const {
    Rat p(1);
    for (const auto& e : entries) p *= e;
    return p;
}

Rat BVector::sum() const {
    Rat t;
    for (const auto& e : entries) t += e;
    return t;
}

bool BVector::all_positive() const {
    return std::all_of(entries.begin(), entries.end(), [](const Rat& e) { return e.sign() > 0; });
}

// ---------------------------------------------------------------------------

std::optional<DioSolution> DioSolution::from_parts(int s, std::vector<BigInt> parts) {
    if (s < 3) throw std::invalid_argument("s must be >= 3");
    if (parts.size() != static_cast<std::size_t>(s - 1)) {
        throw std::invalid_argument("expected " + std::to_string(s - 1) + " parts, got " +
                                    std::to_string(parts.size()));
    }
    for (const auto& p : parts) {
        if (p <= 0) throw std::invalid_argument("parts must be positive integers");
    }
    std::sort(parts.begin(), parts.end());
    DioSolution sol;
    sol.s_ = s;
    sol.parts_ = std::move(parts);
    sol.n_ = std::accumulate(sol.parts_.begin(), sol.parts_.end(), BigInt(0));
    auto b = perfect_sth_power(sol.product_times_sum(), s);
    if (!b) return std::nullopt;
    sol.b_ = *b;
    return sol;
}

DioSolution DioSolution::checked(int s, std::vector<BigInt> parts, const BigInt& b) {
    auto sol = from_parts(s, std::move(parts));
    if (!sol || sol->b_ != b) throw std::invalid_argument("parts do not satisfy the system with the given b");
    return *sol;
}

BigInt DioSolution::product_times_sum() const {
    BigInt p = n_;
    for (const auto& a : parts_) p *= a;
    return p;
}

bool DioSolution::verify() const {
    if (s_ < 3 || parts_.size() != static_cast<std::size_t>(s_ - 1)) return false;
    BigInt sum = 0;
    BigInt prod = 1;
    for (const auto& a : parts_) {
        if (a <= 0) return false;
        sum += a;
        prod *= a;
    }
    if (sum != n_) return false;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), b_.get_mpz_t(), static_cast<unsigned long>(s_));
    return prod * sum == power;
}

bool operator<(const DioSolution& l, const DioSolution& r) {
    if (l.n_ != r.n_) return l.n_ < r.n_;
    if (l.parts_ != r.parts_) return l.parts_ < r.parts_;
    if (l.s_ != r.s_) return l.s_ < r.s_;
    return l.b_ < r.b_;
}

// s = 3 ---------------------------------------------------------------------

WeierstrassCurve s3_curve() { return {Rat(0), Rat(0), Rat(16)}; }

S3Chart s3_chart(const Rat& b1, const Rat& b2) {
    if (b2.is_zero()) throw DegenerateError("s3_chart: b2 = 0");
    return {b1 / b2, Rat(1) / b2};
}

CurvePoint s3_chart_to_point(const S3Chart& chart) { return {Rat(4) * chart.v, Rat(8) * chart.u + Rat(4)}; }

std::optional<std::pair<Rat, Rat>> s3_trace_back(const CurvePoint& p) {
    if (p.is_infinity()) throw std::invalid_argument("s3_trace_back: point at infinity");
    if (!on_curve(s3_curve(), p)) throw std::invalid_argument("s3_trace_back: " + p.str() + " is not on y^2 = x^3 + 16");
    const Rat u = (p.y() - Rat(4)) / Rat(8);
    const Rat v = p.x() / Rat(4);
    if (v.is_zero()) return std::nullopt;
    return std::pair{u / v, Rat(1) / v};
}

// s = 4 ---------------------------------------------------------------------

WeierstrassCurve s4_curve() { return {Rat(0), Rat(-166779), Rat(26215254)}; }

CurvePoint s4_base_point() { return {Rat(235), Rat(8)}; }

S4Chart s4_chart(const BVector& b) {
    if (b.s != 4) throw std::invalid_argument("s4_chart: s must be 4");
    if (b.entries[0].is_zero()) throw std::invalid_argument("s4_chart: b1 must be non-zero");
    return {b.entries[1] / b.entries[0], Rat(1) / b.entries[0]};
}

CurvePoint s4_forward(const BVector& b) {
    if (b.s != 4) throw std::invalid_argument("s4_forward: s must be 4");
    if (b.product() != kS4FiberProduct || b.sum() != kS4FiberSum) {
        throw std::invalid_argument("s4_forward: vector is not on the fiber prod = 2/9, sum = 9/2");
    }
    const S4Chart ch = s4_chart(b);
    return {Rat(-32) * ch.v + Rat(243), Rat(384) * ch.u - Rat(864) * ch.v + Rat(192)};
}

BVector s4_inverse(const CurvePoint& p) {
    if (p.is_infinity()) throw DegenerateError("s4_inverse: point at infinity");
    if (!on_curve(s4_curve(), p)) throw std::invalid_argument("s4_inverse: " + p.str() + " is not on E");
    const Rat d = Rat(243) - p.x();
    if (d.is_zero()) throw DegenerateError("s4_inverse: x = 243");
    const Rat base = Rat(6369) - Rat(27) * p.x();
    return BVector(4, {Rat(32) / d, (base + p.y()) / (Rat(12) * d), (base - p.y()) / (Rat(12) * d)});
}

bool s4_in_positive_region(const CurvePoint& p) {
    if (p.is_infinity()) return false;
    return p.x() < Rat(243) && abs(p.y()) < Rat(6369) - Rat(27) * p.x();
}

// Integer solutions ----------------------------------------------------------

DioSolution clear_denominators(const BVector& b) {
    if (!b.all_positive()) throw std::invalid_argument("clear_denominators: entries must be positive");
    if (!b.satisfies_identity()) throw std::invalid_argument("clear_denominators: prod * sum != 1");
    BigInt scale = 1;
    for (const auto& e : b.entries) scale = lcm(scale, e.den());
    std::vector<BigInt> parts;
    parts.reserve(b.entries.size());
    for (const auto& e : b.entries) parts.push_back(e.num() * (scale / e.den()));
    return DioSolution::checked(b.s, std::move(parts), scale);
}

DioSolution primitive_reduce(const DioSolution& sol) {
    BigInt g = sol.b();
    for (const auto& a : sol.parts()) g = gcd(g, a);
    if (g == 1) return sol;
    std::vector<BigInt> parts;
    parts.reserve(sol.parts().size());
    for (const auto& a : sol.parts()) parts.push_back(a / g);
    return DioSolution::checked(sol.s(), std::move(parts), sol.b() / g);
}

}  // namespace sumprod
