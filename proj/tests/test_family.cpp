#include "oracles.hpp"
#include "sumprod/family.hpp"

#include <doctest.h>

#include <random>

using namespace sumprod;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FamilyParams unit_params() { return FamilyParams(5, {Rat(1)}, Rat(1)); }

// Classical discriminant of a y^4 + b y^3 + c y^2 + d y + e.
Rat quartic_discriminant(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
    return Rat(256) * pow(a, 3) * pow(e, 3) - Rat(192) * a * a * b * d * e * e - Rat(128) * a * a * c * c * e * e +
           Rat(144) * a * a * c * d * d * e - Rat(27) * a * a * pow(d, 4) + Rat(144) * a * b * b * c * e * e -
           Rat(6) * a * b * b * d * d * e - Rat(80) * a * b * c * c * d * e + Rat(18) * a * b * c * pow(d, 3) +
           Rat(16) * a * pow(c, 4) * e - Rat(4) * a * pow(c, 3) * d * d - Rat(27) * pow(b, 4) * e * e +
           Rat(18) * pow(b, 3) * c * d * e - Rat(4) * pow(b, 3) * pow(d, 3) - Rat(4) * b * b * pow(c, 3) * e +
           b * b * c * c * d * d;
}

FamilyParams random_params(std::mt19937_64& rng) {
    return FamilyParams::from_uv(oracle::random_in_0_10(rng), oracle::random_in_0_10(rng), oracle::random_in_0_10(rng));
}

}  // namespace

TEST_CASE("FamilyParams") {
    const FamilyParams p(7, {Rat(1, 2), Rat(3), Rat(2, 5)}, Rat(3, 4));
    CHECK(p.u() == Rat(3, 5));
    CHECK(p.v() == Rat(39, 10));
    CHECK(p.t() == Rat(3, 5) * Rat(9, 16));
    CHECK(p.delta() == p.u() * (p.u() * pow(p.v(), 4) - Rat(64)));

    CHECK_THROWS_AS(FamilyParams(4, {}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(6, {Rat(1)}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(5, {Rat(-1)}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(5, {Rat(1)}, Rat(0)), std::invalid_argument);
}

TEST_CASE("quartic_curve") {
    const QuarticCurve c = quartic_curve(unit_params());
    CHECK(c.a4() == Rat(4));
    CHECK(c.a3() == Rat(4));
    CHECK(c.a2() == Rat(1));
    CHECK(c.a1() == Rat(0));
    CHECK(c.a0() == Rat(4));
    // 256 (t+1)^4 (64 t^2 + 129 t + 64) t^9 at t = 1
    CHECK(c.discriminant() == Rat(256 * 16 * 257));
}

TEST_CASE("quartic discriminant closed form matches the generic formula") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const auto p = random_params(rng);
        const QuarticCurve c = quartic_curve(p);
        CHECK(c.discriminant() == quartic_discriminant(c.a4(), c.a3(), c.a2(), c.a1(), c.a0()));
    }
}

TEST_CASE("eprime_curve") {
    const auto p = unit_params();
    const auto e = eprime_curve(p);
    CHECK(e == WeierstrassCurve(Rat(1), Rat(-64), Rat(0)));
    CHECK(on_curve(e, {Rat(8), Rat(8)}));
    CHECK(e_curve(p) == e);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 10; ++i) {
        const auto q = random_params(rng);
        CHECK(eprime_curve(q).c().is_zero());
        CHECK(eprime_curve(q) == e_curve(q));
    }
}

TEST_CASE("closed-form multiples at u = v = t0 = 1") {
    const auto p = unit_params();
    CHECK(base_point_P(p) == CurvePoint(Rat(8), Rat(8)));
    CHECK(closed_2P(p) == CurvePoint(Rat(64), Rat(-512)));
    CHECK(closed_4P(p).x() == Rat(4225, 256));
    const auto e = eprime_curve(p);
    CHECK(closed_4P(p) == scalar_mul(e, 4, base_point_P(p)));
}

TEST_CASE("closed-form multiples agree with the group law") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const auto p = random_params(rng);
        const auto e = eprime_curve(p);
        const auto base = base_point_P(p);
        CHECK(on_curve(e, base));
        CHECK(on_curve(e, closed_2P(p)));
        CHECK(on_curve(e, closed_4P(p)));
        CHECK(closed_2P(p) == scalar_mul(e, 2, base));
        CHECK(closed_4P(p) == scalar_mul(e, 4, base));
    }
}

TEST_CASE("remainder_certificate") {
    CHECK(remainder_certificate(Rat(1), Rat(1)) == Poly{Rat(2), Rat(0), Rat(3)});
    CHECK(remainder_certificate(Rat(2), Rat(3)) == Poly{Rat(104976), Rat(0), Rat(314928)});
    CHECK(remainder_certificate(Rat(1), Rat(2)) == Poly{Rat(512), Rat(0), Rat(768)});
    CHECK_THROWS_AS(remainder_certificate(Rat(0), Rat(1)), std::invalid_argument);

    std::mt19937_64 rng(37);
    for (int i = 0; i < 10; ++i) {
        const Rat u = oracle::random_positive_rat(rng, 50, 9);
        const Rat v = oracle::random_positive_rat(rng, 50, 9);
        const Rat k = pow(u, 3) * pow(v, 8);
        const Poly r = remainder_certificate(u, v);
        CHECK(r == Poly{Rat(2) * k, Rat(0), Rat(3) * u * k});
        CHECK_FALSE(r.is_zero());
    }
}

TEST_CASE("phi_inverse and phi_forward at u = v = t0 = 1") {
    const auto p = unit_params();
    const QuarticPoint q = phi_inverse(p, {Rat(64), Rat(512)});
    CHECK(q.y == Rat(7, 4));
    CHECK(q.w == Rat(-65, 8));
    CHECK(quartic_curve(p).contains(q));
    CHECK(phi_forward(p, q) == CurvePoint(Rat(64), Rat(512)));

    // The other branch.
    const CurvePoint other = phi_forward(p, {Rat(7, 4), Rat(65, 8)});
    CHECK(other == CurvePoint(Rat(-1), Rat(-8)));
    CHECK(on_curve(e_curve(p), other));

    const QuarticPoint zero = phi_inverse(p, {Rat(8), Rat(8)});
    CHECK(zero.y == Rat(0));
    CHECK_THROWS_AS(solve_x_quadratic(p, zero), DegenerateError);

    CHECK_THROWS_AS(phi_inverse(p, {Rat(0), Rat(0)}), DegenerateError);
    CHECK_THROWS_AS(phi_inverse(p, CurvePoint::infinity()), DegenerateError);
    CHECK_THROWS_AS(phi_forward(p, {Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("forward map with (t+1)^2 in Y misses E") {
    const auto p = unit_params();
    const QuarticPoint q{Rat(7, 4), Rat(-65, 8)};
    const Rat inner = Rat(2) * q.y * q.y + q.y - q.w;  // ut(t+1)y^2 + uvty - w at u=v=t=1
    const CurvePoint printed(Rat(4) * inner, Rat(8) * inner * (Rat(4) * q.y + Rat(1)));
    CHECK_FALSE(on_curve(e_curve(p), printed));
    CHECK(on_curve(e_curve(p), phi_forward(p, q)));
}

TEST_CASE("phi round trips on random parameters") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        const auto p = random_params(rng);
        const auto e = e_curve(p);
        const auto base = base_point_P(p);
        const auto quartic = quartic_curve(p);
        for (long k : {1L, -1L, 2L, -2L, 3L, -3L}) {
            const CurvePoint q = scalar_mul(e, k, base);
            const QuarticPoint c = phi_inverse(p, q);
            CHECK(quartic.contains(c));
            CHECK(phi_forward(p, c) == q);
            const CurvePoint flipped = phi_forward(p, {c.y, -c.w});
            CHECK(on_curve(e, flipped));
            if (!flipped.is_infinity() && !flipped.x().is_zero()) {
                const QuarticPoint back = phi_inverse(p, flipped);
                CHECK(back.y == c.y);
                CHECK(back.w == -c.w);
            }
        }
    }
}

TEST_CASE("solve_x_quadratic") {
    const auto p = unit_params();
    const auto roots = solve_x_quadratic(p, {Rat(7, 4), Rat(65, 8)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(1, 14));
    CHECK(roots[1] == Rat(-32, 7));
    for (const Rat& x : roots) {
        const Rat y(7, 4);
        const Rat z = p.t() * y;
        CHECK(x * y * z * p.u() * (x + y + z + p.v()) == Rat(1));
    }
}

TEST_CASE("xyz_from_neg2P") {
    const auto a = xyz_from_neg2P(unit_params());
    CHECK(a.x == Rat(1, 14));
    CHECK(a.y == Rat(7, 4));
    CHECK(a.z == Rat(7, 4));

    const auto b = xyz_from_neg2P(FamilyParams(5, {Rat(1)}, Rat(2)));
    CHECK(b.x == Rat(1, 18));
    CHECK(b.y == Rat(9, 10));
    CHECK(b.z == Rat(18, 5));

    // u = 2, v = 3 (tail 1, 2): D = 8 t0^2 - 18 t0 + 4 vanishes at t0 = 2.
    CHECK_THROWS_AS(xyz_from_neg2P(FamilyParams(6, {Rat(1), Rat(2)}, Rat(2))), DegenerateError);
}

TEST_CASE("xyz_from_neg2P agrees with the birational map and the quadratic") {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 10) {
        const auto p = random_params(rng);
        if (p.quadratic_value().is_zero()) continue;
        ++checked;
        const auto xyz = xyz_from_neg2P(p);
        CHECK(xyz.x * xyz.y * xyz.z * p.u() * (xyz.x + xyz.y + xyz.z + p.v()) == Rat(1));
        CHECK(xyz.z == p.t() * xyz.y);

        const QuarticPoint q = phi_inverse(p, neg(closed_2P(p)));
        CHECK(q.y == xyz.y);
        const auto roots = solve_x_quadratic(p, q);
        CHECK((roots[0] == xyz.x || roots[1] == xyz.x));
    }
}

TEST_CASE("positivity_check") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 10; ++i) CHECK(positivity_check(FamilyParams::from_uv(Rat(1), Rat(1), oracle::random_in_0_10(rng))));
    CHECK(FamilyParams::from_uv(Rat(1), Rat(1), Rat(1)).delta() == Rat(-63));
    CHECK_FALSE(positivity_check(FamilyParams::from_uv(Rat(1), Rat(4), Rat(2))));
    CHECK(FamilyParams::from_uv(Rat(1), Rat(4), Rat(2)).quadratic_value() == Rat(-12));
    CHECK(positivity_check(FamilyParams::from_uv(Rat(1), Rat(4), Rat(4))));
    CHECK(FamilyParams::from_uv(Rat(1), Rat(4), Rat(4)).quadratic_value() == Rat(4));
}

TEST_CASE("positivity_check iff x, y, z > 0") {
    std::mt19937_64 rng(53);
    int negatives = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p = random_params(rng);
        if (p.quadratic_value().is_zero()) continue;
        const auto xyz = xyz_from_neg2P(p);
        const bool all_positive = xyz.x.sign() > 0 && xyz.y.sign() > 0 && xyz.z.sign() > 0;
        CHECK(positivity_check(p) == all_positive);
        negatives += all_positive ? 0 : 1;
    }
    CHECK(negatives > 0);
}

TEST_CASE("positivity_classify") {
    CHECK(positivity_classify(Rat(1), Rat(1)).kind == PositivityKind::AlwaysPositive);

    // delta = 4 * 81 - 128 = 196: roots 1/4 and 2.
    const auto exact = positivity_classify(Rat(2), Rat(3));
    CHECK(exact.kind == PositivityKind::TwoIntervals);
    CHECK(exact.r1_lo == Rat(1, 4));
    CHECK(exact.r1_hi == Rat(1, 4));
    CHECK(exact.r2_lo == Rat(2));

    // delta = 0: double root at v^2 / 8.
    const auto dbl = positivity_classify(Rat(4), Rat(2));
    CHECK(dbl.r1_lo == Rat(1, 2));
    CHECK(dbl.r2_hi == Rat(1, 2));

    const Rat u(1), v(4);
    const auto r = positivity_classify(u, v);
    REQUIRE(r.kind == PositivityKind::TwoIntervals);
    const auto d = [&](const Rat& t) { return Rat(4) * u * t * t - u * v * v * t + Rat(4); };
    CHECK(d(r.r1_lo).sign() > 0);
    CHECK(d(r.r1_hi).sign() < 0);
    CHECK(d(r.r2_lo).sign() < 0);
    CHECK(d(r.r2_hi).sign() > 0);
    CHECK(r.r1_hi - r.r1_lo < Rat(1, 1000000));
    CHECK(r.r2_hi - r.r2_lo < Rat(1, 1000000));
    // (r1 + r2) = v^2 / 4 and r1 r2 = 1 / u bracket the true roots.
    CHECK(r.r1_lo + r.r2_lo <= Rat(4));
    CHECK(r.r1_hi + r.r2_hi >= Rat(4));
}

TEST_CASE("general_solution") {
    const auto a = general_solution(5, {Rat(1)}, Rat(1));
    CHECK(a.parts() == ints({2, 28, 49, 49}));
    CHECK(a.b() == 28);
    CHECK(a.n() == 128);

    const auto b = general_solution(5, {Rat(1)}, Rat(2));
    CHECK(primitive_reduce(b).parts() == ints({5, 81, 90, 324}));
    CHECK(primitive_reduce(b).b() == 90);

    const auto c = general_solution(6, {Rat(1), Rat(1)}, Rat(1));
    CHECK(c.parts() == ints({1, 1, 2, 2, 2}));
    CHECK(c.b() == 2);
    CHECK(c.n() == 8);

    CHECK_THROWS_AS(general_solution(5, {Rat(4)}, Rat(2)), PositivityError);
    try {
        general_solution(5, {Rat(4)}, Rat(2));
    } catch (const PositivityError& e) {
        CHECK(e.quadratic_value() == Rat(-60));
    }
    CHECK_THROWS_AS(general_solution(6, {Rat(1), Rat(2)}, Rat(2)), DegenerateError);
}

TEST_CASE("general_solution satisfies the system for s = 5..9") {
    std::mt19937_64 rng(59);
    int produced = 0;
    while (produced < 50) {
        const int s = 5 + static_cast<int>(rng() % 5);
        std::vector<Rat> tail;
        for (int i = 0; i < s - 4; ++i) tail.push_back(oracle::random_positive_rat(rng, 9, 4));
        const Rat t0 = oracle::random_positive_rat(rng, 9, 4);
        const FamilyParams p(s, tail, t0);
        if (!positivity_check(p)) continue;
        ++produced;
        const BVector bv = general_bvector(p);
        CHECK(bv.satisfies_identity());
        CHECK(bv.all_positive());
        const DioSolution sol = general_solution(s, tail, t0);
        CHECK(sol.s() == s);
        CHECK(sol.verify());
        CHECK(sol.product_times_sum() == oracle::ipow(sol.b(), static_cast<unsigned long>(s)));
    }
}

TEST_CASE("s5_polynomial_family") {
    const auto a = s5_polynomial_family({1, 1});
    CHECK(a.parts() == ints({2, 28, 49, 49}));
    CHECK(a.b() == 28);

    const auto b = s5_polynomial_family({2, 1});
    CHECK(b.parts() == ints({20, 324, 360, 1296}));
    CHECK(b.b() == 360);
    CHECK(b.n() == 2000);
    CHECK(primitive_reduce(b).n() == 500);

    const auto c = s5_polynomial_family({1, 2});
    CHECK(c.parts() == ints({16, 32, 192, 192}));
    CHECK(c.b() == 96);
    CHECK(BigInt(16) * 32 * 192 * 192 * 432 == oracle::ipow(BigInt(96), 5));

    CHECK_THROWS_AS(s5_polynomial_family({1, 3}), PositivityError);
    CHECK_THROWS_AS(s5_polynomial_family({0, 1}), std::invalid_argument);
}

TEST_CASE("s5_polynomial_family matches general_solution up to scaling") {
    for (long t1 = 1; t1 <= 6; ++t1) {
        for (long t2 = 1; t2 <= 6; ++t2) {
            const BigInt d = 4 * t1 * t1 * t2 - t1 * t2 * t2 * t2 + 4;
            if (d <= 0) {
                CHECK_THROWS_AS(s5_polynomial_family({t1, t2}), PositivityError);
                continue;
            }
            const auto poly = s5_polynomial_family({t1, t2});
            const auto gen = general_solution(5, {Rat(t2)}, Rat(t1));
            CHECK(poly.verify());
            CHECK(primitive_reduce(poly) == primitive_reduce(gen));
        }
    }
}
