#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "common.hpp"
#include "wgauss/matrix.hpp"

using namespace wgauss;
using namespace wgauss::testing;

namespace {

Series horner(const Poly& f, const Series& x) {
    Series acc(x.field(), x.precision());
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i).coerce(x.field());
    return acc;
}

// y^2 - f(x) (or w^2 - h(u) at infinity) along the parametrization.
Series residual_hyperelliptic(const Curve& C, const LocalParam& lp, const Point& P) {
    FieldPtr K = lp.coords[0].field();
    Poly f = C.f.coerce(K);
    if (P.at_infinity()) {
        const int top = 2 * C.genus + 2;
        std::vector<Scalar> c;
        for (int i = 0; i <= top; ++i) c.push_back(f.coeff(top - i));
        f = Poly(K, c);
    }
    return lp.coords[1] * lp.coords[1] - horner(f, lp.coords[0]);
}

bool vanishes(const Series& s) { return s.valuation() == s.precision(); }

}  // namespace

TEST_CASE("validation") {
    auto C = x7_minus_x(11);
    CHECK(C->genus == 3);
    CHECK(C->odd_model());
    CHECK(klein(Field::prime(10007))->genus == 3);
    CHECK(klein(Field::rationals())->genus == 3);
    CHECK(g4(Field::prime(10007))->genus == 4);
    CHECK(g4(Field::rationals())->genus == 4);
    CHECK_THROWS_AS(hyperelliptic(Field::prime(11), {0, 0, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(hyperelliptic(Field::prime(11), {0, 0, 1, 0, 0, 1, 1}), SingularError);
    CHECK_THROWS_AS(hyperelliptic(Field::prime(7), {1, 0, 0, 0, 0, 0, 0, 1}), SingularError);
    FieldPtr F = Field::prime(10007);
    MPoly sing = form(F, 3, {{{2, 2, 0}, 1}, {{0, 2, 2}, 1}, {{2, 0, 2}, 1}});
    CHECK_THROWS_AS(make_plane_quartic(sing), SingularError);
    // Fermat quartic is smooth away from 2; the cone over it is not a curve.
    CHECK_NOTHROW(make_plane_quartic(form(F, 3, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}})));
    CHECK_THROWS_AS(make_plane_quartic(form(F, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}})), DomainError);
    // Quadric cone x0 x1 = x2^2 through a cubic containing its vertex: singular.
    MPoly cone = form(F, 4, {{{1, 1, 0, 0}, 1}, {{0, 0, 2, 0}, -1}});
    MPoly cubic = form(F, 4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}, {{1, 1, 1, 0}, 3}});
    CHECK_THROWS_AS(make_canonical_g4(cone, cubic), SingularError);
    CHECK_THROWS_AS(make_canonical_g4(g4_quadric(Field::prime(3)), g4_cubic(Field::prime(3))), DomainError);
}

TEST_CASE("points, involution and Weierstrass points") {
    auto C = x7_minus_x(11);
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Point P = sample_point(*C, rng);
        CHECK(on_curve(*C, P));
        CHECK(involution(*C, involution(*C, P)) == P);
        CHECK(canonical_coords(*C, P) == canonical_coords(*C, involution(*C, P)));
        CHECK((is_weierstrass(*C, P) == (involution(*C, P) == P)));
    }
    CHECK(sample_point(*C, 123) == sample_point(*C, 123));
    auto W = weierstrass_points(*C);
    CHECK(W.size() == 8);
    CHECK(W.back().at_infinity());
    for (const auto& P : W) CHECK(involution(*C, P) == P);

    FieldPtr F = Field::prime(101);
    Point Q = affine_point(Scalar::from_int(F, 2), Scalar::from_int(F, 3));
    CHECK(involution(*hyperelliptic(F, {1, 0, 0, 0, 0, 1}), Q) == affine_point(Scalar::from_int(F, 2), Scalar::from_int(F, -3)));
    auto cc = canonical_coords(*C, affine_point(Scalar::from_int(Field::prime(11), 2), Scalar::zero(Field::prime(11))));
    CHECK(cc == std::vector<Scalar>{Scalar::from_int(Field::prime(11), 1), Scalar::from_int(Field::prime(11), 2),
                                    Scalar::from_int(Field::prime(11), 4)});

    // Even model, square leading coefficient: infinity not fixed, 8 affine
    // fixed points found by solving f = 0 directly.
    auto E = hyperelliptic(F, {3, 1, 0, 5, 0, 0, 7, 2, 1});
    auto WE = weierstrass_points(*E);
    CHECK(WE.size() == 8);
    for (const auto& P : WE) {
        CHECK(!P.at_infinity());
        CHECK(E->f.coerce(P.field()).eval(P.c[0]).is_zero());
    }
    auto pts = enumerate_points(*E, F);
    int inf = 0;
    for (const auto& P : pts) {
        CHECK(on_curve(*E, P));
        if (P.at_infinity()) {
            ++inf;
            CHECK(involution(*E, P) != P);
        }
    }
    CHECK(inf == 2);
}

TEST_CASE("point canonicalization across fields") {
    FieldPtr F = Field::prime(11), K = Field::extension(11, 2);
    Point P = affine_point(Scalar::from_int(F, 3), Scalar::from_int(F, 5));
    Point Q = coerce_point(P, K);
    CHECK(Q == P);
    CHECK(canonical(Q).field() == F);
    Point R = projective_point({Scalar::from_int(F, 2), Scalar::from_int(F, 4), Scalar::from_int(F, 6)});
    CHECK(R.c[0].is_one());
    CHECK(R.c[2] == Scalar::from_int(F, 3));
}

TEST_CASE("enumeration agrees with brute force") {
    FieldPtr F = Field::prime(13);
    auto C = x7_minus_x(13);
    auto pts = enumerate_points(*C, F);
    std::size_t brute = 1;
    for (int x = 0; x < 13; ++x)
        for (int y = 0; y < 13; ++y)
            if ((y * y - (static_cast<long long>(std::pow(x, 7)) - x)) % 13 == 0) ++brute;
    CHECK(pts.size() == brute);

    auto Kq = klein(F);
    auto kpts = enumerate_points(*Kq, F);
    std::size_t kb = 0;
    auto kf = [](long long x, long long y, long long z) { return (x * x * x * y + y * y * y * z + z * z * z * x) % 13; };
    for (int x = 0; x < 13; ++x) {
        if (kf(0, 1, x) == 0) ++kb;
        for (int y = 0; y < 13; ++y)
            if (kf(1, x, y) == 0) ++kb;
    }
    if (kf(0, 0, 1) == 0) ++kb;
    CHECK(kpts.size() == kb);
    for (const auto& P : kpts) CHECK(on_curve(*Kq, P));

    FieldPtr F29 = Field::prime(29);
    auto G = g4(F29);
    auto gpts = enumerate_points(*G, F29);
    std::size_t gb = 0;
    // Brute over P^3: first nonzero coordinate 1.
    auto on = [&](std::vector<Scalar> c) { return G->forms[0].eval(c).is_zero() && G->forms[1].eval(c).is_zero(); };
    for (int lead = 0; lead < 4; ++lead) {
        int free = 3 - lead;
        int total = static_cast<int>(std::pow(29, free));
        for (int i = 0; i < total; ++i) {
            std::vector<Scalar> c(4, Scalar::zero(F29));
            c[lead] = Scalar::one(F29);
            int v = i;
            for (int j = lead + 1; j < 4; ++j, v /= 29) c[j] = Scalar::from_int(F29, v % 29);
            if (on(c)) ++gb;
        }
    }
    CHECK(gpts.size() == gb);
}

TEST_CASE("sampling frequencies follow the residue density") {
    FieldPtr F = Field::prime(10009);
    auto C = hyperelliptic(F, {3, 0, 1, 0, 0, 1});
    // Oracle: x values with f(x) a square (zero included), by Euler's criterion.
    std::set<uint32_t> admissible;
    for (uint32_t x = 0; x < 10009; ++x) {
        Scalar v = C->f.eval(Scalar::from_int(F, x));
        if (v.is_zero() || v.pow(uint64_t{(10009 - 1) / 2}).is_one()) admissible.insert(x);
    }
    std::map<uint32_t, int> hits;
    const int N = 10000;
    Rng rng(2024);
    for (int i = 0; i < N; ++i) ++hits[sample_point(*C, rng).c[0].coeff(0)];
    const double p = 1.0 / admissible.size();
    const double mean = N * p, sigma = std::sqrt(N * p * (1 - p));
    for (const auto& [x, h] : hits) {
        CHECK(admissible.count(x) == 1);
        CHECK(std::abs(h - mean) <= 5 * sigma);
    }
}

TEST_CASE("local parametrizations") {
    auto C = x7_minus_x(10007);
    FieldPtr F = C->field;
    const int N = 12;
    // Weierstrass point (1, 0): x = 1 + t^2 / f'(1) + O(t^3).
    Point W = affine_point(Scalar::one(F), Scalar::zero(F));
    auto lw = local_param(*C, W, N);
    CHECK(lw.coords[0][0].is_one());
    CHECK(lw.coords[0][1].is_zero());
    CHECK(lw.coords[0][2] == C->f.derivative().eval(Scalar::one(F)).inv());
    CHECK(lw.coords[1] == Series::param(F, N));
    CHECK(vanishes(residual_hyperelliptic(*C, lw, W)));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Point P = sample_point(*C, rng);
        auto lp = local_param(*C, P, N);
        CHECK(lp.coords[0][0] == P.c[0]);
        CHECK(lp.coords[1][0] == P.c[1]);
        CHECK(vanishes(residual_hyperelliptic(*C, lp, P)));
    }
    Point I = infinity_point();
    CHECK(vanishes(residual_hyperelliptic(*C, local_param(*C, I, N), I)));
    // Even model at infinity.
    auto E = hyperelliptic(F, {3, 1, 0, 5, 0, 0, 7, 2, 1});
    Point Ip = infinity_point(Scalar::one(F));
    CHECK(on_curve(*E, Ip));
    CHECK(vanishes(residual_hyperelliptic(*E, local_param(*E, Ip, N), Ip)));

    auto K = klein(F);
    for (int i = 0; i < 20; ++i) {
        Point P = sample_point(*K, rng);
        auto lp = local_param(*K, P, N);
        for (std::size_t j = 0; j < 3; ++j) CHECK(lp.coords[j][0] == P.c[j]);
        CHECK(vanishes(K->forms[0].eval_in<Series>(lp.coords, Series(F, N))));
    }
    auto G = g4(F);
    for (int i = 0; i < 10; ++i) {
        Point P = sample_point(*G, rng);
        CHECK(on_curve(*G, P));
        auto lp = local_param(*G, P, N);
        FieldPtr L = lp.coords[0].field();
        for (const auto& m : G->forms) CHECK(vanishes(m.coerce(L).eval_in<Series>(lp.coords, Series(L, N))));
    }
}

TEST_CASE("hyperplane orders") {
    auto K = klein(Field::prime(10007));
    FieldPtr F = K->field;
    Rng rng(11);
    Point P = sample_point(*K, rng);
    // Tangent line at P meets with order >= 2; a generic line through P with order 1.
    std::vector<Scalar> grad;
    for (int i = 0; i < 3; ++i) grad.push_back(K->forms[0].derivative(i).eval(P.c));
    CHECK(hyperplane_order(*K, grad, P, 8) >= 2);
    for (int i = 0; i < 10; ++i) {
        std::vector<Scalar> R{rnd(F, rng), rnd(F, rng), rnd(F, rng)};
        std::vector<Scalar> h{P.c[1] * R[2] - P.c[2] * R[1], P.c[2] * R[0] - P.c[0] * R[2], P.c[0] * R[1] - P.c[1] * R[0]};
        if (rank(Matrix::from_rows(F, 3, {h, grad})) < 2) continue;
        CHECK(hyperplane_order(*K, h, P, 8) == 1);
    }

    auto C = x7_minus_x(10007);
    Point W = affine_point(Scalar::zero(F), Scalar::zero(F));
    // h = x vanishes to order 2 at the Weierstrass point (0, 0).
    CHECK(hyperplane_order(*C, {Scalar::zero(F), Scalar::one(F), Scalar::zero(F)}, W, 8) == 2);
    // h = 1 is u^2 in the chart at infinity, and u has order 2 there.
    CHECK(hyperplane_order(*C, {Scalar::one(F), Scalar::zero(F), Scalar::zero(F)}, infinity_point(), 8) == 4);
}

TEST_CASE("plane common zeros") {
    FieldPtr F = Field::prime(10007);
    Rng rng(5);
    MPoly k = klein_form(F);
    // A line meets the quartic in four points counted with multiplicity.
    MPoly line = form(F, 3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 3}, {{0, 0, 1}, -1}});
    auto z = plane_common_zeros(k, line, rng);
    int tot = 0;
    for (const auto& [P, m] : z) {
        tot += m;
        CHECK(k.eval(P.c).is_zero());
        CHECK(line.eval(P.c).is_zero());
    }
    CHECK(tot == 4);
    // Two conics through four known points, tangent structure absent.
    MPoly c1 = form(F, 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}});
    MPoly c2 = form(F, 3, {{{2, 0, 0}, 1}, {{0, 0, 2}, -1}});
    auto z2 = plane_common_zeros(c1, c2, rng);
    CHECK(z2.size() == 4);
    for (const auto& [P, m] : z2) CHECK(m == 1);
    // Tangent line: y^2 = x z meets z = 0 doubly at (1:0:0).
    MPoly conic = form(F, 3, {{{0, 2, 0}, 1}, {{1, 0, 1}, -1}});
    MPoly tangent = form(F, 3, {{{0, 0, 1}, 1}});
    auto z3 = plane_common_zeros(conic, tangent, rng);
    REQUIRE(z3.size() == 1);
    CHECK(z3[0].second == 2);
    // x^2 + z^2 = y = 0 has its two points over F_{p^2} since p = 3 mod 4.
    auto z4 = plane_common_zeros(form(F, 3, {{{2, 0, 0}, 1}, {{0, 0, 2}, 1}}), form(F, 3, {{{0, 1, 0}, 1}}), rng);
    REQUIRE(z4.size() == 2);
    CHECK(z4[0].first.field()->degree() == 2);
}
