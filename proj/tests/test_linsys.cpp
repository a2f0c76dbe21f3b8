#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common.hpp"
#include "wgauss/gauss.hpp"
#include "wgauss/linsys.hpp"

using namespace wgauss;
using namespace wgauss::testing;

namespace {

Divisor conjugate_free(CurvePtr C, Rng& rng, int n) {
    for (;;) {
        std::vector<std::pair<Point, int>> t;
        for (int i = 0; i < n; ++i) t.emplace_back(sample_point(*C, rng), 1);
        Divisor D = Divisor::of(C, t);
        if (!D.is_reduced() || static_cast<int>(D.terms.size()) != n) continue;
        bool ok = true;
        for (const auto& [P, m] : D.terms) ok = ok && !is_weierstrass(*C, P) && D.mult(involution(*C, P)) == 0;
        if (ok) return D;
    }
}

Divisor fiber_pairs(CurvePtr C, Rng& rng, int k) {
    Divisor out(C);
    for (int i = 0; i < k; ++i) {
        Point P = sample_point(*C, rng);
        out = out + Divisor::of(C, {{P, 1}, {involution(*C, P), 1}});
    }
    return out;
}

std::vector<Scalar> random_param(const CompleteSystem& L, Rng& rng) {
    std::vector<Scalar> c;
    for (int i = 0; i <= L.r; ++i) c.push_back(rnd(L.field(), rng));
    c[0] = Scalar::one(L.field());
    return c;
}

// ord_P of sum h_i phi_i computed from the raw local parametrization.
int contact_order(const Curve& C, const std::vector<Scalar>& h, const Point& P, int N) {
    auto lp = local_param(C, P, N);
    std::vector<Series> phi;
    if (C.hyperelliptic()) {
        Series x = lp.coords[0];
        phi.push_back(Series::constant(Scalar::one(x.field()), N));
        for (int i = 1; i < C.genus; ++i) phi.push_back(phi.back() * x);
        if (P.at_infinity()) std::reverse(phi.begin(), phi.end());
    } else {
        phi = lp.coords;
    }
    FieldPtr K = phi[0].field();
    for (const auto& s : h) K = K == s.field() ? K : Field::compositum(K, s.field());
    Series acc(K, N);
    for (std::size_t i = 0; i < h.size(); ++i) acc += phi[i].coerce(K) * h[i].coerce(K);
    return acc.valuation();
}

}  // namespace

TEST_CASE("the g12 and its multiples") {
    auto C = x7_minus_x(10007);
    Rng rng(11);
    Point P = sample_point(*C, rng);
    auto L = complete_system(Divisor::of(C, {{P, 1}, {involution(*C, P), 1}}));
    CHECK(L.r == 1);
    CHECK(L.d == 2);
    CHECK(L.B.empty());
    CHECK(member(L, L.origin) == L.D);
    for (int i = 0; i < 20; ++i) {
        Divisor E = member(L, random_param(L, rng));
        CHECK(E.degree() == 2);
        auto hf = hyperelliptic_reduce(E);
        CHECK(hf.k == 1);
        CHECK(hf.B.empty());
        CHECK(linear_equivalent(E, L.D));
        CHECK(contains(L, E));
        auto mc = classify_member(L, E);
        CHECK(mc.nc == true);
    }
    Point W = weierstrass_points(*C)[1];
    Divisor twoW = Divisor::point(C, W, 2);
    REQUIRE(contains(L, twoW));
    auto mc = classify_member(L, twoW);
    CHECK(!mc.reduced);
    CHECK(mc.nc == true);
    CHECK(phi_L(L, P) == phi_L(L, involution(*C, P)));
    CHECK(!(phi_L(L, P) == phi_L(L, sample_point(*C, rng))));
    CHECK_THROWS_AS(complete_system(conjugate_free(C, rng, 2) + conjugate_free(C, rng, 2)), DomainError);
    CHECK_THROWS_AS(classify_member(L, conjugate_free(C, rng, 2)), DomainError);
}

TEST_CASE("k g12 + B has dimension k") {
    auto C = hyperelliptic(Field::prime(10007), {3, 1, 4, 1, 5, 9, 2, 6, 5, 3});  // genus 4
    Rng rng(12);
    for (int k = 1; k <= 3; ++k)
        for (int b = 0; k + b <= 3; ++b) {
            Divisor Bd = b ? conjugate_free(C, rng, b) : Divisor(C);
            Divisor D = fiber_pairs(C, rng, k) + Bd;
            auto L = complete_system(D);
            CHECK(L.r == k);
            CHECK(L.B == Bd);
            for (int i = 0; i < 3; ++i) {
                Divisor E = member(L, random_param(L, rng));
                auto hf = hyperelliptic_reduce(E);
                CHECK(hf.k == k);
                CHECK(hf.B == Bd);
                CHECK(ell(E) == k + 1);
                CHECK(linear_equivalent(E, D));
            }
        }
}

TEST_CASE("nc classification") {
    // Genus 6 with a rational Weierstrass point at x = 0.
    auto C = hyperelliptic(Field::prime(10007), {0, 1, 3, 0, 2, 0, 0, 5, 0, 0, 1, 0, 0, 1});
    REQUIRE(C->genus == 6);
    Rng rng(13);
    Point W = affine_point(Scalar::zero(C->field), Scalar::zero(C->field));
    Divisor P12 = conjugate_free(C, rng, 2);
    Divisor F = Divisor::point(C, W, 4) + P12;
    auto L = complete_system(F);
    CHECK(L.r == 2);
    auto mc = classify_member(L, F);
    CHECK(!mc.reduced);
    CHECK(mc.nc == false);
    // 2W + Q + i(Q) + P1 + P2: q = W, Q is conjugate-free.
    Point Q = sample_point(*C, rng);
    Divisor G = Divisor::point(C, W, 2) + Divisor::of(C, {{Q, 1}, {involution(*C, Q), 1}}) + P12;
    REQUIRE(contains(L, G));
    CHECK(classify_member(L, G).nc == true);
    // Q + Q + i(Q) + i(Q): q = (Q, Q) works.
    Divisor H = Divisor::of(C, {{Q, 2}, {involution(*C, Q), 2}}) + P12;
    CHECK(classify_member(L, H).nc == true);
    // A pair through a fixed point: q = P1 repeats P1, which is allowed.
    Point P1 = P12.terms[0].first;
    Divisor J = Divisor::of(C, {{P1, 1}, {involution(*C, P1), 1}}) +
                Divisor::of(C, {{Q, 1}, {involution(*C, Q), 1}}) + P12;
    CHECK(classify_member(L, J).nc == true);
    // Two Weierstrass pairs at distinct points: q = (W, W') is conjugate-free.
    Point W2 = weierstrass_points(*C)[0] == W ? weierstrass_points(*C)[1] : weierstrass_points(*C)[0];
    Divisor K2 = Divisor::point(C, W, 2) + Divisor::point(C, W2, 2) + P12;
    if (W2.field() == C->field) CHECK(classify_member(L, K2).nc == true);
    // The span of 4W + P1 + P2 is not a Gauss image: 2W + P1 + P2 moves.
    CHECK(ell(Divisor::point(C, W, 2) + P12) == 2);
    // Reduced members are nc.
    for (int i = 0; i < 10; ++i) {
        Divisor E = member(L, random_param(L, rng));
        auto c = classify_member(L, E);
        if (c.reduced) CHECK(c.nc == true);
    }
}

TEST_CASE("image witness") {
    auto C = hyperelliptic(Field::prime(10007), {3, 1, 4, 1, 5, 9, 2, 6, 5, 3});
    Rng rng(14);
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i < 4; ++i) {
                Divisor D = conjugate_free(C, rng, n);
                auto w = hyperelliptic_image_witness(D, k);
                CHECK(w.spans_agree);
                CHECK(w.nc);
                CHECK(w.L.r == k);
                CHECK(w.F.degree() == n + k);
                CHECK(span(w.F).dim() == n - 1);
            }
}

TEST_CASE("beta is injective on a g^2_4") {
    auto C = x7_minus_x(13);
    Rng rng(15);
    auto L = complete_system(fiber_pairs(C, rng, 2));
    REQUIRE(L.r == 2);
    std::set<Divisor> members;
    std::set<std::vector<Scalar>> spans;
    FieldPtr K = L.field();
    auto one = Scalar::one(K), zero = Scalar::zero(K);
    std::vector<std::vector<Scalar>> params;
    for (int a = 0; a < 13; ++a)
        for (int b = 0; b < 13; ++b) params.push_back({one, Scalar::from_int(K, a), Scalar::from_int(K, b)});
    for (int b = 0; b < 13; ++b) params.push_back({zero, one, Scalar::from_int(K, b)});
    params.push_back({zero, zero, one});
    for (const auto& c : params) {
        Divisor E = member(L, c);
        members.insert(E);
        spans.insert(beta(E, 2).plucker);
        CHECK(parameter_of(L, E) == c);
    }
    CHECK(members.size() == params.size());
    CHECK(spans.size() == params.size());
}

TEST_CASE("genus 4 trigonal system") {
    auto C = g4(Field::prime(10007));
    Rng rng(16);
    Point P = sample_point(*C, rng);
    auto rulings = g13_members(C, P);
    REQUIRE(!rulings.empty());
    Divisor D = rulings[0];
    CHECK(D.mult(P) >= 1);
    auto L = complete_system(D);
    CHECK(L.r == 1);
    CHECK(L.d == 3);
    CHECK(L.B.empty());
    CHECK(L.F.degree() == 3);
    // Every member spans a line meeting C in exactly its three points.
    for (int i = 0; i < 6; ++i) {
        Divisor E = member(L, random_param(L, rng));
        REQUIRE(E.degree() == 3);
        CHECK(span(E).dim() == 1);
        CHECK(intersection_divisor(C, span(E)) == E);
        CHECK(linear_equivalent(E, D));
        if (E.field() == C->field) {
            std::set<std::vector<Scalar>> images;
            for (const auto& [Q, m] : E.terms) images.insert(phi_L(L, Q));
            CHECK(images.size() == 1);
        }
    }
    Point R = sample_point(*C, rng);
    if (D.mult(R) == 0) CHECK(!(phi_L(L, R) == phi_L(L, D.terms[0].first)));

    auto rep = dual_samples(L, 1, rng);
    CHECK(!rep.swept);
    CHECK(rep.skipped == 0);
    CHECK(rep.total() == 12);
    for (const auto& s : rep.samples)
        for (const auto& ct : s.contacts) {
            CHECK(contact_order(*C, s.hyperplane, ct.P, 12) >= ct.base + 2);
            CHECK(contact_order(*C, s.hyperplane, ct.P, 12) == ct.order);
        }
}

TEST_CASE("reconstruction from spans") {
    auto C = g4(Field::prime(10007));
    Rng rng(17);
    Point P = sample_point(*C, rng);
    auto L = complete_system(g13_members(C, P)[0]);
    std::vector<Divisor> src;
    std::vector<GrassPoint> spans;
    for (int i = 0; i < 5; ++i) {
        Divisor E = member(L, random_param(L, rng));
        src.push_back(E);
        spans.push_back(beta(E, 2));
    }
    auto rec = reconstruct_system(C, spans, 2, 1);
    CHECK(rec.members == src);
    CHECK(same_system(rec.L, L));
    CHECK(rec.L.r == 1);
    // A span from an unrelated pair is not in B_{2,1}.
    Divisor pair = Divisor::of(C, {{sample_point(*C, rng), 1}, {sample_point(*C, rng), 1}});
    spans.push_back(span(pair));
    CHECK_THROWS_AS(reconstruct_system(C, spans, 2, 1), DomainError);
    auto one = reconstruct_system(C, {spans[0]}, 2, 1);
    CHECK(one.members[0] == src[0]);
}

TEST_CASE("plane quartic pencil through a point") {
    auto K = klein(Field::prime(10007));
    Rng rng(18);
    Point P = sample_point(*K, rng);
    Divisor D = residual(Divisor::point(K, P));  // line through P, minus P
    REQUIRE(D.degree() == 3);
    auto L = complete_system(D);
    CHECK(L.r == 1);
    CHECK(L.F == Divisor::point(K, P));
    // Projection from P: degree 3, ramification 2g - 2 + 2 * 3 = 10.
    auto rep = dual_samples(L, 1, rng);
    CHECK(rep.total() == 10);
    for (const auto& s : rep.samples)
        for (const auto& ct : s.contacts) CHECK(contact_order(*K, s.hyperplane, ct.P, 8) >= ct.base + 2);
    Point Q = sample_point(*K, rng);
    CHECK(!linear_equivalent(D, residual(Divisor::point(K, Q))) == !(P == Q));
}

TEST_CASE("hyperelliptic dual samples") {
    auto C = x7_minus_x(10007);
    Rng rng(19);
    Point P = sample_point(*C, rng);
    auto L = complete_system(Divisor::of(C, {{P, 1}, {involution(*C, P), 1}}));
    // x : C -> P^1 ramifies at the 8 Weierstrass points.
    auto rep = dual_samples(L, 1, rng);
    CHECK(rep.total() == 8);
    auto L2 = complete_system(fiber_pairs(C, rng, 2));
    auto rep2 = dual_samples(L2, 2, rng);
    for (const auto& s : rep2.samples) {
        Divisor E = member(L2, s.param);
        CHECK(!classify_member(L2, E).reduced);
    }
}
