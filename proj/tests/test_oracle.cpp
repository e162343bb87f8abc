#include <doctest.h>

#include "test_support.hpp"
#include "tilekit/oracle.hpp"

using namespace tilekit;
using namespace tilekit::testing;

namespace {

// Independent containment test for the seven-fold octagon: it is exactly the
// set |x| <= 3/2, |y| <= 3/2, |x+y| <= 2, |x-y| <= 2.
std::pair<long, long> octagon_counts_by_halfplanes(const Point2& x) {
    long interior = 0, boundary = 0;
    long a_lo = static_cast<long>((x.x - rq(2)).floor().get_si());
    long a_hi = static_cast<long>((x.x + rq(2)).ceil().get_si());
    long b_lo = static_cast<long>((x.y - rq(2)).floor().get_si());
    long b_hi = static_cast<long>((x.y + rq(2)).ceil().get_si());
    for (long a = a_lo; a <= a_hi; ++a) {
        for (long b = b_lo; b <= b_hi; ++b) {
            Rational px = x.x - rq(a), py = x.y - rq(b);
            Rational vals[4] = {px.abs(), py.abs(), (px + py).abs(), (px - py).abs()};
            Rational caps[4] = {rq(3, 2), rq(3, 2), rq(2), rq(2)};
            bool outside = false, on_edge = false;
            for (int i = 0; i < 4; ++i) {
                if (vals[i] > caps[i]) outside = true;
                if (vals[i] == caps[i]) on_edge = true;
            }
            if (outside) continue;
            if (on_edge)
                ++boundary;
            else
                ++interior;
        }
    }
    return {interior, boundary};
}

}  // namespace

TEST_CASE("point counts for the one-fold square tiling") {
    auto [i, b] = covering_multiplicity_at(centered_square(), z2(), {rq(1, 4), rq(1, 4)});
    CHECK(i == 1);
    CHECK(b == 0);
    auto [i2, b2] = covering_multiplicity_at(centered_square(), z2(), {rq(1, 2), rq(0)});
    CHECK(i2 == 0);
    CHECK(b2 == 2);
}

TEST_CASE("point counts for the seven-fold octagon agree with the half-plane form") {
    ConvexPolygon oct = seven_fold_octagon().polygon;
    // A point on no translate boundary sees exactly seven interiors.
    auto [i1, b1] = covering_multiplicity_at(oct, z2(), {rq(1, 10), rq(3, 10)});
    CHECK(i1 == 7);
    CHECK(b1 == 0);
    // (1/10, 1/10) lies on the diagonal edges of two translates.
    auto [i2, b2] = covering_multiplicity_at(oct, z2(), {rq(1, 10), rq(1, 10)});
    CHECK(i2 == 6);
    CHECK(b2 == 2);
    // Boundary point of one translate: closed membership still reaches seven.
    auto [i3, b3] = covering_multiplicity_at(oct, z2(), {rq(1, 2), rq(0)});
    CHECK(i3 <= 7);
    CHECK(b3 >= 1);
    CHECK(i3 + b3 >= 7);

    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        Point2 x{rng.small_rational(8, 5), rng.small_rational(8, 5)};
        auto fast = covering_multiplicity_at(oct, z2(), x);
        auto slow = octagon_counts_by_halfplanes(x);
        CHECK(fast == slow);
    }
}

TEST_CASE("packing-covering sandwich at random and boundary-adjacent points") {
    ConvexPolygon oct = seven_fold_octagon().polygon;
    const long fold = 7;
    Rng rng(37);
    for (int k = 0; k < 1000; ++k) {
        Point2 x{rng.small_rational(10, 8), rng.small_rational(10, 8)};
        auto [i, b] = covering_multiplicity_at(oct, z2(), x);
        CHECK(i <= fold);
        CHECK(i + b >= fold);
    }
    // Points exactly on and just off edge lines.
    for (long k = -2; k <= 2; ++k) {
        Point2 on{rq(2 * k + 1, 2), rq(0)};
        auto [i, b] = covering_multiplicity_at(oct, z2(), on);
        CHECK(i <= fold);
        CHECK(i + b >= fold);
        Point2 off{rq(2 * k + 1, 2) + Rational(1, 1L << 30), rq(0)};
        auto [i2, b2] = covering_multiplicity_at(oct, z2(), off);
        CHECK(i2 == fold);
        CHECK(b2 == 0);
    }
}

TEST_CASE("exact oracle confirms the unit tiling of the square") {
    MultiplicityReport r = exact_uniform_multiplicity(centered_square(), z2());
    CHECK(r.uniform);
    CHECK(r.fold == 1);
    CHECK(r.violations.empty());
}

TEST_CASE("exact oracle confirms the seven-fold octagon") {
    MultiplicityReport r = exact_uniform_multiplicity(seven_fold_octagon().polygon, z2());
    REQUIRE(r.uniform);
    CHECK(r.fold == 7);
}

TEST_CASE("exact oracle confirms the sheared five-fold families") {
    MultiTilingInstance a = octagon_alpha_prime(rq(1, 2));
    MultiplicityReport ra = exact_uniform_multiplicity(a.polygon, a.lattice);
    REQUIRE(ra.uniform);
    CHECK(ra.fold == 5);
    // Volume accounting: fold * det == area.
    CHECK(Rational(ra.fold) * a.lattice.det_abs() == polygon_area(a.polygon));

    MultiTilingInstance b = octagon_beta_prime(rq(1));
    MultiplicityReport rb = exact_uniform_multiplicity(b.polygon, b.lattice);
    REQUIRE(rb.uniform);
    CHECK(rb.fold == 5);
}

TEST_CASE("a square scaled by 3/2 does not tile at any fold") {
    Rational s(3, 4);
    ConvexPolygon big({{-s, -s}, {s, -s}, {s, s}, {-s, s}});
    MultiplicityReport r = exact_uniform_multiplicity(big, z2());
    CHECK(!r.uniform);
    CHECK(!r.violations.empty());
}

TEST_CASE("valid volume ratio does not imply a tiling") {
    // Area 7 over determinant 7 gives integral fold 1, but translates overlap.
    Lattice2 wide({rq(7), rq(0)}, {rq(0), rq(1)});
    MultiplicityReport r = exact_uniform_multiplicity(seven_fold_octagon().polygon, wide);
    CHECK(!r.uniform);
    MultiTilingInstance forged(seven_fold_octagon().polygon, wide, 1);
    CHECK(!verify_kfold(forged, VerifyMode::Exact));
}

TEST_CASE("oracle verdict is invariant under unimodular basis changes") {
    ConvexPolygon oct = seven_fold_octagon().polygon;
    Rng rng(41);
    for (int k = 0; k < 5; ++k) {
        Mat2 u = random_unimodular(rng);
        Lattice2 rebased(u.apply(Vec2{rq(1), rq(0)}), u.apply(Vec2{rq(0), rq(1)}));
        // Same lattice, different basis.
        REQUIRE(rebased.det_abs() == rq(1));
        MultiplicityReport r = exact_uniform_multiplicity(oct, rebased);
        CHECK(r.uniform);
        CHECK(r.fold == 7);
    }
}

TEST_CASE("sampling is deterministic and matches the exact verdict") {
    ConvexPolygon dec = decagon_from_vertex({rq(-3, 5), rq(4, 5)});
    MultiplicityReport r1 = sampled_multiplicity(dec, z2(), 2000, 99);
    CHECK(r1.no_violation);
    CHECK(r1.fold == 5);
    CHECK(r1.histogram.at(5) == 2000);

    MultiplicityReport r2 = sampled_multiplicity(dec, z2(), 2000, 77);
    CHECK(r2.no_violation);
    CHECK(r2.fold == 5);

    MultiplicityReport r3 = sampled_multiplicity(dec, z2(), 500, 99);
    MultiplicityReport r4 = sampled_multiplicity(dec, z2(), 500, 99);
    CHECK(r3.histogram == r4.histogram);
    CHECK(r3.skipped == r4.skipped);

    MultiplicityReport sq = sampled_multiplicity(centered_square(), z2(), 100, 5);
    CHECK(sq.histogram.at(1) == 100);
}

TEST_CASE("verification modes agree on family instances") {
    MultiTilingInstance inst = octagon_beta(rq(3, 10));
    CHECK(verify_kfold(inst, VerifyMode::Exact));
    CHECK(verify_kfold(inst, VerifyMode::Sampled, 1500, 7));
    MultiTilingInstance seven = seven_fold_octagon();
    CHECK(verify_kfold(seven, VerifyMode::Exact));
    CHECK(verify_kfold(seven, VerifyMode::Sampled, 1500, 7));
}

TEST_CASE("ten thousand samples of the decagon all see fold five") {
    ConvexPolygon dec = decagon_from_vertex({rq(-3, 5), rq(4, 5)});
    MultiplicityReport r = sampled_multiplicity(dec, z2(), 10000, 42);
    CHECK(r.histogram.at(5) == 10000);
}

TEST_CASE("sampling never contradicts the exact verdict on shipped instances") {
    std::vector<MultiTilingInstance> shipped = {
        seven_fold_octagon(), octagon_alpha(rq(1, 5)), octagon_beta(rq(3, 10)),
        octagon_alpha_prime(rq(1, 3)), octagon_beta_prime(rq(1))};
    for (const MultiTilingInstance& inst : shipped) {
        MultiplicityReport exact = exact_uniform_multiplicity(inst.polygon, inst.lattice);
        MultiplicityReport sample =
            sampled_multiplicity(inst.polygon, inst.lattice, 10000, 2026);
        REQUIRE(exact.uniform);
        CHECK(sample.no_violation);
        CHECK(sample.fold == exact.fold);
    }
}

TEST_CASE("arrangement cap guards against pathological inputs") {
    CHECK_THROWS_AS(exact_uniform_multiplicity(seven_fold_octagon().polygon, z2(), 10),
                    ArrangementOverflow);
}

TEST_CASE("agreement between the lattice criterion and the oracle on random instances") {
    Rng rng(53);
    int passes = 0, fails = 0;
    for (int k = 0; k < 25; ++k) {
        ConvexPolygon p = random_cs_polygon(rng, 1 + k % 3 + 1);
        Lattice2 lat = random_small_lattice(rng);
        if (polygon_area(p) / lat.det_abs() > rq(30)) continue;
        BolleResult bolle = bolle_check(p, lat);
        MultiplicityReport oracle = exact_uniform_multiplicity(p, lat);
        if (bolle.passed()) {
            ++passes;
            CHECK(oracle.uniform);
            CHECK(oracle.fold == bolle.fold);
        } else {
            ++fails;
            CHECK(!oracle.uniform);
        }
    }
    CHECK(passes + fails > 0);
}
