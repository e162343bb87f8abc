#include <doctest.h>

#include "test_support.hpp"
#include "tilekit/multi_tiling.hpp"
#include "tilekit/oracle.hpp"

using namespace tilekit;
using namespace tilekit::testing;

TEST_CASE("the seven-fold octagon verifies over the integer lattice") {
    MultiTilingInstance inst = seven_fold_octagon();
    CHECK(inst.polygon.size() == 8);
    CHECK(centrally_symmetric_center(inst.polygon).value() == Point2{rq(0), rq(0)});
    CHECK(polygon_area(inst.polygon) == rq(7));
    BolleResult res = bolle_check(inst.polygon, inst.lattice);
    REQUIRE(res.passed());
    CHECK(res.fold == 7);
}

TEST_CASE("criterion failures carry the reason") {
    // Pentagons cannot be centrally symmetric.
    BolleResult pent = bolle_check(house_pentagon(), z2());
    CHECK(pent.status == BolleResult::Status::NotCentrallySymmetric);

    // A tiny square misses half-lattice points on every edge.
    Rational e(1, 8);
    ConvexPolygon small({{-e, -e}, {e, -e}, {e, e}, {-e, e}});
    BolleResult missed = bolle_check(small, z2());
    CHECK(missed.status == BolleResult::Status::EdgeMissesHalfLattice);

    // A five-fold octagon moved to a lattice that is too coarse along x: the
    // bottom edge keeps interior half-lattice points but its midpoint leaves
    // the half lattice and its vector (1,0) leaves the lattice.
    ConvexPolygon oct = octagon_alpha(rq(1, 5)).polygon;
    std::vector<Point2> rotated(oct.vertices().begin() + 1, oct.vertices().end());
    rotated.push_back(oct.vertices().front());
    BolleResult vec =
        bolle_check(ConvexPolygon(rotated), Lattice2({rq(3, 2), rq(0)}, {rq(0), rq(1)}));
    CHECK(vec.status == BolleResult::Status::EdgeVectorNotInLattice);
    CHECK(vec.edge == 0);
}

TEST_CASE("conditions are checked after recentering") {
    // The seven-fold octagon shifted off the origin still passes.
    ConvexPolygon shifted = seven_fold_octagon().polygon.translated({rq(3), rq(-2)});
    BolleResult res = bolle_check(shifted, z2());
    REQUIRE(res.passed());
    CHECK(res.fold == 7);
}

TEST_CASE("five-fold octagon families over the integer lattice") {
    for (const Rational& a : {rq(1, 20), rq(1, 8), rq(1, 5), rq(23, 100)}) {
        MultiTilingInstance inst = octagon_alpha(a);
        CHECK(polygon_area(inst.polygon) == rq(5));
        BolleResult res = bolle_check(inst.polygon, inst.lattice);
        REQUIRE(res.passed());
        CHECK(res.fold == 5);
    }
    for (const Rational& b : {rq(26, 100), rq(3, 10), rq(329, 1000)}) {
        MultiTilingInstance inst = octagon_beta(b);
        CHECK(polygon_area(inst.polygon) == rq(5));
        CHECK(bolle_check(inst.polygon, inst.lattice).fold == 5);
    }
}

TEST_CASE("five-fold octagon families over sheared lattices") {
    for (const Rational& a : {rq(1, 10), rq(1, 3), rq(3, 5)}) {
        MultiTilingInstance inst = octagon_alpha_prime(a);
        CHECK(polygon_area(inst.polygon) == rq(10));
        CHECK(inst.lattice.det_abs() == rq(2));
        BolleResult res = bolle_check(inst.polygon, inst.lattice);
        REQUIRE(res.passed());
        CHECK(res.fold == 5);
    }
    for (const Rational& b : {rq(1, 4), rq(1, 2), rq(1)}) {
        MultiTilingInstance inst = octagon_beta_prime(b);
        CHECK(polygon_area(inst.polygon) == rq(20));
        CHECK(inst.lattice.det_abs() == rq(4));
        CHECK(bolle_check(inst.polygon, inst.lattice).fold == 5);
    }
}

TEST_CASE("family parameters outside their ranges are rejected") {
    CHECK_THROWS_AS(octagon_alpha(rq(1, 4)), ParamOutOfRange);
    CHECK_THROWS_AS(octagon_alpha(rq(0)), ParamOutOfRange);
    CHECK_THROWS_AS(octagon_beta(rq(1, 4)), ParamOutOfRange);
    CHECK_THROWS_AS(octagon_beta(rq(1, 3)), ParamOutOfRange);
    CHECK_THROWS_AS(octagon_alpha_prime(rq(2, 3)), ParamOutOfRange);
    CHECK_THROWS_AS(octagon_beta_prime(rq(11, 10)), ParamOutOfRange);
    CHECK_NOTHROW(octagon_beta_prime(rq(1)));  // closed upper end
}

TEST_CASE("decagons from admissible free vertices") {
    ConvexPolygon dec = decagon_from_vertex({rq(-3, 5), rq(4, 5)});
    CHECK(dec.size() == 10);
    CHECK(polygon_area(dec) == rq(5));
    // Vertices are the reflection chain of the canonical midpoints.
    CHECK(point_in_polygon(dec, {rq(3, 5), rq(6, 5)}).on_vertex >= 0);
    CHECK(point_in_polygon(dec, {rq(8, 5), rq(1, 5)}).on_vertex >= 0);

    for (const Point2& v1 : decagon_sample_vertices()) {
        ConvexPolygon d = decagon_from_vertex(v1);
        CHECK(polygon_area(d) == rq(5));  // area does not depend on the free vertex
        BolleResult res = bolle_check(d, z2());
        REQUIRE(res.passed());
        CHECK(res.fold == 5);
    }

    CHECK_THROWS_AS(decagon_from_vertex({rq(0), rq(0)}), VertexOutsideRegion);
    // Boundary of the admissible region is rejected too.
    CHECK_THROWS_AS(decagon_from_vertex({rq(-1, 2), rq(7, 8)}), VertexOutsideRegion);
}

TEST_CASE("instance invariants are validated") {
    CHECK_THROWS(MultiTilingInstance(house_pentagon(), z2(), 1));
    CHECK_THROWS(MultiTilingInstance(seven_fold_octagon().polygon, z2(), 6));
    CHECK_NOTHROW(MultiTilingInstance(seven_fold_octagon().polygon, z2(), 7));
}

TEST_CASE("affine equivalence finds exact vertex maps") {
    ConvexPolygon sq = centered_square();
    auto id = affine_equivalence(sq, sq);
    REQUIRE(id.has_value());
    CHECK(id->apply(Point2{rq(1, 2), rq(1, 2)}) == Point2{rq(1, 2), rq(1, 2)});

    Mat2 stretch(rq(2), rq(0), rq(0), rq(1));
    auto found = affine_equivalence(sq, apply_linear(stretch, sq));
    REQUIRE(found.has_value());
    CHECK(found->det.abs() == rq(2));

    // Octagons from different families with unmatched parameters differ.
    CHECK(!affine_equivalence(octagon_alpha(rq(1, 5)).polygon, octagon_alpha(rq(1, 6)).polygon));
    CHECK(!affine_equivalence(sq, seven_fold_octagon().polygon));
}

TEST_CASE("matched-parameter members of the two five-fold octagon classes are linearly equivalent") {
    // First class pairs with the sheared beta family at beta = 8a (direct) or
    // beta = 2 - 8a (reflected); second class pairs with the sheared alpha
    // family at alpha = 8b - 2.
    for (const Rational& a : {rq(1, 20), rq(1, 8)}) {
        auto m = affine_equivalence(octagon_alpha(a).polygon,
                                    octagon_beta_prime(rq(8) * a).polygon);
        REQUIRE(m.has_value());
        CHECK(m->det.abs() == rq(4));
    }
    for (const Rational& a : {rq(1, 5), rq(23, 100)}) {
        auto m = affine_equivalence(octagon_alpha(a).polygon,
                                    octagon_beta_prime(rq(2) - rq(8) * a).polygon);
        REQUIRE(m.has_value());
        CHECK(m->det.abs() == rq(4));
    }
    for (const Rational& b : {rq(26, 100), rq(3, 10), rq(329, 1000)}) {
        auto m = affine_equivalence(octagon_beta(b).polygon,
                                    octagon_alpha_prime(rq(8) * b - rq(2)).polygon);
        REQUIRE(m.has_value());
        CHECK(m->det.abs() == rq(2));
    }
}

TEST_CASE("five-fold family classification") {
    using K = FivefoldFamily::Kind;
    CHECK(classify_fivefold_family(centered_square()).kind == K::Parallelogram);
    CHECK(classify_fivefold_family(unit_square()).kind == K::Parallelogram);
    CHECK(classify_fivefold_family(lattice_hexagon()).kind == K::CSHexagon);
    CHECK(classify_fivefold_family(house_pentagon()).kind == K::None);
    CHECK(classify_fivefold_family(near_regular_polygon(8)).kind == K::None);
    CHECK(classify_fivefold_family(near_regular_polygon(10)).kind == K::None);

    FivefoldFamily direct = classify_fivefold_family(octagon_alpha(rq(1, 6)).polygon);
    CHECK(direct.kind == K::OctagonA);
    CHECK(direct.param == rq(1, 6));

    FivefoldFamily beta = classify_fivefold_family(octagon_beta(rq(3, 10)).polygon);
    CHECK(beta.kind == K::OctagonB);
    CHECK(beta.param == rq(3, 10));

    // The recovered free vertex may be any admissible generator of the same
    // decagon; regenerating from it gives a linearly equivalent polygon.
    ConvexPolygon dec_in = decagon_from_vertex({rq(-5, 8), rq(7, 9)});
    FivefoldFamily dec = classify_fivefold_family(dec_in);
    CHECK(dec.kind == K::Decagon);
    CHECK(affine_equivalence(dec_in, decagon_from_vertex(dec.free_vertex)).has_value());
    FivefoldFamily canon = classify_fivefold_family(decagon_from_vertex({rq(-3, 5), rq(4, 5)}));
    CHECK(canon.free_vertex == Point2{rq(-3, 5), rq(4, 5)});

    // Classification is invariant under linear maps.
    Rng rng(23);
    for (int i = 0; i < 8; ++i) {
        Mat2 m = random_unimodular(rng);
        FivefoldFamily f =
            classify_fivefold_family(apply_linear(m, octagon_alpha(rq(1, 6)).polygon));
        CHECK(f.kind == K::OctagonA);
        CHECK(f.param == rq(1, 6));
        FivefoldFamily g =
            classify_fivefold_family(apply_linear(m, decagon_from_vertex({rq(-3, 5), rq(4, 5)})));
        CHECK(g.kind == K::Decagon);
    }
}

TEST_CASE("family parameter sweeps all verify at fold five by both methods") {
    for (long k = 1; k <= 10; ++k) {
        std::vector<MultiTilingInstance> batch = {
            octagon_alpha(Rational(k, 41)), octagon_beta(Rational(41 * 3 + k, 41 * 12)),
            octagon_alpha_prime(Rational(2 * k, 31)), octagon_beta_prime(Rational(k, 10))};
        for (const MultiTilingInstance& inst : batch) {
            CHECK(bolle_check(inst.polygon, inst.lattice).fold == 5);
            MultiplicityReport oracle = exact_uniform_multiplicity(inst.polygon, inst.lattice);
            CHECK(oracle.uniform);
            CHECK(oracle.fold == 5);
        }
    }
}

TEST_CASE("family classification is constant under arbitrary nonsingular maps") {
    Rng rng(67);
    ConvexPolygon base = octagon_beta(rq(7, 25)).polygon;
    for (int i = 0; i < 6; ++i) {
        Mat2 m = random_nonsingular_matrix(rng);
        FivefoldFamily f = classify_fivefold_family(apply_linear(m, base));
        CHECK(f.kind == FivefoldFamily::Kind::OctagonB);
        CHECK(f.param == rq(7, 25));
    }
}

TEST_CASE("lattice search finds the one-fold tiling of the square") {
    auto result = lattice_multiplicity_search(centered_square(), 2);
    REQUIRE(result.has_value());
    CHECK(result->fold == 1);
    CHECK(result->lattice.det_abs() == rq(1));
}

TEST_CASE("lattice search recovers fold five for the decagon and never less") {
    auto result = lattice_multiplicity_search(decagon_from_vertex({rq(-3, 5), rq(4, 5)}), 3);
    REQUIRE(result.has_value());
    CHECK(result->fold == 5);
}

TEST_CASE("lattice search on the seven-fold octagon") {
    auto result = lattice_multiplicity_search(seven_fold_octagon().polygon, 2);
    REQUIRE(result.has_value());
    CHECK(result->fold <= 7);
}
