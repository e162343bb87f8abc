#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tilekit/wheels.hpp"

using namespace tilekit;
using namespace tilekit::testing;

namespace {

Patch square_patch(const Rational& window) {
    return build_patch(centered_square(), z2(), window);
}

}  // namespace

TEST_CASE("patch construction enumerates every translate meeting the window") {
    Patch p = square_patch(rq(2));
    CHECK(p.claimed_fold == 1);
    CHECK(p.translations.size() == 25);  // 5x5 grid of unit squares
    CHECK(std::is_sorted(p.translations.begin(), p.translations.end(),
                         [](const Vec2& a, const Vec2& b) {
                             return a.x != b.x ? a.x < b.x : a.y < b.y;
                         }));
    CHECK_THROWS_AS(build_patch(centered_square(), z2(), rq(1)), WindowTooSmall);
    // Patches exist only for verified instances.
    CHECK_THROWS(build_patch(house_pentagon(), z2(), rq(4)));
}

TEST_CASE("classical square corner: four right angles, one wheel") {
    Patch patch = square_patch(rq(3));
    Point2 corner{rq(1, 2), rq(1, 2)};
    VertexStar star = vertex_star(patch, corner);
    CHECK(star.boundary_members.size() == 4);
    CHECK(star.interior_count == 0);

    auto wheels = partition_wheels(star, patch.polygon);
    REQUIRE(wheels.size() == 1);
    CHECK(wheels[0].winding == 1);
    CHECK(wheels[0].members.size() == 4);

    WheelReport report = analyze_vertex(patch, corner);
    CHECK(report.winding_total == 1);
    CHECK(report.interior_count == 0);
    CHECK(report.fold_identity_holds);
}

TEST_CASE("one-fold hexagon corner: three members, one full turn") {
    Patch patch = build_patch(lattice_hexagon(), lattice_hexagon_lattice(), rq(4));
    CHECK(patch.claimed_fold == 1);
    WheelReport report = analyze_vertex(patch, {rq(1), rq(0)});
    CHECK(report.interior_count == 0);
    REQUIRE(report.wheels.size() == 1);
    CHECK(report.wheels[0].members.size() == 3);
    CHECK(report.wheels[0].winding == 1);
    CHECK(report.fold_identity_holds);
}

TEST_CASE("wheel partition is independent of member order") {
    Patch patch = build_patch(seven_fold_octagon(), rq(3));
    VertexStar star = vertex_star(patch, {rq(1, 2), rq(3, 2)});
    auto baseline = partition_wheels(star, patch.polygon);

    VertexStar shuffled = star;
    std::reverse(shuffled.boundary_members.begin(), shuffled.boundary_members.end());
    auto again = partition_wheels(shuffled, patch.polygon);
    REQUIRE(baseline.size() == again.size());
    for (size_t i = 0; i < baseline.size(); ++i) {
        CHECK(baseline[i].winding == again[i].winding);
        CHECK(baseline[i].members == again[i].members);
    }
    // Every boundary member lands in exactly one wheel.
    size_t total = 0;
    for (const Wheel& w : baseline) total += w.members.size();
    CHECK(total == star.boundary_members.size());
}

TEST_CASE("fold identity at translated vertices of the seven-fold octagon") {
    Patch patch = build_patch(seven_fold_octagon(), rq(3));
    for (const Point2& v :
         {Point2{rq(1, 2), rq(3, 2)}, Point2{rq(3, 2), rq(1, 2)}, Point2{rq(-1, 2), rq(1, 2)}}) {
        WheelReport report = analyze_vertex(patch, v);
        CHECK(report.interior_count + report.winding_total == 7);
        CHECK(report.fold_identity_holds);
    }
}

TEST_CASE("fold identity at decagon vertices") {
    Patch patch = build_patch(decagon_instance({rq(-3, 5), rq(4, 5)}), rq(3));
    WheelReport report = analyze_vertex(patch, {rq(-3, 5), rq(4, 5)});
    CHECK(report.interior_count + report.winding_total == 5);
    CHECK(report.fold_identity_holds);
}

TEST_CASE("margins: vertices outside the window are refused") {
    Patch patch = square_patch(rq(2));
    CHECK_THROWS_AS(vertex_star(patch, {rq(5, 2), rq(1, 2)}), MarginViolation);
    // Points that are no translate's vertex are rejected.
    CHECK_THROWS(vertex_star(patch, {rq(1, 4), rq(1, 4)}));
}

TEST_CASE("the identity holds at every in-window vertex of a verified patch") {
    Patch patch = build_patch(octagon_beta_prime(rq(1)), rq(4));
    FoldIdentityReport report = check_fold_identity(patch);
    CHECK(report.checked > 0);
    CHECK(report.all_hold);
    CHECK(report.violations.empty());
    CHECK(report.chaining_failures == 0);
    // Exactly one (interior, winding) signature per fold value need not hold,
    // but every signature must sum to the fold.
    for (const auto& [key, count] : report.histogram) CHECK(key.first + key.second == 5);
}

TEST_CASE("fault injection: a missing translate is detected near the hole") {
    Patch patch = build_patch(seven_fold_octagon(), rq(3));
    Patch corrupted = patch;
    Vec2 gone{rq(0), rq(0)};
    corrupted.translations.erase(
        std::remove(corrupted.translations.begin(), corrupted.translations.end(), gone),
        corrupted.translations.end());
    REQUIRE(corrupted.translations.size() + 1 == patch.translations.size());
    FoldIdentityReport report = check_fold_identity(corrupted);
    CHECK(!report.all_hold);
    CHECK(!report.violations.empty());
}
