#include "tilekit/wheels.hpp"

#include <algorithm>
#include <set>

#include "tilekit/errors.hpp"
#include "tilekit/oracle.hpp"

namespace tilekit {

namespace {

bool vec_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct VecLess {
    bool operator()(const Vec2& a, const Vec2& b) const { return vec_less(a, b); }
};

Rational inf_norm(const Vec2& v) { return std::max(v.x.abs(), v.y.abs()); }

}  // namespace

Patch build_patch(const ConvexPolygon& p, const Lattice2& lat, const Rational& window) {
    Rational basis_step = std::max(inf_norm(lat.a1()), inf_norm(lat.a2()));
    if (window + window < Rational(3) * basis_step)
        throw WindowTooSmall("window must span at least three lattice periods per axis");

    BolleResult bolle = bolle_check(p, lat);
    if (!bolle.passed())
        throw Error("patch requires a verified instance; criterion failed with " +
                    bolle_status_name(bolle.status));

    Box windowbox{-window, window, -window, window};
    std::vector<Vec2> translations = translates_meeting_box(p, lat, windowbox);
    std::sort(translations.begin(), translations.end(), vec_less);
    return Patch{p, lat, window, std::move(translations), bolle.fold};
}

Patch build_patch(const MultiTilingInstance& inst, const Rational& window) {
    return build_patch(inst.polygon, inst.lattice, window);
}

VertexStar vertex_star(const Patch& patch, const Point2& v) {
    if (!(v.x.abs() < patch.window && v.y.abs() < patch.window))
        throw MarginViolation("vertex is not strictly inside the window");

    VertexStar star;
    star.vertex = v;
    bool is_translated_vertex = false;
    for (const Vec2& t : patch.translations) {
        PointLocation loc = point_in_polygon(patch.polygon, v - t);
        switch (loc.region) {
            case Region::Interior: ++star.interior_count; break;
            case Region::Boundary:
                star.boundary_members.push_back({t, loc.on_vertex, loc.on_edge});
                if (loc.on_vertex >= 0) is_translated_vertex = true;
                break;
            case Region::Exterior: break;
        }
    }
    if (!is_translated_vertex) throw Error("point is not a vertex of any patch translate");
    return star;
}

namespace {

struct MemberRays {
    Vec2 l1;  // clockwise-first half-line direction (toward the previous vertex)
    Vec2 l2;  // clockwise-second half-line direction (toward the next vertex)
};

MemberRays member_rays(const StarMember& m, const ConvexPolygon& p) {
    if (m.on_vertex >= 0) {
        int k = m.on_vertex;
        return {primitive_direction(p.vertex(k - 1) - p.vertex(k)),
                primitive_direction(p.vertex(k + 1) - p.vertex(k))};
    }
    Vec2 d = primitive_direction(p.edge_vector(m.on_edge));
    return {-d, d};
}

}  // namespace

std::vector<Wheel> partition_wheels(const VertexStar& star, const ConvexPolygon& p) {
    const size_t count = star.boundary_members.size();
    std::vector<MemberRays> rays;
    rays.reserve(count);
    for (const StarMember& m : star.boundary_members) rays.push_back(member_rays(m, p));

    // Members are arcs from their first to their second half-line; a valid
    // local structure pairs arc ends one-to-one at every direction.
    std::vector<size_t> index(count);
    for (size_t i = 0; i < count; ++i) index[i] = i;
    std::sort(index.begin(), index.end(), [&](size_t a, size_t b) {
        return vec_less(star.boundary_members[a].translation,
                        star.boundary_members[b].translation);
    });
    std::map<Vec2, long, VecLess> degree;
    for (const MemberRays& r : rays) {
        degree[r.l1] += 1;
        degree[r.l2] -= 1;
    }
    for (const auto& [dir, d] : degree)
        if (d != 0) throw ChainingFailure("half-line directions do not pair up");

    std::vector<bool> used(count, false);
    std::vector<Wheel> wheels;
    for (size_t start_pos = 0; start_pos < count; ++start_pos) {
        size_t start = index[start_pos];
        if (used[start]) continue;
        Wheel wheel;
        used[start] = true;
        wheel.members.push_back(star.boundary_members[start].translation);
        Vec2 anchor = rays[start].l1;
        Vec2 current = rays[start].l2;
        std::vector<std::pair<Vec2, Vec2>> arcs = {{rays[start].l1, rays[start].l2}};
        while (!(current == anchor)) {
            bool found = false;
            for (size_t pos = 0; pos < count && !found; ++pos) {
                size_t cand = index[pos];
                if (used[cand] || !(rays[cand].l1 == current)) continue;
                used[cand] = true;
                wheel.members.push_back(star.boundary_members[cand].translation);
                arcs.emplace_back(rays[cand].l1, rays[cand].l2);
                current = rays[cand].l2;
                found = true;
            }
            if (!found) throw ChainingFailure("wheel cannot be closed");
        }
        // Exact winding: each clockwise sweep across the anchor direction is
        // one full turn (arcs are half-open at their far end).
        long winding = 0;
        for (const auto& [a, b] : arcs)
            if (cw_arc_contains(a, b, anchor)) ++winding;
        if (winding < 1) throw ChainingFailure("wheel has zero winding");
        wheel.winding = winding;
        wheels.push_back(std::move(wheel));
    }
    return wheels;
}

WheelReport analyze_vertex(const Patch& patch, const Point2& v) {
    VertexStar star = vertex_star(patch, v);
    WheelReport report;
    report.vertex = v;
    report.wheels = partition_wheels(star, patch.polygon);
    report.interior_count = star.interior_count;
    for (const Wheel& w : report.wheels) report.winding_total += w.winding;
    report.fold_identity_holds =
        report.interior_count + report.winding_total == patch.claimed_fold;
    return report;
}

FoldIdentityReport check_fold_identity(const Patch& patch) {
    FoldIdentityReport report;
    std::set<Point2> seen;
    for (const Vec2& t : patch.translations) {
        for (const Point2& vertex : patch.polygon.vertices()) {
            Point2 v = vertex + t;
            if (!seen.insert(v).second) continue;
            if (!(v.x.abs() < patch.window && v.y.abs() < patch.window)) {
                ++report.skipped;
                continue;
            }
            ++report.checked;
            try {
                WheelReport wr = analyze_vertex(patch, v);
                ++report.histogram[{wr.interior_count, wr.winding_total}];
                if (!wr.fold_identity_holds) {
                    report.all_hold = false;
                    report.violations.push_back(v);
                }
            } catch (const ChainingFailure&) {
                ++report.chaining_failures;
                report.all_hold = false;
                report.violations.push_back(v);
            }
        }
    }
    return report;
}

}  // namespace tilekit
