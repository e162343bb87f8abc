#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tilekit/multi_tiling.hpp"

namespace tilekit {

/// Finite window of a verified lattice multiple tiling: every translate whose
/// bounding box meets the window square [-window, window]^2 is present, so any
/// vertex strictly inside the window sees its complete local structure.
struct Patch {
    ConvexPolygon polygon;
    Lattice2 lattice;
    Rational window;
    std::vector<Vec2> translations;  // sorted lexicographically
    long claimed_fold = 0;
};

Patch build_patch(const ConvexPolygon& p, const Lattice2& lat, const Rational& window);
Patch build_patch(const MultiTilingInstance& inst, const Rational& window);

struct StarMember {
    Vec2 translation;
    int on_vertex = -1;  // vertex of the translate coinciding with v
    int on_edge = -1;    // edge of the translate whose relative interior holds v
};

/// Local structure at a translated vertex v: the translates whose boundary
/// passes through v, and the count of translates containing v in the interior.
struct VertexStar {
    Point2 vertex;
    std::vector<StarMember> boundary_members;
    long interior_count = 0;
};

VertexStar vertex_star(const Patch& patch, const Point2& v);

/// Maximal chained sequence of boundary members whose inner angles at v join
/// edge-to-edge; the chained half-lines sweep clockwise through exactly
/// `winding` full turns.
struct Wheel {
    std::vector<Vec2> members;
    long winding = 0;
};

std::vector<Wheel> partition_wheels(const VertexStar& star, const ConvexPolygon& p);

struct WheelReport {
    Point2 vertex;
    std::vector<Wheel> wheels;
    long winding_total = 0;   // sum of wheel windings
    long interior_count = 0;  // translates with v interior
    bool fold_identity_holds = false;
};

WheelReport analyze_vertex(const Patch& patch, const Point2& v);

struct FoldIdentityReport {
    long checked = 0;
    long skipped = 0;  // vertices outside the window
    bool all_hold = true;
    long chaining_failures = 0;
    // (interior count, winding total) -> number of vertices
    std::map<std::pair<long, long>, long> histogram;
    std::vector<Point2> violations;
};

/**
 * Evaluates interior count + winding total at every distinct translated
 * vertex strictly inside the window; each must equal the patch's fold for it
 * to be a valid multiple tiling locally.
 */
FoldIdentityReport check_fold_identity(const Patch& patch);

}  // namespace tilekit
