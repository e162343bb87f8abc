#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tilekit/multi_tiling.hpp"

namespace tilekit {

/// Lattice vectors whose polygon translate has a bounding box meeting the
/// region (a superset of the translates that actually meet it).
std::vector<Vec2> translates_meeting_box(const ConvexPolygon& p, const Lattice2& lat,
                                         const Box& region);

/**
 * Exact counts at a single point: how many lattice translates of p contain x
 * in their interior, and how many have x on their boundary.
 */
std::pair<long, long> covering_multiplicity_at(const ConvexPolygon& p, const Lattice2& lat,
                                               const Point2& x);

/// Boundary segments of all translates meeting the fundamental cell, plus one
/// exact interior rational sample point per decomposition cell. Covering
/// multiplicity is constant on every open face, so checking the samples
/// decides k-fold uniformity exactly.
struct Arrangement {
    std::vector<std::pair<Point2, Point2>> segments;
    std::vector<Point2> face_samples;
};

struct MultiplicityReport {
    enum class Mode { Exact, Sampled };
    Mode mode = Mode::Exact;

    bool uniform = false;  // Exact mode only; sampling never asserts uniformity
    long fold = 0;         // common count when uniform / single-bin
    std::vector<std::pair<Point2, long>> violations;

    long samples = 0;
    unsigned long long seed = 0;
    long skipped = 0;
    std::map<long, long> histogram;
    bool no_violation = false;  // Sampled: every sample saw the same count
};

Arrangement build_cell_arrangement(const ConvexPolygon& p, const Lattice2& lat,
                                   long segment_cap = 100000);

/**
 * Ground-truth verdict: p + lat covers the plane uniformly k deep iff the
 * covering count is the same on every face of the boundary arrangement over
 * one fundamental cell. Exact; independent of any tiling criterion.
 */
MultiplicityReport exact_uniform_multiplicity(const ConvexPolygon& p, const Lattice2& lat,
                                              long segment_cap = 100000);

/// Seeded random sampling over the fundamental cell. Points on any translate
/// boundary are redrawn (and counted). Reports the histogram of interior
/// counts; it never asserts uniformity, only "no violation found".
MultiplicityReport sampled_multiplicity(const ConvexPolygon& p, const Lattice2& lat, long n,
                                        unsigned long long seed);

enum class VerifyMode { Exact, Sampled };

// True iff the oracle confirms uniform multiplicity equal to the instance's
// fold (for Sampled mode: no violation found across all samples).
bool verify_kfold(const MultiTilingInstance& inst, VerifyMode mode, long n = 10000,
                  unsigned long long seed = 1);

}  // namespace tilekit
