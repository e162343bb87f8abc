#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilekit/geometry.hpp"

namespace tilekit {

/// A claimed k-fold lattice tiling: centrally symmetric polygon centered at
/// the origin, a lattice, and the fold, which always equals area/det exactly.
struct MultiTilingInstance {
    ConvexPolygon polygon;
    Lattice2 lattice;
    long fold;

    MultiTilingInstance(ConvexPolygon p, Lattice2 l, long k);
};

struct BolleResult {
    enum class Status {
        Pass,
        NotCentrallySymmetric,
        EdgeMissesHalfLattice,
        EdgeVectorNotInLattice,
        NonIntegralFold,
    };
    Status status = Status::Pass;
    long fold = 0;   // valid on Pass
    int edge = -1;   // failing edge for the per-edge conditions

    bool passed() const { return status == Status::Pass; }
};

std::string bolle_status_name(BolleResult::Status s);

/**
 * Lattice multiple-tiling criterion. The polygon is recentered at the origin
 * first; then every edge's relative interior must contain a point of
 * (1/2)Lattice, and every edge whose midpoint misses (1/2)Lattice must itself
 * be a lattice vector. On success the fold is area/det, which the criterion
 * forces to be a positive integer.
 */
BolleResult bolle_check(const ConvexPolygon& p, const Lattice2& lat);

// The octagon over Z^2 that tiles the plane exactly seven deep.
MultiTilingInstance seven_fold_octagon();

// One-parameter five-fold octagon families over Z^2 (0 < alpha < 1/4 and
// 1/4 < beta < 1/3 are exactly the convexity ranges).
MultiTilingInstance octagon_alpha(const Rational& alpha);
MultiTilingInstance octagon_beta(const Rational& beta);

// Five-fold octagon families over sheared lattices: Lambda(alpha) is spanned
// by (2,0),(1+alpha/2,1) with 0 < alpha < 2/3; Lambda(beta) by
// (2,0),(1+beta/2,2) with 0 < beta <= 1.
MultiTilingInstance octagon_alpha_prime(const Rational& alpha);
MultiTilingInstance octagon_beta_prime(const Rational& beta);

// The quadrilateral of admissible free vertices for the five-fold decagon.
ConvexPolygon decagon_vertex_region();

// Decagon with the canonical edge midpoints, built by reflecting v1 through
// them in turn; v1 must be interior to the admissible region.
ConvexPolygon decagon_from_vertex(const Point2& v1);
MultiTilingInstance decagon_instance(const Point2& v1);

/**
 * Exact linear map carrying the vertex cycle of p onto the vertex cycle of q
 * (any offset, either orientation), or nullopt. Both polygons must be
 * centrally symmetric with the origin as center.
 */
std::optional<Mat2> affine_equivalence(const ConvexPolygon& p, const ConvexPolygon& q);

/// Every verified vertex-cycle map (polygons with symmetries admit several).
std::vector<Mat2> affine_equivalences(const ConvexPolygon& p, const ConvexPolygon& q);

struct FivefoldFamily {
    enum class Kind { Parallelogram, CSHexagon, OctagonA, OctagonB, Decagon, None };
    Kind kind = Kind::None;
    Rational param;       // octagon families
    Point2 free_vertex;   // decagon family
};

std::string fivefold_kind_name(FivefoldFamily::Kind k);

/**
 * Membership in the five-fold lattice tile classes, up to linear maps:
 * centrally symmetric quadrilaterals and hexagons pass directly, octagons are
 * matched against the two canonical one-parameter families (the parameter is
 * recovered from an affine invariant and confirmed by an exact equivalence),
 * and decagons are normalized onto the canonical midpoints and their free
 * vertex tested against the admissible region.
 */
FivefoldFamily classify_fivefold_family(const ConvexPolygon& p);

struct LatticeSearchResult {
    Lattice2 lattice;
    long fold;
};

/**
 * Best-effort minimum-fold search over lattices generated from pairs of pool
 * vectors (integer combinations of edge vectors and doubled edge midpoints
 * with coefficients up to pool_bound). The result is an upper bound on the
 * true minimal lattice fold; absence proves nothing.
 */
std::optional<LatticeSearchResult> lattice_multiplicity_search(const ConvexPolygon& p,
                                                               int pool_bound,
                                                               int pool_cap = 48);

}  // namespace tilekit
