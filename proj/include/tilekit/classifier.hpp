#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tilekit/bigfloat.hpp"
#include "tilekit/geometry.hpp"

namespace tilekit {

enum class TileType {
    Triangle,
    Quadrilateral,
    Hex1,
    Hex2,
    Hex3,
    Pent1,
    Pent2,
    Pent3,
    Pent4,
    Pent5,
    Pent6,
    Pent7,
    Pent8,
    Pent9,
    Pent10,
    Pent11,
    Pent12,
    Pent13,
    Pent14,
    Pent15,
};

std::string tile_type_name(TileType t);

/// Cyclic re-indexing of a polygon's vertices: start at `offset`, optionally
/// walking the cycle in the mirrored (clockwise) sense.
struct Labeling {
    int offset = 0;
    bool reflected = false;
};

/**
 * Edge lengths and inner angles under a labeling. Squared lengths are exact
 * rationals; angles carry a 192-bit floating value (angles of rational
 * polygons are generally transcendental). Index j holds the data of the
 * (j+1)-th vertex/edge of the relabeled polygon: edge j joins the relabeled
 * vertices j-1 and j.
 */
struct PolygonMetrics {
    int n = 0;
    Labeling labeling;
    std::vector<Rational> sq_edge_lengths;
    std::vector<BigFloat> angles_hp;
    std::vector<double> angles;
};

// 2^-40, the default angle/length tolerance in radians resp. length units.
Rational default_epsilon();

PolygonMetrics compute_metrics(const ConvexPolygon& p, Labeling labeling,
                               const Rational& eps_angle = default_epsilon());

/// sum(coeffs[i] * alpha_{i+1}) == rhs_pi * pi
struct AngleCondition {
    std::vector<int> coeffs;
    Rational rhs_pi;
};

/// sum over lhs of coef*ell == sum over rhs of coef*ell; 1-based edge indices,
/// positive coefficients. Decided exactly whenever each side has at most two
/// terms; longer sums fall back to high-precision comparison within eps_len.
struct LengthCondition {
    struct Term {
        int coef;
        int edge;
    };
    std::vector<Term> lhs, rhs;
};

struct TypeRule {
    TileType tag;
    std::vector<AngleCondition> angle_conditions;
    std::vector<LengthCondition> length_conditions;
};

const std::vector<TypeRule>& pentagon_rules();
const std::vector<TypeRule>& hexagon_rules();

struct Match {
    TileType type;
    Labeling labeling;
};

enum class Verdict { Tile, NotTile, Unknown };

struct MatchReport {
    Verdict verdict = Verdict::Unknown;
    std::vector<Match> matches;
    // Per type: smallest (over labelings) worst condition deviation seen.
    std::map<TileType, double> residuals;

    std::set<TileType> matched_types() const;
};

MatchReport classify_hexagon(const ConvexPolygon& p,
                             const Rational& eps_angle = default_epsilon(),
                             const Rational& eps_len = default_epsilon());
MatchReport classify_pentagon(const ConvexPolygon& p,
                              const Rational& eps_angle = default_epsilon(),
                              const Rational& eps_len = default_epsilon());

// Full dispatcher: triangles/quadrilaterals always tile, heptagons and up
// never do, pentagons/hexagons go through the condition tables.
MatchReport classify(const ConvexPolygon& p, const Rational& eps_angle = default_epsilon(),
                     const Rational& eps_len = default_epsilon());

// n <= 6 gate for convex plane tiles.
bool edge_count_gate(const ConvexPolygon& p);

// One-fold lattice tiles: parallelograms and centrally symmetric hexagons.
bool fedorov_check(const ConvexPolygon& p);

enum class ArchimedeanStatus { Listed, AngleValidOnly, Invalid };

// Vertex figure (n_1, ..., n_r) of regular polygons: angle identity plus
// membership (up to cyclic shifts and reversal) in the eleven vertex types
// realizable by edge-to-edge tilings.
ArchimedeanStatus archimedean_vertex_check(const std::vector<int>& seq);

const std::vector<std::vector<int>>& archimedean_listed_types();

}  // namespace tilekit
