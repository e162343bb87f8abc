#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tilekit/classifier.hpp"
#include "tilekit/geometry.hpp"

namespace tilekit {

/// Homogeneous linear relation over edge lengths: sum(coef * ell_edge) == 0.
/// Edge indices are 0-based and name the edge arriving at the same-index
/// vertex of the constructed polygon.
struct LengthRelation {
    std::vector<std::pair<Rational, int>> terms;
};

/**
 * Exact rational rotation by approximately angle_pi * pi: an orthogonal
 * rational matrix with determinant 1 whose rotation angle is within 2^-53 of
 * the target. Quarter-turn multiples of pi are hit exactly, and targets that
 * differ by an exact multiple of pi/2 yield matrices related by exact
 * quarter turns.
 */
Mat2 rational_rotation(const Rational& angle_pi);

/**
 * Builds a strictly convex n-gon whose inner angles approximate
 * angles_pi[i] * pi within 2^-50 and whose edge lengths satisfy every given
 * relation exactly. Angles must be in (0,1) and sum to n-2. Pins fix the
 * relative scale of individual edges (defaults to 1). One edge (or one
 * relation family) absorbs the closure constraint, so its length is derived
 * rather than pinned.
 *
 * The result is labeled so that the classifier's identity labeling (offset 0,
 * not reflected) sees angle i at input position i and edge i at input
 * position i.
 */
ConvexPolygon construct_from_constraints(const std::vector<Rational>& angles_pi,
                                         const std::vector<LengthRelation>& relations,
                                         const std::map<int, Rational>& pinned_scales = {});

/// Signed relations equivalent to a classifier rule's length conditions
/// (1-based rule indices become 0-based builder indices).
std::vector<LengthRelation> relations_from_rule(const TypeRule& rule);

/**
 * Consistency probe for rigid constraint sets (relations plus closure leave no
 * scale freedom): the cross product between the closure absorber's target
 * direction and the vector it is forced to take. Zero for non-rigid inputs.
 * Root-finding on its sign over one free angle turns an off-family angle
 * choice into one whose built polygon matches its targets to ~2^-60.
 */
Rational closure_defect(const std::vector<Rational>& angles_pi,
                        const std::vector<LengthRelation>& relations,
                        const std::map<int, Rational>& pinned_scales = {});

}  // namespace tilekit
