#include "tilekit/polygon_builder.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tilekit/bigfloat.hpp"
#include "tilekit/errors.hpp"

namespace tilekit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int i, int j) { parent[find(i)] = find(j); }
};

struct Plan {
    int n = 0;
    std::vector<Rational> dir;             // edge direction angles as multiples of pi
    std::vector<Vec2> unit;                // exact rational unit vectors per edge
    std::vector<std::vector<int>> families;  // relation components, each sorted
    std::vector<int> family_of;            // -1 for unconstrained edges
    std::vector<Rational> scale;           // per-edge scale for the absorption path
    // Absorption path (used only when the joint system is rigid):
    int closure_edge = -1;
    int closure_family = -1;               // index into families
    Mat2 family_matrix;                    // direction sum of the closure family
    Vec2 rest_sum;                         // sum of all non-absorbed edges
    bool rigid = false;                    // true when closure had no scale freedom

    std::vector<Vec2> edges;               // filled by realize()
};

// RREF of the homogeneous system rows*x = 0 over the given column order;
// returns solution with free columns taken from `free_values`, or nullopt if
// only the trivial solution exists (no free columns).
std::optional<std::vector<Rational>> solve_homogeneous(std::vector<std::vector<Rational>> rows,
                                                       const std::vector<int>& col_order,
                                                       const std::vector<Rational>& free_values) {
    const int cols = static_cast<int>(col_order.size());
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int ci = 0; ci < cols && r < nrows; ++ci) {
        int c = col_order[ci];
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        for (Rational& v : rows[r]) v *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r == cols) return std::nullopt;  // rigid: only x = 0

    std::vector<Rational> x = free_values;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int i = r - 1; i >= 0; --i) {
        Rational v(0);
        for (int j = 0; j < cols; ++j)
            if (j != pivot_col[i] && !rows[i][j].is_zero()) v -= rows[i][j] * x[j];
        x[pivot_col[i]] = v;
    }
    return x;
}

Plan make_plan(const std::vector<Rational>& angles_pi,
               const std::vector<LengthRelation>& relations,
               const std::map<int, Rational>& pinned_scales) {
    const int n = static_cast<int>(angles_pi.size());
    if (n < 3) throw InfeasibleConstraints("need at least three angles");
    Rational sum(0);
    for (const Rational& q : angles_pi) {
        if (q.sign() <= 0 || q >= Rational(1))
            throw InfeasibleConstraints("angles must lie strictly between 0 and pi");
        sum += q;
    }
    if (sum != Rational(n - 2))
        throw InfeasibleConstraints("angle sum must equal (n-2)*pi exactly");
    for (const auto& [edge, value] : pinned_scales)
        if (edge < 0 || edge >= n) throw InfeasibleConstraints("pinned edge out of range");

    Plan plan;
    plan.n = n;
    // Edge 0 points along +x; the exterior turn entering edge j is
    // pi - angle[j-1]. Directions are exact rational multiples of pi, so
    // opposite edges of symmetric inputs get exactly opposite unit vectors.
    plan.dir.resize(n);
    plan.dir[0] = Rational(0);
    for (int j = 1; j < n; ++j) plan.dir[j] = plan.dir[j - 1] + (Rational(1) - angles_pi[j - 1]);
    const Vec2 unit_x{Rational(1), Rational(0)};
    plan.unit.reserve(n);
    for (int j = 0; j < n; ++j) plan.unit.push_back(rational_rotation(plan.dir[j]).apply(unit_x));

    UnionFind uf(n);
    for (const LengthRelation& rel : relations)
        for (size_t k = 1; k < rel.terms.size(); ++k)
            uf.unite(rel.terms[0].second, rel.terms[k].second);
    plan.family_of.assign(n, -1);
    std::map<int, std::vector<int>> roots;
    for (const LengthRelation& rel : relations)
        for (const auto& [coef, edge] : rel.terms) roots[uf.find(edge)];  // mark roots
    for (int e = 0; e < n; ++e)
        if (auto it = roots.find(uf.find(e)); it != roots.end()) it->second.push_back(e);
    for (auto& [root, members] : roots) {
        for (int e : members) plan.family_of[e] = static_cast<int>(plan.families.size());
        plan.families.push_back(members);
    }

    // First try to satisfy relations and closure together with every edge kept
    // exactly on its direction: a homogeneous linear system over the scales.
    std::vector<std::vector<Rational>> rows;
    for (const LengthRelation& rel : relations) {
        std::vector<Rational> row(n, Rational(0));
        for (const auto& [coef, edge] : rel.terms) row[edge] += coef;
        rows.push_back(std::move(row));
    }
    std::vector<Rational> cx(n), cy(n);
    for (int e = 0; e < n; ++e) {
        cx[e] = plan.unit[e].x;
        cy[e] = plan.unit[e].y;
    }
    rows.push_back(cx);
    rows.push_back(cy);

    // Pinned columns go last so pivots prefer to consume unpinned scales and
    // the pins survive as free-variable assignments.
    std::vector<int> col_order;
    for (int e = 0; e < n; ++e)
        if (!pinned_scales.count(e)) col_order.push_back(e);
    for (int e = 0; e < n; ++e)
        if (pinned_scales.count(e)) col_order.push_back(e);
    std::vector<Rational> defaults(n, Rational(1));
    for (const auto& [edge, value] : pinned_scales) defaults[edge] = value;

    if (auto solved = solve_homogeneous(rows, col_order, defaults)) {
        plan.scale = *solved;
        for (const Rational& s : plan.scale)
            if (s.sign() <= 0)
                throw InfeasibleConstraints("relations and closure force a non-positive length");
        plan.edges.reserve(n);
        for (int e = 0; e < n; ++e) plan.edges.push_back(plan.scale[e] * plan.unit[e]);
        return plan;
    }

    // Rigid case: relations + closure pin every scale to zero. Keep relations
    // and closure exact and absorb the closure vector into one unconstrained
    // edge (or one family base), whose direction may drift off target by the
    // residual inconsistency of the angle data.
    plan.rigid = true;
    plan.scale.assign(n, Rational(1));
    for (const auto& [edge, value] : pinned_scales) plan.scale[edge] = value;
    for (auto& members : plan.families) {
        std::map<int, int> col_of;
        for (size_t i = 0; i < members.size(); ++i) col_of[members[i]] = static_cast<int>(i);
        std::vector<std::vector<Rational>> fam_rows;
        std::vector<Rational> rhs;
        for (const LengthRelation& rel : relations) {
            if (rel.terms.empty() || plan.family_of[rel.terms[0].second] !=
                                         plan.family_of[members[0]])
                continue;
            std::vector<Rational> row(members.size(), Rational(0));
            for (const auto& [coef, edge] : rel.terms) row[col_of[edge]] += coef;
            fam_rows.push_back(std::move(row));
            rhs.push_back(Rational(0));
        }
        // Reduce with pins as extra equations.
        for (int e : members) {
            if (auto it = pinned_scales.find(e); it != pinned_scales.end()) {
                std::vector<Rational> row(members.size(), Rational(0));
                row[col_of[e]] = Rational(1);
                fam_rows.push_back(std::move(row));
                rhs.push_back(it->second);
            }
        }
        // Gaussian solve with defaults 1 (inhomogeneous).
        const int cols = static_cast<int>(members.size());
        std::vector<int> piv;
        int r = 0;
        for (int c = 0; c < cols && r < static_cast<int>(fam_rows.size()); ++c) {
            int sel = -1;
            for (int i = r; i < static_cast<int>(fam_rows.size()); ++i)
                if (!fam_rows[i][c].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(fam_rows[sel], fam_rows[r]);
            std::swap(rhs[sel], rhs[r]);
            Rational inv = Rational(1) / fam_rows[r][c];
            for (Rational& v : fam_rows[r]) v *= inv;
            rhs[r] *= inv;
            for (int i = 0; i < static_cast<int>(fam_rows.size()); ++i) {
                if (i == r || fam_rows[i][c].is_zero()) continue;
                Rational f = fam_rows[i][c];
                for (int j = 0; j < cols; ++j) fam_rows[i][j] -= f * fam_rows[r][j];
                rhs[i] -= f * rhs[r];
            }
            piv.push_back(c);
            ++r;
        }
        for (int i = r; i < static_cast<int>(fam_rows.size()); ++i)
            if (!rhs[i].is_zero())
                throw InfeasibleConstraints("length relations are inconsistent with pins");
        std::vector<Rational> x(cols, Rational(1));
        for (int i = 0; i < cols; ++i)
            if (auto it = pinned_scales.find(members[i]); it != pinned_scales.end())
                x[i] = it->second;
        for (int i = r - 1; i >= 0; --i) {
            Rational v = rhs[i];
            for (int j = 0; j < cols; ++j)
                if (j != piv[i] && !fam_rows[i][j].is_zero()) v -= fam_rows[i][j] * x[j];
            x[piv[i]] = v;
        }
        for (int i = 0; i < cols; ++i) {
            if (x[i].sign() <= 0)
                throw InfeasibleConstraints("length relations force a non-positive length");
            plan.scale[members[i]] = x[i];
        }
    }

    // Pick the absorber: the highest-index unconstrained edge, else the
    // highest family whose direction sum is invertible.
    for (int e = n - 1; e >= 0 && plan.closure_edge < 0; --e)
        if (plan.family_of[e] < 0) plan.closure_edge = e;
    if (plan.closure_edge < 0) {
        std::vector<std::pair<int, int>> order;  // (max member, family index)
        for (size_t f = 0; f < plan.families.size(); ++f)
            order.emplace_back(plan.families[f].back(), static_cast<int>(f));
        std::sort(order.rbegin(), order.rend());
        for (auto& [mx, f] : order) {
            const auto& members = plan.families[f];
            int base = members.front();
            Mat2 m(Rational(0), Rational(0), Rational(0), Rational(0));
            for (int e : members) {
                Mat2 rot = rational_rotation(plan.dir[e] - plan.dir[base]);
                m = Mat2(m.a + plan.scale[e] * rot.a, m.b + plan.scale[e] * rot.b,
                         m.c + plan.scale[e] * rot.c, m.d + plan.scale[e] * rot.d);
            }
            if (!m.singular()) {
                plan.closure_family = f;
                plan.family_matrix = m;
                break;
            }
        }
        if (plan.closure_family < 0)
            throw InfeasibleConstraints("no edge or family can absorb the closure constraint");
    }

    plan.rest_sum = Vec2{Rational(0), Rational(0)};
    plan.edges.assign(n, Vec2{Rational(0), Rational(0)});
    for (int e = 0; e < n; ++e) {
        if (e == plan.closure_edge) continue;
        if (plan.closure_family >= 0 && plan.family_of[e] == plan.closure_family) continue;
        plan.edges[e] = plan.scale[e] * plan.unit[e];
        plan.rest_sum += plan.edges[e];
    }

    if (plan.closure_edge >= 0) {
        plan.edges[plan.closure_edge] = -plan.rest_sum;
        if (plan.edges[plan.closure_edge].is_zero())
            throw InfeasibleConstraints("closure edge degenerates to a point");
    } else {
        const auto& members = plan.families[plan.closure_family];
        int base = members.front();
        Vec2 u = plan.family_matrix.solve(-plan.rest_sum);
        if (u.is_zero()) throw InfeasibleConstraints("closure family degenerates");
        for (int e : members)
            plan.edges[e] =
                plan.scale[e] * rational_rotation(plan.dir[e] - plan.dir[base]).apply(u);
    }
    return plan;
}

}  // namespace

Mat2 rational_rotation(const Rational& angle_pi) {
    // Split off exact quarter turns; the residual angle is at most pi/4,
    // where the half-angle tangent is small and well approximated dyadically.
    mpz_class m = (angle_pi + angle_pi).round_nearest();
    Rational residual = angle_pi - Rational(m) / Rational(2);

    Rational r = (BigFloat::pi() * (residual / Rational(2))).tan().dyadic(54);
    Rational rr = r * r;
    Rational denom = Rational(1) + rr;
    Mat2 rot((Rational(1) - rr) / denom, (Rational(-2) * r) / denom, (Rational(2) * r) / denom,
             (Rational(1) - rr) / denom);

    unsigned long quarters = mpz_fdiv_ui(m.get_mpz_t(), 4);
    Mat2 j = Mat2::quarter_turn();
    for (unsigned long i = 0; i < quarters; ++i) rot = j * rot;
    return rot;
}

std::vector<LengthRelation> relations_from_rule(const TypeRule& rule) {
    std::vector<LengthRelation> out;
    for (const LengthCondition& c : rule.length_conditions) {
        LengthRelation rel;
        for (const auto& t : c.lhs) rel.terms.emplace_back(Rational(t.coef), t.edge - 1);
        for (const auto& t : c.rhs) rel.terms.emplace_back(Rational(-t.coef), t.edge - 1);
        out.push_back(std::move(rel));
    }
    return out;
}

Rational closure_defect(const std::vector<Rational>& angles_pi,
                        const std::vector<LengthRelation>& relations,
                        const std::map<int, Rational>& pinned_scales) {
    Plan plan = make_plan(angles_pi, relations, pinned_scales);
    if (!plan.rigid) return Rational(0);
    if (plan.closure_edge >= 0)
        return cross(plan.unit[plan.closure_edge], -plan.rest_sum);
    int base = plan.families[plan.closure_family].front();
    return cross(plan.unit[base], plan.family_matrix.solve(-plan.rest_sum));
}

ConvexPolygon construct_from_constraints(const std::vector<Rational>& angles_pi,
                                         const std::vector<LengthRelation>& relations,
                                         const std::map<int, Rational>& pinned_scales) {
    Plan plan = make_plan(angles_pi, relations, pinned_scales);
    std::vector<Point2> verts;
    verts.reserve(plan.n);
    Point2 v{Rational(0), Rational(0)};
    for (int e = 0; e < plan.n; ++e) {
        v = v + plan.edges[e];
        verts.push_back(v);
    }
    try {
        return ConvexPolygon(std::move(verts));
    } catch (const NotConvex& ex) {
        throw InfeasibleConstraints(std::string("constraints give a non-convex chain: ") +
                                    ex.what());
    }
}

}  // namespace tilekit
