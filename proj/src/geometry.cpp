#include "tilekit/geometry.hpp"

#include <algorithm>

#include "tilekit/errors.hpp"

namespace tilekit {

Mat2 Mat2::inverse() const {
    if (singular()) throw SingularMatrix("matrix is singular");
    return {d / det, -b / det, -c / det, a / det};
}

Vec2 Mat2::solve(const Vec2& v) const {
    if (singular()) throw SingularMatrix("matrix is singular");
    return {(v.x * d - v.y * b) / det, (v.y * a - v.x * c) / det};
}

namespace {

Rational signed_area_twice(const std::vector<Point2>& vs) {
    Rational s(0);
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        const Point2& p = vs[i];
        const Point2& q = vs[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    const int n = static_cast<int>(verts_.size());
    if (n < 3) throw NotConvex("polygon needs at least 3 vertices");

    Rational area2 = signed_area_twice(verts_);
    if (area2.sign() < 0) {
        std::reverse(verts_.begin(), verts_.end());
        reversed_input_ = true;
    } else if (area2.is_zero()) {
        throw NotConvex("polygon has zero area");
    }

    for (int i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        Vec2 f = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (e.is_zero()) throw NotConvex("repeated vertex");
        if (cross(e, f).sign() <= 0) throw NotConvex("polygon is not strictly convex");
    }

    // All left turns is not enough: a star-shaped cycle turns left everywhere
    // but winds more than once. Require total turning exactly one revolution.
    Vec2 ref = verts_[1] - verts_[0];
    int winding = 0;
    for (int i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        Vec2 f = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (ccw_arc_contains(e, f, ref)) ++winding;
    }
    if (winding != 1) throw NotConvex("vertex cycle winds more than once");
}

Box ConvexPolygon::bbox() const {
    Box b{verts_[0].x, verts_[0].x, verts_[0].y, verts_[0].y};
    for (const Point2& p : verts_) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const {
    std::vector<Point2> vs;
    vs.reserve(verts_.size());
    for (const Point2& p : verts_) vs.push_back(p + t);
    return ConvexPolygon(std::move(vs));
}

Lattice2::Lattice2(Vec2 a1, Vec2 a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
    det_ = cross(a1_, a2_);
    if (det_.is_zero()) throw SingularMatrix("lattice basis is degenerate");
    det_abs_ = det_.abs();
}

std::pair<Rational, Rational> Lattice2::coords(const Vec2& v) const {
    // Cramer on [a1 a2] z = v.
    Rational z1 = cross(v, a2_) / det_;
    Rational z2 = cross(a1_, v) / det_;
    return {z1, z2};
}

bool Lattice2::contains(const Vec2& v) const {
    auto [z1, z2] = coords(v);
    return z1.is_integer() && z2.is_integer();
}

Rational polygon_area(const ConvexPolygon& p) {
    return signed_area_twice(p.vertices()) / Rational(2);
}

std::optional<Point2> centrally_symmetric_center(const ConvexPolygon& p) {
    const int n = p.size();
    if (n % 2 != 0) return std::nullopt;
    Point2 c = midpoint(p.vertex(0), p.vertex(n / 2));
    for (int i = 0; i < n / 2; ++i) {
        Point2 m = midpoint(p.vertex(i), p.vertex(i + n / 2));
        if (m != c) return std::nullopt;
    }
    return c;
}

std::vector<Point2> half_lattice_points_on_segment(const Lattice2& lat, const Point2& a,
                                                   const Point2& b) {
    Vec2 d = b - a;
    if (d.is_zero()) throw Error("degenerate segment");

    // Work in coordinates of (1/2)Lattice: p = a + t d lies in it iff
    // coords(2a) + t coords(2d) is an integer pair.
    auto [a1, a2] = lat.coords(a.as_vec() + a.as_vec());
    auto [d1, d2] = lat.coords(d + d);

    std::vector<std::pair<Rational, Point2>> found;
    auto try_t = [&](const Rational& t) {
        if (t.sign() <= 0 || t >= Rational(1)) return;
        Rational u1 = a1 + t * d1;
        Rational u2 = a2 + t * d2;
        if (u1.is_integer() && u2.is_integer()) found.emplace_back(t, a + t * d);
    };

    if (!d1.is_zero()) {
        // Candidate parameters come from integrality of the first coordinate.
        Rational lo = std::min(a1, a1 + d1), hi = std::max(a1, a1 + d1);
        for (mpz_class m = lo.floor(); Rational(m) <= hi; ++m) try_t((Rational(m) - a1) / d1);
    } else {
        if (!a1.is_integer()) return {};
        if (d2.is_zero()) throw Error("segment has zero length in lattice coordinates");
        Rational lo = std::min(a2, a2 + d2), hi = std::max(a2, a2 + d2);
        for (mpz_class m = lo.floor(); Rational(m) <= hi; ++m) try_t((Rational(m) - a2) / d2);
    }

    std::sort(found.begin(), found.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Point2> out;
    out.reserve(found.size());
    for (auto& [t, p] : found) out.push_back(p);
    return out;
}

ConvexPolygon apply_linear(const Mat2& m, const ConvexPolygon& p) {
    if (m.singular()) throw SingularMatrix("cannot apply singular map to polygon");
    std::vector<Point2> vs;
    vs.reserve(p.vertices().size());
    for (const Point2& v : p.vertices()) vs.push_back(m.apply(v));
    return ConvexPolygon(std::move(vs));  // orientation restored by the constructor
}

Lattice2 apply_linear(const Mat2& m, const Lattice2& lat) {
    if (m.singular()) throw SingularMatrix("cannot apply singular map to lattice");
    return Lattice2(m.apply(lat.a1()), m.apply(lat.a2()));
}

PointLocation point_in_polygon(const ConvexPolygon& p, const Point2& x) {
    const int n = p.size();
    bool any_zero = false;
    for (int i = 0; i < n; ++i) {
        Rational c = cross(p.edge_vector(i), x - p.vertex(i - 1));
        int s = c.sign();
        if (s < 0) return {Region::Exterior};
        if (s == 0) any_zero = true;
    }
    if (!any_zero) return {Region::Interior};

    PointLocation loc{Region::Boundary};
    for (int i = 0; i < n; ++i) {
        if (x == p.vertex(i)) {
            loc.on_vertex = i;
            return loc;
        }
    }
    for (int i = 0; i < n; ++i) {
        Vec2 e = p.edge_vector(i);
        if (!cross(e, x - p.vertex(i - 1)).is_zero()) continue;
        Rational t = dot(x - p.vertex(i - 1), e) / e.norm_sq();
        if (t.sign() > 0 && t < Rational(1)) {
            loc.on_edge = i;
            return loc;
        }
    }
    // Convexity leaves no other boundary case.
    throw Error("point_in_polygon: inconsistent classification");
}

bool same_direction(const Vec2& u, const Vec2& w) {
    return cross(u, w).is_zero() && dot(u, w).sign() > 0;
}

Vec2 primitive_direction(const Vec2& v) {
    if (v.is_zero()) throw Error("zero vector has no direction");
    mpz_class scale;
    mpz_lcm(scale.get_mpz_t(), v.x.denominator().get_mpz_t(), v.y.denominator().get_mpz_t());
    mpz_class ix(v.x.numerator() * (scale / v.x.denominator()));
    mpz_class iy(v.y.numerator() * (scale / v.y.denominator()));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
    return {Rational(mpz_class(ix / g)), Rational(mpz_class(iy / g))};
}

bool ccw_arc_contains(const Vec2& a, const Vec2& b, const Vec2& ray) {
    if (same_direction(ray, b)) return true;
    return cross(a, ray).sign() > 0 && cross(ray, b).sign() > 0;
}

bool cw_arc_contains(const Vec2& a, const Vec2& b, const Vec2& ray) {
    if (same_direction(ray, b)) return true;
    if (same_direction(ray, a)) return false;
    if (cross(a, b).is_zero()) {
        // Opposite directions: the arc is the full clockwise half turn.
        return cross(a, ray).sign() < 0;
    }
    return cross(a, ray).sign() < 0 && cross(ray, b).sign() < 0;
}

bool same_polygon(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.size() != q.size()) return false;
    const int n = p.size();
    for (int off = 0; off < n; ++off) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = p.vertex(i + off) == q.vertex(i);
        if (ok) return true;
    }
    return false;
}

}  // namespace tilekit
