#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

struct Vec2 {
    Rational x, y;

    Vec2() = default;
    Vec2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

    Rational norm_sq() const { return x * x + y * y; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

struct Point2 {
    Rational x, y;

    Point2() = default;
    Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    friend Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
    friend Point2 operator-(const Point2& p, const Vec2& v) { return {p.x - v.x, p.y - v.y}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    // Lexicographic, for ordered containers.
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    Vec2 as_vec() const { return {x, y}; }
};

inline Point2 midpoint(const Point2& a, const Point2& b) {
    const Rational half(1, 2);
    return {half * (a.x + b.x), half * (a.y + b.y)};
}

/// Row-major 2x2 rational matrix; the determinant is computed at construction.
struct Mat2 {
    Rational a, b, c, d;
    Rational det;

    Mat2() : a(1), b(0), c(0), d(1), det(1) {}
    Mat2(Rational pa, Rational pb, Rational pc, Rational pd)
        : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)),
          det(a * d - b * c) {}

    static Mat2 identity() { return {}; }
    static Mat2 quarter_turn() { return {Rational(0), Rational(-1), Rational(1), Rational(0)}; }
    static Mat2 from_columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

    bool singular() const { return det.is_zero(); }

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Point2 apply(const Point2& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    Mat2 inverse() const;
    // Solves M * w = v exactly.
    Vec2 solve(const Vec2& v) const;

    friend bool operator==(const Mat2& m, const Mat2& o) {
        return m.a == o.a && m.b == o.b && m.c == o.c && m.d == o.d;
    }
};

/// Closed axis-aligned rational box.
struct Box {
    Rational xmin, xmax, ymin, ymax;

    bool intersects(const Box& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
    bool contains(const Point2& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
    Box expanded(const Rational& by) const { return {xmin - by, xmax + by, ymin - by, ymax + by}; }
    Box offset(const Vec2& v) const { return {xmin + v.x, xmax + v.x, ymin + v.y, ymax + v.y}; }
    Rational width() const { return xmax - xmin; }
    Rational height() const { return ymax - ymin; }
};

/**
 * Strictly convex polygon with exact rational vertices, stored counterclockwise.
 * Clockwise input is silently reversed (the notice flag records it); collinear
 * or repeated vertices are rejected. Edge i joins vertex i-1 and vertex i (mod n).
 */
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<Point2>& vertices() const { return verts_; }
    const Point2& vertex(int i) const { return verts_[wrap(i)]; }
    bool was_reversed() const { return reversed_input_; }

    Vec2 edge_vector(int i) const { return vertex(i) - vertex(i - 1); }
    Point2 edge_midpoint(int i) const { return midpoint(vertex(i - 1), vertex(i)); }

    Box bbox() const;
    ConvexPolygon translated(const Vec2& t) const;

private:
    int wrap(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    std::vector<Point2> verts_;
    bool reversed_input_ = false;
};

/// 2D lattice given by a rational basis; the basis determinant is never zero.
class Lattice2 {
public:
    Lattice2(Vec2 a1, Vec2 a2);

    const Vec2& a1() const { return a1_; }
    const Vec2& a2() const { return a2_; }
    const Rational& det_abs() const { return det_abs_; }

    // Coordinates (z1, z2) with z1*a1 + z2*a2 = v; exact.
    std::pair<Rational, Rational> coords(const Vec2& v) const;
    bool contains(const Vec2& v) const;
    // Membership in (1/2) * lattice.
    bool half_contains(const Vec2& v) const { return contains(v + v); }

    Vec2 point(const mpz_class& z1, const mpz_class& z2) const {
        return Rational(z1) * a1_ + Rational(z2) * a2_;
    }

    friend bool operator==(const Lattice2& l, const Lattice2& m) {
        return l.contains(m.a1_) && l.contains(m.a2_) && l.det_abs_ == m.det_abs_;
    }

private:
    Vec2 a1_, a2_;
    Rational det_;  // signed
    Rational det_abs_;
};

Rational polygon_area(const ConvexPolygon& p);

std::optional<Point2> centrally_symmetric_center(const ConvexPolygon& p);

// All points of (1/2)Lattice strictly inside segment (a, b), ordered from a to b.
std::vector<Point2> half_lattice_points_on_segment(const Lattice2& lat, const Point2& a,
                                                   const Point2& b);

ConvexPolygon apply_linear(const Mat2& m, const ConvexPolygon& p);
Lattice2 apply_linear(const Mat2& m, const Lattice2& lat);

enum class Region { Interior, Boundary, Exterior };

struct PointLocation {
    Region region;
    int on_vertex = -1;  // vertex index when the point coincides with one
    int on_edge = -1;    // edge index when the point is in an edge's relative interior
};

PointLocation point_in_polygon(const ConvexPolygon& p, const Point2& x);

// True when u and w point the same way (positive multiples of each other).
bool same_direction(const Vec2& u, const Vec2& w);

// Shortest integer vector with the direction of v.
Vec2 primitive_direction(const Vec2& v);

// Counterclockwise arc from a to b of size in (0, pi): does it contain ray?
// Half-open: a excluded, b included.
bool ccw_arc_contains(const Vec2& a, const Vec2& b, const Vec2& ray);

// Clockwise arc from a to b of size in (0, pi], half-open at b.
bool cw_arc_contains(const Vec2& a, const Vec2& b, const Vec2& ray);

// Exact vertex-cycle equality (same CCW cycle, any starting offset).
bool same_polygon(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace tilekit
