#include "tilekit/oracle.hpp"

#include <algorithm>
#include <random>

#include "tilekit/errors.hpp"

namespace tilekit {

namespace {

Box cell_bbox(const Lattice2& lat) {
    std::vector<Point2> corners = {
        {Rational(0), Rational(0)},
        {lat.a1().x, lat.a1().y},
        {lat.a2().x, lat.a2().y},
        {lat.a1().x + lat.a2().x, lat.a1().y + lat.a2().y},
    };
    Box b{corners[0].x, corners[0].x, corners[0].y, corners[0].y};
    for (const Point2& c : corners) {
        b.xmin = std::min(b.xmin, c.x);
        b.xmax = std::max(b.xmax, c.x);
        b.ymin = std::min(b.ymin, c.y);
        b.ymax = std::max(b.ymax, c.y);
    }
    return b;
}

}  // namespace

std::vector<Vec2> translates_meeting_box(const ConvexPolygon& p, const Lattice2& lat,
                                         const Box& region) {
    Box pbox = p.bbox();
    // (P + t) meets region only if t lies in region (+) (-bbox(P)).
    Box tbox{region.xmin - pbox.xmax, region.xmax - pbox.xmin, region.ymin - pbox.ymax,
             region.ymax - pbox.ymin};

    mpz_class z1lo, z1hi, z2lo, z2hi;
    bool first = true;
    for (const Rational& x : {tbox.xmin, tbox.xmax}) {
        for (const Rational& y : {tbox.ymin, tbox.ymax}) {
            auto [z1, z2] = lat.coords({x, y});
            mpz_class f1 = z1.floor(), c1 = z1.ceil(), f2 = z2.floor(), c2 = z2.ceil();
            if (first) {
                z1lo = f1; z1hi = c1; z2lo = f2; z2hi = c2;
                first = false;
            } else {
                z1lo = std::min(z1lo, f1); z1hi = std::max(z1hi, c1);
                z2lo = std::min(z2lo, f2); z2hi = std::max(z2hi, c2);
            }
        }
    }
    z1lo -= 1; z1hi += 1; z2lo -= 1; z2hi += 1;

    std::vector<Vec2> out;
    for (mpz_class z1 = z1lo; z1 <= z1hi; ++z1) {
        for (mpz_class z2 = z2lo; z2 <= z2hi; ++z2) {
            Vec2 t = lat.point(z1, z2);
            if (tbox.contains({t.x, t.y})) out.push_back(t);
        }
    }
    return out;
}

std::pair<long, long> covering_multiplicity_at(const ConvexPolygon& p, const Lattice2& lat,
                                               const Point2& x) {
    Box pt{x.x, x.x, x.y, x.y};
    long interior = 0, boundary = 0;
    for (const Vec2& t : translates_meeting_box(p, lat, pt)) {
        switch (point_in_polygon(p, x - t).region) {
            case Region::Interior: ++interior; break;
            case Region::Boundary: ++boundary; break;
            case Region::Exterior: break;
        }
    }
    return {interior, boundary};
}

namespace {

struct Segment {
    Point2 a, b;
    Rational xmin, xmax;

    Segment(Point2 pa, Point2 pb) : a(std::move(pa)), b(std::move(pb)) {
        xmin = std::min(a.x, b.x);
        xmax = std::max(a.x, b.x);
    }

    Rational y_at(const Rational& x) const {
        return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    }
};

// Liang-Barsky style exact clip of [a,b] to a box; nullopt when disjoint.
std::optional<std::pair<Point2, Point2>> clip_to_box(const Point2& a, const Point2& b,
                                                     const Box& box) {
    Rational t0(0), t1(1);
    Vec2 d = b - a;
    auto narrow = [&](const Rational& num, const Rational& den) {
        // Constraint num + t*den >= 0.
        if (den.is_zero()) return num.sign() >= 0;
        Rational t = -num / den;
        if (den.sign() > 0) {
            if (t > t0) t0 = t;
        } else {
            if (t < t1) t1 = t;
        }
        return true;
    };
    if (!narrow(a.x - box.xmin, d.x)) return std::nullopt;
    if (!narrow(box.xmax - a.x, -d.x)) return std::nullopt;
    if (!narrow(a.y - box.ymin, d.y)) return std::nullopt;
    if (!narrow(box.ymax - a.y, -d.y)) return std::nullopt;
    if (t0 >= t1) return std::nullopt;
    return std::make_pair(a + t0 * d, a + t1 * d);
}

struct CellGeometry {
    Box cellbox;
    std::vector<Vec2> translates;
    std::vector<Box> translate_boxes;
};

CellGeometry cell_geometry(const ConvexPolygon& p, const Lattice2& lat) {
    CellGeometry g;
    g.cellbox = cell_bbox(lat);
    g.translates = translates_meeting_box(p, lat, g.cellbox);
    Box pbox = p.bbox();
    g.translate_boxes.reserve(g.translates.size());
    for (const Vec2& t : g.translates) g.translate_boxes.push_back(pbox.offset(t));
    return g;
}

long interior_count_at(const ConvexPolygon& p, const CellGeometry& g, const Point2& x,
                       long* boundary = nullptr) {
    long interior = 0, on_boundary = 0;
    for (size_t i = 0; i < g.translates.size(); ++i) {
        if (!g.translate_boxes[i].contains(x)) continue;
        switch (point_in_polygon(p, x - g.translates[i]).region) {
            case Region::Interior: ++interior; break;
            case Region::Boundary: ++on_boundary; break;
            case Region::Exterior: break;
        }
    }
    if (boundary) *boundary = on_boundary;
    return interior;
}

}  // namespace

Arrangement build_cell_arrangement(const ConvexPolygon& p, const Lattice2& lat,
                                   long segment_cap) {
    CellGeometry g = cell_geometry(p, lat);
    Rational margin =
        (g.cellbox.width() + g.cellbox.height()) * Rational(1, 16) + Rational(1, 16);
    Box clipbox = g.cellbox.expanded(margin);

    Arrangement arr;
    long raw = static_cast<long>(g.translates.size()) * p.size();
    if (raw > segment_cap) throw ArrangementOverflow("translate boundary segment count too large");
    for (const Vec2& t : g.translates) {
        for (int i = 0; i < p.size(); ++i) {
            auto clipped = clip_to_box(p.vertex(i - 1) + t, p.vertex(i) + t, clipbox);
            if (clipped && clipped->first != clipped->second)
                arr.segments.emplace_back(clipped->first, clipped->second);
        }
    }
    // The cell edges participate so that decomposition cells never straddle
    // the cell boundary.
    Point2 o{Rational(0), Rational(0)};
    Point2 c1 = o + lat.a1(), c2 = o + lat.a2(), c3 = o + lat.a1() + lat.a2();
    arr.segments.emplace_back(o, c1);
    arr.segments.emplace_back(o, c2);
    arr.segments.emplace_back(c1, c3);
    arr.segments.emplace_back(c2, c3);
    if (static_cast<long>(arr.segments.size()) > segment_cap)
        throw ArrangementOverflow("arrangement segment count exceeds cap");

    std::vector<Segment> segs;
    segs.reserve(arr.segments.size());
    for (auto& [a, b] : arr.segments) segs.emplace_back(a, b);

    // Event abscissas: endpoints and pairwise intersections. Between two
    // consecutive events the segments crossing the open slab are totally
    // ordered, so one sample per vertical gap hits every face.
    std::vector<Rational> events;
    for (const Segment& s : segs) {
        events.push_back(s.xmin);
        events.push_back(s.xmax);
    }
    std::vector<size_t> order(segs.size());
    for (size_t i = 0; i < segs.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t l, size_t r) { return segs[l].xmin < segs[r].xmin; });
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const Segment& s = segs[order[oi]];
        for (size_t oj = oi + 1; oj < order.size(); ++oj) {
            const Segment& u = segs[order[oj]];
            if (u.xmin > s.xmax) break;
            Vec2 r = s.b - s.a, w = u.b - u.a;
            Rational den = cross(r, w);
            if (den.is_zero()) continue;
            Vec2 q = u.a - s.a;
            Rational t = cross(q, w) / den;
            Rational v = cross(q, r) / den;
            if (t.sign() < 0 || t > Rational(1) || v.sign() < 0 || v > Rational(1)) continue;
            events.push_back(s.a.x + t * r.x);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    // Sweep the slabs with an active list keyed on segment x-extents.
    std::vector<size_t> by_xmin = order;  // already sorted by xmin
    size_t next = 0;
    std::vector<size_t> active;
    const Rational half(1, 2);
    for (size_t e = 0; e + 1 < events.size(); ++e) {
        const Rational& x0 = events[e];
        const Rational& x1 = events[e + 1];
        if (!(x0 < x1)) continue;
        while (next < by_xmin.size() && segs[by_xmin[next]].xmin <= x0)
            active.push_back(by_xmin[next++]);
        for (size_t k = 0; k < active.size();) {
            if (segs[active[k]].xmax <= x0) {
                active[k] = active.back();
                active.pop_back();
            } else {
                ++k;
            }
        }
        Rational xm = half * (x0 + x1);
        std::vector<Rational> ys;
        for (size_t idx : active) {
            const Segment& s = segs[idx];
            if (s.xmin <= x0 && s.xmax >= x1) ys.push_back(s.y_at(xm));
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t k = 0; k + 1 < ys.size(); ++k) {
            Point2 sample{xm, half * (ys[k] + ys[k + 1])};
            auto [s1, s2] = lat.coords(sample.as_vec());
            if (s1.sign() > 0 && s1 < Rational(1) && s2.sign() > 0 && s2 < Rational(1))
                arr.face_samples.push_back(sample);
        }
    }
    return arr;
}

MultiplicityReport exact_uniform_multiplicity(const ConvexPolygon& p, const Lattice2& lat,
                                              long segment_cap) {
    Arrangement arr = build_cell_arrangement(p, lat, segment_cap);
    CellGeometry g = cell_geometry(p, lat);

    MultiplicityReport report;
    report.mode = MultiplicityReport::Mode::Exact;
    if (arr.face_samples.empty()) throw Error("arrangement produced no face samples");

    std::map<long, Point2> seen;
    for (const Point2& s : arr.face_samples) {
        long boundary = 0;
        long count = interior_count_at(p, g, s, &boundary);
        if (boundary != 0) throw Error("face sample landed on a translate boundary");
        seen.emplace(count, s);
    }
    if (seen.size() == 1) {
        report.uniform = true;
        report.fold = seen.begin()->first;
    } else {
        for (const auto& [count, point] : seen) report.violations.emplace_back(point, count);
    }
    return report;
}

MultiplicityReport sampled_multiplicity(const ConvexPolygon& p, const Lattice2& lat, long n,
                                        unsigned long long seed) {
    if (n < 1) throw Error("sample count must be positive");
    CellGeometry g = cell_geometry(p, lat);

    MultiplicityReport report;
    report.mode = MultiplicityReport::Mode::Sampled;
    report.samples = n;
    report.seed = seed;

    std::mt19937_64 rng(seed);
    const mpz_class den = mpz_class(1) << 64;
    auto draw_coord = [&]() {
        mpz_class num(0);
        std::uint64_t bits = rng();
        mpz_import(num.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    };

    long accepted = 0;
    long max_draws = 2 * n + 1000;
    long draws = 0;
    while (accepted < n) {
        if (++draws > max_draws) throw Error("too many boundary hits while sampling");
        Rational s = draw_coord(), t = draw_coord();
        Vec2 v = s * lat.a1() + t * lat.a2();
        Point2 x{v.x, v.y};
        long boundary = 0;
        long count = interior_count_at(p, g, x, &boundary);
        if (boundary != 0) {
            ++report.skipped;
            continue;
        }
        ++report.histogram[count];
        ++accepted;
    }
    report.no_violation = report.histogram.size() == 1;
    if (report.no_violation) report.fold = report.histogram.begin()->first;
    return report;
}

bool verify_kfold(const MultiTilingInstance& inst, VerifyMode mode, long n,
                  unsigned long long seed) {
    if (mode == VerifyMode::Exact) {
        MultiplicityReport r = exact_uniform_multiplicity(inst.polygon, inst.lattice);
        return r.uniform && r.fold == inst.fold;
    }
    MultiplicityReport r = sampled_multiplicity(inst.polygon, inst.lattice, n, seed);
    return r.no_violation && r.fold == inst.fold;
}

}  // namespace tilekit
