#include "tilekit/multi_tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilekit/errors.hpp"

namespace tilekit {

namespace {

const Point2 kOrigin{Rational(0), Rational(0)};

Lattice2 integer_lattice() {
    return Lattice2({Rational(1), Rational(0)}, {Rational(0), Rational(1)});
}

// Completes v1..v_{n/2} with their negatives.
ConvexPolygon symmetric_polygon(std::vector<Point2> half) {
    std::vector<Point2> verts = half;
    for (const Point2& p : half) verts.push_back({-p.x, -p.y});
    return ConvexPolygon(std::move(verts));
}

long integral_fold(const Rational& area, const Rational& det_abs) {
    Rational fold = area / det_abs;
    if (!fold.is_integer() || fold.sign() <= 0) return 0;
    return static_cast<long>(fold.numerator().get_si());
}

}  // namespace

MultiTilingInstance::MultiTilingInstance(ConvexPolygon p, Lattice2 l, long k)
    : polygon(std::move(p)), lattice(std::move(l)), fold(k) {
    auto center = centrally_symmetric_center(polygon);
    if (!center || *center != kOrigin)
        throw Error("instance polygon must be centrally symmetric about the origin");
    if (fold <= 0 || Rational(fold) * lattice.det_abs() != polygon_area(polygon))
        throw Error("instance fold must equal area/det exactly");
}

std::string bolle_status_name(BolleResult::Status s) {
    switch (s) {
        case BolleResult::Status::Pass: return "Pass";
        case BolleResult::Status::NotCentrallySymmetric: return "NotCentrallySymmetric";
        case BolleResult::Status::EdgeMissesHalfLattice: return "EdgeMissesHalfLattice";
        case BolleResult::Status::EdgeVectorNotInLattice: return "EdgeVectorNotInLattice";
        case BolleResult::Status::NonIntegralFold: return "NonIntegralFold";
    }
    return "?";
}

BolleResult bolle_check(const ConvexPolygon& p, const Lattice2& lat) {
    auto center = centrally_symmetric_center(p);
    if (!center) return {BolleResult::Status::NotCentrallySymmetric};
    ConvexPolygon q = p.translated(kOrigin - *center);

    const int n = q.size();
    for (int i = 0; i < n; ++i) {
        if (half_lattice_points_on_segment(lat, q.vertex(i - 1), q.vertex(i)).empty())
            return {BolleResult::Status::EdgeMissesHalfLattice, 0, i};
        if (!lat.half_contains(q.edge_midpoint(i).as_vec()) && !lat.contains(q.edge_vector(i)))
            return {BolleResult::Status::EdgeVectorNotInLattice, 0, i};
    }
    long fold = integral_fold(polygon_area(q), lat.det_abs());
    if (fold == 0) return {BolleResult::Status::NonIntegralFold};
    return {BolleResult::Status::Pass, fold};
}

MultiTilingInstance seven_fold_octagon() {
    Rational h(1, 2), t(3, 2);
    ConvexPolygon p = symmetric_polygon({{h, -t}, {t, -h}, {t, h}, {h, t}});
    return MultiTilingInstance(std::move(p), integer_lattice(), 7);
}

MultiTilingInstance octagon_alpha(const Rational& a) {
    if (a.sign() <= 0 || a >= Rational(1, 4))
        throw ParamOutOfRange("octagon alpha parameter must satisfy 0 < alpha < 1/4");
    Rational t(3, 2), h(1, 2), one(1);
    ConvexPolygon p = symmetric_polygon({{-a, -t}, {one - a, -t}, {one + a, -h}, {one - a, h}});
    return MultiTilingInstance(std::move(p), integer_lattice(), 5);
}

MultiTilingInstance octagon_beta(const Rational& b) {
    if (b <= Rational(1, 4) || b >= Rational(1, 3))
        throw ParamOutOfRange("octagon beta parameter must satisfy 1/4 < beta < 1/3");
    Rational one(1), two(2);
    ConvexPolygon p = symmetric_polygon({{b, -two}, {one + b, -two}, {one - b, Rational(0)}, {b, one}});
    return MultiTilingInstance(std::move(p), integer_lattice(), 5);
}

MultiTilingInstance octagon_alpha_prime(const Rational& a) {
    if (a.sign() <= 0 || a >= Rational(2, 3))
        throw ParamOutOfRange("sheared octagon alpha parameter must satisfy 0 < alpha < 2/3");
    Rational q = a / Rational(4);
    Rational t(3, 2);
    ConvexPolygon p = symmetric_polygon({{t - Rational(5) * q, Rational(-2)},
                                         {Rational(-1, 2) - Rational(5) * q, Rational(-2)},
                                         {q - t, Rational(0)},
                                         {q - t, Rational(1)}});
    Lattice2 lat({Rational(2), Rational(0)}, {Rational(1) + a / Rational(2), Rational(1)});
    return MultiTilingInstance(std::move(p), std::move(lat), 5);
}

MultiTilingInstance octagon_beta_prime(const Rational& b) {
    if (b.sign() <= 0 || b > Rational(1))
        throw ParamOutOfRange("sheared octagon beta parameter must satisfy 0 < beta <= 1");
    Rational two(2), three(3);
    ConvexPolygon p = symmetric_polygon(
        {{two - b, -three}, {-b, -three}, {-two, Rational(-1)}, {-two, Rational(1)}});
    Lattice2 lat({Rational(2), Rational(0)}, {Rational(1) + b / Rational(2), Rational(2)});
    return MultiTilingInstance(std::move(p), std::move(lat), 5);
}

ConvexPolygon decagon_vertex_region() {
    return ConvexPolygon({{Rational(-1, 2), Rational(1)},
                          {Rational(-1, 2), Rational(3, 4)},
                          {Rational(-2, 3), Rational(2, 3)},
                          {Rational(-3, 4), Rational(3, 4)}});
}

namespace {

std::vector<Point2> canonical_decagon_midpoints() {
    std::vector<Point2> u = {{Rational(0), Rational(1)},
                             {Rational(1), Rational(1)},
                             {Rational(3, 2), Rational(1, 2)},
                             {Rational(3, 2), Rational(0)},
                             {Rational(1), Rational(-1, 2)}};
    for (int i = 0; i < 5; ++i) u.push_back({-u[i].x, -u[i].y});
    return u;
}

}  // namespace

ConvexPolygon decagon_from_vertex(const Point2& v1) {
    ConvexPolygon region = decagon_vertex_region();
    if (point_in_polygon(region, v1).region != Region::Interior)
        throw VertexOutsideRegion("decagon free vertex must be interior to the admissible region");
    std::vector<Point2> verts = {v1};
    for (const Point2& u : canonical_decagon_midpoints()) {
        if (verts.size() == 10) break;
        const Point2& prev = verts.back();
        verts.push_back({u.x + u.x - prev.x, u.y + u.y - prev.y});
    }
    return ConvexPolygon(std::move(verts));
}

MultiTilingInstance decagon_instance(const Point2& v1) {
    return MultiTilingInstance(decagon_from_vertex(v1), integer_lattice(), 5);
}

std::vector<Mat2> affine_equivalences(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Mat2> maps;
    if (p.size() != q.size()) return maps;
    auto cp = centrally_symmetric_center(p);
    auto cq = centrally_symmetric_center(q);
    if (!cp || !cq || *cp != kOrigin || *cq != kOrigin) return maps;

    const int n = p.size();
    Mat2 base = Mat2::from_columns(p.vertex(0).as_vec(), p.vertex(1).as_vec());
    if (base.singular()) return maps;
    Mat2 base_inv = base.inverse();

    for (int off = 0; off < n; ++off) {
        for (int dirn : {1, -1}) {
            Mat2 target =
                Mat2::from_columns(q.vertex(off).as_vec(), q.vertex(off + dirn).as_vec());
            Mat2 m = target * base_inv;
            if (m.singular()) continue;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                ok = m.apply(p.vertex(i)) == q.vertex(off + dirn * i);
            if (ok) maps.push_back(m);
        }
    }
    return maps;
}

std::optional<Mat2> affine_equivalence(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Mat2> maps = affine_equivalences(p, q);
    if (maps.empty()) return std::nullopt;
    return maps.front();
}

std::string fivefold_kind_name(FivefoldFamily::Kind k) {
    switch (k) {
        case FivefoldFamily::Kind::Parallelogram: return "Parallelogram";
        case FivefoldFamily::Kind::CSHexagon: return "CSHexagon";
        case FivefoldFamily::Kind::OctagonA: return "OctagonA";
        case FivefoldFamily::Kind::OctagonB: return "OctagonB";
        case FivefoldFamily::Kind::Decagon: return "Decagon";
        case FivefoldFamily::Kind::None: return "None";
    }
    return "?";
}

namespace {

// Triangle-area ratio of four consecutive labeled vertices. It is invariant
// under linear maps, equals 1 + 4a on the alpha family and (3 - 6b)/2 on the
// beta family at the canonical labeling.
std::optional<Rational> octagon_invariant(const std::vector<Point2>& w) {
    Rational t123 = cross(w[1] - w[0], w[2] - w[0]);
    Rational t134 = cross(w[2] - w[0], w[3] - w[0]);
    if (t123.is_zero()) return std::nullopt;
    return t134 / t123;
}

std::vector<Point2> labeled_vertices(const ConvexPolygon& p, int offset, bool reflected,
                                     int count) {
    std::vector<Point2> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j)
        out.push_back(p.vertex(reflected ? offset - j : offset + j));
    return out;
}

}  // namespace

FivefoldFamily classify_fivefold_family(const ConvexPolygon& p) {
    const int n = p.size();
    auto center = centrally_symmetric_center(p);
    if (n == 4)
        return {center ? FivefoldFamily::Kind::Parallelogram : FivefoldFamily::Kind::None,
                Rational(0), Point2{}};
    if (n == 6)
        return {center ? FivefoldFamily::Kind::CSHexagon : FivefoldFamily::Kind::None,
                Rational(0), Point2{}};
    if (!center || (n != 8 && n != 10)) return {};
    ConvexPolygon q = p.translated(kOrigin - *center);

    if (n == 8) {
        std::vector<std::pair<FivefoldFamily::Kind, Rational>> candidates;
        auto add = [&candidates](FivefoldFamily::Kind k, const Rational& v) {
            for (auto& c : candidates)
                if (c.first == k && c.second == v) return;
            candidates.emplace_back(k, v);
        };
        for (int off = 0; off < 8; ++off) {
            for (bool refl : {false, true}) {
                auto inv = octagon_invariant(labeled_vertices(q, off, refl, 4));
                if (!inv) continue;
                Rational a = (*inv - Rational(1)) / Rational(4);
                if (a.sign() > 0 && a < Rational(1, 4)) add(FivefoldFamily::Kind::OctagonA, a);
                Rational b = (Rational(3) - Rational(2) * *inv) / Rational(6);
                if (b > Rational(1, 4) && b < Rational(1, 3))
                    add(FivefoldFamily::Kind::OctagonB, b);
            }
        }
        for (const auto& [kind, value] : candidates) {
            ConvexPolygon canon = kind == FivefoldFamily::Kind::OctagonA
                                      ? octagon_alpha(value).polygon
                                      : octagon_beta(value).polygon;
            if (affine_equivalence(q, canon)) return {kind, value, Point2{}};
        }
        return {};
    }

    // Decagon: normalize edge midpoints onto the canonical ones, then test the
    // recovered free vertex against the admissible region.
    std::vector<Point2> targets = canonical_decagon_midpoints();
    ConvexPolygon region = decagon_vertex_region();
    Mat2 u01 = Mat2::from_columns(targets[0].as_vec(), targets[1].as_vec());
    for (int off = 0; off < 10; ++off) {
        for (bool refl : {false, true}) {
            std::vector<Point2> w = labeled_vertices(q, off, refl, 10);
            std::vector<Point2> mids;
            mids.reserve(10);
            for (int j = 0; j < 10; ++j) mids.push_back(midpoint(w[j], w[(j + 1) % 10]));
            Mat2 basis = Mat2::from_columns(mids[0].as_vec(), mids[1].as_vec());
            if (basis.singular()) continue;
            Mat2 m = u01 * basis.inverse();
            if (m.singular()) continue;
            bool ok = true;
            for (int j = 0; j < 10 && ok; ++j) ok = m.apply(mids[j]) == targets[j];
            if (!ok) continue;
            Point2 v1 = m.apply(w[0]);
            if (point_in_polygon(region, v1).region == Region::Interior)
                return {FivefoldFamily::Kind::Decagon, Rational(0), v1};
        }
    }
    return {};
}

namespace {

struct VecLess {
    bool operator()(const Vec2& a, const Vec2& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

}  // namespace

std::optional<LatticeSearchResult> lattice_multiplicity_search(const ConvexPolygon& p_in,
                                                               int pool_bound, int pool_cap) {
    auto center = centrally_symmetric_center(p_in);
    if (!center) throw Error("lattice search needs a centrally symmetric polygon");
    ConvexPolygon p = p_in.translated(kOrigin - *center);
    Rational area = polygon_area(p);

    std::vector<Vec2> base;
    for (int i = 0; i < p.size(); ++i) {
        base.push_back(p.edge_vector(i));
        Point2 m = p.edge_midpoint(i);
        base.push_back({m.x + m.x, m.y + m.y});
    }

    std::set<Vec2, VecLess> pool_set;
    auto add = [&pool_set](Vec2 v) {
        if (v.is_zero()) return;
        if (v.x.sign() < 0 || (v.x.is_zero() && v.y.sign() < 0)) v = -v;
        pool_set.insert(v);
    };
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i; j < base.size(); ++j)
            for (int c1 = -pool_bound; c1 <= pool_bound; ++c1)
                for (int c2 = -pool_bound; c2 <= pool_bound; ++c2)
                    add(Rational(c1) * base[i] + Rational(c2) * base[j]);

    std::vector<Vec2> pool(pool_set.begin(), pool_set.end());
    std::sort(pool.begin(), pool.end(), [](const Vec2& a, const Vec2& b) {
        Rational na = a.norm_sq(), nb = b.norm_sq();
        if (na != nb) return na < nb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    if (static_cast<int>(pool.size()) > pool_cap) pool.resize(pool_cap);

    std::optional<LatticeSearchResult> best;
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i + 1; j < pool.size(); ++j) {
            Rational det = cross(pool[i], pool[j]).abs();
            if (det.is_zero()) continue;
            Rational fold = area / det;
            if (!fold.is_integer() || fold.sign() <= 0) continue;
            long k = static_cast<long>(fold.numerator().get_si());
            if (best && k >= best->fold) continue;
            Lattice2 lat(pool[i], pool[j]);
            BolleResult res = bolle_check(p, lat);
            if (res.passed() && res.fold == k) best = LatticeSearchResult{lat, k};
        }
    }
    return best;
}

}  // namespace tilekit
