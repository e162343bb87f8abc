#include "tilekit/json_io.hpp"

#include "tilekit/errors.hpp"

namespace tilekit {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

json to_json(const Vec2& v) { return json::array({v.x.str(), v.y.str()}); }

json to_json(const ConvexPolygon& p) {
    json verts = json::array();
    for (const Point2& v : p.vertices()) verts.push_back(to_json(v));
    return json{{"vertices", verts}};
}

json to_json(const Lattice2& lat) {
    return json{{"basis", json::array({to_json(lat.a1()), to_json(lat.a2())})}};
}

json to_json(const MultiTilingInstance& inst) {
    return json{{"polygon", to_json(inst.polygon)},
                {"lattice", to_json(inst.lattice)},
                {"fold", inst.fold}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected rational as string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

namespace {

std::pair<Rational, Rational> coord_pair(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected [x, y] coordinate pair, got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

Point2 point_from_json(const json& j) {
    auto [x, y] = coord_pair(j);
    return {x, y};
}

Vec2 vec_from_json(const json& j) {
    auto [x, y] = coord_pair(j);
    return {x, y};
}

ConvexPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw ParseError("polygon JSON needs a 'vertices' array");
    const json& verts = j.at("vertices");
    if (!verts.is_array()) throw ParseError("polygon 'vertices' must be an array");
    std::vector<Point2> pts;
    pts.reserve(verts.size());
    for (const json& v : verts) pts.push_back(point_from_json(v));
    return ConvexPolygon(std::move(pts));
}

Lattice2 lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis"))
        throw ParseError("lattice JSON needs a 'basis' array");
    const json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != 2)
        throw ParseError("lattice 'basis' must hold two vectors");
    return Lattice2(vec_from_json(basis[0]), vec_from_json(basis[1]));
}

MultiTilingInstance instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("instance JSON must be an object");
    if (!j.contains("polygon") || !j.contains("lattice") || !j.contains("fold"))
        throw ParseError("instance JSON needs 'polygon', 'lattice' and 'fold'");
    if (!j.at("fold").is_number_integer()) throw ParseError("instance 'fold' must be an integer");
    return MultiTilingInstance(polygon_from_json(j.at("polygon")),
                               lattice_from_json(j.at("lattice")), j.at("fold").get<long>());
}

}  // namespace tilekit
