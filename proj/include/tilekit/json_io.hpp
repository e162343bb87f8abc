#pragma once

#include <json.hpp>

#include "tilekit/geometry.hpp"
#include "tilekit/multi_tiling.hpp"

namespace tilekit {

// Repo-wide JSON conventions: rationals are strings "p/q" (or "p"), points and
// vectors are two-element arrays, polygons are {"vertices": [...]}, lattices
// are {"basis": [[..],[..]]}, instances are {"polygon","lattice","fold"}.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Point2& p);
nlohmann::json to_json(const Vec2& v);
nlohmann::json to_json(const ConvexPolygon& p);
nlohmann::json to_json(const Lattice2& lat);
nlohmann::json to_json(const MultiTilingInstance& inst);

Rational rational_from_json(const nlohmann::json& j);
Point2 point_from_json(const nlohmann::json& j);
Vec2 vec_from_json(const nlohmann::json& j);
ConvexPolygon polygon_from_json(const nlohmann::json& j);
Lattice2 lattice_from_json(const nlohmann::json& j);
MultiTilingInstance instance_from_json(const nlohmann::json& j);

}  // namespace tilekit
