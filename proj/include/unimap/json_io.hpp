#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unimap/bijections.hpp"
#include "unimap/labelled.hpp"
#include "unimap/map.hpp"

namespace unimap {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A map row: {"n_darts", "alpha", "sigma", "root", "labels", "marks"}.
struct MapRecord {
    CombinatorialMap map;
    std::optional<std::vector<int>> labels;
    json marks;  // null when absent
};

json to_json(const MapRecord& r);
MapRecord record_from_json(const json& j);

json to_json(const LabelledUnicycle& u);
json to_json(const MarkedUnicycle& u);
json to_json(const DelayedQuadrangulation& q);
json to_json(const QuadrilateralGS& qd);

LabelledUnicycle unicycle_from_json(const json& j);
MarkedUnicycle marked_unicycle_from_json(const json& j);
DelayedQuadrangulation delayed_quad_from_json(const json& j);

}  // namespace unimap
