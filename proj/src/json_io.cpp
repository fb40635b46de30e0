#include "unimap/json_io.hpp"

namespace unimap {

json to_json(const MapRecord& r) {
    json j;
    j["n_darts"] = r.map.n_darts();
    j["alpha"] = r.map.alpha_perm();
    j["sigma"] = r.map.sigma_perm();
    j["root"] = r.map.root();
    j["labels"] = r.labels ? json(*r.labels) : json(nullptr);
    j["marks"] = r.marks;
    return j;
}

MapRecord record_from_json(const json& j) {
    try {
        const int n = j.at("n_darts").get<int>();
        auto alpha = j.at("alpha").get<std::vector<Dart>>();
        auto sigma = j.at("sigma").get<std::vector<Dart>>();
        if (static_cast<int>(alpha.size()) != n || static_cast<int>(sigma.size()) != n)
            throw FormatError("n_darts does not match the permutation sizes");
        MapRecord r;
        r.map = CombinatorialMap::build(std::move(alpha), std::move(sigma), j.at("root").get<Dart>());
        if (j.contains("labels") && !j["labels"].is_null()) r.labels = j["labels"].get<std::vector<int>>();
        if (j.contains("marks")) r.marks = j["marks"];
        return r;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed map JSON: ") + e.what());
    }
}

json to_json(const LabelledUnicycle& u) {
    return to_json(MapRecord{u.map, u.labels, {{"kind", "unicycle"}, {"internal_face", u.internal_face}, {"marked_dart", nullptr}}});
}

json to_json(const MarkedUnicycle& u) {
    const auto& x = u.unicycle;
    return to_json(MapRecord{x.map, x.labels,
                             {{"kind", "unicycle"}, {"internal_face", x.internal_face}, {"marked_dart", u.marked_dart()}}});
}

json to_json(const DelayedQuadrangulation& q) {
    return to_json(MapRecord{q.map, std::nullopt, {{"kind", "delayed_quad"}, {"v0", q.v0}, {"v1", q.v1}, {"delay", q.delay}}});
}

json to_json(const QuadrilateralGS& qd) {
    json marks = {{"kind", "quadrilateral"},
                  {"v_star", qd.v_star},
                  {"v_bar_star", qd.v_bar_star},
                  {"gamma", qd.gamma},
                  {"gamma_bar", qd.gamma_bar},
                  {"xi", qd.xi},
                  {"xi_bar", qd.xi_bar},
                  {"width", qd.width},
                  {"upper_area", qd.upper_area},
                  {"lower_area", qd.lower_area}};
    return to_json(MapRecord{qd.map, qd.labels, marks});
}

namespace {

const json& marks_of_kind(const MapRecord& r, const char* kind) {
    if (!r.marks.is_object() || r.marks.value("kind", "") != kind)
        throw FormatError(std::string("expected marks of kind ") + kind);
    return r.marks;
}

}  // namespace

LabelledUnicycle unicycle_from_json(const json& j) {
    MapRecord r = record_from_json(j);
    const json& m = marks_of_kind(r, "unicycle");
    if (!r.labels) throw FormatError("unicycle without labels");
    return LabelledUnicycle::make(std::move(r.map), std::move(*r.labels), m.at("internal_face").get<Face>());
}

MarkedUnicycle marked_unicycle_from_json(const json& j) {
    MapRecord r = record_from_json(j);
    const json& m = marks_of_kind(r, "unicycle");
    if (!r.labels) throw FormatError("unicycle without labels");
    if (m.at("marked_dart").is_null()) throw FormatError("unicycle has no marked dart");
    const Dart d = m["marked_dart"].get<Dart>();
    if (d != r.map.root()) throw FormatError("marked dart must be the root dart");
    return MarkedUnicycle::make(
        LabelledUnicycle::make(std::move(r.map), std::move(*r.labels), m.at("internal_face").get<Face>()));
}

DelayedQuadrangulation delayed_quad_from_json(const json& j) {
    MapRecord r = record_from_json(j);
    const json& m = marks_of_kind(r, "delayed_quad");
    return DelayedQuadrangulation::make(std::move(r.map), m.at("v0").get<Vertex>(), m.at("v1").get<Vertex>(),
                                        m.at("delay").get<int>());
}

}  // namespace unimap
