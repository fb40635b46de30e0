#include <doctest.h>

#include "helpers.hpp"
#include "unimap/json_io.hpp"
#include "unimap/sampling.hpp"

using namespace unimap;

TEST_CASE("unicycle round trip") {
    for (int i = 0; i < 10; ++i) {
        RngStream rng(41, i);
        const LabelledUnicycle u = sample_unicycle(200, rng);
        const json j = to_json(u);
        const LabelledUnicycle back = unicycle_from_json(json::parse(j.dump()));
        CHECK(to_json(back).dump() == j.dump());
        CHECK(canonical_code(back) == canonical_code(u));
    }
}

TEST_CASE("marked unicycle and delayed quadrangulation round trip") {
    RngStream rng(42, 0);
    const MarkedUnicycle m = sample_marked_unicycle(100, rng);
    CHECK(to_json(marked_unicycle_from_json(to_json(m))).dump() == to_json(m).dump());
    const DelayedQuadrangulation q = sample_delayed_quadrangulation(100, rng);
    const DelayedQuadrangulation qb = delayed_quad_from_json(json::parse(to_json(q).dump()));
    CHECK(to_json(qb).dump() == to_json(q).dump());
    CHECK(canonical_code(qb) == canonical_code(q));
}

TEST_CASE("plain map record") {
    const MapRecord r{test::path_map(), std::nullopt, json()};
    const MapRecord back = record_from_json(to_json(r));
    CHECK(canonical_code(back.map) == canonical_code(r.map));
    CHECK_FALSE(back.labels.has_value());
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(record_from_json(json::parse(R"({"alpha":[1,0]})")), FormatError);
    CHECK_THROWS_AS(record_from_json(json::parse(R"({"n_darts":2,"alpha":"x","sigma":[0,1],"root":0})")), FormatError);
    CHECK_THROWS_AS(record_from_json(json::parse(R"({"n_darts":2,"alpha":[0,1],"sigma":[0,1],"root":0})")), MapError);
    CHECK_THROWS_AS(
        delayed_quad_from_json(json::parse(R"({"n_darts":2,"alpha":[1,0],"sigma":[0,1],"root":0,"labels":null})")),
        FormatError);
}
