#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "syz/io.hpp"

using namespace syztest;

#ifndef SYZ_FIXTURE_DIR
#define SYZ_FIXTURE_DIR "fixtures"
#endif

namespace {
std::string fixture_path(const char* name) {
    return std::string(SYZ_FIXTURE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("shipped instance files match the built-in fixtures") {
    struct Case {
        const char* file;
        Instance builtin;
    };
    Case cases[] = {{"rahmati.inst", fixture_rahmati()},
                    {"matfac.inst", fixture_matfac()},
                    {"huneke.inst", fixture_huneke()},
                    {"shrink.inst", fixture_shrink()}};
    for (const auto& c : cases) {
        Instance loaded = load_instance(fixture_path(c.file));
        CHECK(loaded.label == c.builtin.label);
        CHECK(loaded.window == c.builtin.window);
        CHECK(loaded.ring->names() == c.builtin.ring->names());
        CHECK(loaded.ring->field() == c.builtin.ring->field());
        CHECK(loaded.ring->ideal() == c.builtin.ring->ideal());
        CHECK(loaded.module.matrix() == c.builtin.module.matrix());
        CHECK(loaded.ring->declared_min_primes() == c.builtin.ring->declared_min_primes());
    }
}

TEST_CASE("instance files round-trip") {
    Instance inst = fixture_matfac();
    nlohmann::json j = instance_to_json(inst);
    Instance back = instance_from_json(j);
    CHECK(back.label == inst.label);
    CHECK(back.window == inst.window);
    CHECK(back.module.matrix() == inst.module.matrix());
    CHECK(back.ring->ideal() == inst.ring->ideal());
    CHECK(instance_to_json(back) == j);
}

TEST_CASE("check reports round-trip through the machine format") {
    CheckReport rep = run_checks(fixture_shrink());
    nlohmann::json j = report_to_json(rep);
    CHECK(j.at("schema_version") == 1);
    CheckReport back = report_from_json(j);
    CHECK(back == rep);
}

TEST_CASE("resolution machine output round-trips") {
    Instance inst = fixture_rahmati();
    Resolution res = resolve(inst.module, 4, inst.limits);
    ResolutionData d = resolution_data(res, inst.label);
    nlohmann::json j = resolution_to_json(d);
    ResolutionData back = resolution_from_json(j);
    CHECK(back == d);
}

TEST_CASE("malformed instance files raise parse errors") {
    CHECK_THROWS_AS(load_instance("/nonexistent/file.inst"), parse_error);

    nlohmann::json j;
    j["variables"] = {"x", "y"};
    j["ideal"] = {"x + x^2"}; // inhomogeneous
    j["module"] = {{"matrix", {{"x"}}}};
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    nlohmann::json j2;
    j2["variables"] = {"x"};
    j2["ideal"] = nlohmann::json::array();
    j2["module"] = {{"matrix", {{"w"}}}};
    CHECK_THROWS_AS(instance_from_json(j2), parse_error);
}

TEST_CASE("empty-matrix instances resolve to a terminated free module") {
    nlohmann::json j;
    j["label"] = "free";
    j["field"] = 32003;
    j["variables"] = {"x", "y"};
    j["ideal"] = {"x^2", "x*y"};
    j["module"] = {{"matrix", {nlohmann::json::array()}}};
    j["options"] = {{"window", 1}};
    Instance inst = instance_from_json(j);
    Resolution res = resolve(inst.module, inst.window, inst.limits);
    CHECK(res.terminated);
    CHECK(res.betti() == std::vector<int>{1, 0});
}

TEST_CASE("environment caps parse") {
    // default when unset in test environment
    Limits lim = limits_from_env();
    CHECK(lim.pair_cap > 0);
}
