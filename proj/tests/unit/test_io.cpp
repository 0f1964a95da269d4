#include "toric/corpus.hpp"
#include "toric/io.hpp"

#include <doctest.h>

using namespace toric;
using nlohmann::json;

TEST_CASE("three input forms") {
    auto rays = cone_from_json(json::parse(R"({"lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]]})"));
    CHECK(face_lattice(rays).f_vector() == std::vector<long long>{1, 4, 4, 1});
    auto dual = cone_from_json(json::parse(
        R"({"name": "b", "lattice_rank": 5, "dual_rays": [[1,0,0,0,0],[0,1,1,0,0],[0,0,0,1,1],[0,0,0,0,1],[0,0,1,1,0],[1,1,0,0,0]]})"));
    CHECK(dual.name() == "b");
    CHECK(face_lattice(dual).f_vector() == std::vector<long long>{1, 9, 18, 15, 6, 1});
    auto poly = cone_from_json(json::parse(R"({"lattice_rank": 2, "polytope_vertices": [[1,1],[1,-1],[-1,1],[-1,-1]]})"));
    CHECK(poly.dim() == 3);
    CHECK(face_lattice(poly).f_vector() == std::vector<long long>{1, 4, 4, 1});
}

TEST_CASE("big integers as strings") {
    auto c = cone_from_json(json::parse(R"({"lattice_rank": 2, "rays": [["1", "0"], ["123456789012345678901234567890", "1"]]})"));
    CHECK(c.rays().size() == 2);
    CHECK(int_to_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(int_to_json(Int(-4)) == -4);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(cone_from_json(json::parse(R"([1,2])")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"rays": [[1]]})")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"lattice_rank": 2})")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"lattice_rank": 2, "rays": [[1,0]], "dual_rays": [[1,0]]})")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"lattice_rank": 2, "rays": [[1,0,0]]})")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"lattice_rank": 2, "rays": [[1.5,0]]})")), InputError);
    CHECK_THROWS_AS(cone_from_json(json::parse(R"({"lattice_rank": 2, "rays": [["x",0]]})")), InputError);
    CHECK_THROWS_AS(load_cone_file("/nonexistent/cone.json"), InputError);
}

TEST_CASE("round trip through JSON") {
    Cone c = octahedron_cone();
    Cone back = cone_from_json(cone_to_json(c));
    CHECK(back.rays() == c.rays());
    CHECK(back.name() == c.name());
}
