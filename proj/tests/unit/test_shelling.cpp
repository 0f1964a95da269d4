#include "toric/corpus.hpp"
#include "toric/shelling.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace toric;

namespace {

// Shelling condition for the edges of a polygon: each new edge meets the union
// of the earlier ones in exactly one vertex, except the last, which meets it in two.
bool polygon_order_is_shelling(const FaceLattice& fl, const std::vector<int>& order) {
    std::set<int> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& rays = fl[order[i]].rays;
        int shared = 0;
        for (int r : rays) shared += static_cast<int>(seen.count(r));
        if (i > 0 && shared != (i + 1 == order.size() ? 2 : 1)) return false;
        seen.insert(rays.begin(), rays.end());
    }
    return true;
}

}  // namespace

TEST_CASE("polygon cones: checker agrees with exhaustive enumeration") {
    for (const auto& c : fixture_corpus()) {
        if (c.dim() != 3) continue;
        CAPTURE(c.name());
        auto fl = face_lattice(c);
        std::vector<int> order = fl.by_dim[2];
        std::sort(order.begin(), order.end());
        int valid = 0;
        do {
            const bool expect = polygon_order_is_shelling(fl, order);
            CHECK(verify_shelling(fl, order) == expect);
            valid += expect ? 1 : 0;
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(valid > 0);
    }
}

TEST_CASE("two-dimensional cone") {
    Cone c = Cone::from_rays(2, {int_vector({1, 0}), int_vector({1, 3})});
    auto fl = face_lattice(c);
    auto s = shelling(fl);
    CHECK(s.order.size() == 2);
    CHECK(verify_shelling(fl, {fl.by_dim[1][1], fl.by_dim[1][0]}));
}

TEST_CASE("every order of a simplex is a shelling") {
    auto fl = face_lattice(orthant(4));
    std::vector<int> order = fl.by_dim[3];
    std::sort(order.begin(), order.end());
    do {
        CHECK(verify_shelling(fl, order));
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("opposite edges first is not a shelling of the quadric cone") {
    auto fl = face_lattice(quadric_cone());
    const auto& facets = fl.by_dim[2];
    // Find two facets sharing no ray.
    std::vector<int> order;
    for (int a : facets)
        for (int b : facets) {
            if (a >= b || !order.empty()) continue;
            std::vector<int> common;
            std::set_intersection(fl[a].rays.begin(), fl[a].rays.end(), fl[b].rays.begin(), fl[b].rays.end(),
                                  std::back_inserter(common));
            if (common.empty()) order = {a, b};
        }
    REQUIRE(order.size() == 2);
    for (int f : facets)
        if (f != order[0] && f != order[1]) order.push_back(f);
    CHECK_FALSE(verify_shelling(fl, order));
}

TEST_CASE("line shellings of the corpus come with certificates") {
    for (const auto& c : fixture_corpus()) {
        CAPTURE(c.name());
        auto fl = face_lattice(c);
        auto s = shelling(fl);
        const auto& facets = fl.by_dim[static_cast<std::size_t>(fl.n - 1)];
        CHECK(std::is_permutation(s.order.begin(), s.order.end(), facets.begin(), facets.end()));
        REQUIRE(s.certificates.size() + 1 == s.order.size());
        for (std::size_t i = 0; i < s.certificates.size(); ++i) {
            const auto& cert = s.certificates[i];
            CHECK(cert.facet == s.order[i + 1]);
            // The sub-shelling starts with the initial segment.
            REQUIRE(cert.initial_segment.size() <= cert.sub_shelling.size());
            CHECK(std::is_permutation(cert.initial_segment.begin(), cert.initial_segment.end(), cert.sub_shelling.begin()));
            // Initial segment facets lie in earlier facets.
            for (int g : cert.initial_segment) {
                bool covered = false;
                for (std::size_t k = 0; k <= i; ++k) covered = covered || fl.contains(s.order[k], g);
                CHECK(covered);
            }
        }
    }
}
