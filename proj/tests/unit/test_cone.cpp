#include "toric/cone.hpp"
#include "toric/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace toric;

namespace {

// Facet normals by brute force: every (n-1)-subset of rays spanning a
// hyperplane that supports the cone. Uses cofactor expansion, not the
// double description code.
std::set<IntVector> brute_force_facets(const Cone& c) {
    const int n = c.dim();
    const auto& rays = c.rays();
    std::set<IntVector> out;
    for (const auto& s : lex_subsets(static_cast<int>(rays.size()), n - 1)) {
        IntVector normal;
        for (int col = 0; col < n; ++col) {
            std::vector<RatVector> minor;
            for (int r : s) {
                RatVector row;
                for (int k = 0; k < n; ++k)
                    if (k != col) row.push_back(Rat(rays[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]));
                minor.push_back(row);
            }
            Rat d = determinant(minor);
            normal.push_back(Int((col % 2 == 0 ? 1 : -1) * d.get_num()));
        }
        if (is_zero(normal)) continue;
        normal = saturate_and_primitive(normal);
        bool pos = true, neg = true;
        for (const auto& r : rays) {
            const Int v = dot(normal, r);
            if (v < 0) pos = false;
            if (v > 0) neg = false;
        }
        if (pos) out.insert(normal);
        if (neg) {
            for (auto& x : normal) x = -x;
            out.insert(normal);
        }
    }
    return out;
}

// All faces as ray sets: the full set closed under intersection with the
// ray sets of brute-force facets.
std::vector<long long> brute_force_f_vector(const Cone& c) {
    std::vector<std::set<int>> facet_rays;
    for (const auto& m : brute_force_facets(c)) {
        std::set<int> rs;
        for (std::size_t r = 0; r < c.rays().size(); ++r)
            if (dot(m, c.rays()[r]) == 0) rs.insert(static_cast<int>(r));
        facet_rays.push_back(rs);
    }
    std::set<int> all;
    for (std::size_t r = 0; r < c.rays().size(); ++r) all.insert(static_cast<int>(r));
    std::set<std::set<int>> faces{all};
    std::vector<std::set<int>> queue{all};
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (const auto& fr : facet_rays) {
            std::set<int> next;
            std::set_intersection(cur.begin(), cur.end(), fr.begin(), fr.end(), std::inserter(next, next.end()));
            if (faces.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<long long> f(static_cast<std::size_t>(c.dim() + 1), 0);
    for (const auto& rs : faces) {
        std::vector<IntVector> gens;
        for (int r : rs) gens.push_back(c.rays()[static_cast<std::size_t>(r)]);
        ++f[rank_of_int_rows(gens)];
    }
    return f;
}

bool same_set(std::vector<IntVector> a, std::vector<IntVector> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

TEST_CASE("orthant is self-dual") {
    Cone c = orthant(3);
    CHECK(same_set(c.facet_normals(), c.rays()));
    auto fl = face_lattice(c);
    CHECK(fl.f_vector() == std::vector<long long>{1, 3, 3, 1});
    CHECK(is_simplicial(c));
    for (int d = 0; d <= 3; ++d) CHECK(is_simple_in_dim(fl, d));
    CHECK(is_cone_over_simplicial(fl));
    CHECK(is_cone_over_simple(fl));
}

TEST_CASE("quadric cone facets and faces") {
    Cone c = quadric_cone();
    REQUIRE(c.facet_normals().size() == 4);
    for (const auto& m : c.facet_normals()) {
        int zeros = 0;
        for (const auto& r : c.rays()) zeros += dot(m, r) == 0 ? 1 : 0;
        CHECK(zeros == 2);
    }
    auto fl = face_lattice(c);
    CHECK(fl.f_vector() == std::vector<long long>{1, 4, 4, 1});
    CHECK(is_cone_over_simplicial(fl));
    CHECK(is_cone_over_simple(fl));
    CHECK_FALSE(is_simplicial(c));
}

TEST_CASE("binomial hypersurface cone from its dual generators") {
    Cone c = binomial_hypersurface_cone();
    CHECK(c.rays().size() == 9);
    auto fl = face_lattice(c);
    CHECK(fl.f_vector() == std::vector<long long>{1, 9, 18, 15, 6, 1});
    CHECK(is_cone_over_simple(fl));
    CHECK_FALSE(is_cone_over_simplicial(fl));
}

TEST_CASE("octahedron and cube predicates") {
    auto oct = face_lattice(octahedron_cone());
    CHECK(oct.f_vector() == std::vector<long long>{1, 6, 12, 8, 1});
    CHECK(is_cone_over_simplicial(oct));
    CHECK_FALSE(is_simplicial(oct.cone));
    auto cube = face_lattice(cube_cone());
    CHECK(cube.f_vector() == std::vector<long long>{1, 8, 12, 6, 1});
    CHECK(is_cone_over_simple(cube));
    CHECK_FALSE(is_cone_over_simplicial(cube));
    CHECK(is_simple_in_dim(cube, 1));
    CHECK_FALSE(is_simple_in_dim(cube, 0));
    // Quotient by σ itself is the zero cone.
    CHECK(is_simple_in_dim(cube, 4));
}

TEST_CASE("homogenized square is the quadric-type cone") {
    Cone c = homogenize_polytope({int_vector({1, 1}), int_vector({1, -1}), int_vector({-1, 1}), int_vector({-1, -1})});
    CHECK(face_lattice(c).f_vector() == std::vector<long long>{1, 4, 4, 1});
}

TEST_CASE("face lattice matches brute-force enumeration on the corpus") {
    for (const auto& c : fixture_corpus()) {
        CAPTURE(c.name());
        auto facets = brute_force_facets(c);
        CHECK(same_set(c.facet_normals(), std::vector<IntVector>(facets.begin(), facets.end())));
        CHECK(face_lattice(c).f_vector() == brute_force_f_vector(c));
    }
}

TEST_CASE("dualizing twice returns the rays") {
    ConeSampler s(5);
    for (int i = 0; i < 30; ++i) {
        Cone c = s.random_cone(3 + i % 3);
        auto dual = dual_description(c.rays(), c.dim());
        auto back = dual_description(dual, c.dim());
        CHECK(same_set(back, c.rays()));
    }
}

TEST_CASE("face lattices are graded and diamond-shaped") {
    ConeSampler s(9);
    std::vector<Cone> cones = fixture_corpus();
    for (int i = 0; i < 15; ++i) cones.push_back(s.random_cone(3 + i % 3));
    for (const auto& c : cones) {
        CAPTURE(c.name());
        auto fl = face_lattice(c);
        for (const auto& f : fl.faces)
            for (int g : fl.faces_above(f.id)) {
                if (fl[g].dim != f.dim + 2) continue;
                int middle = 0;
                for (int h : fl.up[static_cast<std::size_t>(f.id)])
                    if (fl.contains(g, h)) ++middle;
                CHECK(middle == 2);
            }
        long long euler = 0;
        auto fv = fl.f_vector();
        for (std::size_t d = 0; d < fv.size(); ++d) euler += (d % 2 == 0 ? 1 : -1) * fv[d];
        CHECK(euler == 0);
    }
}

TEST_CASE("simplicial predicates agree with ray counts") {
    for (const auto& c : fixture_corpus()) {
        CAPTURE(c.name());
        auto fl = face_lattice(c);
        bool every_facet_simplex = true;
        for (int f : fl.by_dim[static_cast<std::size_t>(fl.n - 1)])
            every_facet_simplex = every_facet_simplex && static_cast<int>(fl[f].rays.size()) == fl.n - 1;
        CHECK(is_cone_over_simplicial(fl) == every_facet_simplex);
        bool every_ray_simple = true;
        for (int r : fl.by_dim[1]) every_ray_simple = every_ray_simple && static_cast<int>(fl[r].facets.size()) == fl.n - 1;
        CHECK(is_cone_over_simple(fl) == every_ray_simple);
        CHECK(is_simplicial(c) == (static_cast<int>(c.rays().size()) == c.dim()));
    }
}

TEST_CASE("quotient cones") {
    auto fl = face_lattice(quadric_cone());
    Cone q = quotient_cone(fl, fl.apex());
    CHECK(face_lattice(q).f_vector() == fl.f_vector());
    for (int r : fl.by_dim[1]) {
        Cone qr = quotient_cone(fl, r);
        CHECK(qr.dim() == 2);
        CHECK(is_simplicial(qr));
    }
    for (int f : fl.by_dim[2]) {
        Cone qf = quotient_cone(fl, f);
        CHECK(qf.dim() == 1);
        CHECK(qf.rays().size() == 1);
    }
}

TEST_CASE("normal step vectors") {
    auto fl = face_lattice(quadric_cone());
    for (int r : fl.by_dim[1]) {
        const int ray = fl[r].rays.front();
        CHECK(normal_step_vector(fl, fl.apex(), r) == fl.cone.rays()[static_cast<std::size_t>(ray)]);
    }
    for (const auto& [mu, tau] : fl.covers) {
        if (fl[mu].dim == 0) continue;
        IntVector n = normal_step_vector(fl, mu, tau);
        for (const auto& u : fl[tau].perp_basis) CHECK(dot(u, n) == 0);
        // Sum of the facet normals containing μ is positive on τ \ μ.
        IntVector u(static_cast<std::size_t>(fl.n));
        for (int f : fl[mu].facets)
            for (std::size_t x = 0; x < u.size(); ++x) u[x] += fl.cone.facet_normals()[static_cast<std::size_t>(f)][x];
        CHECK(dot(u, n) > 0);
    }
    CHECK_THROWS_AS(normal_step_vector(fl, fl.apex(), fl.top()), std::invalid_argument);
}

TEST_CASE("invalid cones are rejected") {
    CHECK_THROWS_WITH_AS(Cone::from_rays(3, {int_vector({1, 0, 0}), int_vector({0, 1, 0})}),
                         "cone not full-dimensional; quotient out lineality/span first", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Cone::from_rays(2, {int_vector({1, 0}), int_vector({-1, 0}), int_vector({0, 1})}),
                         "cone contains a line", std::invalid_argument);
    CHECK_THROWS_AS(Cone::from_rays(2, {int_vector({1, 0, 0})}), std::invalid_argument);
}
