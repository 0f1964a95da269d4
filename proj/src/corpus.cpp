#include "toric/corpus.hpp"

#include <stdexcept>

namespace toric {

IntVector int_vector(std::initializer_list<long> coords) {
    IntVector v;
    for (long x : coords) v.emplace_back(x);
    return v;
}

Cone orthant(int n) {
    std::vector<IntVector> rays;
    for (int i = 0; i < n; ++i) {
        IntVector e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        rays.push_back(std::move(e));
    }
    return Cone::from_rays(n, rays, "orthant" + std::to_string(n));
}

Cone quadric_cone() {
    return Cone::from_rays(3, {int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({1, 0, 1}), int_vector({0, 1, 1})},
                           "quadric");
}

namespace {

std::vector<IntVector> cross_polytope(int d) {
    std::vector<IntVector> v;
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            IntVector x(static_cast<std::size_t>(d));
            x[static_cast<std::size_t>(i)] = s;
            v.push_back(std::move(x));
        }
    return v;
}

std::vector<IntVector> cube(int d) {
    std::vector<IntVector> v;
    for (int mask = 0; mask < (1 << d); ++mask) {
        IntVector x;
        for (int i = 0; i < d; ++i) x.emplace_back((mask >> i & 1) ? -1 : 1);
        v.push_back(std::move(x));
    }
    return v;
}

std::vector<IntVector> simplex_vertices(int d) {
    std::vector<IntVector> v{IntVector(static_cast<std::size_t>(d))};
    for (int i = 0; i < d; ++i) {
        IntVector x(static_cast<std::size_t>(d));
        x[static_cast<std::size_t>(i)] = 1;
        v.push_back(std::move(x));
    }
    return v;
}

std::vector<IntVector> product(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    std::vector<IntVector> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            IntVector z = x;
            z.insert(z.end(), y.begin(), y.end());
            out.push_back(std::move(z));
        }
    return out;
}

// Pads every vertex with `extra` zeros.
std::vector<IntVector> pad(const std::vector<IntVector>& a, std::size_t extra) {
    std::vector<IntVector> out = a;
    for (auto& x : out) x.resize(x.size() + extra);
    return out;
}

// conv(P × {0} ∪ {0} × Q) for P, Q containing the origin in their interiors.
std::vector<IntVector> free_sum(const std::vector<IntVector>& p, const std::vector<IntVector>& q) {
    std::vector<IntVector> out = pad(p, q.front().size());
    for (const auto& y : q) {
        IntVector z(p.front().size());
        z.insert(z.end(), y.begin(), y.end());
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<IntVector> pyramid(const std::vector<IntVector>& p) {
    std::vector<IntVector> out = pad(p, 1);
    IntVector apex(p.front().size() + 1);
    apex.back() = 1;
    out.push_back(std::move(apex));
    return out;
}

}  // namespace

Cone octahedron_cone() { return homogenize_polytope(cross_polytope(3), "octahedron"); }

Cone cube_cone() { return homogenize_polytope(cube(3), "cube"); }

std::vector<IntVector> binomial_hypersurface_dual_generators() {
    return {int_vector({1, 0, 0, 0, 0}), int_vector({0, 1, 1, 0, 0}), int_vector({0, 0, 0, 1, 1}),
            int_vector({0, 0, 0, 0, 1}), int_vector({0, 0, 1, 1, 0}), int_vector({1, 1, 0, 0, 0})};
}

Cone binomial_hypersurface_cone() {
    return Cone::from_dual_rays(5, binomial_hypersurface_dual_generators(), "binomial_hypersurface");
}

std::vector<Cone> fixture_corpus() {
    std::vector<Cone> c;
    c.push_back(orthant(3));
    c.push_back(quadric_cone());
    c.push_back(homogenize_polytope({int_vector({1, 0}), int_vector({0, 1}), int_vector({-1, 1}), int_vector({-1, 0}),
                                     int_vector({0, -1})},
                                    "pentagon"));
    c.push_back(homogenize_polytope({int_vector({1, 0}), int_vector({0, 1}), int_vector({-1, 1}), int_vector({-1, 0}),
                                     int_vector({0, -1}), int_vector({1, -1})},
                                    "hexagon"));
    c.push_back(orthant(4));
    c.push_back(octahedron_cone());
    c.push_back(cube_cone());
    c.push_back(homogenize_polytope(pyramid(cube(2)), "square_pyramid"));
    c.push_back(homogenize_polytope(product(simplex_vertices(2), simplex_vertices(1)), "triangular_prism"));
    c.push_back(homogenize_polytope({int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({-1, -1, 0}),
                                     int_vector({0, 0, 1}), int_vector({0, 0, -1})},
                                    "triangular_bipyramid"));
    c.push_back(binomial_hypersurface_cone());
    c.push_back(homogenize_polytope(cross_polytope(4), "cross_polytope4"));
    c.push_back(homogenize_polytope(product(simplex_vertices(2), simplex_vertices(2)), "simplex2_x_simplex2"));
    c.push_back(homogenize_polytope(pyramid(cross_polytope(3)), "octahedron_pyramid"));
    c.push_back(homogenize_polytope(pyramid(cube(3)), "cube_pyramid"));
    c.push_back(homogenize_polytope(cross_polytope(5), "cross_polytope5"));
    c.push_back(homogenize_polytope(free_sum(cube(3), cube(2)), "cube_sum_square"));
    c.push_back(homogenize_polytope(pyramid(pyramid(cube(3))), "cube_double_pyramid"));
    c.push_back(homogenize_polytope(product(simplex_vertices(2), simplex_vertices(3)), "simplex2_x_simplex3"));
    return c;
}

long ConeSampler::coordinate() {
    const auto span = static_cast<std::uint64_t>(2 * box_ + 1);
    return static_cast<long>(rng_() % span) - box_;
}

Cone ConeSampler::random_cone(int n) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const int k = n + static_cast<int>(rng_() % 4);
        std::vector<IntVector> rays;
        bool zero = false;
        for (int i = 0; i < k; ++i) {
            IntVector v;
            for (int j = 0; j < n; ++j) v.emplace_back(coordinate());
            if (is_zero(v)) zero = true;
            rays.push_back(std::move(v));
        }
        if (zero) continue;
        try {
            return Cone::from_rays(n, rays, "random" + std::to_string(n));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random cone sampling did not converge");
}

Cone ConeSampler::random_simplicial_polytope_cone(int n) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const int k = n + 1 + static_cast<int>(rng_() % 3);
        std::vector<IntVector> pts;
        for (int i = 0; i < k; ++i) {
            IntVector v;
            for (int j = 0; j < n - 1; ++j) v.emplace_back(coordinate());
            pts.push_back(std::move(v));
        }
        try {
            Cone c = homogenize_polytope(pts, "random_simplicial" + std::to_string(n));
            if (c.rays().size() <= static_cast<std::size_t>(n)) continue;
            if (!is_cone_over_simplicial(face_lattice(c))) continue;
            return c;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random simplicial-polytope sampling did not converge");
}

Cone ConeSampler::random_simple_polytope_cone(int n, std::size_t max_rays) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Cone base = random_simplicial_polytope_cone(n);
        Cone c = Cone::from_dual_rays(n, base.rays(), "random_simple" + std::to_string(n));
        if (c.rays().size() > max_rays) continue;
        return c;
    }
    throw std::runtime_error("random simple-polytope sampling did not converge");
}

std::vector<Cone> seeded_corpus(std::uint64_t seed, int per_dim) {
    std::vector<Cone> out = fixture_corpus();
    ConeSampler s(seed);
    for (int n = 3; n <= 5; ++n)
        for (int i = 0; i < per_dim; ++i) {
            Cone c = s.random_cone(n);
            c.set_name("random" + std::to_string(n) + "_" + std::to_string(i));
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace toric
