#pragma once

// Named fixture cones and seeded random cone generators.

#include "toric/cone.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace toric {

IntVector int_vector(std::initializer_list<long> coords);

Cone orthant(int n);
Cone quadric_cone();
Cone octahedron_cone();
Cone cube_cone();
// Cone over the 4-polytope with f = (9, 18, 15, 6) cut out by the binomial
// hypersurface x0 x1 x2 = y0 y1 y2, given by the generators of its dual.
Cone binomial_hypersurface_cone();
std::vector<IntVector> binomial_hypersurface_dual_generators();

// Named cones of dimensions 3..6 with at most 12 rays.
std::vector<Cone> fixture_corpus();

// Deterministic generator: coordinates are drawn as rng() mod (2*box+1) - box.
class ConeSampler {
public:
    explicit ConeSampler(std::uint64_t seed, int box = 3) : rng_(seed), box_(box) {}

    // Rays sampled in [-box, box]^n, n..n+3 of them; rejects non-pointed and
    // non-full-dimensional samples.
    Cone random_cone(int n);
    // Cone over the convex hull of random points at height 1; only cones over
    // simplicial polytopes with more than n rays are kept.
    Cone random_simplicial_polytope_cone(int n);
    // Dual of a random cone over a simplicial polytope (at most max_rays rays).
    Cone random_simple_polytope_cone(int n, std::size_t max_rays = 12);

private:
    long coordinate();
    std::mt19937_64 rng_;
    int box_;
};

// Fixtures plus `per_dim` seeded random cones for each dimension 3..5.
std::vector<Cone> seeded_corpus(std::uint64_t seed, int per_dim);

}  // namespace toric
