#pragma once

// Rational polyhedral cones, their face lattices, quotients and class predicates.

#include "toric/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// Strongly convex full-dimensional cone in Z^n, stored by its primitive extreme
// rays and primitive facet normals.
class Cone {
public:
    Cone() = default;

    // Generators may be redundant or non-primitive; duplicates and non-extreme
    // generators are dropped, the order of the survivors is kept.
    static Cone from_rays(int n, const std::vector<IntVector>& generators, std::string name = {});
    // Cone whose dual is generated by dual_generators; rays come out sorted.
    static Cone from_dual_rays(int n, const std::vector<IntVector>& dual_generators, std::string name = {});

    int dim() const { return n_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& facet_normals() const { return facets_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    int n_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> facets_;
    std::string name_;
};

// Primitive facet normals of cone(rays) by the double description method, sorted.
std::vector<IntVector> dual_description(const std::vector<IntVector>& rays, int n);

struct Face {
    int id = 0;
    int dim = 0;
    std::vector<int> rays;              // sorted ray indices of the cone
    std::vector<int> facets;            // sorted indices of facet normals vanishing on the face
    std::vector<IntVector> span_basis;  // Z-basis of N ∩ <τ>
    std::vector<IntVector> perp_basis;  // Z-basis of M ∩ τ^⊥
};

struct FaceLattice {
    Cone cone;
    int n = 0;
    std::vector<Face> faces;                 // sorted by (dim, ray set)
    std::vector<std::vector<int>> by_dim;    // face ids of each dimension 0..n
    std::vector<std::pair<int, int>> covers; // (μ, τ) with μ ⊂ τ and d_τ = d_μ + 1
    std::vector<std::vector<int>> up;        // faces covering a face
    std::vector<std::vector<int>> down;      // faces covered by a face

    int apex() const { return by_dim[0].front(); }
    int top() const { return by_dim[static_cast<std::size_t>(n)].front(); }
    const Face& operator[](int id) const { return faces[static_cast<std::size_t>(id)]; }
    std::vector<long long> f_vector() const;
    std::optional<int> find(const std::vector<int>& rays) const;
    bool contains(int big, int small) const;
    // Faces contained in (or containing) a given face, all dimensions.
    std::vector<int> faces_below(int id) const;
    std::vector<int> faces_above(int id) const;
};

FaceLattice face_lattice(const Cone& c);

// The face as a full-dimensional cone in a Z-basis of N ∩ <τ>.
Cone intrinsic_cone(const FaceLattice& fl, int face);

// Image of the cone in N / (N ∩ <τ>).
Cone quotient_cone(const FaceLattice& fl, int face);

// Element of N ∩ <τ> mapping to the primitive generator of the ray τ/μ.
IntVector normal_step_vector(const FaceLattice& fl, int mu, int tau);

bool is_simplicial(const Cone& c);
bool is_simple_in_dim(const FaceLattice& fl, int c);
bool is_cone_over_simplicial(const FaceLattice& fl);
bool is_cone_over_simple(const FaceLattice& fl);

// Cone over {(v, 1)}; throws if the vertices do not affinely span Q^n.
Cone homogenize_polytope(const std::vector<IntVector>& vertices, std::string name = {});

std::string format_vector(const IntVector& v);

}  // namespace toric
