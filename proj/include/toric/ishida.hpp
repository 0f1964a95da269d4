#pragma once

// Ishida complexes of a cone, their cohomology, Ext tables, depth and lcdef.

#include "toric/cone.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

struct IshidaComplex {
    int n = 0;
    int l = 0;
    // Indexed by cohomological degree 0..l; degrees without faces are empty.
    std::vector<std::vector<int>> term_faces;
    std::vector<std::vector<WedgeBasis>> term_bases;
    std::vector<std::size_t> term_dims;
    // differentials[i] : C^i -> C^{i+1}, i = 0..l-1 (rows index C^{i+1}).
    std::vector<RatMatrix> differentials;
};

struct ComplexOptions {
    // Nonzero: perturb every n_{μ,τ} by a seeded integer combination of the rays of μ.
    std::uint64_t lift_seed = 0;
};

// V_0^l -> ⊕_{P_1} V_μ^l -> ... -> ⊕_{P_l} V_μ^l with V_μ^l = Λ^{l-d_μ} μ^⊥.
IshidaComplex build_degree_zero(const FaceLattice& fl, int l, const ComplexOptions& opts = {});
IshidaComplex build_degree_zero(const Cone& c, int l);

// The same construction restricted to faces containing μ, degrees d_μ..l.
IshidaComplex build_star_complex(const FaceLattice& fl, int mu, int l);

std::vector<long long> cohomology_dims(const IshidaComplex& cx);

// Degree i of the first nonzero composite d^{i+1} d^i, or -1 if d² = 0.
int first_nonzero_square(const IshidaComplex& cx);

// h[face][m][i] = dim H^i(Ish_τ^m), τ as a full-dimensional cone in N ∩ <τ>, 0 <= m <= d_τ.
struct CoreTable {
    std::vector<std::vector<std::vector<long long>>> h;
    long long at(int face, int m, int i) const;
};

CoreTable core_table(const FaceLattice& fl);

// Cohomology of the degree-u piece of Ish_X^l for u in the relative interior class of τ.
std::vector<long long> graded_piece_dims(const FaceLattice& fl, const CoreTable& core, int l, int tau);
std::vector<long long> graded_piece_dims(const Cone& c, int l, const std::vector<int>& tau_rays);

struct ExtTable {
    int n = 0;
    CoreTable core;
    // assembled[τ][k][i] = dim Ext^i(Ω^k, ω)_u for u in the class of τ, i = 0..n-k.
    std::vector<std::vector<std::vector<long long>>> assembled;
    // depth of Ω^k; maximal[k] is set when no Ext^i with i > 0 survives.
    std::vector<int> depth;
    std::vector<bool> maximal;

    long long ext(int tau, int k, int i) const;
};

ExtTable ext_table(const FaceLattice& fl);

int lcdef(const ExtTable& t);
int lcdef(const FaceLattice& fl);

// Pass/fail record with human-readable witnesses.
struct CheckReport {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    void expect(bool ok, const std::string& witness);
    void merge(const CheckReport& other);
};

// Negative control: perturbs one entry of d^i so that d^{i+1} d^i != 0.
// Returns false if the complex has no composable nonzero pair.
bool corrupt_differential(IshidaComplex& cx);

// With corrupt set, every complex is passed through corrupt_differential first.
CheckReport verify_d2(const FaceLattice& fl, bool corrupt = false);
// Cohomology is unchanged when every n_{μ,τ} is moved by elements of N ∩ <μ>.
CheckReport verify_lift_independence(const FaceLattice& fl, std::uint64_t seed);
CheckReport verify_euler_characteristic(const FaceLattice& fl);
CheckReport verify_ish_n_exact(const FaceLattice& fl, const ExtTable& t);
CheckReport verify_h0_identification(const FaceLattice& fl, const ExtTable& t);
CheckReport verify_surjectivity(const FaceLattice& fl, const ExtTable& t);
CheckReport verify_codim_vanishing(const FaceLattice& fl, const ExtTable& t);
// Exactness of the star complex of μ for l > d_μ. Throws std::invalid_argument
// when the quotient by μ is not simplicial or μ is the apex.
CheckReport verify_simplicial_link_exactness(const FaceLattice& fl, int mu);
CheckReport verify_all_link_exactness(const FaceLattice& fl);
// Dimension-5 inequalities between facet and cone cohomology of Ish^3.
CheckReport verify_dim5_inequalities(const FaceLattice& fl, const CoreTable& core);

std::string face_label(const FaceLattice& fl, int face);

}  // namespace toric
