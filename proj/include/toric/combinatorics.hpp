#pragma once

// f-vector transforms: h, h̃ and g vectors, Hodge–Deligne polynomials and
// Hodge–Du Bois tables of toric varieties of simple polytopes.

#include "toric/cone.hpp"

#include <vector>

namespace toric {

// Cone mode: f[i] = number of i-dimensional faces of an n-cone, f[0] = f[n] = 1.
// Polytope mode: f[i] = number of i-dimensional faces of P for i = 0..dim P - 1;
// f_{-1} = 1 is implicit and f_i = 0 outside the stored range.
using FVector = std::vector<long long>;

// f_l(P) = f_{l+1}(cone) for the cross-section P of an n-cone, l = 0..n-2.
FVector polytope_f_vector(const FVector& cone_f);

// h_j = sum_{l=j}^{n-1} (-1)^{l-j} C(l, j) f_{n-1-l}, j = 0..n-1.
std::vector<long long> h_vector_simplicial(const FVector& f, int n);

// h̃_j = sum_{l=0}^{j} f_{n-l} C(n-1-l, j-l) (-1)^{j-l}, j = 0..n-1.
std::vector<long long> h_tilde_simple(const FVector& f, int n);

// The two alternating-sum expressions for h̃_j - h̃_{j-1}.
long long a0j_first_form(const FVector& f, int n, int j);
long long a0j_second_form(const FVector& f, int n, int j);

// Prediction of dim H^1(Ish_σ^{n-j}) for cones over simple polytopes:
// -C(n, j) + sum_{l=1}^{n-j} (-1)^{l-1} f_l C(n-l, j).
long long euler_h1_prediction(const FVector& f, int n, int j);

// Stanley's toric g-vector of the cross-section polytope (coefficients of the
// IC stalk polynomial in q^2-steps) and the toric h-vector it truncates.
std::vector<long long> g_polynomial(const FaceLattice& fl);
std::vector<long long> toric_h_polynomial(const FaceLattice& fl);

// Coefficients c_p of (uv)^p in E(X) = sum_{j=0}^{n} f_{j-1} (uv-1)^{n-j}; polytope-mode f of an n-polytope.
std::vector<long long> hodge_deligne_polynomial(const FVector& f_polytope, int n);

// table[p][q] = h̄^{p,q}(X_P) for a simple n-polytope P.
std::vector<std::vector<long long>> hodge_du_bois_table(const FVector& f_polytope, int n);

// b_k = sum_{p+q=k} table[p][q], k = 0..2n.
std::vector<long long> betti_numbers(const std::vector<std::vector<long long>>& table);

}  // namespace toric
