#pragma once

// Line shellings of a cone's facets and a recursive checker of the shelling condition.

#include "toric/cone.hpp"

#include <string>
#include <vector>

namespace toric {

// For a facet μ_j (j > 1) of the order: the facets of μ_j lying in the union of
// the earlier facets, and a full shelling of μ_j that starts with them.
struct PrefixCertificate {
    int facet = 0;
    std::vector<int> initial_segment;
    std::vector<int> sub_shelling;
};

struct Shelling {
    std::vector<int> order;  // face ids of facets
    std::vector<PrefixCertificate> certificates;
    std::string perturbation;  // describes the line direction that was used
};

// Bruggesser–Mani line shelling of the cross-section by {<w, x> = const},
// w the sum of facet normals. Throws std::logic_error if the result fails verification.
Shelling shelling(const FaceLattice& fl);

// True iff the facet order satisfies the recursive shelling condition.
// On success, certificates (if non-null) receives one entry per facet after the first.
bool verify_shelling(const FaceLattice& fl, const std::vector<int>& order,
                     std::vector<PrefixCertificate>* certificates = nullptr);

}  // namespace toric
