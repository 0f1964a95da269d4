#pragma once

// Multiplicities a_λ^{l,j} of IC_{S_λ}(-j) in the weight-graded pieces of the
// trivial Hodge module, and the weight-graded report assembled from them.

#include "toric/combinatorics.hpp"
#include "toric/ishida.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toric {

enum class AMethod { recursive, simplicial_closed_form, simple_closed_form };

std::string to_string(AMethod m);

// Multiplicities of a single cone, keyed by (l, j). Missing keys are zero
// unless listed in `undetermined`.
struct ANumbers {
    int dim = 0;
    AMethod method = AMethod::recursive;
    std::map<std::pair<int, int>, long long> a;
    std::set<std::pair<int, int>> undetermined;
    std::optional<long long> r;  // intermediate rank of the dimension-5 system

    long long get(int l, int j) const;
};

struct MHMDecomposition {
    std::vector<ANumbers> faces;  // indexed by face id
};

// Recursive method from cohomology of Ish^{d-1} and Ish^{d-3} (d <= 6).
// facet_numbers are needed only in dimension 5.
ANumbers a_numbers_recursive(int dim, int rays, const CoreTable& core, int face, const std::vector<ANumbers>& facet_numbers);

ANumbers a_numbers_simplicial_closed_form(const FaceLattice& fl);
ANumbers a_numbers_simple_closed_form(const FaceLattice& fl);

// Dispatching computation for every face of the cone; closed forms are
// cross-checked against the recursive method whenever both apply.
// Throws std::logic_error when two methods disagree and std::domain_error when
// a face of dimension > 6 is in neither closed-form class.
MHMDecomposition a_numbers(const FaceLattice& fl, const CoreTable& core);
ANumbers a_numbers(const Cone& c);

// dims[l][j] = predicted dim Ext^j(Ω^{n-l}, ω) for j > 0 (column j = 0 unused).
std::vector<std::vector<long long>> ext_dims_simplicial_polytope_cone(const FaceLattice& fl);

struct Summand {
    int face = 0;
    int twist = 0;
    std::optional<long long> multiplicity;  // nullopt = undetermined
};

struct ReportRow {
    int l = 0;       // cohomological degree -l
    int weight = 0;  // n - k
    bool ic_top = false;
    std::vector<Summand> summands;
};

struct DecompositionReport {
    int n = 0;
    std::vector<ReportRow> rows;
    int implied_lcdef_lower = 0;  // largest l with a nonzero determined summand
    int implied_lcdef_upper = 0;  // largest l that could be nonempty given undetermined entries
    int ishida_lcdef = 0;
    bool consistent = true;
};

DecompositionReport decomposition_report(const FaceLattice& fl, const ExtTable& ext, const MHMDecomposition& dec);

}  // namespace toric
