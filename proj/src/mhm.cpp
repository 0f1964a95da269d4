#include "toric/mhm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

std::string to_string(AMethod m) {
    switch (m) {
        case AMethod::recursive: return "recursive";
        case AMethod::simplicial_closed_form: return "simplicial_closed_form";
        case AMethod::simple_closed_form: return "simple_closed_form";
    }
    return "unknown";
}

long long ANumbers::get(int l, int j) const {
    auto it = a.find({l, j});
    return it == a.end() ? 0 : it->second;
}

namespace {

void put(ANumbers& out, int l, int j, long long v) {
    if (v < 0) {
        std::ostringstream os;
        os << "negative multiplicity a^{" << l << "," << j << "} = " << v << " in dimension " << out.dim;
        throw std::logic_error(os.str());
    }
    if (v != 0) out.a[{l, j}] = v;
}

// (l, j) pairs allowed by the weight range: j >= 1 and l + 1 <= d - 2j.
std::vector<std::pair<int, int>> admissible(int d) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; 2 * j <= d; ++j)
        for (int l = 0; l + 1 <= d - 2 * j; ++l) out.emplace_back(l, j);
    return out;
}

void check_shape(const ANumbers& x) {
    for (const auto& [key, v] : x.a) {
        const auto [l, j] = key;
        if (j < 1 || l < 0 || l + 1 > x.dim - 2 * j) {
            std::ostringstream os;
            os << "multiplicity outside the weight range: a^{" << l << "," << j << "} = " << v << " in dimension " << x.dim;
            throw std::logic_error(os.str());
        }
    }
}

void cross_check(const ANumbers& x, const ANumbers& y, const std::string& where) {
    for (const auto& [l, j] : admissible(x.dim)) {
        if (x.undetermined.count({l, j}) || y.undetermined.count({l, j})) continue;
        if (x.get(l, j) != y.get(l, j)) {
            std::ostringstream os;
            os << where << ": " << to_string(x.method) << " gives a^{" << l << "," << j << "} = " << x.get(l, j) << " but "
               << to_string(y.method) << " gives " << y.get(l, j);
            throw std::logic_error(os.str());
        }
    }
}

}  // namespace

ANumbers a_numbers_recursive(int dim, int rays, const CoreTable& core, int face, const std::vector<ANumbers>& facet_numbers) {
    ANumbers out;
    out.dim = dim;
    out.method = AMethod::recursive;
    switch (dim) {
        case 0:
        case 1:
        case 2:
            break;
        case 3:
            put(out, 0, 1, rays - 3);
            break;
        case 4:
            put(out, 0, 1, core.at(face, 3, 1));
            put(out, 1, 1, core.at(face, 3, 2));
            break;
        case 5: {
            put(out, 0, 1, core.at(face, 4, 1));
            put(out, 1, 1, core.at(face, 4, 2));
            put(out, 2, 1, core.at(face, 4, 3));
            long long s0 = 0, s1 = 0;
            for (const auto& f : facet_numbers) {
                if (!f.undetermined.empty()) throw std::logic_error("facet multiplicities undetermined");
                s0 += f.get(0, 1);
                s1 += f.get(1, 1);
            }
            const long long r = s0 - core.at(face, 3, 1);
            out.r = r;
            put(out, 0, 2, core.at(face, 3, 2) + r - s1);
            break;
        }
        case 6:
            put(out, 0, 1, core.at(face, 5, 1));
            put(out, 1, 1, core.at(face, 5, 2));
            put(out, 2, 1, core.at(face, 5, 3));
            put(out, 3, 1, core.at(face, 5, 4));
            out.undetermined = {{0, 2}, {1, 2}};
            break;
        default:
            throw std::domain_error("recursive multiplicity method limited to dimension <= 6");
    }
    check_shape(out);
    return out;
}

ANumbers a_numbers_simplicial_closed_form(const FaceLattice& fl) {
    if (!is_cone_over_simplicial(fl)) throw std::invalid_argument("cone is not over a simplicial polytope");
    const int n = fl.n;
    ANumbers out;
    out.dim = n;
    out.method = AMethod::simplicial_closed_form;
    auto h = h_vector_simplicial(fl.f_vector(), n);
    for (int j = 1; 2 * j < n; ++j)
        put(out, n - 2 * j - 1, j, h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(j - 1)]);
    check_shape(out);
    return out;
}

ANumbers a_numbers_simple_closed_form(const FaceLattice& fl) {
    if (!is_cone_over_simple(fl)) throw std::invalid_argument("cone is not over a simple polytope");
    const int n = fl.n;
    ANumbers out;
    out.dim = n;
    out.method = AMethod::simple_closed_form;
    auto ht = h_tilde_simple(fl.f_vector(), n);
    for (int j = 1; 2 * j < n; ++j) put(out, 0, j, ht[static_cast<std::size_t>(j)] - ht[static_cast<std::size_t>(j - 1)]);
    check_shape(out);
    return out;
}

MHMDecomposition a_numbers(const FaceLattice& fl, const CoreTable& core) {
    MHMDecomposition dec;
    dec.faces.resize(fl.faces.size());
    for (const auto& face : fl.faces) {
        const int d = face.dim;
        auto& slot = dec.faces[static_cast<std::size_t>(face.id)];
        if (d <= 2) {
            slot.dim = d;
            continue;
        }
        FaceLattice own = face.id == fl.top() ? fl : face_lattice(intrinsic_cone(fl, face.id));
        std::vector<ANumbers> candidates;
        if (is_cone_over_simplicial(own)) candidates.push_back(a_numbers_simplicial_closed_form(own));
        if (is_cone_over_simple(own)) candidates.push_back(a_numbers_simple_closed_form(own));
        if (d <= 6) {
            std::vector<ANumbers> facets;
            for (int mu : fl.down[static_cast<std::size_t>(face.id)]) facets.push_back(dec.faces[static_cast<std::size_t>(mu)]);
            candidates.push_back(a_numbers_recursive(d, static_cast<int>(face.rays.size()), core, face.id, facets));
        }
        if (candidates.empty())
            throw std::domain_error("recursive multiplicity method limited to dimension <= 6 and no closed form applies");
        for (std::size_t i = 1; i < candidates.size(); ++i) cross_check(candidates[0], candidates[i], face_label(fl, face.id));
        if (face.rays.size() == static_cast<std::size_t>(d) && !candidates[0].a.empty())
            throw std::logic_error(face_label(fl, face.id) + ": simplicial face with nonzero multiplicities");
        slot = candidates[0];
    }
    return dec;
}

ANumbers a_numbers(const Cone& c) {
    FaceLattice fl = face_lattice(c);
    return a_numbers(fl, core_table(fl)).faces[static_cast<std::size_t>(fl.top())];
}

std::vector<std::vector<long long>> ext_dims_simplicial_polytope_cone(const FaceLattice& fl) {
    if (!is_cone_over_simplicial(fl)) throw std::invalid_argument("cone is not over a simplicial polytope");
    const int n = fl.n;
    auto h = h_vector_simplicial(fl.f_vector(), n);
    auto hv = [&](int i) { return h[static_cast<std::size_t>(i)]; };
    std::vector<std::vector<long long>> dims(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
    // Ω^0 = O_X is Cohen–Macaulay, so l = n contributes nothing.
    for (int l = 1; l <= n - 1; ++l) {
        if (2 * l <= n) dims[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] += hv(l) - hv(l - 1);
        if (2 * l >= n && l - 1 > 0) dims[static_cast<std::size_t>(l)][static_cast<std::size_t>(l - 1)] += hv(l - 1) - hv(l);
    }
    return dims;
}

DecompositionReport decomposition_report(const FaceLattice& fl, const ExtTable& ext, const MHMDecomposition& dec) {
    DecompositionReport rep;
    rep.n = fl.n;
    std::map<std::pair<int, int>, ReportRow> rows;  // key (l, -weight)
    auto row = [&](int l, int w) -> ReportRow& {
        auto& r = rows[{l, -w}];
        r.l = l;
        r.weight = w;
        return r;
    };
    row(0, fl.n).ic_top = true;
    int lower = 0, upper = 0;
    for (const auto& face : fl.faces) {
        const auto& an = dec.faces[static_cast<std::size_t>(face.id)];
        for (const auto& [l, j] : admissible(face.dim)) {
            const bool undetermined = an.undetermined.count({l, j}) > 0;
            const long long v = an.get(l, j);
            if (!undetermined && v == 0) continue;
            const int w = fl.n - (face.dim - 2 * j);
            Summand s{face.id, j, std::nullopt};
            if (!undetermined) s.multiplicity = v;
            row(l, w).summands.push_back(s);
            if (undetermined) {
                upper = std::max(upper, l);
            } else {
                lower = std::max(lower, l);
            }
        }
    }
    for (auto& [key, r] : rows) rep.rows.push_back(std::move(r));
    rep.implied_lcdef_lower = lower;
    rep.implied_lcdef_upper = std::max(lower, upper);
    rep.ishida_lcdef = lcdef(ext);
    rep.consistent = rep.implied_lcdef_lower <= rep.ishida_lcdef && rep.ishida_lcdef <= rep.implied_lcdef_upper;
    return rep;
}

}  // namespace toric
