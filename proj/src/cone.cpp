#include "toric/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Int& x, const Int& y) { return cmp(x, y) < 0; });
}

struct DualRay {
    IntVector h;
    boost::dynamic_bitset<> zeros;  // processed generators with <h, g> = 0
};

}  // namespace

std::vector<IntVector> dual_description(const std::vector<IntVector>& rays, int n) {
    const std::size_t m = rays.size();
    const auto nn = static_cast<std::size_t>(n);
    for (const auto& r : rays)
        if (r.size() != nn) throw std::invalid_argument("ray length does not match lattice rank");
    if (n == 0) return {};

    // Greedy choice of n independent generators for the initial simplicial dual.
    std::vector<std::size_t> basis;
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < m && basis.size() < nn; ++i) {
        chosen.push_back(rays[i]);
        if (rank_of_int_rows(chosen) == chosen.size()) {
            basis.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (basis.size() < nn) throw std::invalid_argument("cone not full-dimensional; quotient out lineality/span first");

    RatMatrix b = RatMatrix::from_int_rows(chosen, nn);
    RatMatrix binv = inverse(b);
    std::vector<DualRay> current;
    for (std::size_t j = 0; j < nn; ++j) {
        RatVector col(nn);
        for (std::size_t i = 0; i < nn; ++i) col[i] = binv(i, j);
        DualRay d{clear_denominators(col), boost::dynamic_bitset<>(m)};
        for (std::size_t i = 0; i < nn; ++i)
            if (i != j) d.zeros.set(basis[i]);
        current.push_back(std::move(d));
    }

    std::vector<bool> in_basis(m, false);
    for (auto i : basis) in_basis[i] = true;

    for (std::size_t g = 0; g < m; ++g) {
        if (in_basis[g]) continue;
        std::vector<Int> val(current.size());
        std::vector<std::size_t> pos, neg;
        std::vector<DualRay> next;
        for (std::size_t k = 0; k < current.size(); ++k) {
            val[k] = dot(current[k].h, rays[g]);
            const int s = sgn(val[k]);
            if (s > 0) pos.push_back(k);
            if (s < 0) neg.push_back(k);
        }
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (sgn(val[k]) < 0) continue;
            DualRay d = current[k];
            if (sgn(val[k]) == 0) d.zeros.set(g);
            next.push_back(std::move(d));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                boost::dynamic_bitset<> common = current[p].zeros & current[q].zeros;
                if (common.count() + 2 < nn) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < current.size() && adjacent; ++k) {
                    if (k == p || k == q) continue;
                    if (common.is_subset_of(current[k].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector h(nn);
                for (std::size_t c = 0; c < nn; ++c) h[c] = val[p] * current[q].h[c] - val[q] * current[p].h[c];
                DualRay d{saturate_and_primitive(h), common};
                d.zeros.set(g);
                next.push_back(std::move(d));
            }
        }
        current = std::move(next);
    }

    std::vector<IntVector> normals;
    for (auto& d : current) normals.push_back(std::move(d.h));
    std::sort(normals.begin(), normals.end(), lex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (rank_of_int_rows(normals) < nn) throw std::invalid_argument("cone contains a line");
    return normals;
}

Cone Cone::from_rays(int n, const std::vector<IntVector>& generators, std::string name) {
    if (n < 0) throw std::invalid_argument("negative lattice rank");
    Cone c;
    c.n_ = n;
    c.name_ = std::move(name);
    if (n == 0) {
        if (!generators.empty()) throw std::invalid_argument("rank-0 lattice has no nonzero rays");
        return c;
    }
    std::vector<IntVector> prim;
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("ray length does not match lattice rank");
        IntVector p = saturate_and_primitive(g);
        if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(std::move(p));
    }
    c.facets_ = dual_description(prim, n);
    for (auto& g : prim) {
        std::vector<IntVector> tight;
        for (const auto& h : c.facets_)
            if (sgn(dot(h, g)) == 0) tight.push_back(h);
        if (rank_of_int_rows(tight) + 1 == static_cast<std::size_t>(n)) c.rays_.push_back(std::move(g));
    }
    return c;
}

Cone Cone::from_dual_rays(int n, const std::vector<IntVector>& dual_generators, std::string name) {
    std::vector<IntVector> rays;
    try {
        rays = dual_description(dual_generators, n);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        if (what == "cone contains a line")
            throw std::invalid_argument("cone not full-dimensional; quotient out lineality/span first");
        if (what.rfind("cone not full-dimensional", 0) == 0) throw std::invalid_argument("cone contains a line");
        throw;
    }
    return from_rays(n, rays, std::move(name));
}

std::vector<long long> FaceLattice::f_vector() const {
    std::vector<long long> f;
    for (const auto& d : by_dim) f.push_back(static_cast<long long>(d.size()));
    return f;
}

std::optional<int> FaceLattice::find(const std::vector<int>& rays) const {
    std::vector<int> key = rays;
    std::sort(key.begin(), key.end());
    for (const auto& f : faces)
        if (f.rays == key) return f.id;
    return std::nullopt;
}

bool FaceLattice::contains(int big, int small) const {
    const auto& b = faces[static_cast<std::size_t>(big)].rays;
    const auto& s = faces[static_cast<std::size_t>(small)].rays;
    return std::includes(b.begin(), b.end(), s.begin(), s.end());
}

std::vector<int> FaceLattice::faces_below(int id) const {
    std::vector<int> out;
    for (const auto& f : faces)
        if (contains(id, f.id)) out.push_back(f.id);
    return out;
}

std::vector<int> FaceLattice::faces_above(int id) const {
    std::vector<int> out;
    for (const auto& f : faces)
        if (contains(f.id, id)) out.push_back(f.id);
    return out;
}

FaceLattice face_lattice(const Cone& c) {
    FaceLattice fl;
    fl.cone = c;
    fl.n = c.dim();
    const auto& rays = c.rays();
    const auto& normals = c.facet_normals();
    const auto nn = static_cast<std::size_t>(fl.n);

    std::vector<std::vector<int>> facet_sets;
    for (const auto& h : normals) {
        std::vector<int> s;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (sgn(dot(h, rays[r])) == 0) s.push_back(static_cast<int>(r));
        facet_sets.push_back(std::move(s));
    }

    std::vector<int> all(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) all[r] = static_cast<int>(r);
    std::set<std::vector<int>> seen{all};
    std::deque<std::vector<int>> queue{all};
    while (!queue.empty()) {
        auto f = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : facet_sets) {
            std::vector<int> g;
            std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(g));
            if (g.size() == f.size()) continue;
            if (seen.insert(g).second) queue.push_back(std::move(g));
        }
    }

    std::vector<Face> faces;
    for (const auto& s : seen) {
        Face f;
        f.rays = s;
        std::vector<IntVector> gens;
        for (int r : s) gens.push_back(rays[static_cast<std::size_t>(r)]);
        f.dim = static_cast<int>(rank_of_int_rows(gens));
        for (std::size_t h = 0; h < normals.size(); ++h)
            if (std::includes(facet_sets[h].begin(), facet_sets[h].end(), s.begin(), s.end()))
                f.facets.push_back(static_cast<int>(h));
        f.perp_basis = integer_kernel_basis(gens, nn);
        f.span_basis = integer_kernel_basis(f.perp_basis, nn);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    fl.by_dim.assign(nn + 1, {});
    for (std::size_t i = 0; i < faces.size(); ++i) {
        faces[i].id = static_cast<int>(i);
        fl.by_dim[static_cast<std::size_t>(faces[i].dim)].push_back(static_cast<int>(i));
    }
    fl.faces = std::move(faces);
    fl.up.assign(fl.faces.size(), {});
    fl.down.assign(fl.faces.size(), {});
    for (int d = 1; d <= fl.n; ++d)
        for (int tau : fl.by_dim[static_cast<std::size_t>(d)])
            for (int mu : fl.by_dim[static_cast<std::size_t>(d - 1)])
                if (fl.contains(tau, mu)) {
                    fl.covers.emplace_back(mu, tau);
                    fl.up[static_cast<std::size_t>(mu)].push_back(tau);
                    fl.down[static_cast<std::size_t>(tau)].push_back(mu);
                }
    return fl;
}

namespace {

IntVector coordinates_in(const std::vector<IntVector>& basis, const IntVector& v) {
    std::vector<RatVector> b;
    for (const auto& x : basis) b.push_back(to_rat(x));
    auto c = solve_in_span(b, to_rat(v));
    if (!c) throw std::logic_error("vector not in the span of the lattice basis");
    IntVector out;
    for (const auto& x : *c) {
        if (x.get_den() != 1) throw std::logic_error("lattice basis is not saturated");
        out.push_back(x.get_num());
    }
    return out;
}

}  // namespace

Cone intrinsic_cone(const FaceLattice& fl, int face) {
    const Face& f = fl[face];
    std::vector<IntVector> gens;
    for (int r : f.rays) gens.push_back(coordinates_in(f.span_basis, fl.cone.rays()[static_cast<std::size_t>(r)]));
    return Cone::from_rays(f.dim, gens);
}

Cone quotient_cone(const FaceLattice& fl, int face) {
    const Face& f = fl[face];
    std::vector<IntVector> gens;
    for (std::size_t r = 0; r < fl.cone.rays().size(); ++r) {
        if (std::binary_search(f.rays.begin(), f.rays.end(), static_cast<int>(r))) continue;
        IntVector img;
        for (const auto& m : f.perp_basis) img.push_back(dot(m, fl.cone.rays()[r]));
        gens.push_back(std::move(img));
    }
    return Cone::from_rays(fl.n - f.dim, gens);
}

IntVector normal_step_vector(const FaceLattice& fl, int mu, int tau) {
    const Face& m = fl[mu];
    const Face& t = fl[tau];
    if (t.dim != m.dim + 1 || !fl.contains(tau, mu)) throw std::invalid_argument("face pair is not a cover");
    const auto& rays = fl.cone.rays();
    std::vector<IntVector> mu_coords;
    for (int r : m.rays) mu_coords.push_back(coordinates_in(t.span_basis, rays[static_cast<std::size_t>(r)]));
    auto w_basis = integer_kernel_basis(mu_coords, static_cast<std::size_t>(t.dim));
    if (w_basis.size() != 1) throw std::logic_error("cover pair does not cut out a rank-one quotient");
    IntVector w = w_basis.front();
    int outside = -1;
    for (int r : t.rays)
        if (!std::binary_search(m.rays.begin(), m.rays.end(), r)) {
            outside = r;
            break;
        }
    if (outside < 0) throw std::logic_error("cover pair with identical ray sets");
    if (sgn(dot(w, coordinates_in(t.span_basis, rays[static_cast<std::size_t>(outside)]))) < 0)
        for (auto& x : w) x = -x;
    IntVector x = unit_pairing_vector(w);
    IntVector n(static_cast<std::size_t>(fl.n));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t c = 0; c < n.size(); ++c) n[c] += x[i] * t.span_basis[i][c];
    return n;
}

bool is_simplicial(const Cone& c) { return c.rays().size() == static_cast<std::size_t>(c.dim()); }

bool is_simple_in_dim(const FaceLattice& fl, int c) {
    if (c < 0 || c > fl.n) return false;
    for (int id : fl.by_dim[static_cast<std::size_t>(c)])
        if (!is_simplicial(quotient_cone(fl, id))) return false;
    return true;
}

bool is_cone_over_simplicial(const FaceLattice& fl) {
    for (const auto& f : fl.faces)
        if (f.dim < fl.n && f.rays.size() != static_cast<std::size_t>(f.dim)) return false;
    return true;
}

bool is_cone_over_simple(const FaceLattice& fl) { return is_simple_in_dim(fl, 1); }

Cone homogenize_polytope(const std::vector<IntVector>& vertices, std::string name) {
    if (vertices.empty()) throw std::invalid_argument("polytope has no vertices");
    const std::size_t n = vertices.front().size();
    std::vector<IntVector> rays;
    for (const auto& v : vertices) {
        if (v.size() != n) throw std::invalid_argument("polytope vertices have mixed dimensions");
        IntVector r = v;
        r.emplace_back(1);
        rays.push_back(std::move(r));
    }
    if (rank_of_int_rows(rays) != n + 1) throw std::invalid_argument("polytope vertices are not full-dimensional");
    return Cone::from_rays(static_cast<int>(n + 1), rays, std::move(name));
}

std::string format_vector(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace toric
