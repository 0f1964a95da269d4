#include "toric/ishida.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

std::vector<RatVector> rat_rows(const std::vector<IntVector>& rows) {
    std::vector<RatVector> out;
    for (const auto& r : rows) out.push_back(to_rat(r));
    return out;
}

// Shared builder: faces passing `keep`, degrees first..l.
template <class Keep>
IshidaComplex build(const FaceLattice& fl, int l, int first, Keep keep, const ComplexOptions& opts) {
    if (l < 0 || l > fl.n) throw std::invalid_argument("degree parameter l out of range 0..n");
    IshidaComplex cx;
    cx.n = fl.n;
    cx.l = l;
    const auto len = static_cast<std::size_t>(l + 1);
    cx.term_faces.assign(len, {});
    cx.term_bases.assign(len, {});
    cx.term_dims.assign(len, 0);
    std::vector<std::vector<std::size_t>> offset(fl.faces.size());
    std::vector<std::size_t> face_offset(fl.faces.size(), 0);
    for (int i = first; i <= l; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (int mu : fl.by_dim[ui]) {
            if (!keep(mu)) continue;
            cx.term_faces[ui].push_back(mu);
            WedgeBasis b(rat_rows(fl[mu].perp_basis), l - i);
            face_offset[static_cast<std::size_t>(mu)] = cx.term_dims[ui];
            cx.term_dims[ui] += b.size();
            cx.term_bases[ui].push_back(std::move(b));
        }
    }
    std::mt19937_64 rng(opts.lift_seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < l; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        RatMatrix d(cx.term_dims[ui + 1], cx.term_dims[ui]);
        for (std::size_t a = 0; a < cx.term_faces[ui].size(); ++a) {
            const int mu = cx.term_faces[ui][a];
            for (std::size_t b = 0; b < cx.term_faces[ui + 1].size(); ++b) {
                const int tau = cx.term_faces[ui + 1][b];
                if (!fl.contains(tau, mu)) continue;
                IntVector nv = normal_step_vector(fl, mu, tau);
                if (opts.lift_seed != 0)
                    for (int r : fl[mu].rays) {
                        const int c = coef(rng);
                        const auto& ray = fl.cone.rays()[static_cast<std::size_t>(r)];
                        for (std::size_t x = 0; x < nv.size(); ++x) nv[x] += c * ray[x];
                    }
                RatMatrix block = interior_product_matrix(cx.term_bases[ui][a], cx.term_bases[ui + 1][b], nv);
                const std::size_t r0 = face_offset[static_cast<std::size_t>(tau)];
                const std::size_t c0 = face_offset[static_cast<std::size_t>(mu)];
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c) d(r0 + r, c0 + c) = block(r, c);
            }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

}  // namespace

IshidaComplex build_degree_zero(const FaceLattice& fl, int l, const ComplexOptions& opts) {
    return build(fl, l, 0, [](int) { return true; }, opts);
}

IshidaComplex build_degree_zero(const Cone& c, int l) { return build_degree_zero(face_lattice(c), l); }

IshidaComplex build_star_complex(const FaceLattice& fl, int mu, int l) {
    const int first = fl[mu].dim;
    if (l < first) throw std::invalid_argument("degree parameter below the face dimension");
    return build(fl, l, first, [&](int f) { return fl.contains(f, mu); }, ComplexOptions{});
}

std::vector<long long> cohomology_dims(const IshidaComplex& cx) {
    const std::size_t len = cx.term_dims.size();
    std::vector<long long> ranks(len, 0);  // ranks[i] = rank d^i
    for (std::size_t i = 0; i < cx.differentials.size(); ++i)
        ranks[i] = static_cast<long long>(rank(cx.differentials[i]));
    std::vector<long long> h(len);
    for (std::size_t i = 0; i < len; ++i) {
        h[i] = static_cast<long long>(cx.term_dims[i]) - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
    }
    return h;
}

int first_nonzero_square(const IshidaComplex& cx) {
    for (std::size_t i = 0; i + 1 < cx.differentials.size(); ++i) {
        const auto& a = cx.differentials[i];
        const auto& b = cx.differentials[i + 1];
        if (a.cols() == 0 || b.rows() == 0) continue;
        if (!(b * a).is_zero()) return static_cast<int>(i);
    }
    return -1;
}

long long CoreTable::at(int face, int m, int i) const {
    const auto& f = h[static_cast<std::size_t>(face)];
    if (m < 0 || m >= static_cast<int>(f.size())) return 0;
    const auto& row = f[static_cast<std::size_t>(m)];
    if (i < 0 || i >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(i)];
}

CoreTable core_table(const FaceLattice& fl) {
    CoreTable t;
    t.h.resize(fl.faces.size());
    for (const auto& f : fl.faces) {
        FaceLattice sub = face_lattice(intrinsic_cone(fl, f.id));
        auto& rows = t.h[static_cast<std::size_t>(f.id)];
        for (int m = 0; m <= f.dim; ++m) rows.push_back(cohomology_dims(build_degree_zero(sub, m)));
    }
    return t;
}

std::vector<long long> graded_piece_dims(const FaceLattice& fl, const CoreTable& core, int l, int tau) {
    if (l < 0 || l > fl.n) throw std::invalid_argument("degree parameter l out of range 0..n");
    const int n = fl.n;
    const int d = fl[tau].dim;
    std::vector<long long> dims(static_cast<std::size_t>(l + 1), 0);
    for (int j = 0; j <= n - d; ++j) {
        const int m = l - j;
        if (m < 0 || m > d) continue;
        const long long c = binomial(n - d, j);
        for (int i = 0; i <= l; ++i) dims[static_cast<std::size_t>(i)] += c * core.at(tau, m, i);
    }
    return dims;
}

std::vector<long long> graded_piece_dims(const Cone& c, int l, const std::vector<int>& tau_rays) {
    FaceLattice fl = face_lattice(c);
    auto id = fl.find(tau_rays);
    if (!id) throw std::invalid_argument("ray set is not a face of the cone");
    return graded_piece_dims(fl, core_table(fl), l, *id);
}

long long ExtTable::ext(int tau, int k, int i) const {
    const auto& row = assembled[static_cast<std::size_t>(tau)][static_cast<std::size_t>(k)];
    if (i < 0 || i >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(i)];
}

ExtTable ext_table(const FaceLattice& fl) {
    ExtTable t;
    t.n = fl.n;
    t.core = core_table(fl);
    const int n = fl.n;
    t.assembled.resize(fl.faces.size());
    for (const auto& f : fl.faces)
        for (int k = 0; k <= n; ++k) t.assembled[static_cast<std::size_t>(f.id)].push_back(graded_piece_dims(fl, t.core, n - k, f.id));
    t.depth.assign(static_cast<std::size_t>(n + 1), n);
    t.maximal.assign(static_cast<std::size_t>(n + 1), true);
    for (int k = 0; k <= n; ++k) {
        int top = 0;
        for (const auto& f : fl.faces)
            for (int i = 1; i <= n - k; ++i)
                if (t.ext(f.id, k, i) != 0) top = std::max(top, i);
        if (top > 0) {
            t.depth[static_cast<std::size_t>(k)] = n - top;
            t.maximal[static_cast<std::size_t>(k)] = false;
        }
    }
    return t;
}

int lcdef(const ExtTable& t) {
    // Smallest c with H^{j+l+1}(Ish^{n-l}) = 0 for all j >= c, l >= 0.
    int c = 0;
    for (std::size_t tau = 0; tau < t.assembled.size(); ++tau)
        for (int l = 0; l <= t.n; ++l)
            for (int i = l + 1; i <= t.n - l; ++i)
                if (t.ext(static_cast<int>(tau), l, i) != 0) c = std::max(c, i - l);
    return c;
}

int lcdef(const FaceLattice& fl) { return lcdef(ext_table(fl)); }

void CheckReport::expect(bool ok, const std::string& witness) {
    ++checks;
    if (!ok) failures.push_back(witness);
}

void CheckReport::merge(const CheckReport& other) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
}

std::string face_label(const FaceLattice& fl, int face) {
    std::ostringstream os;
    os << "face " << face << " {";
    const auto& r = fl[face].rays;
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "}";
    return os.str();
}

namespace {

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace

bool corrupt_differential(IshidaComplex& cx) {
    for (std::size_t i = 0; i + 1 < cx.differentials.size(); ++i) {
        auto& a = cx.differentials[i];
        const auto& b = cx.differentials[i + 1];
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < b.rows(); ++c)
                if (sgn(b(c, r)) != 0 && a.cols() > 0) {
                    a(r, 0) += 1;
                    return true;
                }
    }
    return false;
}

CheckReport verify_d2(const FaceLattice& fl, bool corrupt) {
    CheckReport r{"d2", 0, {}};
    for (int l = 0; l <= fl.n; ++l) {
        auto cx = build_degree_zero(fl, l);
        if (corrupt) corrupt_differential(cx);
        int bad = first_nonzero_square(cx);
        r.expect(bad < 0, "d^" + std::to_string(bad + 1) + " d^" + std::to_string(bad) + " != 0 at l=" + std::to_string(l));
    }
    return r;
}

CheckReport verify_lift_independence(const FaceLattice& fl, std::uint64_t seed) {
    CheckReport r{"lift", 0, {}};
    for (int l = 0; l <= fl.n; ++l) {
        auto a = cohomology_dims(build_degree_zero(fl, l));
        auto b = cohomology_dims(build_degree_zero(fl, l, ComplexOptions{seed + static_cast<std::uint64_t>(l)}));
        r.expect(a == b, "cohomology changes with the lift at l=" + std::to_string(l));
    }
    return r;
}

CheckReport verify_euler_characteristic(const FaceLattice& fl) {
    CheckReport r{"euler", 0, {}};
    const int n = fl.n;
    for (int l = 0; l <= n; ++l) {
        auto cx = build_degree_zero(fl, l);
        auto h = cohomology_dims(cx);
        long long lhs = 0, rhs = 0;
        bool dims_ok = true;
        for (int i = 0; i <= l; ++i) {
            const long long expected = static_cast<long long>(fl.by_dim[static_cast<std::size_t>(i)].size()) * binomial(n - i, l - i);
            if (static_cast<long long>(cx.term_dims[static_cast<std::size_t>(i)]) != expected) dims_ok = false;
            const long long sign = (i % 2 == 0) ? 1 : -1;
            lhs += sign * h[static_cast<std::size_t>(i)];
            rhs += sign * expected;
        }
        r.expect(dims_ok, "term dimensions differ from face counts at l=" + std::to_string(l));
        r.expect(lhs == rhs, "Euler characteristic mismatch at l=" + std::to_string(l));
    }
    return r;
}

CheckReport verify_ish_n_exact(const FaceLattice& fl, const ExtTable& t) {
    CheckReport r{"ish_n", 0, {}};
    const int n = fl.n;
    if (n >= 1) {
        auto h = cohomology_dims(build_degree_zero(fl, n));
        r.expect(std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; }),
                 "degree-zero Ish^n not exact: h=" + join(h));
    }
    for (const auto& f : fl.faces) {
        const auto& dims = t.assembled[static_cast<std::size_t>(f.id)][0];
        bool ok = true;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const long long expected = (i == 0) ? binomial(n - f.dim, n) : 0;
            if (dims[i] != expected) ok = false;
        }
        r.expect(ok, face_label(fl, f.id) + ": graded piece of Ish^n has dims " + join(dims));
    }
    return r;
}

CheckReport verify_h0_identification(const FaceLattice& fl, const ExtTable& t) {
    CheckReport r{"h0", 0, {}};
    const int n = fl.n;
    for (const auto& f : fl.faces)
        for (int k = 0; k <= n; ++k) {
            const int l = n - k;
            r.expect(t.ext(f.id, k, 0) == binomial(n - f.dim, l),
                     face_label(fl, f.id) + ": H^0 of Ish^" + std::to_string(l) + " is " + std::to_string(t.ext(f.id, k, 0)));
        }
    return r;
}

CheckReport verify_surjectivity(const FaceLattice& fl, const ExtTable& t) {
    CheckReport r{"surjectivity", 0, {}};
    const int n = fl.n;
    for (int k = 0; 2 * k <= n; ++k)
        for (const auto& f : fl.faces)
            r.expect(t.ext(f.id, k, n - k) == 0, face_label(fl, f.id) + ": top cohomology of Ish^" + std::to_string(n - k) +
                                                     " is " + std::to_string(t.ext(f.id, k, n - k)));
    return r;
}

CheckReport verify_codim_vanishing(const FaceLattice& fl, const ExtTable& t) {
    CheckReport r{"codim", 0, {}};
    const int n = fl.n;
    for (int c = 0; c <= n; ++c) {
        if (!is_simple_in_dim(fl, c)) continue;
        for (const auto& f : fl.faces)
            for (int k = 0; k <= n; ++k)
                for (int i = c + 1; i <= n - k; ++i)
                    r.expect(t.ext(f.id, k, i) == 0, face_label(fl, f.id) + ": simple in dim " + std::to_string(c) +
                                                         " but Ext^" + std::to_string(i) + "(Omega^" + std::to_string(k) +
                                                         ") != 0");
    }
    return r;
}

CheckReport verify_simplicial_link_exactness(const FaceLattice& fl, int mu) {
    const Face& m = fl[mu];
    if (m.dim == 0 || !is_simplicial(quotient_cone(fl, mu)))
        throw std::invalid_argument("hypothesis not met: quotient by the face is not simplicial or the face is the apex");
    CheckReport r{"link", 0, {}};
    for (int l = m.dim + 1; l <= fl.n; ++l) {
        auto h = cohomology_dims(build_star_complex(fl, mu, l));
        r.expect(std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; }),
                 face_label(fl, mu) + ": star complex at l=" + std::to_string(l) + " has cohomology " + join(h));
    }
    return r;
}

CheckReport verify_all_link_exactness(const FaceLattice& fl) {
    CheckReport r{"link", 0, {}};
    for (const auto& f : fl.faces) {
        if (f.dim == 0 || !is_simplicial(quotient_cone(fl, f.id))) continue;
        auto sub = verify_simplicial_link_exactness(fl, f.id);
        r.checks += sub.checks;
        for (const auto& w : sub.failures) r.failures.push_back(w);
    }
    return r;
}

CheckReport verify_dim5_inequalities(const FaceLattice& fl, const CoreTable& core) {
    CheckReport r{"inequalities", 0, {}};
    if (fl.n != 5) return r;
    long long s1 = 0, s2 = 0;
    for (int lambda : fl.by_dim[4]) {
        s1 += core.at(lambda, 3, 1);
        s2 += core.at(lambda, 3, 2);
    }
    const int top = fl.top();
    r.expect(s1 >= core.at(top, 3, 1), "sum over facets of h^1(Ish^3) = " + std::to_string(s1) + " < h^1(Ish^3) = " +
                                           std::to_string(core.at(top, 3, 1)));
    r.expect(s2 <= core.at(top, 3, 2), "sum over facets of h^2(Ish^3) = " + std::to_string(s2) + " > h^2(Ish^3) = " +
                                           std::to_string(core.at(top, 3, 2)));
    return r;
}

}  // namespace toric
