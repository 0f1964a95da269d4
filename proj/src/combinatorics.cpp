#include "toric/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

long long at(const FVector& f, int i) {
    if (i < 0 || i >= static_cast<int>(f.size())) return 0;
    return f[static_cast<std::size_t>(i)];
}

// Polytope mode with f_{-1} = 1.
long long at_polytope(const FVector& f, int i) { return i == -1 ? 1 : at(f, i); }

long long sign(int e) { return (e % 2 == 0) ? 1 : -1; }

using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly t_minus_one_power(int e) {
    Poly p{1};
    for (int i = 0; i < e; ++i) p = multiply(p, Poly{-1, 1});
    return p;
}

// g and toric h of every face, indexed by face id.
void toric_vectors(const FaceLattice& fl, std::vector<Poly>& g, std::vector<Poly>& h) {
    g.assign(fl.faces.size(), {});
    h.assign(fl.faces.size(), {});
    g[static_cast<std::size_t>(fl.apex())] = {1};
    h[static_cast<std::size_t>(fl.apex())] = {1};
    for (int d = 1; d <= fl.n; ++d)
        for (int f : fl.by_dim[static_cast<std::size_t>(d)]) {
            Poly acc{0};
            for (const auto& face : fl.faces) {
                if (face.dim >= d || !fl.contains(f, face.id)) continue;
                Poly term = multiply(g[static_cast<std::size_t>(face.id)], t_minus_one_power(d - 1 - face.dim));
                if (term.size() > acc.size()) acc.resize(term.size(), 0);
                for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
            }
            while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
            const std::size_t m = static_cast<std::size_t>((d - 1) / 2);
            Poly gf;
            for (std::size_t i = 0; i <= m; ++i) {
                const long long hi = i < acc.size() ? acc[i] : 0;
                const long long hp = (i > 0 && i - 1 < acc.size()) ? acc[i - 1] : 0;
                gf.push_back(i == 0 ? hi : hi - hp);
            }
            while (gf.size() > 1 && gf.back() == 0) gf.pop_back();
            g[static_cast<std::size_t>(f)] = std::move(gf);
            h[static_cast<std::size_t>(f)] = std::move(acc);
        }
}

}  // namespace

FVector polytope_f_vector(const FVector& cone_f) {
    FVector out;
    for (std::size_t i = 1; i + 1 < cone_f.size(); ++i) out.push_back(cone_f[i]);
    return out;
}

std::vector<long long> h_vector_simplicial(const FVector& f, int n) {
    std::vector<long long> h;
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int l = j; l <= n - 1; ++l) s += sign(l - j) * binomial(l, j) * at(f, n - 1 - l);
        h.push_back(s);
    }
    return h;
}

std::vector<long long> h_tilde_simple(const FVector& f, int n) {
    std::vector<long long> h;
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int l = 0; l <= j; ++l) s += at(f, n - l) * binomial(n - 1 - l, j - l) * sign(j - l);
        h.push_back(s);
    }
    return h;
}

long long a0j_first_form(const FVector& f, int n, int j) {
    long long s = 0;
    for (int l = 0; l <= j; ++l) s += sign(l) * at(f, n - j + l) * binomial(n - j + l, l);
    return s;
}

long long a0j_second_form(const FVector& f, int n, int j) {
    long long s = 0;
    for (int l = 0; l <= j; ++l) s += sign(j - l) * at(f, n - l) * binomial(n - l, j - l);
    return s;
}

long long euler_h1_prediction(const FVector& f, int n, int j) {
    long long s = -binomial(n, j);
    for (int l = 1; l <= n - j; ++l) s += sign(l - 1) * at(f, l) * binomial(n - l, j);
    return s;
}

std::vector<long long> g_polynomial(const FaceLattice& fl) {
    std::vector<Poly> g, h;
    toric_vectors(fl, g, h);
    return g[static_cast<std::size_t>(fl.top())];
}

std::vector<long long> toric_h_polynomial(const FaceLattice& fl) {
    std::vector<Poly> g, h;
    toric_vectors(fl, g, h);
    return h[static_cast<std::size_t>(fl.top())];
}

std::vector<long long> hodge_deligne_polynomial(const FVector& f_polytope, int n) {
    std::vector<long long> c(static_cast<std::size_t>(n + 1), 0);
    for (int j = 0; j <= n; ++j) {
        const long long fj = at_polytope(f_polytope, j - 1);
        for (int p = 0; p <= n - j; ++p) c[static_cast<std::size_t>(p)] += fj * binomial(n - j, p) * sign(n - j - p);
    }
    return c;
}

std::vector<std::vector<long long>> hodge_du_bois_table(const FVector& f_polytope, int n) {
    if (n < 0) throw std::invalid_argument("negative polytope dimension");
    const auto sz = static_cast<std::size_t>(n + 1);
    std::vector<std::vector<long long>> t(sz, std::vector<long long>(sz, 0));
    for (std::size_t p = 0; p < sz; ++p) t[p][p] = 1;
    if (n < 2) return t;
    const auto top = static_cast<std::size_t>(n - 1);
    t[top][top] = at(f_polytope, 0) - n;
    for (int p = 1; p < n - 1; ++p) {
        long long s = 0;
        for (int j = 0; j <= n - p; ++j) s += at_polytope(f_polytope, j - 1) * sign(j - 1) * binomial(n - j, p);
        s += sign(n - p);
        t[static_cast<std::size_t>(p)][top] = s;
    }
    return t;
}

std::vector<long long> betti_numbers(const std::vector<std::vector<long long>>& table) {
    const std::size_t sz = table.size();
    if (sz == 0) return {};
    std::vector<long long> b(2 * sz - 1, 0);
    for (std::size_t p = 0; p < sz; ++p)
        for (std::size_t q = 0; q < sz; ++q) b[p + q] += table[p][q];
    return b;
}

}  // namespace toric
