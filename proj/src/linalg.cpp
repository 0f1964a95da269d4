#include "toric/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Int>>;

void remove_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const Int* find_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// row <- fa*row - fb*pivot
SparseRow combine(const SparseRow& row, const Int& fa, const SparseRow& pivot, const Int& fb) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, fa * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -fb * pivot[j].second);
            ++j;
        } else {
            Int v = fa * row[i].second - fb * pivot[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    remove_content(out);
    return out;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
               rows.end());
    std::size_t rk = 0;
    while (!rows.empty()) {
        std::size_t p = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[p].size()) p = i;
        std::size_t pc = 0;
        for (std::size_t e = 1; e < rows[p].size(); ++e)
            if (mpz_cmpabs(rows[p][e].second.get_mpz_t(), rows[p][pc].second.get_mpz_t()) < 0) pc = e;
        SparseRow pivot = std::move(rows[p]);
        rows[p] = std::move(rows.back());
        rows.pop_back();
        const std::size_t col = pivot[pc].first;
        const Int a = pivot[pc].second;
        for (auto& r : rows) {
            const Int* b = find_entry(r, col);
            if (b == nullptr) continue;
            Int g = gcd(a, *b);
            Int fa = a / g;
            Int fb = *b / g;
            r = combine(r, fa, pivot, fb);
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
                   rows.end());
        ++rk;
    }
    return rk;
}

SparseRow sparse_from_rat_row(const RatMatrix& m, std::size_t r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) l = lcm(l, m(r, c).get_den());
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rat& x = m(r, c);
        if (sgn(x) == 0) continue;
        row.emplace_back(c, x.get_num() * (l / x.get_den()));
    }
    remove_content(row);
    return row;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && sgn(a(sel, col)) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
        Rat inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || sgn(a(r, col)) == 0) continue;
            Rat f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(sparse_from_rat_row(m, r));
    return sparse_rank(std::move(rows));
}

std::size_t rank_of_int_rows(std::vector<IntVector> rows) {
    std::vector<SparseRow> sparse;
    sparse.reserve(rows.size());
    for (auto& v : rows) {
        SparseRow row;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (sgn(v[c]) != 0) row.emplace_back(c, std::move(v[c]));
        remove_content(row);
        sparse.push_back(std::move(row));
    }
    return sparse_rank(std::move(sparse));
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    RatMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<RatVector> solve_in_span(const std::vector<RatVector>& basis, const RatVector& v) {
    const std::size_t k = basis.size();
    const std::size_t dim = v.size();
    // Columns are the basis vectors, last column is v.
    RatMatrix aug(dim, k + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis[j][i];
        aug(i, k) = v[i];
    }
    auto pivots = rref(aug);
    RatVector coeffs(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k) return std::nullopt;
        coeffs[pivots[r]] = aug(r, k);
    }
    // Free variables (dependent basis vectors) stay zero.
    return coeffs;
}

IntVector saturate_and_primitive(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

std::vector<IntVector> integer_kernel_basis(const std::vector<IntVector>& rows, std::size_t cols) {
    std::vector<IntVector> a = rows;
    // u[j] is column j of the unimodular transform.
    std::vector<IntVector> u(cols, IntVector(cols));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
    std::size_t p = 0;
    for (std::size_t r = 0; r < a.size() && p < cols; ++r) {
        if (a[r].size() != cols) throw std::invalid_argument("row length mismatch");
        std::size_t first = p;
        while (first < cols && sgn(a[r][first]) == 0) ++first;
        if (first == cols) continue;
        auto swap_cols = [&](std::size_t x, std::size_t y) {
            for (auto& row : a) std::swap(row[x], row[y]);
            std::swap(u[x], u[y]);
        };
        if (first != p) swap_cols(first, p);
        for (std::size_t c = p + 1; c < cols; ++c) {
            if (sgn(a[r][c]) == 0) continue;
            Int x = a[r][p], y = a[r][c];
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            Int xg = x / g, yg = y / g;
            for (auto& row : a) {
                Int cp = row[p], cc = row[c];
                row[p] = s * cp + t * cc;
                row[c] = -yg * cp + xg * cc;
            }
            for (std::size_t i = 0; i < cols; ++i) {
                Int cp = u[p][i], cc = u[c][i];
                u[p][i] = s * cp + t * cc;
                u[c][i] = -yg * cp + xg * cc;
            }
        }
        ++p;
    }
    std::vector<IntVector> basis(u.begin() + static_cast<std::ptrdiff_t>(p), u.end());
    // Size-reduce against earlier kernel vectors to keep entries small.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Int nj = dot(basis[j], basis[j]);
            Int q = dot(basis[i], basis[j]);
            mpq_class ratio(q, nj);
            ratio.canonicalize();
            Int m = ratio.get_num() / ratio.get_den();
            // round to nearest
            Rat rem = ratio - Rat(m);
            if (rem > Rat(1, 2)) m += 1;
            if (rem < Rat(-1, 2)) m -= 1;
            if (m != 0)
                for (std::size_t c = 0; c < cols; ++c) basis[i][c] -= m * basis[j][c];
        }
    }
    return basis;
}

IntVector unit_pairing_vector(const IntVector& w) {
    const std::size_t n = w.size();
    IntVector x(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(w[i]) == 0) continue;
        Int ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) x[j] *= s;
        x[i] = t;
        g = ng;
    }
    if (g < 0) {
        g = -g;
        for (auto& v : x) v = -v;
    }
    if (g != 1) throw std::invalid_argument("vector is not primitive");
    return x;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

IntVector clear_denominators(const RatVector& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    if (is_zero(out)) return out;
    return saturate_and_primitive(out);
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

Rat determinant(std::vector<RatVector> a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(a[sel][col]) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> lex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

WedgeBasis::WedgeBasis(std::vector<RatVector> basis, int k)
    : subspace_basis(std::move(basis)), degree(k), index(lex_subsets(static_cast<int>(subspace_basis.size()), k)) {}

RatMatrix interior_product_matrix(const WedgeBasis& source, const WedgeBasis& target, const IntVector& n) {
    const int k = source.degree;
    if (target.degree != k - 1) throw std::invalid_argument("wedge degrees must differ by one");
    RatMatrix out(target.size(), source.size());
    if (k == 0 || source.size() == 0 || target.size() == 0) return out;

    const auto& src = source.subspace_basis;
    const auto& tgt = target.subspace_basis;
    const RatVector nr = to_rat(n);

    RatVector np(src.size());
    bool all_zero = true;
    for (std::size_t s = 0; s < src.size(); ++s) {
        np[s] = dot(src[s], nr);
        if (sgn(np[s]) != 0) all_zero = false;
    }
    if (all_zero) return out;

    if (tgt.size() + 1 != src.size()) throw std::invalid_argument("target subspace does not contain image");
    for (const auto& w : tgt) {
        if (sgn(dot(w, nr)) != 0 || !solve_in_span(src, w))
            throw std::invalid_argument("target subspace does not contain image");
    }

    // Dual vectors y_t with <w_i, y_t> = δ_it, taken inside span(tgt).
    const std::size_t b = tgt.size();
    RatMatrix gram(b, b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) gram(i, j) = dot(tgt[i], tgt[j]);
    RatMatrix ginv = inverse(gram);
    const std::size_t amb = nr.size();
    std::vector<RatVector> y(b, RatVector(amb));
    for (std::size_t t = 0; t < b; ++t)
        for (std::size_t i = 0; i < b; ++i) {
            if (sgn(ginv(i, t)) == 0) continue;
            for (std::size_t c = 0; c < amb; ++c) y[t][c] += ginv(i, t) * tgt[i][c];
        }
    std::vector<RatVector> pair(src.size(), RatVector(b));
    for (std::size_t s = 0; s < src.size(); ++s)
        for (std::size_t t = 0; t < b; ++t) pair[s][t] = dot(src[s], y[t]);

    for (std::size_t col = 0; col < source.size(); ++col) {
        const auto& S = source.index[col];
        for (std::size_t row = 0; row < target.size(); ++row) {
            const auto& T = target.index[row];
            std::vector<RatVector> m(static_cast<std::size_t>(k), RatVector(static_cast<std::size_t>(k)));
            for (int a = 0; a < k; ++a) {
                const auto s = static_cast<std::size_t>(S[static_cast<std::size_t>(a)]);
                m[static_cast<std::size_t>(a)][0] = np[s];
                for (int c = 1; c < k; ++c)
                    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                        pair[s][static_cast<std::size_t>(T[static_cast<std::size_t>(c - 1)])];
            }
            out(row, col) = determinant(std::move(m));
        }
    }
    return out;
}

}  // namespace toric
