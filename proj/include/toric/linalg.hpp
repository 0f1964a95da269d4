#pragma once

// Exact integer and rational linear algebra, plus exterior-power bookkeeping.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix from_int_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& other) const;
    bool is_zero() const;
    RatMatrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Rank over Q. Rows are cleared of denominators, then reduced by sparse
// fraction-free elimination with content removal.
std::size_t rank(const RatMatrix& m);
std::size_t rank_of_int_rows(std::vector<IntVector> rows);

// Basis of the right kernel {v : m v = 0}.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Inverse of a square invertible matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

// Coordinates c with sum_i c_i basis[i] = v, if v lies in the span.
std::optional<RatVector> solve_in_span(const std::vector<RatVector>& basis, const RatVector& v);

// Divides by the gcd of the coordinates; throws std::invalid_argument on zero.
IntVector saturate_and_primitive(const IntVector& v);

// Z-basis of the lattice {x in Z^cols : A x = 0}, rows of A given as integer vectors.
std::vector<IntVector> integer_kernel_basis(const std::vector<IntVector>& rows, std::size_t cols);

// Integer x with <w, x> = 1 for a primitive w; throws if gcd(w) != 1.
IntVector unit_pairing_vector(const IntVector& w);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);
RatVector to_rat(const IntVector& v);
// Multiplies by the lcm of denominators and divides by the content.
IntVector clear_denominators(const RatVector& v);
bool is_zero(const IntVector& v);

Rat determinant(std::vector<RatVector> rows);

std::int64_t binomial(std::int64_t n, std::int64_t k);

// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> lex_subsets(int n, int k);

// Basis of Λ^k W: wedges of the chosen basis vectors of W, indexed by lex k-subsets.
struct WedgeBasis {
    std::vector<RatVector> subspace_basis;
    int degree = 0;
    std::vector<std::vector<int>> index;

    WedgeBasis() = default;
    WedgeBasis(std::vector<RatVector> basis, int k);
    std::size_t size() const { return index.size(); }
};

// Matrix of the contraction ι_n: Λ^k(source) → Λ^{k-1}(target); columns are
// source wedges, rows are target wedges. Throws std::invalid_argument
// "target subspace does not contain image" if the image is not in Λ^{k-1}(target).
RatMatrix interior_product_matrix(const WedgeBasis& source, const WedgeBasis& target, const IntVector& n);

}  // namespace toric
