#pragma once

#include <optional>
#include <vector>

#include "pcoh/rational.hpp"

namespace pcoh {

/// Dense matrix over the rationals. Empty shapes (0 x n, n x 0) are legal and
/// stand for maps to or from the zero space.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<Rational> row(int i) const;
    std::vector<Rational> col(int j) const;
    bool is_zero() const;

    RatMatrix operator*(const RatMatrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& s) const;
    bool operator==(const RatMatrix& o) const = default;

    /// Rows of `top` stacked above rows of `bottom` (same column count).
    static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
    /// Columns of `left` followed by columns of `right` (same row count).
    static RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// A list of independent coordinate vectors inside an ambient space.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<std::vector<Rational>> vectors;

    int dim() const { return static_cast<int>(vectors.size()); }
    RatMatrix as_columns() const;
    RatMatrix as_rows() const;
};

struct RrefResult {
    int rank = 0;
    RatMatrix rref;
    std::vector<int> pivots;  // pivot column indices, ascending
};

/// Reduced row echelon form over the rationals. Pivot choice is the first
/// nonzero entry in column order, so output is deterministic. The forward
/// pass runs fraction-free on integer rows (Bareiss one-step updates);
/// rational normalization happens only at the end.
RrefResult rank_and_rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Basis of the null space; size cols - rank.
SubspaceBasis kernel_basis(const RatMatrix& m);

/// Basis of the column space: the columns of `m` at the pivot positions.
SubspaceBasis image_basis(const RatMatrix& m);

/// Coset representatives: vectors of `z` that extend `b` to a basis of
/// span(z). Requires span(b) within span(z) and a shared ambient dimension;
/// violations throw with the offending vector index.
SubspaceBasis quotient_basis(const SubspaceBasis& z, const SubspaceBasis& b);

/// Any particular solution of m x = v, with free variables set to zero.
/// No solution is a value, not an error.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& v);

/// True when v lies in the span of the basis vectors.
bool in_span(const SubspaceBasis& basis, const std::vector<Rational>& v);

/// Coefficients of det(t I - m), ascending in t (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const RatMatrix& m);

}  // namespace pcoh
