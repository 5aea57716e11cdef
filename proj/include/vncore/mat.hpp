#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vncore/rational.hpp"

namespace vncore {

/// Dense row-major matrix of exact rationals. Zero-row/zero-column shapes are
/// legal and show up routinely (empty relation sets, zero hom spaces).
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    /// Row-major first nonzero entry, the deterministic witness coordinate.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    Mat transpose() const;
    Mat col(std::size_t j) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& m);
    Mat block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Rational& s, Mat m);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

/// Kronecker product with (a otimes b)[(i*b.rows+k),(j*b.cols+l)] = a[i,j]*b[k,l].
Mat kron(const Mat& a, const Mat& b);

/// Permutation matrix sending e_i otimes e_j to e_j otimes e_i for
/// i < dim_a, j < dim_b; satisfies swap * kron(x, y) = kron(y, x).
Mat swap_map(std::size_t dim_a, std::size_t dim_b);

struct RowEchelon {
    Mat reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with the leftmost-nonzero pivot rule.
RowEchelon rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Null-space basis as columns. Each column is the special solution of one
/// free column, sign-fixed so its topmost nonzero entry is positive.
Mat kernel(const Mat& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

/// One exact solution of a*x = b (free variables set to zero), or nullopt if
/// the system is inconsistent. b may have several columns.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// A linear quotient V -> V/W presented by a projection and a chosen section:
/// proj * sect = identity, proj vanishes on W.
struct QuotientSpace {
    std::size_t ambient = 0;
    std::size_t dim = 0;
    Mat proj;  // dim x ambient
    Mat sect;  // ambient x dim, columns are standard basis vectors
};

/// Quotient of k^ambient by the column span of `relations`.
QuotientSpace quotient_by(std::size_t ambient_dim, const Mat& relations);

}  // namespace vncore
