#include "vncore/mat.hpp"

#include <stdexcept>

namespace vncore {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Mat::first_nonzero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::col(std::size_t j) const {
    Mat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw std::invalid_argument("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_)
        throw std::invalid_argument("block out of range");
    Mat m(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix addition shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtraction shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Mat operator*(const Rational& s, Mat m) {
    for (auto& x : m.e_) x *= s;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    const Rational& bpq = b.at(p, q);
                    if (bpq.is_zero()) continue;
                    k.at(i * b.rows() + p, j * b.cols() + q) = aij * bpq;
                }
        }
    return k;
}

Mat swap_map(std::size_t dim_a, std::size_t dim_b) {
    Mat p(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            p.at(j * dim_a + i, i * dim_b + j) = Rational(1);
    return p;
}

RowEchelon rref(const Mat& m) {
    RowEchelon out{m, {}};
    Mat& a = out.reduced;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
        std::size_t sel = prow;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(sel, j), a.at(prow, j));
        Rational inv = a.at(prow, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(prow, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == prow || a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(prow, j);
        }
        out.pivot_cols.push_back(col);
        ++prow;
    }
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

Mat kernel(const Mat& m) {
    RowEchelon re = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : re.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Mat basis(m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t c = free_cols[t];
        basis.at(c, t) = Rational(-1);
        for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
            basis.at(re.pivot_cols[i], t) = re.reduced.at(i, c);
        for (std::size_t i = 0; i < m.cols(); ++i) {
            if (basis.at(i, t).is_zero()) continue;
            if (basis.at(i, t).sign() < 0)
                for (std::size_t k = 0; k < m.cols(); ++k)
                    basis.at(k, t) = -basis.at(k, t);
            break;
        }
    }
    return basis;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Mat::identity(n));
    RowEchelon re = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= re.pivot_cols.size() || re.pivot_cols[i] != i) return std::nullopt;
    return re.reduced.block(0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve shape mismatch");
    Mat aug(a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    RowEchelon re = rref(aug);
    for (std::size_t p : re.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(re.pivot_cols[i], j) = re.reduced.at(i, a.cols() + j);
    return x;
}

QuotientSpace quotient_by(std::size_t ambient_dim, const Mat& relations) {
    if (relations.cols() > 0 && relations.rows() != ambient_dim)
        throw std::invalid_argument("relations rows must equal ambient dimension");
    RowEchelon re = rref(relations.transpose());
    const std::vector<std::size_t>& pivots = re.pivot_cols;
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    QuotientSpace q;
    q.ambient = ambient_dim;
    q.dim = ambient_dim - pivots.size();
    q.proj = Mat(q.dim, ambient_dim);
    q.sect = Mat(ambient_dim, q.dim);
    std::size_t t = 0;
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        if (is_pivot[c]) continue;
        // Reduce e_c's class: subtract the echelon rows at pivot coordinates.
        q.proj.at(t, c) = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            q.proj.at(t, pivots[i]) = -re.reduced.at(i, c);
        q.sect.at(c, t) = Rational(1);
        ++t;
    }
    return q;
}

}  // namespace vncore
