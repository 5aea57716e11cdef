#pragma once

#include <gmpxx.h>
#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vncore/axioms.hpp"
#include "vncore/fixtures.hpp"
#include "vncore/specfile.hpp"

namespace vntest {

using namespace vncore;

/// Deterministic generator for property-style tests.
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    long small() { return static_cast<long>(next() % 7) - 3; }
};

inline Mat random_mat(Lcg& g, std::size_t r, std::size_t c) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(g.small());
    return m;
}

/// Independent rank oracle: clear denominators, then fraction-free Bareiss
/// elimination over the integers. Shares no code with rref().
inline std::size_t bareiss_rank(const Mat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = m.at(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class num = m.at(i, j).numerator();
            mpz_class den = m.at(i, j).denominator();
            a[i][j] = num * (lcm / den);
        }
    mpz_class prev = 1;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

/// Brute-force Hopf datum of the group algebra of (Z/2)^rank: basis indexed
/// by group elements, multiplication from the group table, group-like
/// comultiplication, inverse-permutation antipode.
inline AlgebraDatum group_algebra_datum(std::size_t rank) {
    std::size_t n = std::size_t{1} << rank;
    AlgebraDatum d;
    d.dim = n;
    d.mu = Mat::zero(n, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            d.mu.at(p ^ q, p * n + q) = Rational(1);
    d.eta = Mat::zero(n, 1);
    d.eta.at(0, 0) = Rational(1);
    Mat delta = Mat::zero(n * n, n);
    for (std::size_t s = 0; s < n; ++s) delta.at(s * n + s, s) = Rational(1);
    d.delta = delta;
    Mat eps(1, n);
    for (std::size_t s = 0; s < n; ++s) eps.at(0, s) = Rational(1);
    d.eps = eps;
    d.antipode = Mat::identity(n);  // every element is its own inverse
    d.dim_ui = Rational(1);
    return d;
}

/// Two objects x -> y with a single non-identity morphism; the smallest
/// input whose coend has a nontrivial relation. Carries a monoidal structure
/// (x the unit, y idempotent) but no duals for y, so only the algebra /
/// coalgebra side of the construction applies.
inline SpecData make_arrow() {
    SpecData spec;
    spec.name = "arrow";
    spec.description = "two objects with one non-identity morphism";
    CatPresentation& cat = spec.cat;
    cat.objects = {"x", "y"};
    cat.hom_dim = {{1, 1}, {0, 1}};
    auto one = [] {
        Mat m(1, 1);
        m.at(0, 0) = Rational(1);
        return m;
    };
    cat.comp.assign(2, std::vector<std::vector<Mat>>(2, std::vector<Mat>(2)));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                std::size_t rows = cat.hom_dim[a][c];
                std::size_t colsn = cat.hom_dim[b][c] * cat.hom_dim[a][b];
                Mat m(rows, colsn);
                if (rows == 1 && colsn == 1) m.at(0, 0) = Rational(1);
                cat.comp[a][b][c] = m;
            }
    cat.id_vec = {one(), one()};

    MonoidalData& mon = spec.mon;
    mon.unit = 0;
    mon.tensor_obj = {{0, 1}, {1, 1}};
    mon.tensor_mor.assign(
        2, std::vector<std::vector<std::vector<Mat>>>(
               2, std::vector<std::vector<Mat>>(2, std::vector<Mat>(2))));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    std::size_t rows =
                        cat.hom_dim[mon.tensor_obj[a][c]][mon.tensor_obj[b][d]];
                    std::size_t colsn = cat.hom_dim[a][b] * cat.hom_dim[c][d];
                    Mat m(rows, colsn);
                    if (rows == 1 && colsn == 1) m.at(0, 0) = Rational(1);
                    mon.tensor_mor[a][b][c][d] = m;
                }
    mon.braid.assign(2, std::vector<Mat>(2, one()));
    mon.dual_obj = {0, 1};
    mon.ev = {one(), Mat::zero(0, 1)};
    mon.coev = {one(), Mat::zero(0, 1)};

    FibreFunctor& uf = spec.functor;
    uf.dim_u = {1, 1};
    uf.mor_mat.assign(2, std::vector<std::vector<Mat>>(2));
    uf.mor_mat[0][0] = {Mat::identity(1)};
    uf.mor_mat[0][1] = {Mat::identity(1)};
    uf.mor_mat[1][1] = {Mat::identity(1)};
    uf.r.assign(2, std::vector<Mat>(2, one()));
    uf.i.assign(2, std::vector<Mat>(2, one()));
    uf.r0 = one();
    uf.i0 = one();
    uf.u = {Mat::identity(1), Mat::identity(1)};
    return spec;
}

/// One object with hom(I,I) two-dimensional (the k x k direct-sum flavour);
/// U is the two-dimensional diagonal representation.
inline SpecData make_two_dim_unit() {
    SpecData spec;
    spec.name = "two-dim-unit";
    spec.description = "one object, hom(I,I) = k x k";
    CatPresentation& cat = spec.cat;
    cat.objects = {"1"};
    cat.hom_dim = {{2}};
    Mat comp = Mat::zero(2, 4);  // pointwise product in the basis (u, v)
    comp.at(0, 0) = Rational(1);
    comp.at(1, 3) = Rational(1);
    cat.comp = {{{comp}}};
    Mat id(2, 1);
    id.at(0, 0) = Rational(1);
    id.at(1, 0) = Rational(1);
    cat.id_vec = {id};

    MonoidalData& mon = spec.mon;
    mon.unit = 0;
    mon.tensor_obj = {{0}};
    mon.tensor_mor = {{{{comp}}}};
    mon.braid = {{id}};
    mon.dual_obj = {0};
    mon.ev = {id};
    mon.coev = {id};

    FibreFunctor& uf = spec.functor;
    uf.dim_u = {2};
    Mat mu = Mat::zero(2, 2);
    mu.at(0, 0) = Rational(1);
    Mat mv = Mat::zero(2, 2);
    mv.at(1, 1) = Rational(1);
    uf.mor_mat = {{{mu, mv}}};
    Mat r = Mat::zero(2, 4);
    r.at(0, 0) = Rational(1);
    r.at(1, 3) = Rational(1);
    uf.r = {{r}};
    Mat r0(2, 1);
    r0.at(0, 0) = Rational(1);
    r0.at(1, 0) = Rational(1);
    uf.r0 = r0;
    uf.i = {{r.transpose()}};
    uf.i0 = r0.transpose();
    uf.u = {Mat::identity(2)};
    return spec;
}

/// Rescale the k-th basis element of hom(a,b) by lambda, adjusting every
/// structure table so the presentation stays equivalent: coordinates of
/// fixed morphisms divide by lambda, bilinear-map matrices pick up lambda on
/// the rescaled input slots and 1/lambda on the rescaled output slot, and
/// U of the rescaled basis element multiplies by lambda.
inline void scale_hom_basis(SpecData& spec, std::size_t a, std::size_t b,
                            std::size_t k, const Rational& lambda) {
    std::size_t n = spec.cat.size();
    Rational inv = lambda.inverse();
    auto scale_col_f = [&](Mat& m, std::size_t hab) {
        for (std::size_t col = 0; col < m.cols(); ++col)
            if (col % hab == k)
                for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, col) *= lambda;
    };
    auto scale_col_g = [&](Mat& m, std::size_t stride) {
        for (std::size_t col = 0; col < m.cols(); ++col)
            if (col / stride == k)
                for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, col) *= lambda;
    };
    auto scale_row = [&](Mat& m) {
        for (std::size_t col = 0; col < m.cols(); ++col) m.at(k, col) *= inv;
    };
    auto scale_vec = [&](Mat& v) { v.at(k, 0) *= inv; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Mat& m = spec.cat.comp[x][y][z];
                if (x == a && y == b) scale_col_f(m, spec.cat.hom_dim[a][b]);
                if (y == a && z == b) scale_col_g(m, spec.cat.hom_dim[x][y]);
                if (x == a && z == b) scale_row(m);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    Mat& m = spec.mon.tensor_mor[x][y][z][w];
                    if (x == a && y == b)
                        scale_col_g(m, spec.cat.hom_dim[z][w]);  // f-major
                    if (z == a && w == b) scale_col_f(m, spec.cat.hom_dim[z][w]);
                    if (spec.mon.tensor_obj[x][z] == a &&
                        spec.mon.tensor_obj[y][w] == b)
                        scale_row(m);
                }
    if (a == b) scale_vec(spec.cat.id_vec[a]);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (spec.mon.tensor_obj[x][y] == a && spec.mon.tensor_obj[y][x] == b)
                scale_vec(spec.mon.braid[x][y]);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t xs = spec.mon.dual_obj[x];
        if (spec.mon.tensor_obj[xs][x] == a && spec.mon.unit == b)
            scale_vec(spec.mon.ev[x]);
        if (spec.mon.unit == a && spec.mon.tensor_obj[x][xs] == b)
            scale_vec(spec.mon.coev[x]);
    }
    spec.functor.mor_mat[a][b][k] = lambda * spec.functor.mor_mat[a][b][k];
}

inline std::filesystem::path temp_file(const std::string& stem) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("vncore_test_" + std::to_string(::getpid()) + "_" + stem + "_" +
            std::to_string(counter++) + ".json");
}

}  // namespace vntest
