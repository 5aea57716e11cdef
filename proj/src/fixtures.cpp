#include "vncore/fixtures.hpp"

#include <stdexcept>

namespace vncore {

namespace {

Mat scalar_mat(long v) {
    Mat m(1, 1);
    m.at(0, 0) = Rational(v);
    return m;
}

/// Skeleton shared by the group fixtures: objects indexed by bitmasks with
/// XOR as the tensor table, one-dimensional hom spaces on the diagonal, and
/// every structure constant equal to 1.
void fill_group_category(std::size_t n_objects,
                         const std::vector<std::string>& names,
                         CatPresentation& cat, MonoidalData& mon) {
    std::size_t n = n_objects;
    cat.objects = names;
    cat.hom_dim.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) cat.hom_dim[a][a] = 1;
    cat.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                cat.comp[a][b][c] = (a == b && b == c) ? scalar_mat(1)
                                                       : Mat::zero(
                                                             cat.hom_dim[a][c],
                                                             cat.hom_dim[b][c] *
                                                                 cat.hom_dim[a][b]);
    cat.id_vec.assign(n, scalar_mat(1));

    mon.unit = 0;
    mon.tensor_obj.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mon.tensor_obj[a][b] = a ^ b;
    mon.tensor_mor.assign(
        n, std::vector<std::vector<std::vector<Mat>>>(
               n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n))));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    mon.tensor_mor[a][b][c][d] =
                        (a == b && c == d)
                            ? scalar_mat(1)
                            : Mat::zero(cat.hom_dim[a ^ c][b ^ d],
                                        cat.hom_dim[a][b] * cat.hom_dim[c][d]);
    mon.braid.assign(n, std::vector<Mat>(n, scalar_mat(1)));
    mon.dual_obj.resize(n);
    for (std::size_t a = 0; a < n; ++a) mon.dual_obj[a] = a;  // exponent 2
    mon.ev.assign(n, scalar_mat(1));
    mon.coev.assign(n, scalar_mat(1));
}

}  // namespace

SpecData make_trivial() {
    SpecData spec;
    spec.name = "trivial";
    spec.description = "one object, every hom space and value one-dimensional";
    fill_group_category(1, {"1"}, spec.cat, spec.mon);

    FibreFunctor& uf = spec.functor;
    uf.dim_u = {1};
    uf.mor_mat = {{{Mat::identity(1)}}};
    uf.r = {{scalar_mat(1)}};
    uf.r0 = scalar_mat(1);
    uf.i = {{scalar_mat(1)}};
    uf.i0 = scalar_mat(1);
    uf.u = {Mat::identity(1)};
    return spec;
}

SpecData make_rep_group(std::size_t rank) {
    if (rank < 1 || rank > 2)
        throw std::invalid_argument("rep group fixtures cover rank 1 and 2");
    std::size_t n = std::size_t{1} << rank;
    std::vector<std::string> names =
        rank == 1 ? std::vector<std::string>{"1", "g"}
                  : std::vector<std::string>{"1", "a", "b", "ab"};

    SpecData spec;
    spec.name = rank == 1 ? "rep-c2" : "rep-c2c2";
    spec.description = rank == 1
                           ? "rational characters of the 2-element group with "
                             "the forgetful functor"
                           : "rational characters of the Klein four-group with "
                             "the forgetful functor";
    fill_group_category(n, names, spec.cat, spec.mon);

    FibreFunctor& uf = spec.functor;
    uf.dim_u.assign(n, 1);
    uf.mor_mat.assign(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t a = 0; a < n; ++a) uf.mor_mat[a][a] = {Mat::identity(1)};
    uf.r.assign(n, std::vector<Mat>(n, scalar_mat(1)));
    uf.i.assign(n, std::vector<Mat>(n, scalar_mat(1)));
    uf.r0 = scalar_mat(1);
    uf.i0 = scalar_mat(1);
    uf.u.assign(n, Mat::identity(1));
    return spec;
}

SpecData make_ho_c2() {
    SpecData spec = make_rep_group(1);
    spec.name = "ho-c2";
    spec.description =
        "separable but not strong fibre functor on the rep-c2 category; "
        "U(C) = sum over (a,b) of hom(a, C.b) with summands in lexicographic "
        "(a,b) order";

    std::size_t n = 2;
    // Summand bookkeeping: U(c) = (+)_{a,b} hom(a, c^b), nonzero exactly when
    // a = c^b; summands listed in lexicographic (a,b) order.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a == (c ^ b)) pairs[c].emplace_back(a, b);
    auto pair_index = [&](std::size_t c, std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < pairs[c].size(); ++k)
            if (pairs[c][k] == std::make_pair(a, b)) return k;
        throw std::logic_error("missing summand");
    };

    FibreFunctor& uf = spec.functor;
    uf.dim_u.assign(n, 2);
    uf.mor_mat.assign(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t a = 0; a < n; ++a) uf.mor_mat[a][a] = {Mat::identity(2)};

    // r restricts a pair of summands to the equal-twist diagonal: a summand
    // (a1,b) of U(c) with a summand (a2,b) of U(d) lands in the (c^d ^ b, b)
    // summand of U(c^d). i is its adjoint in the summand bases.
    uf.r.assign(n, std::vector<Mat>(n));
    uf.i.assign(n, std::vector<Mat>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            Mat r(2, 4);
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) {
                    auto [a1, b1] = pairs[c][p];
                    auto [a2, b2] = pairs[d][q];
                    if (b1 != b2) continue;
                    std::size_t o = pair_index(c ^ d, (c ^ d) ^ b1, b1);
                    r.at(o, p * 2 + q) = Rational(1);
                }
            uf.r[c][d] = r;
            uf.i[c][d] = r.transpose();
        }
    uf.r0 = Mat(2, 1);
    uf.r0.at(0, 0) = Rational(1);
    uf.r0.at(1, 0) = Rational(1);
    uf.i0 = uf.r0.transpose();

    // The pairing sends summand (a,b) of U(c*) to the dual coordinate of
    // summand (a*,b*) of U(c); with every object self-dual that permutation
    // is the identity.
    uf.u.assign(n, Mat::zero(2, 2));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t cs = spec.mon.dual_obj[c];
        for (std::size_t k = 0; k < 2; ++k) {
            auto [a, b] = pairs[cs][k];
            std::size_t o =
                pair_index(c, spec.mon.dual_obj[a], spec.mon.dual_obj[b]);
            uf.u[c].at(o, k) = Rational(1);
        }
    }
    return spec;
}

std::vector<std::string> fixture_names() {
    return {"trivial", "rep-c2", "rep-c2c2", "ho-c2"};
}

SpecData make_fixture(const std::string& name) {
    if (name == "trivial") return make_trivial();
    if (name == "rep-c2") return make_rep_group(1);
    if (name == "rep-c2c2") return make_rep_group(2);
    if (name == "ho-c2") return make_ho_c2();
    throw SpecError("unknown fixture name: " + name);
}

void emit_fixture(const std::string& name, const std::string& path) {
    save_spec(make_fixture(name), path);
}

}  // namespace vncore
