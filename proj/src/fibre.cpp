#include "vncore/fibre.hpp"

#include <map>

namespace vncore {

namespace {

Mat basis_vec(std::size_t dim, std::size_t k) {
    Mat v = Mat::zero(dim, 1);
    v.at(k, 0) = Rational(1);
    return v;
}

}  // namespace

void check_structure(const CatPresentation& cat, const MonoidalData& mon,
                     const FibreFunctor& uf) {
    std::size_t n = cat.size();
    if (uf.dim_u.size() != n) throw SpecError("dim_U table size mismatch");
    if (uf.dim_u[mon.unit] == 0)
        throw SpecError("dim U(I) = 0 is rejected (unit value must be nonzero)");
    if (uf.mor_mat.size() != n) throw SpecError("mor_mat table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (uf.mor_mat[a].size() != n) throw SpecError("mor_mat table size mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            if (uf.mor_mat[a][b].size() != cat.hom_dim[a][b])
                throw SpecError("mor_mat basis count mismatch at hom(" +
                                cat.objects[a] + "," + cat.objects[b] + ")");
            for (const Mat& m : uf.mor_mat[a][b])
                if (m.rows() != uf.dim_u[b] || m.cols() != uf.dim_u[a])
                    throw SpecError("mor_mat shape mismatch at hom(" +
                                    cat.objects[a] + "," + cat.objects[b] + ")");
        }
    }
    if (uf.r.size() != n || uf.i.size() != n)
        throw SpecError("r/i table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (uf.r[a].size() != n || uf.i[a].size() != n)
            throw SpecError("r/i table size mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b];
            if (uf.r[a][b].rows() != uf.dim_u[ab] ||
                uf.r[a][b].cols() != uf.dim_u[a] * uf.dim_u[b])
                throw SpecError("r shape mismatch at (" + cat.objects[a] + "," +
                                cat.objects[b] + ")");
            if (uf.i[a][b].rows() != uf.dim_u[a] * uf.dim_u[b] ||
                uf.i[a][b].cols() != uf.dim_u[ab])
                throw SpecError("i shape mismatch at (" + cat.objects[a] + "," +
                                cat.objects[b] + ")");
        }
    }
    if (uf.r0.rows() != uf.dim_u[mon.unit] || uf.r0.cols() != 1)
        throw SpecError("r0 shape mismatch");
    if (uf.i0.rows() != 1 || uf.i0.cols() != uf.dim_u[mon.unit])
        throw SpecError("i0 shape mismatch");
    if (uf.u.size() != n) throw SpecError("u table size mismatch");
    for (std::size_t a = 0; a < n; ++a)
        if (uf.u[a].rows() != uf.dim_u[a] ||
            uf.u[a].cols() != uf.dim_u[mon.dual_obj[a]])
            throw SpecError("u shape mismatch at " + cat.objects[a]);
}

Mat apply_functor(const CatPresentation& cat, const FibreFunctor& uf,
                  std::size_t a, std::size_t b, const Mat& coords) {
    if (coords.rows() != cat.hom_dim[a][b] || coords.cols() != 1)
        throw SpecError("morphism coordinate shape mismatch");
    Mat out = Mat::zero(uf.dim_u[b], uf.dim_u[a]);
    for (std::size_t k = 0; k < coords.rows(); ++k) {
        if (coords.at(k, 0).is_zero()) continue;
        out += coords.at(k, 0) * uf.mor_mat[a][b][k];
    }
    return out;
}

Mat coeval_vec(std::size_t dim) {
    Mat v = Mat::zero(dim * dim, 1);
    for (std::size_t k = 0; k < dim; ++k) v.at(k * dim + k, 0) = Rational(1);
    return v;
}

Mat eval_row(std::size_t dim) {
    Mat v = Mat::zero(1, dim * dim);
    for (std::size_t k = 0; k < dim; ++k) v.at(0, k * dim + k) = Rational(1);
    return v;
}

ValidationReport validate_functor(const CatPresentation& cat,
                                  const MonoidalData& mon,
                                  const FibreFunctor& uf) {
    check_structure(cat, mon, uf);
    ValidationReport rep{"functor_laws", {}};
    std::size_t n = cat.size();

    for (std::size_t a = 0; a < n; ++a)
        if (apply_functor(cat, uf, a, a, cat.id_vec[a]) !=
            Mat::identity(uf.dim_u[a]))
            rep.failures.push_back("U(id) at " + cat.objects[a]);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t hab = cat.hom_dim[a][b], hbc = cat.hom_dim[b][c];
                for (std::size_t kf = 0; kf < hab; ++kf)
                    for (std::size_t kg = 0; kg < hbc; ++kg) {
                        Mat f = basis_vec(hab, kf), g = basis_vec(hbc, kg);
                        Mat lhs = apply_functor(cat, uf, a, c,
                                                compose_mor(cat, a, b, c, g, f));
                        Mat rhs = apply_functor(cat, uf, b, c, g) *
                                  apply_functor(cat, uf, a, b, f);
                        if (lhs != rhs)
                            rep.failures.push_back(
                                "U(g.f) != U(g)U(f) at hom(" + cat.objects[a] +
                                "," + cat.objects[b] + ")[" + std::to_string(kf) +
                                "], hom(" + cat.objects[b] + "," + cat.objects[c] +
                                ")[" + std::to_string(kg) + "]");
                    }
            }

    // naturality of r and i in both arguments
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t ap = 0; ap < n; ++ap)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t bp = 0; bp < n; ++bp) {
                    std::size_t haa = cat.hom_dim[a][ap], hbb = cat.hom_dim[b][bp];
                    if (haa * hbb == 0) continue;
                    std::size_t ab = mon.tensor_obj[a][b];
                    std::size_t apbp = mon.tensor_obj[ap][bp];
                    for (std::size_t kf = 0; kf < haa; ++kf)
                        for (std::size_t kg = 0; kg < hbb; ++kg) {
                            Mat f = basis_vec(haa, kf), g = basis_vec(hbb, kg);
                            Mat ufg = apply_functor(
                                cat, uf, ab, apbp,
                                tensor_mor_apply(cat, mon, a, ap, b, bp, f, g));
                            Mat ufug = kron(apply_functor(cat, uf, a, ap, f),
                                            apply_functor(cat, uf, b, bp, g));
                            if (ufg * uf.r[a][b] != uf.r[ap][bp] * ufug)
                                rep.failures.push_back(
                                    "r naturality at (" + cat.objects[a] + "->" +
                                    cat.objects[ap] + ", " + cat.objects[b] +
                                    "->" + cat.objects[bp] + ")");
                            if (ufug * uf.i[a][b] != uf.i[ap][bp] * ufg)
                                rep.failures.push_back(
                                    "i naturality at (" + cat.objects[a] + "->" +
                                    cat.objects[ap] + ", " + cat.objects[b] +
                                    "->" + cat.objects[bp] + ")");
                        }
                }

    // monoidal coherence of (r, r0), comonoidal coherence of (i, i0)
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t ab = mon.tensor_obj[a][b];
                std::size_t bc = mon.tensor_obj[b][c];
                Mat lhs = uf.r[ab][c] * kron(uf.r[a][b], Mat::identity(uf.dim_u[c]));
                Mat rhs = uf.r[a][bc] * kron(Mat::identity(uf.dim_u[a]), uf.r[b][c]);
                if (lhs != rhs)
                    rep.failures.push_back("r coherence at (" + cat.objects[a] +
                                           "," + cat.objects[b] + "," +
                                           cat.objects[c] + ")");
                Mat li = kron(uf.i[a][b], Mat::identity(uf.dim_u[c])) * uf.i[ab][c];
                Mat ri = kron(Mat::identity(uf.dim_u[a]), uf.i[b][c]) * uf.i[a][bc];
                if (li != ri)
                    rep.failures.push_back("i coherence at (" + cat.objects[a] +
                                           "," + cat.objects[b] + "," +
                                           cat.objects[c] + ")");
            }
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ua = uf.dim_u[a];
        if (uf.r[mon.unit][a] * kron(uf.r0, Mat::identity(ua)) != Mat::identity(ua))
            rep.failures.push_back("r unit coherence (left) at " + cat.objects[a]);
        if (uf.r[a][mon.unit] * kron(Mat::identity(ua), uf.r0) != Mat::identity(ua))
            rep.failures.push_back("r unit coherence (right) at " + cat.objects[a]);
        if (kron(uf.i0, Mat::identity(ua)) * uf.i[mon.unit][a] != Mat::identity(ua))
            rep.failures.push_back("i counit coherence (left) at " + cat.objects[a]);
        if (kron(Mat::identity(ua), uf.i0) * uf.i[a][mon.unit] != Mat::identity(ua))
            rep.failures.push_back("i counit coherence (right) at " + cat.objects[a]);
    }

    // pairings: invertible and natural
    for (std::size_t a = 0; a < n; ++a)
        if (!inverse(uf.u[a]))
            rep.failures.push_back("u not invertible at " + cat.objects[a]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t hab = cat.hom_dim[a][b];
            for (std::size_t k = 0; k < hab; ++k) {
                Mat f = basis_vec(hab, k);
                Mat fstar = dual_morphism(cat, mon, a, b, f);
                Mat lhs = uf.u[a] * apply_functor(cat, uf, mon.dual_obj[b],
                                                  mon.dual_obj[a], fstar);
                Mat rhs = apply_functor(cat, uf, a, b, f).transpose() * uf.u[b];
                if (lhs != rhs)
                    rep.failures.push_back("u naturality at hom(" + cat.objects[a] +
                                           "," + cat.objects[b] + ")[" +
                                           std::to_string(k) + "]");
            }
        }

    return rep;
}

CheckReport check_separability(const CatPresentation& cat,
                               const MonoidalData& mon, const FibreFunctor& uf) {
    std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b];
            Mat res = uf.r[a][b] * uf.i[a][b] - Mat::identity(uf.dim_u[ab]);
            if (!res.is_zero())
                return report_residual("separability", res, true,
                                       "r.i != 1 at (" + cat.objects[a] + "," +
                                           cat.objects[b] + ")");
        }
    Mat ir = uf.i0 * uf.r0;
    Mat expect(1, 1);
    expect.at(0, 0) = Rational(static_cast<long>(uf.dim_u[mon.unit]));
    return report_residual("separability", ir - expect, true,
                           "i0.r0 != dim U(I)");
}

CheckReport check_frobenius(const CatPresentation& cat, const MonoidalData& mon,
                            const FibreFunctor& uf) {
    std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t ab = mon.tensor_obj[a][b];
                std::size_t bc = mon.tensor_obj[b][c];
                Mat lhs1 = kron(uf.r[a][b], Mat::identity(uf.dim_u[c])) *
                           kron(Mat::identity(uf.dim_u[a]), uf.i[b][c]);
                Mat rhs1 = uf.i[ab][c] * uf.r[a][bc];
                Mat res1 = lhs1 - rhs1;
                if (!res1.is_zero())
                    return report_residual("frobenius_conditions", res1, false,
                                           "(r x 1)(1 x i) != i.r at (" +
                                               cat.objects[a] + "," +
                                               cat.objects[b] + "," +
                                               cat.objects[c] + ")");
                Mat lhs2 = kron(Mat::identity(uf.dim_u[a]), uf.r[b][c]) *
                           kron(uf.i[a][b], Mat::identity(uf.dim_u[c]));
                Mat rhs2 = uf.i[a][bc] * uf.r[ab][c];
                Mat res2 = lhs2 - rhs2;
                if (!res2.is_zero())
                    return report_residual("frobenius_conditions", res2, false,
                                           "(1 x r)(i x 1) != i.r at (" +
                                               cat.objects[a] + "," +
                                               cat.objects[b] + "," +
                                               cat.objects[c] + ")");
            }
    return report_pass("frobenius_conditions");
}

CheckReport check_braided_compat(const CatPresentation& cat,
                                 const MonoidalData& mon,
                                 const FibreFunctor& uf) {
    std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b];
            std::size_t ba = mon.tensor_obj[b][a];
            Mat uc = apply_functor(cat, uf, ab, ba, mon.braid[a][b]);
            Mat res = uc * uf.r[a][b] -
                      uf.r[b][a] * swap_map(uf.dim_u[a], uf.dim_u[b]);
            if (!res.is_zero())
                return report_residual("braided_compatibility", res, true,
                                       "U(c).r != r.swap at (" + cat.objects[a] +
                                           "," + cat.objects[b] + ")");
        }
    return report_pass("braided_compatibility");
}

CheckReport check_duality_compat(const CatPresentation& cat,
                                 const MonoidalData& mon,
                                 const FibreFunctor& uf) {
    std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t as = mon.dual_obj[a];
        auto uinv = inverse(uf.u[a]);
        if (!uinv) {
            Witness w;
            w.where = "u not invertible at " + cat.objects[a];
            return report_fail("duality_compatibility", std::move(w));
        }
        std::size_t aas = mon.tensor_obj[a][as];
        std::size_t asa = mon.tensor_obj[as][a];
        // (n, r, r0): r (1 x u^-1) n = U(n) r0
        Mat lhs_n = uf.r[a][as] * kron(Mat::identity(uf.dim_u[a]), *uinv) *
                    coeval_vec(uf.dim_u[a]);
        Mat rhs_n = apply_functor(cat, uf, mon.unit, aas, mon.coev[a]) * uf.r0;
        Mat res_n = lhs_n - rhs_n;
        if (!res_n.is_zero())
            return report_residual("duality_compatibility", res_n, true,
                                   "(n,r,r0) triangle at " + cat.objects[a]);
        // (e, i, i0): e (u x 1) i = i0 U(e)
        Mat lhs_e = eval_row(uf.dim_u[a]) *
                    kron(uf.u[a], Mat::identity(uf.dim_u[a])) * uf.i[as][a];
        Mat rhs_e = uf.i0 * apply_functor(cat, uf, asa, mon.unit, mon.ev[a]);
        Mat res_e = lhs_e - rhs_e;
        if (!res_e.is_zero())
            return report_residual("duality_compatibility", res_e, true,
                                   "(e,i,i0) triangle at " + cat.objects[a]);
    }
    return report_pass("duality_compatibility");
}

CheckReport check_utrace_compat(const CatPresentation& cat,
                                const MonoidalData& mon, const FibreFunctor& uf) {
    std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (uf.dim_u[a] == 0) {
            Witness w;
            w.where = "dim U(" + cat.objects[a] + ") = 0";
            return report_fail("utrace_compatibility", std::move(w));
        }
        EndoOfI d = compute_utrace(cat, mon, a);
        if (!d.invertible) {
            Witness w;
            w.where = "U-trace not invertible at " + cat.objects[a];
            return report_fail("utrace_compatibility", std::move(w));
        }
        Mat ud = apply_functor(cat, uf, mon.unit, mon.unit, d.vec);
        Mat res = Rational(static_cast<long>(uf.dim_u[mon.unit])) * (ud * uf.r0) -
                  Rational(static_cast<long>(uf.dim_u[a])) * uf.r0;
        if (!res.is_zero())
            return report_residual("utrace_compatibility", res, true,
                                   "trace square at " + cat.objects[a]);
    }
    return report_pass("utrace_compatibility");
}

CheckReport check_u_irreducibility(const CatPresentation& cat,
                                   const FibreFunctor& uf, Grading* grading) {
    std::size_t n = cat.size();
    if (grading) {
        std::map<std::size_t, std::vector<std::size_t>> classes;
        for (std::size_t a = 0; a < n; ++a) classes[uf.dim_u[a]].push_back(a);
        grading->classes.assign(classes.begin(), classes.end());
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (cat.hom_dim[a][b] > 0 && uf.dim_u[a] != uf.dim_u[b]) {
                Witness w;
                w.where = "hom(" + cat.objects[a] + "," + cat.objects[b] +
                          ") != 0 but dim U differs (" +
                          std::to_string(uf.dim_u[a]) + " vs " +
                          std::to_string(uf.dim_u[b]) + ")";
                return report_fail("u_irreducibility", std::move(w));
            }
    return report_pass("u_irreducibility");
}

}  // namespace vncore
