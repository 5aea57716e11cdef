#include "vncore/coend.hpp"

namespace vncore {

namespace {

Mat basis_vec(std::size_t dim, std::size_t k) {
    Mat v = Mat::zero(dim, 1);
    v.at(k, 0) = Rational(1);
    return v;
}

DescentError descent_error(const std::string& map_name, const Mat& residual,
                           const std::string& where) {
    auto nz = residual.first_nonzero();
    Witness w;
    w.where = map_name + " descent: " + where;
    if (nz) {
        w.row = static_cast<long>(nz->first);
        w.col = static_cast<long>(nz->second);
        w.value = residual.at(nz->first, nz->second).str();
    }
    return DescentError(map_name + " does not descend to the coend quotient", w);
}

}  // namespace

CoendSpace build_coend(const CatPresentation& cat, const FibreFunctor& uf) {
    std::size_t n = cat.size();
    CoendSpace e;
    e.block_offset.resize(n);
    e.block_size.resize(n);
    std::size_t off = 0;
    for (std::size_t a = 0; a < n; ++a) {
        e.block_offset[a] = off;
        e.block_size[a] = uf.dim_u[a] * uf.dim_u[a];
        off += e.block_size[a];
    }
    e.ambient_dim = off;

    // One relation column per (basis morphism f: a -> b, phi_j in UB*, x_k in
    // UA): incl_a((Uf)^T phi_j (x) x_k) - incl_b(phi_j (x) (Uf) x_k).
    std::size_t ncols = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            ncols += cat.hom_dim[a][b] * uf.dim_u[b] * uf.dim_u[a];
    e.relations = Mat::zero(e.ambient_dim, ncols);

    std::size_t col = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t da = uf.dim_u[a], db = uf.dim_u[b];
            for (std::size_t kf = 0; kf < cat.hom_dim[a][b]; ++kf) {
                const Mat& f = uf.mor_mat[a][b][kf];
                for (std::size_t j = 0; j < db; ++j)
                    for (std::size_t k = 0; k < da; ++k) {
                        for (std::size_t p = 0; p < da; ++p)
                            e.relations.at(e.block_offset[a] + p * da + k, col) +=
                                f.at(j, p);
                        for (std::size_t q = 0; q < db; ++q)
                            e.relations.at(e.block_offset[b] + j * db + q, col) -=
                                f.at(q, k);
                        ++col;
                    }
            }
        }
    e.quot = quotient_by(e.ambient_dim, e.relations);
    return e;
}

std::pair<Mat, Mat> build_mu_eta(const CatPresentation& cat,
                                 const MonoidalData& mon, const FibreFunctor& uf,
                                 const CoendSpace& e) {
    std::size_t n = cat.size();
    std::size_t amb = e.ambient_dim;
    std::size_t q = e.dim();

    // mu on ambient generator pairs, already coprojected into the quotient.
    Mat mu_amb(q, amb * amb);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t dc = uf.dim_u[c];
        for (std::size_t d = 0; d < n; ++d) {
            std::size_t dd = uf.dim_u[d];
            std::size_t cd = mon.tensor_obj[c][d];
            Mat copr_cd = e.copr(cd);
            const Mat& rm = uf.r[c][d];
            const Mat& im = uf.i[c][d];
            for (std::size_t j = 0; j < dc; ++j)
                for (std::size_t k = 0; k < dc; ++k)
                    for (std::size_t l = 0; l < dd; ++l)
                        for (std::size_t m = 0; m < dd; ++m) {
                            // psi = i^T (e_j (x) e_l), x = r (e_k (x) e_m)
                            Mat psi(uf.dim_u[cd], 1);
                            for (std::size_t t = 0; t < uf.dim_u[cd]; ++t)
                                psi.at(t, 0) = im.at(j * dd + l, t);
                            Mat x = rm.col(k * dd + m);
                            Mat val = copr_cd * kron(psi, x);
                            std::size_t s = e.block_offset[c] + j * dc + k;
                            std::size_t t2 = e.block_offset[d] + l * dd + m;
                            mu_amb.set_block(0, s * amb + t2, val);
                        }
        }
    }

    if (e.relations.cols() > 0) {
        Mat amb_id = Mat::identity(amb);
        Mat res1 = mu_amb * kron(e.relations, amb_id);
        if (!res1.is_zero())
            throw descent_error("mu", res1, "relations (x) ambient not annihilated");
        Mat res2 = mu_amb * kron(amb_id, e.relations);
        if (!res2.is_zero())
            throw descent_error("mu", res2, "ambient (x) relations not annihilated");
    }

    Mat mu = mu_amb * kron(e.quot.sect, e.quot.sect);
    Mat eta = e.copr(mon.unit) * kron(uf.i0.transpose(), uf.r0);
    return {mu, eta};
}

std::pair<Mat, Mat> build_eps_delta(const CatPresentation& cat,
                                    const FibreFunctor& uf, const CoendSpace& e) {
    std::size_t n = cat.size();
    std::size_t amb = e.ambient_dim;
    std::size_t q = e.dim();

    Mat eps_amb = Mat::zero(1, amb);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t da = uf.dim_u[a];
        for (std::size_t j = 0; j < da; ++j)
            eps_amb.at(0, e.block_offset[a] + j * da + j) = Rational(1);
    }
    if (e.relations.cols() > 0) {
        Mat res = eps_amb * e.relations;
        if (!res.is_zero())
            throw descent_error("eps", res, "relations not annihilated");
    }
    Mat eps = eps_amb * e.quot.sect;

    Mat delta_amb(q * q, amb);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t da = uf.dim_u[a];
        Mat copr_a = e.copr(a);
        for (std::size_t l = 0; l < da; ++l)
            for (std::size_t k = 0; k < da; ++k) {
                Mat acc = Mat::zero(q * q, 1);
                for (std::size_t j = 0; j < da; ++j)
                    acc += kron(copr_a.col(l * da + j), copr_a.col(j * da + k));
                delta_amb.set_block(0, e.block_offset[a] + l * da + k, acc);
            }
    }
    if (e.relations.cols() > 0) {
        Mat res = delta_amb * e.relations;
        if (!res.is_zero())
            throw descent_error("delta", res, "relations not annihilated");
    }
    Mat delta = delta_amb * e.quot.sect;
    return {eps, delta};
}

std::pair<std::vector<Mat>, Mat> build_antipode(const CatPresentation& cat,
                                                const MonoidalData& mon,
                                                const FibreFunctor& uf,
                                                const CoendSpace& e,
                                                const Grading& grading) {
    std::size_t n = cat.size();
    for (const auto& [dim, objs] : grading.classes)
        for (std::size_t a : objs)
            if (uf.dim_u[a] != dim)
                throw SpecError("grading inconsistent with dim U");

    std::size_t dim_ui = uf.dim_u[mon.unit];
    std::vector<Mat> sigma(n);
    std::size_t amb = e.ambient_dim;
    Mat s_amb(e.dim(), amb);
    for (std::size_t a = 0; a < n; ++a) {
        if (uf.dim_u[a] == 0) throw SpecError("dim U = 0 at " + cat.objects[a]);
        std::size_t as = mon.dual_obj[a];
        auto uinv = inverse(uf.u[a]);
        if (!uinv)
            throw SpecError("pairing u not invertible at " + cat.objects[a]);
        std::size_t das = uf.dim_u[as];
        sigma[a] = swap_map(das, das) * kron(*uinv, uf.u[a].transpose());
        Rational scale = Rational(static_cast<long>(dim_ui)) /
                         Rational(static_cast<long>(uf.dim_u[a]));
        Mat block = e.copr(as) * (scale * sigma[a]);
        s_amb.set_block(0, e.block_offset[a], block);
    }
    if (e.relations.cols() > 0) {
        Mat res = s_amb * e.relations;
        if (!res.is_zero())
            throw descent_error("antipode", res, "relations not annihilated");
    }
    Mat s = s_amb * e.quot.sect;
    if (!inverse(s)) {
        Witness w;
        w.where = "antipode matrix is singular";
        throw DescentError("antipode is not invertible", w);
    }
    return {sigma, s};
}

CoreMaps build_core_maps(const CatPresentation& cat, const MonoidalData& mon,
                         const FibreFunctor& uf, const CoendSpace& e,
                         const Grading& grading) {
    CoreMaps maps;
    auto [mu, eta] = build_mu_eta(cat, mon, uf, e);
    maps.mu = mu;
    maps.eta = eta;
    auto [eps, delta] = build_eps_delta(cat, uf, e);
    maps.eps = eps;
    maps.delta = delta;
    auto [sigma, s] = build_antipode(cat, mon, uf, e, grading);
    maps.sigma_blocks = sigma;
    maps.antipode = s;
    return maps;
}

CheckReport check_density(const CatPresentation& cat, const FibreFunctor& uf,
                          const std::vector<std::size_t>& gens) {
    std::size_t n = cat.size();
    for (std::size_t c = 0; c < n; ++c) {
        // Coend over gens of hom(a,c) (x) U(a), blocks in gens order.
        std::vector<std::size_t> off(gens.size());
        std::size_t amb = 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            off[gi] = amb;
            amb += cat.hom_dim[gens[gi]][c] * uf.dim_u[gens[gi]];
        }
        std::size_t ncols = 0;
        for (std::size_t ai = 0; ai < gens.size(); ++ai)
            for (std::size_t bi = 0; bi < gens.size(); ++bi)
                ncols += cat.hom_dim[gens[ai]][gens[bi]] *
                         cat.hom_dim[gens[bi]][c] * uf.dim_u[gens[ai]];
        Mat rel = Mat::zero(amb, ncols);
        std::size_t col = 0;
        for (std::size_t ai = 0; ai < gens.size(); ++ai)
            for (std::size_t bi = 0; bi < gens.size(); ++bi) {
                std::size_t a = gens[ai], b = gens[bi];
                std::size_t da = uf.dim_u[a];
                std::size_t hbc = cat.hom_dim[b][c];
                for (std::size_t kf = 0; kf < cat.hom_dim[a][b]; ++kf) {
                    Mat f = basis_vec(cat.hom_dim[a][b], kf);
                    const Mat& ufm = uf.mor_mat[a][b][kf];
                    for (std::size_t kg = 0; kg < hbc; ++kg) {
                        Mat g = basis_vec(hbc, kg);
                        Mat gf = compose_mor(cat, a, b, c, g, f);
                        for (std::size_t x = 0; x < da; ++x) {
                            for (std::size_t p = 0; p < cat.hom_dim[a][c]; ++p)
                                rel.at(off[ai] + p * da + x, col) += gf.at(p, 0);
                            for (std::size_t y = 0; y < uf.dim_u[b]; ++y)
                                rel.at(off[bi] + kg * uf.dim_u[b] + y, col) -=
                                    ufm.at(y, x);
                            ++col;
                        }
                    }
                }
            }
        QuotientSpace quot = quotient_by(amb, rel);

        Mat eval = Mat::zero(uf.dim_u[c], amb);
        for (std::size_t ai = 0; ai < gens.size(); ++ai) {
            std::size_t a = gens[ai];
            for (std::size_t kg = 0; kg < cat.hom_dim[a][c]; ++kg)
                for (std::size_t x = 0; x < uf.dim_u[a]; ++x)
                    eval.set_block(0, off[ai] + kg * uf.dim_u[a] + x,
                                   uf.mor_mat[a][c][kg].col(x));
        }
        if (rel.cols() > 0 && !(eval * rel).is_zero()) {
            Witness w;
            w.where = "density evaluation not constant on classes at object " +
                      cat.objects[c];
            return report_fail("density", std::move(w));
        }
        Mat alpha = eval * quot.sect;
        if (alpha.rows() != alpha.cols() || !inverse(alpha)) {
            Witness w;
            w.where = "alpha not invertible at object " + cat.objects[c] +
                      " (coend dim " + std::to_string(quot.dim) + ", dim U " +
                      std::to_string(uf.dim_u[c]) + ")";
            return report_fail("density", std::move(w));
        }
    }
    return report_pass("density");
}

AlgebraDatum export_algebra_datum(const CoendSpace& e, const CoreMaps& maps,
                                  std::size_t dim_ui) {
    AlgebraDatum d;
    d.dim = e.dim();
    d.mu = maps.mu;
    d.eta = maps.eta;
    d.delta = maps.delta;
    d.eps = maps.eps;
    d.antipode = maps.antipode;
    d.dim_ui = Rational(static_cast<long>(dim_ui));
    return d;
}

}  // namespace vncore
