#include "vncore/axioms.hpp"

#include <stdexcept>

namespace vncore {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void check_shapes(const AlgebraDatum& d) {
    std::size_t q = d.dim;
    require(d.mu.rows() == q && d.mu.cols() == q * q, "mu shape mismatch");
    require(d.eta.rows() == q && d.eta.cols() == 1, "eta shape mismatch");
    if (d.delta)
        require(d.delta->rows() == q * q && d.delta->cols() == q,
                "delta shape mismatch");
    if (d.eps)
        require(d.eps->rows() == 1 && d.eps->cols() == q, "eps shape mismatch");
    if (d.antipode)
        require(d.antipode->rows() == q && d.antipode->cols() == q,
                "antipode shape mismatch");
}

Mat delta3(const AlgebraDatum& d) {
    std::size_t q = d.dim;
    return kron(Mat::identity(q), *d.delta) * *d.delta;  // q^3 x q
}

Mat middle_antipode(const AlgebraDatum& d) {
    std::size_t q = d.dim;
    return kron(Mat::identity(q), kron(*d.antipode, Mat::identity(q)));
}

Mat fusion_f(const AlgebraDatum& d) {
    std::size_t q = d.dim;
    return kron(Mat::identity(q), d.mu) * kron(*d.delta, Mat::identity(q));
}

Mat fusion_g(const AlgebraDatum& d) {
    std::size_t q = d.dim;
    return kron(Mat::identity(q), d.mu) * middle_antipode(d) *
           kron(*d.delta, Mat::identity(q));
}

}  // namespace

CheckReport check_algebra(const AlgebraDatum& d) {
    check_shapes(d);
    std::size_t q = d.dim;
    Mat id = Mat::identity(q);
    Mat assoc = d.mu * kron(id, d.mu) - d.mu * kron(d.mu, id);
    if (!assoc.is_zero())
        return report_residual("algebra", assoc, true, "mu(1 x mu) != mu(mu x 1)");
    Mat unit_l = d.mu * kron(d.eta, id) - id;
    if (!unit_l.is_zero())
        return report_residual("algebra", unit_l, true, "mu(eta x 1) != 1");
    Mat unit_r = d.mu * kron(id, d.eta) - id;
    if (!unit_r.is_zero())
        return report_residual("algebra", unit_r, true, "mu(1 x eta) != 1");
    return report_pass("algebra");
}

CheckReport check_coalgebra(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.eps, "coalgebra checks need delta and eps");
    std::size_t q = d.dim;
    Mat id = Mat::identity(q);
    Mat coassoc = kron(id, *d.delta) * *d.delta - kron(*d.delta, id) * *d.delta;
    if (!coassoc.is_zero())
        return report_residual("coalgebra", coassoc, true,
                               "(1 x delta)delta != (delta x 1)delta");
    Mat counit_l = kron(*d.eps, id) * *d.delta - id;
    if (!counit_l.is_zero())
        return report_residual("coalgebra", counit_l, true, "(eps x 1)delta != 1");
    Mat counit_r = kron(id, *d.eps) * *d.delta - id;
    if (!counit_r.is_zero())
        return report_residual("coalgebra", counit_r, true, "(1 x eps)delta != 1");
    return report_pass("coalgebra");
}

CheckReport check_very_weak_bialgebra(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.eps, "very weak bialgebra check needs delta and eps");
    std::size_t q = d.dim;
    Mat lhs = *d.delta * d.mu;  // q^2 x q^2

    // Column (s,t) of the right side is mu . kron(Ds, Dt) . mu^T flattened,
    // where Ds is delta.col(s) reshaped q x q. This keeps the middle braid
    // implicit instead of materializing a q^4 x q^4 permutation.
    Mat mut = d.mu.transpose();
    Mat rhs(q * q, q * q);
    for (std::size_t s = 0; s < q; ++s) {
        Mat ds(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) ds.at(i, j) = d.delta->at(i * q + j, s);
        for (std::size_t t = 0; t < q; ++t) {
            Mat dt(q, q);
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j)
                    dt.at(i, j) = d.delta->at(i * q + j, t);
            Mat out = d.mu * kron(ds, dt) * mut;  // q x q
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t b = 0; b < q; ++b)
                    rhs.at(a * q + b, s * q + t) = out.at(a, b);
        }
    }
    return report_residual("very_weak_bialgebra", lhs - rhs, true,
                           "delta.mu != (mu x mu)(1 x c x 1)(delta x delta)");
}

CheckReport check_vn_core(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.antipode, "vn core check needs delta and antipode");
    std::size_t q = d.dim;
    Mat mu3 = d.mu * kron(Mat::identity(q), d.mu);  // q x q^3
    Mat res = mu3 * middle_antipode(d) * delta3(d) - Mat::identity(q);
    return report_residual("vn_core", res, true,
                           "mu_3(1 x S x 1)delta_3 != 1");
}

CheckReport check_unital_core(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.antipode, "unital core check needs delta and antipode");
    std::size_t q = d.dim;
    Mat id = Mat::identity(q);
    Mat lhs = kron(id, d.mu) * middle_antipode(d) * delta3(d);  // q^2 x q
    Mat res = lhs - kron(id, d.eta);
    return report_residual("unital_core", res, true,
                           "(1 x mu)(1 x S x 1)delta_3 != 1 x eta");
}

FusionReports check_fusion(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.antipode, "fusion checks need delta and antipode");
    std::size_t q = d.dim;
    Mat f = fusion_f(d);
    Mat g = fusion_g(d);
    FusionReports out;
    out.left_inverse = report_residual("fusion_left_inverse",
                                       g * f - Mat::identity(q * q), true,
                                       "g.f != 1");
    out.fgf = report_residual("fusion_fgf", f * g * f - f, true, "f.g.f != f");
    out.gfg = report_residual("fusion_gfg", g * f * g - g, true, "g.f.g != g");

    Mat id = Mat::identity(q);
    Mat f12 = kron(f, id);
    Mat f23 = kron(id, f);
    Mat p23 = kron(id, swap_map(q, q));
    Mat f13 = p23 * f12 * p23;
    out.equation = report_residual("fusion_equation",
                                   f12 * f13 * f23 - f23 * f12, false,
                                   "f12.f13.f23 != f23.f12");
    return out;
}

DefectReports check_counit_unit_defects(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.eps, "defect checks need delta and eps");
    DefectReports out;
    out.counit_mult = report_residual("defect_counit_mult",
                                      *d.eps * d.mu - kron(*d.eps, *d.eps), false,
                                      "eps.mu != eps x eps");
    out.rescaled_unit =
        report_residual("defect_rescaled_unit",
                        d.dim_ui * (*d.delta * d.eta) - kron(d.eta, d.eta), false,
                        "dim_UI.(delta.eta) != eta x eta");
    return out;
}

AlgebraDatum dualize(const AlgebraDatum& d) {
    check_shapes(d);
    require(d.delta && d.eps, "dualize needs delta and eps");
    AlgebraDatum out;
    out.dim = d.dim;
    out.mu = d.delta->transpose();
    out.eta = d.eps->transpose();
    out.delta = d.mu.transpose();
    out.eps = d.eta.transpose();
    if (d.antipode) out.antipode = d.antipode->transpose();
    out.dim_ui = d.dim_ui;
    return out;
}

CheckReport implication_check(const char* name, const CheckReport& premise,
                              const CheckReport& conclusion) {
    if (premise.verdict == CheckReport::Verdict::pass &&
        conclusion.verdict != CheckReport::Verdict::pass) {
        Witness w;
        w.where = premise.name + " passed but " + conclusion.name + " did not";
        return report_fail(name, std::move(w));
    }
    return report_pass(name);
}

}  // namespace vncore
