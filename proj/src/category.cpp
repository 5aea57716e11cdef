#include "vncore/category.hpp"

#include <sstream>

namespace vncore {

namespace {

std::string fmt(const char* what, const std::vector<std::string>& objs,
                std::initializer_list<std::size_t> ids) {
    std::ostringstream os;
    os << what << "(";
    bool first = true;
    for (std::size_t i : ids) {
        if (!first) os << ",";
        os << objs[i];
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

std::size_t CatPresentation::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == id) return i;
    throw SpecError("unknown object identifier: " + id);
}

void check_structure(const CatPresentation& cat) {
    std::size_t n = cat.size();
    if (n == 0) throw SpecError("category has no objects");
    if (cat.hom_dim.size() != n) throw SpecError("hom_dim table size mismatch");
    for (const auto& row : cat.hom_dim)
        if (row.size() != n) throw SpecError("hom_dim table size mismatch");
    if (cat.comp.size() != n) throw SpecError("comp table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (cat.comp[a].size() != n) throw SpecError("comp table size mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            if (cat.comp[a][b].size() != n)
                throw SpecError("comp table size mismatch");
            for (std::size_t c = 0; c < n; ++c) {
                const Mat& m = cat.comp[a][b][c];
                if (m.rows() != cat.hom_dim[a][c] ||
                    m.cols() != cat.hom_dim[b][c] * cat.hom_dim[a][b])
                    throw SpecError("comp shape mismatch at " +
                                    fmt("comp", cat.objects, {a, b, c}));
            }
        }
    }
    if (cat.id_vec.size() != n) throw SpecError("id table size mismatch");
    for (std::size_t a = 0; a < n; ++a)
        if (cat.id_vec[a].rows() != cat.hom_dim[a][a] || cat.id_vec[a].cols() != 1)
            throw SpecError("identity vector shape mismatch at " + cat.objects[a]);
}

void check_structure(const CatPresentation& cat, const MonoidalData& mon) {
    std::size_t n = cat.size();
    if (mon.unit >= n) throw SpecError("monoidal unit is not an object");
    if (mon.tensor_obj.size() != n) throw SpecError("tensor_obj table size mismatch");
    for (const auto& row : mon.tensor_obj) {
        if (row.size() != n) throw SpecError("tensor_obj table size mismatch");
        for (std::size_t x : row)
            if (x >= n) throw SpecError("tensor_obj references unknown object");
    }
    if (mon.dual_obj.size() != n) throw SpecError("dual_obj table size mismatch");
    for (std::size_t x : mon.dual_obj)
        if (x >= n) throw SpecError("dual_obj references unknown object");
    if (mon.tensor_mor.size() != n) throw SpecError("tensor_mor table size mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Mat& m = mon.tensor_mor[a][b][c][d];
                    std::size_t rows =
                        cat.hom_dim[mon.tensor_obj[a][c]][mon.tensor_obj[b][d]];
                    if (m.rows() != rows ||
                        m.cols() != cat.hom_dim[a][b] * cat.hom_dim[c][d])
                        throw SpecError("tensor_mor shape mismatch at " +
                                        fmt("tensor", cat.objects, {a, b, c, d}));
                }
    if (mon.braid.size() != n) throw SpecError("braid table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (mon.braid[a].size() != n) throw SpecError("braid table size mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b], ba = mon.tensor_obj[b][a];
            if (mon.braid[a][b].rows() != cat.hom_dim[ab][ba] ||
                mon.braid[a][b].cols() != 1)
                throw SpecError("braid shape mismatch at " +
                                fmt("braid", cat.objects, {a, b}));
        }
    }
    if (mon.ev.size() != n || mon.coev.size() != n)
        throw SpecError("ev/coev table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t as = mon.dual_obj[a];
        std::size_t asa = mon.tensor_obj[as][a];
        std::size_t aas = mon.tensor_obj[a][as];
        if (mon.ev[a].rows() != cat.hom_dim[asa][mon.unit] || mon.ev[a].cols() != 1)
            throw SpecError("ev shape mismatch at " + cat.objects[a]);
        if (mon.coev[a].rows() != cat.hom_dim[mon.unit][aas] ||
            mon.coev[a].cols() != 1)
            throw SpecError("coev shape mismatch at " + cat.objects[a]);
    }
}

Mat compose_mor(const CatPresentation& cat, std::size_t a, std::size_t b,
                std::size_t c, const Mat& g, const Mat& f) {
    return cat.comp[a][b][c] * kron(g, f);
}

Mat tensor_mor_apply(const CatPresentation& cat, const MonoidalData& mon,
                     std::size_t a, std::size_t b, std::size_t c,
                     std::size_t d, const Mat& f, const Mat& g) {
    (void)cat;
    return mon.tensor_mor[a][b][c][d] * kron(f, g);
}

Mat dual_morphism(const CatPresentation& cat, const MonoidalData& mon,
                  std::size_t a, std::size_t b, const Mat& f) {
    std::size_t as = mon.dual_obj[a], bs = mon.dual_obj[b];
    std::size_t i = mon.unit;
    std::size_t aas = mon.tensor_obj[a][as];
    std::size_t bs_a = mon.tensor_obj[bs][a];
    std::size_t bs_b = mon.tensor_obj[bs][b];
    std::size_t bs_a_as = mon.tensor_obj[bs_a][as];
    std::size_t bs_b_as = mon.tensor_obj[bs_b][as];

    // 1_{b*} (x) n_a : b* -> b* @ a @ a*
    Mat step1 = tensor_mor_apply(cat, mon, bs, bs, i, aas, cat.id_vec[bs],
                                 mon.coev[a]);
    // 1_{b*} (x) f (x) 1_{a*} : b* @ a @ a* -> b* @ b @ a*
    Mat mid = tensor_mor_apply(cat, mon, bs, bs, a, b, cat.id_vec[bs], f);
    mid = tensor_mor_apply(cat, mon, bs_a, bs_b, as, as, mid, cat.id_vec[as]);
    // e_b (x) 1_{a*} : b* @ b @ a* -> a*
    Mat last = tensor_mor_apply(cat, mon, bs_b, i, as, as, mon.ev[b],
                                cat.id_vec[as]);

    Mat out = compose_mor(cat, bs, bs_a_as, bs_b_as, mid, step1);
    return compose_mor(cat, bs, bs_b_as, as, last, out);
}

ValidationReport validate_category(const CatPresentation& cat) {
    check_structure(cat);
    ValidationReport rep{"category_laws", {}};
    std::size_t n = cat.size();

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t hab = cat.hom_dim[a][b];
            for (std::size_t k = 0; k < hab; ++k) {
                Mat f = Mat::zero(hab, 1);
                f.at(k, 0) = Rational(1);
                if (compose_mor(cat, a, a, b, f, cat.id_vec[a]) != f)
                    rep.failures.push_back(
                        fmt("identity_right", cat.objects, {a, b}) +
                        "[f=" + std::to_string(k) + "]");
                if (compose_mor(cat, a, b, b, cat.id_vec[b], f) != f)
                    rep.failures.push_back(
                        fmt("identity_left", cat.objects, {a, b}) +
                        "[f=" + std::to_string(k) + "]");
            }
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    std::size_t hab = cat.hom_dim[a][b], hbc = cat.hom_dim[b][c],
                                hcd = cat.hom_dim[c][d];
                    if (hab == 0 || hbc == 0 || hcd == 0) continue;
                    for (std::size_t kf = 0; kf < hab; ++kf)
                        for (std::size_t kg = 0; kg < hbc; ++kg)
                            for (std::size_t kh = 0; kh < hcd; ++kh) {
                                Mat f = Mat::zero(hab, 1);
                                f.at(kf, 0) = Rational(1);
                                Mat g = Mat::zero(hbc, 1);
                                g.at(kg, 0) = Rational(1);
                                Mat h = Mat::zero(hcd, 1);
                                h.at(kh, 0) = Rational(1);
                                Mat lhs = compose_mor(
                                    cat, a, c, d, h, compose_mor(cat, a, b, c, g, f));
                                Mat rhs = compose_mor(
                                    cat, a, b, d, compose_mor(cat, b, c, d, h, g), f);
                                if (lhs != rhs)
                                    rep.failures.push_back(
                                        fmt("assoc", cat.objects, {a, b, c, d}) +
                                        "[f=" + std::to_string(kf) +
                                        ",g=" + std::to_string(kg) +
                                        ",h=" + std::to_string(kh) + "]");
                            }
                }
    return rep;
}

namespace {

Mat basis_vec(std::size_t dim, std::size_t k) {
    Mat v = Mat::zero(dim, 1);
    v.at(k, 0) = Rational(1);
    return v;
}

}  // namespace

ValidationReport validate_monoidal(const CatPresentation& cat,
                                   const MonoidalData& mon) {
    check_structure(cat, mon);
    ValidationReport rep{"monoidal_laws", {}};
    std::size_t n = cat.size();
    std::size_t unit = mon.unit;

    for (std::size_t a = 0; a < n; ++a) {
        if (mon.tensor_obj[unit][a] != a || mon.tensor_obj[a][unit] != a)
            rep.failures.push_back(fmt("tensor_unit", cat.objects, {a}));
        if (mon.dual_obj[mon.dual_obj[a]] != a)
            rep.failures.push_back(fmt("dual_involution", cat.objects, {a}));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mon.tensor_obj[mon.tensor_obj[a][b]][c] !=
                    mon.tensor_obj[a][mon.tensor_obj[b][c]])
                    rep.failures.push_back(fmt("tensor_assoc", cat.objects, {a, b, c}));
    }
    if (!rep.failures.empty()) return rep;  // tables broken, laws would misindex

    // tensor preserves identities
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (tensor_mor_apply(cat, mon, a, a, b, b, cat.id_vec[a],
                                 cat.id_vec[b]) != cat.id_vec[mon.tensor_obj[a][b]])
                rep.failures.push_back(fmt("tensor_identity", cat.objects, {a, b}));

    // interchange: (h.f) (x) (k.g) = (h (x) k) . (f (x) g)
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t e = 0; e < n; ++e)
                        for (std::size_t w = 0; w < n; ++w) {
                            std::size_t hab = cat.hom_dim[a][b],
                                        hbc = cat.hom_dim[b][c],
                                        hde = cat.hom_dim[d][e],
                                        hew = cat.hom_dim[e][w];
                            if (hab * hbc * hde * hew == 0) continue;
                            for (std::size_t kf = 0; kf < hab; ++kf)
                                for (std::size_t kh = 0; kh < hbc; ++kh)
                                    for (std::size_t kg = 0; kg < hde; ++kg)
                                        for (std::size_t kk = 0; kk < hew; ++kk) {
                                            Mat f = basis_vec(hab, kf);
                                            Mat h = basis_vec(hbc, kh);
                                            Mat g = basis_vec(hde, kg);
                                            Mat k = basis_vec(hew, kk);
                                            Mat lhs = tensor_mor_apply(
                                                cat, mon, a, c, d, w,
                                                compose_mor(cat, a, b, c, h, f),
                                                compose_mor(cat, d, e, w, k, g));
                                            Mat rhs = compose_mor(
                                                cat, mon.tensor_obj[a][d],
                                                mon.tensor_obj[b][e],
                                                mon.tensor_obj[c][w],
                                                tensor_mor_apply(cat, mon, b, c, e,
                                                                 w, h, k),
                                                tensor_mor_apply(cat, mon, a, b, d,
                                                                 e, f, g));
                                            if (lhs != rhs)
                                                rep.failures.push_back(fmt(
                                                    "interchange", cat.objects,
                                                    {a, b, c, d, e, w}));
                                        }
                        }

    // braid invertibility
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b], ba = mon.tensor_obj[b][a];
            std::size_t hfwd = cat.hom_dim[ab][ba], hbwd = cat.hom_dim[ba][ab];
            Mat op(cat.hom_dim[ba][ba], hbwd);
            for (std::size_t k = 0; k < hbwd; ++k) {
                Mat d = basis_vec(hbwd, k);
                op.set_block(0, k, compose_mor(cat, ba, ab, ba, mon.braid[a][b], d));
            }
            auto dsol = solve(op, cat.id_vec[ba]);
            bool ok = dsol.has_value();
            if (ok) {
                Mat dc = compose_mor(cat, ab, ba, ab, *dsol, mon.braid[a][b]);
                ok = (dc == cat.id_vec[ab]);
            }
            (void)hfwd;
            if (!ok)
                rep.failures.push_back(fmt("braid_invertible", cat.objects, {a, b}));
        }

    // braid naturality: c_{a',b'} . (f (x) g) = (g (x) f) . c_{a,b}
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t ap = 0; ap < n; ++ap)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t bp = 0; bp < n; ++bp) {
                    std::size_t haa = cat.hom_dim[a][ap], hbb = cat.hom_dim[b][bp];
                    if (haa * hbb == 0) continue;
                    std::size_t ab = mon.tensor_obj[a][b];
                    std::size_t apbp = mon.tensor_obj[ap][bp];
                    std::size_t ba = mon.tensor_obj[b][a];
                    std::size_t bpap = mon.tensor_obj[bp][ap];
                    for (std::size_t kf = 0; kf < haa; ++kf)
                        for (std::size_t kg = 0; kg < hbb; ++kg) {
                            Mat f = basis_vec(haa, kf);
                            Mat g = basis_vec(hbb, kg);
                            Mat lhs = compose_mor(
                                cat, ab, apbp, bpap, mon.braid[ap][bp],
                                tensor_mor_apply(cat, mon, a, ap, b, bp, f, g));
                            Mat rhs = compose_mor(
                                cat, ab, ba, bpap,
                                tensor_mor_apply(cat, mon, b, bp, a, ap, g, f),
                                mon.braid[a][b]);
                            if (lhs != rhs) {
                                rep.failures.push_back(
                                    fmt("braid_natural", cat.objects, {a, ap, b, bp}) +
                                    "[f=" + std::to_string(kf) +
                                    ",g=" + std::to_string(kg) + "]");
                            }
                        }
                }

    // strict hexagons
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t bc = mon.tensor_obj[b][c];
                std::size_t ab = mon.tensor_obj[a][b];
                std::size_t abc = mon.tensor_obj[ab][c];
                std::size_t bac = mon.tensor_obj[mon.tensor_obj[b][a]][c];
                Mat rhs1 = compose_mor(
                    cat, abc, bac, mon.tensor_obj[bc][a],
                    tensor_mor_apply(cat, mon, b, b, mon.tensor_obj[a][c],
                                     mon.tensor_obj[c][a], cat.id_vec[b],
                                     mon.braid[a][c]),
                    tensor_mor_apply(cat, mon, ab, mon.tensor_obj[b][a], c, c,
                                     mon.braid[a][b], cat.id_vec[c]));
                if (mon.braid[a][bc] != rhs1)
                    rep.failures.push_back(fmt("hexagon1", cat.objects, {a, b, c}));

                std::size_t acb = mon.tensor_obj[mon.tensor_obj[a][c]][b];
                Mat rhs2 = compose_mor(
                    cat, abc, acb, mon.tensor_obj[c][ab],
                    tensor_mor_apply(cat, mon, mon.tensor_obj[a][c],
                                     mon.tensor_obj[c][a], b, b, mon.braid[a][c],
                                     cat.id_vec[b]),
                    tensor_mor_apply(cat, mon, a, a, bc, mon.tensor_obj[c][b],
                                     cat.id_vec[a], mon.braid[b][c]));
                if (mon.braid[ab][c] != rhs2)
                    rep.failures.push_back(fmt("hexagon2", cat.objects, {a, b, c}));
            }

    // snake identities
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t as = mon.dual_obj[a];
        std::size_t aas = mon.tensor_obj[a][as];
        std::size_t asa = mon.tensor_obj[as][a];
        std::size_t a_as_a = mon.tensor_obj[aas][a];
        Mat left = compose_mor(
            cat, a, a_as_a, a,
            tensor_mor_apply(cat, mon, a, a, asa, mon.unit, cat.id_vec[a],
                             mon.ev[a]),
            tensor_mor_apply(cat, mon, mon.unit, aas, a, a, mon.coev[a],
                             cat.id_vec[a]));
        if (left != cat.id_vec[a])
            rep.failures.push_back(fmt("snake_object", cat.objects, {a}));

        std::size_t as_a_as = mon.tensor_obj[asa][as];
        Mat right = compose_mor(
            cat, as, as_a_as, as,
            tensor_mor_apply(cat, mon, asa, mon.unit, as, as, mon.ev[a],
                             cat.id_vec[as]),
            tensor_mor_apply(cat, mon, as, as, mon.unit, aas, cat.id_vec[as],
                             mon.coev[a]));
        if (right != cat.id_vec[as])
            rep.failures.push_back(fmt("snake_dual", cat.objects, {a}));
    }

    return rep;
}

std::pair<std::size_t, Mat> hom_unit_algebra(const CatPresentation& cat,
                                             const MonoidalData& mon) {
    return {cat.hom_dim[mon.unit][mon.unit], cat.id_vec[mon.unit]};
}

bool invertible_in_hom_unit(const CatPresentation& cat, const MonoidalData& mon,
                            const Mat& v) {
    std::size_t i = mon.unit;
    std::size_t h = cat.hom_dim[i][i];
    Mat op(h, h);
    for (std::size_t k = 0; k < h; ++k)
        op.set_block(0, k, compose_mor(cat, i, i, i, v, basis_vec(h, k)));
    return rank(op) == h;
}

EndoOfI compute_utrace(const CatPresentation& cat, const MonoidalData& mon,
                       std::size_t a) {
    std::size_t as = mon.dual_obj[a];
    std::size_t aas = mon.tensor_obj[a][as];
    std::size_t asa = mon.tensor_obj[as][a];
    Mat cn = compose_mor(cat, mon.unit, aas, asa, mon.braid[a][as], mon.coev[a]);
    Mat d = compose_mor(cat, mon.unit, asa, mon.unit, mon.ev[a], cn);
    return EndoOfI{d, invertible_in_hom_unit(cat, mon, d)};
}

}  // namespace vncore
