#include "vncore/specfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vncore {

namespace {

using json = nlohmann::ordered_json;

Rational rat_from_json(const json& j, const std::string& ctx) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& ex) {
            throw SpecError(ctx + ": " + ex.what());
        }
    }
    throw SpecError(ctx + ": expected rational string");
}

json rat_to_json(const Rational& r) { return r.str(); }

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols,
                  const std::string& ctx) {
    if (!j.is_array()) throw SpecError(ctx + ": expected matrix (array of rows)");
    if (j.size() != rows)
        throw SpecError(ctx + ": expected " + std::to_string(rows) +
                        " rows, found " + std::to_string(j.size()));
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw SpecError(ctx + ": row " + std::to_string(i) + " must have " +
                            std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = rat_from_json(row[k], ctx);
    }
    return m;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(rat_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Mat vec_from_json(const json& j, std::size_t dim, const std::string& ctx) {
    if (!j.is_array() || j.size() != dim)
        throw SpecError(ctx + ": expected vector of length " +
                        std::to_string(dim));
    Mat v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v.at(i, 0) = rat_from_json(j[i], ctx);
    return v;
}

json vec_to_json(const Mat& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) a.push_back(rat_to_json(v.at(i, 0)));
    return a;
}

const json& need(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw SpecError(ctx + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

SpecData spec_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw SpecError(std::string("JSON parse error: ") + ex.what());
    }

    SpecData spec;
    const json& meta = need(j, "meta", "spec");
    spec.name = need(meta, "name", "meta").get<std::string>();
    spec.description = meta.value("description", "");

    const json& jcat = need(j, "category", "spec");
    CatPresentation& cat = spec.cat;
    for (const auto& o : need(jcat, "objects", "category"))
        cat.objects.push_back(o.get<std::string>());
    std::size_t n = cat.objects.size();
    if (n == 0) throw SpecError("category: no objects");

    const json& hd = need(jcat, "hom_dims", "category");
    if (!hd.is_array() || hd.size() != n)
        throw SpecError("category.hom_dims: expected " + std::to_string(n) +
                        " rows");
    cat.hom_dim.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        if (!hd[a].is_array() || hd[a].size() != n)
            throw SpecError("category.hom_dims: bad row " + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            cat.hom_dim[a][b] = hd[a][b].get<std::size_t>();
    }

    cat.id_vec.resize(n);
    const json& jid = need(jcat, "id", "category");
    for (std::size_t a = 0; a < n; ++a) {
        auto it = jid.find(cat.objects[a]);
        if (it == jid.end() && cat.hom_dim[a][a] == 0) {
            cat.id_vec[a] = Mat(0, 1);
            continue;
        }
        if (it == jid.end())
            throw SpecError("category.id: missing identity for " + cat.objects[a]);
        cat.id_vec[a] = vec_from_json(*it, cat.hom_dim[a][a],
                                      "category.id[" + cat.objects[a] + "]");
    }

    cat.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                cat.comp[a][b][c] =
                    Mat::zero(cat.hom_dim[a][c],
                              cat.hom_dim[b][c] * cat.hom_dim[a][b]);
    for (const auto& entry : need(jcat, "comp", "category")) {
        std::size_t a = cat.index_of(need(entry, "a", "comp").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "comp").get<std::string>());
        std::size_t c = cat.index_of(need(entry, "c", "comp").get<std::string>());
        cat.comp[a][b][c] = mat_from_json(
            need(entry, "m", "comp"), cat.hom_dim[a][c],
            cat.hom_dim[b][c] * cat.hom_dim[a][b],
            "comp(" + cat.objects[a] + "," + cat.objects[b] + "," +
                cat.objects[c] + ")");
    }

    const json& jmon = need(j, "monoidal", "spec");
    MonoidalData& mon = spec.mon;
    mon.unit = cat.index_of(need(jmon, "unit", "monoidal").get<std::string>());
    const json& to = need(jmon, "tensor_obj", "monoidal");
    if (!to.is_array() || to.size() != n)
        throw SpecError("monoidal.tensor_obj: expected " + std::to_string(n) +
                        " rows");
    mon.tensor_obj.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        if (!to[a].is_array() || to[a].size() != n)
            throw SpecError("monoidal.tensor_obj: bad row " + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            mon.tensor_obj[a][b] = cat.index_of(to[a][b].get<std::string>());
    }
    mon.tensor_mor.assign(
        n, std::vector<std::vector<std::vector<Mat>>>(
               n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n))));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    mon.tensor_mor[a][b][c][d] = Mat::zero(
                        cat.hom_dim[mon.tensor_obj[a][c]][mon.tensor_obj[b][d]],
                        cat.hom_dim[a][b] * cat.hom_dim[c][d]);
    for (const auto& entry : need(jmon, "tensor_mor", "monoidal")) {
        std::size_t a = cat.index_of(need(entry, "a", "tensor_mor").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "tensor_mor").get<std::string>());
        std::size_t c = cat.index_of(need(entry, "c", "tensor_mor").get<std::string>());
        std::size_t d = cat.index_of(need(entry, "d", "tensor_mor").get<std::string>());
        mon.tensor_mor[a][b][c][d] = mat_from_json(
            need(entry, "m", "tensor_mor"),
            cat.hom_dim[mon.tensor_obj[a][c]][mon.tensor_obj[b][d]],
            cat.hom_dim[a][b] * cat.hom_dim[c][d],
            "tensor_mor(" + cat.objects[a] + "," + cat.objects[b] + "," +
                cat.objects[c] + "," + cat.objects[d] + ")");
    }

    const json& jdual = need(jmon, "dual_obj", "monoidal");
    mon.dual_obj.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        auto it = jdual.find(cat.objects[a]);
        if (it == jdual.end())
            throw SpecError("monoidal.dual_obj: missing " + cat.objects[a]);
        mon.dual_obj[a] = cat.index_of(it->get<std::string>());
    }

    mon.braid.assign(n, std::vector<Mat>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            mon.braid[a][b] = Mat::zero(
                cat.hom_dim[mon.tensor_obj[a][b]][mon.tensor_obj[b][a]], 1);
    for (const auto& entry : need(jmon, "braid", "monoidal")) {
        std::size_t a = cat.index_of(need(entry, "a", "braid").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "braid").get<std::string>());
        mon.braid[a][b] = vec_from_json(
            need(entry, "v", "braid"),
            cat.hom_dim[mon.tensor_obj[a][b]][mon.tensor_obj[b][a]],
            "braid(" + cat.objects[a] + "," + cat.objects[b] + ")");
    }

    mon.ev.resize(n);
    mon.coev.resize(n);
    const json& jev = need(jmon, "ev", "monoidal");
    const json& jcoev = need(jmon, "coev", "monoidal");
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t as = mon.dual_obj[a];
        std::size_t asa = mon.tensor_obj[as][a];
        std::size_t aas = mon.tensor_obj[a][as];
        auto ite = jev.find(cat.objects[a]);
        mon.ev[a] = ite == jev.end()
                        ? Mat::zero(cat.hom_dim[asa][mon.unit], 1)
                        : vec_from_json(*ite, cat.hom_dim[asa][mon.unit],
                                        "ev[" + cat.objects[a] + "]");
        auto itc = jcoev.find(cat.objects[a]);
        mon.coev[a] = itc == jcoev.end()
                          ? Mat::zero(cat.hom_dim[mon.unit][aas], 1)
                          : vec_from_json(*itc, cat.hom_dim[mon.unit][aas],
                                          "coev[" + cat.objects[a] + "]");
    }

    const json& jfun = need(j, "functor", "spec");
    FibreFunctor& uf = spec.functor;
    const json& jdim = need(jfun, "dim_U", "functor");
    uf.dim_u.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        auto it = jdim.find(cat.objects[a]);
        if (it == jdim.end())
            throw SpecError("functor.dim_U: missing " + cat.objects[a]);
        uf.dim_u[a] = it->get<std::size_t>();
    }

    uf.mor_mat.assign(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            uf.mor_mat[a][b].assign(cat.hom_dim[a][b],
                                    Mat::zero(uf.dim_u[b], uf.dim_u[a]));
    for (const auto& entry : need(jfun, "mor_mat", "functor")) {
        std::size_t a = cat.index_of(need(entry, "a", "mor_mat").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "mor_mat").get<std::string>());
        std::size_t k = need(entry, "k", "mor_mat").get<std::size_t>();
        if (k >= cat.hom_dim[a][b])
            throw SpecError("functor.mor_mat: basis index out of range at hom(" +
                            cat.objects[a] + "," + cat.objects[b] + ")");
        uf.mor_mat[a][b][k] = mat_from_json(
            need(entry, "m", "mor_mat"), uf.dim_u[b], uf.dim_u[a],
            "mor_mat(" + cat.objects[a] + "," + cat.objects[b] + ")[" +
                std::to_string(k) + "]");
    }

    uf.r.assign(n, std::vector<Mat>(n));
    uf.i.assign(n, std::vector<Mat>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = mon.tensor_obj[a][b];
            uf.r[a][b] = Mat::zero(uf.dim_u[ab], uf.dim_u[a] * uf.dim_u[b]);
            uf.i[a][b] = Mat::zero(uf.dim_u[a] * uf.dim_u[b], uf.dim_u[ab]);
        }
    for (const auto& entry : need(jfun, "r", "functor")) {
        std::size_t a = cat.index_of(need(entry, "a", "r").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "r").get<std::string>());
        std::size_t ab = mon.tensor_obj[a][b];
        uf.r[a][b] = mat_from_json(need(entry, "m", "r"), uf.dim_u[ab],
                                   uf.dim_u[a] * uf.dim_u[b],
                                   "r(" + cat.objects[a] + "," + cat.objects[b] + ")");
    }
    for (const auto& entry : need(jfun, "i", "functor")) {
        std::size_t a = cat.index_of(need(entry, "a", "i").get<std::string>());
        std::size_t b = cat.index_of(need(entry, "b", "i").get<std::string>());
        std::size_t ab = mon.tensor_obj[a][b];
        uf.i[a][b] = mat_from_json(need(entry, "m", "i"),
                                   uf.dim_u[a] * uf.dim_u[b], uf.dim_u[ab],
                                   "i(" + cat.objects[a] + "," + cat.objects[b] + ")");
    }
    uf.r0 = mat_from_json(need(jfun, "r0", "functor"), uf.dim_u[mon.unit], 1,
                          "functor.r0");
    uf.i0 = mat_from_json(need(jfun, "i0", "functor"), 1, uf.dim_u[mon.unit],
                          "functor.i0");

    uf.u.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        uf.u[a] = Mat::zero(uf.dim_u[a], uf.dim_u[mon.dual_obj[a]]);
    for (const auto& entry : need(jfun, "u", "functor")) {
        std::size_t a = cat.index_of(need(entry, "a", "u").get<std::string>());
        uf.u[a] = mat_from_json(need(entry, "m", "u"), uf.dim_u[a],
                                uf.dim_u[mon.dual_obj[a]],
                                "u(" + cat.objects[a] + ")");
    }

    check_structure(cat);
    check_structure(cat, mon);
    check_structure(cat, mon, uf);
    return spec;
}

SpecData load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_json_text(buf.str());
}

std::string spec_to_json_text(const SpecData& spec) {
    const CatPresentation& cat = spec.cat;
    const MonoidalData& mon = spec.mon;
    const FibreFunctor& uf = spec.functor;
    std::size_t n = cat.size();

    json j;
    j["meta"] = {{"name", spec.name}, {"description", spec.description}};

    json jcat;
    jcat["objects"] = cat.objects;
    json hd = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(cat.hom_dim[a][b]);
        hd.push_back(row);
    }
    jcat["hom_dims"] = hd;
    json jid = json::object();
    for (std::size_t a = 0; a < n; ++a)
        if (cat.hom_dim[a][a] > 0) jid[cat.objects[a]] = vec_to_json(cat.id_vec[a]);
    jcat["id"] = jid;
    json jcomp = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Mat& m = cat.comp[a][b][c];
                if (m.rows() == 0 || m.cols() == 0) continue;
                jcomp.push_back({{"a", cat.objects[a]},
                                 {"b", cat.objects[b]},
                                 {"c", cat.objects[c]},
                                 {"m", mat_to_json(m)}});
            }
    jcat["comp"] = jcomp;
    j["category"] = jcat;

    json jmon;
    jmon["unit"] = cat.objects[mon.unit];
    json to = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b)
            row.push_back(cat.objects[mon.tensor_obj[a][b]]);
        to.push_back(row);
    }
    jmon["tensor_obj"] = to;
    json jtm = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Mat& m = mon.tensor_mor[a][b][c][d];
                    if (m.rows() == 0 || m.cols() == 0) continue;
                    jtm.push_back({{"a", cat.objects[a]},
                                   {"b", cat.objects[b]},
                                   {"c", cat.objects[c]},
                                   {"d", cat.objects[d]},
                                   {"m", mat_to_json(m)}});
                }
    jmon["tensor_mor"] = jtm;
    json jbraid = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mon.braid[a][b].rows() > 0)
                jbraid.push_back({{"a", cat.objects[a]},
                                  {"b", cat.objects[b]},
                                  {"v", vec_to_json(mon.braid[a][b])}});
    jmon["braid"] = jbraid;
    json jdual = json::object();
    for (std::size_t a = 0; a < n; ++a)
        jdual[cat.objects[a]] = cat.objects[mon.dual_obj[a]];
    jmon["dual_obj"] = jdual;
    json jev = json::object(), jcoev = json::object();
    for (std::size_t a = 0; a < n; ++a) {
        if (mon.ev[a].rows() > 0) jev[cat.objects[a]] = vec_to_json(mon.ev[a]);
        if (mon.coev[a].rows() > 0) jcoev[cat.objects[a]] = vec_to_json(mon.coev[a]);
    }
    jmon["ev"] = jev;
    jmon["coev"] = jcoev;
    j["monoidal"] = jmon;

    json jfun;
    json jdim = json::object();
    for (std::size_t a = 0; a < n; ++a) jdim[cat.objects[a]] = uf.dim_u[a];
    jfun["dim_U"] = jdim;
    json jmor = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < cat.hom_dim[a][b]; ++k) {
                const Mat& m = uf.mor_mat[a][b][k];
                if (m.rows() == 0 || m.cols() == 0) continue;
                jmor.push_back({{"a", cat.objects[a]},
                                {"b", cat.objects[b]},
                                {"k", k},
                                {"m", mat_to_json(m)}});
            }
    jfun["mor_mat"] = jmor;
    json jr = json::array(), ji = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (uf.r[a][b].rows() > 0 && uf.r[a][b].cols() > 0)
                jr.push_back({{"a", cat.objects[a]},
                              {"b", cat.objects[b]},
                              {"m", mat_to_json(uf.r[a][b])}});
            if (uf.i[a][b].rows() > 0 && uf.i[a][b].cols() > 0)
                ji.push_back({{"a", cat.objects[a]},
                              {"b", cat.objects[b]},
                              {"m", mat_to_json(uf.i[a][b])}});
        }
    jfun["r"] = jr;
    jfun["r0"] = mat_to_json(uf.r0);
    jfun["i"] = ji;
    jfun["i0"] = mat_to_json(uf.i0);
    json ju = json::array();
    for (std::size_t a = 0; a < n; ++a)
        if (uf.u[a].rows() > 0 && uf.u[a].cols() > 0)
            ju.push_back({{"a", cat.objects[a]}, {"m", mat_to_json(uf.u[a])}});
    jfun["u"] = ju;
    j["functor"] = jfun;

    return j.dump(2) + "\n";
}

void save_spec(const SpecData& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SpecError("cannot write spec file: " + path);
    out << spec_to_json_text(spec);
    if (!out) throw SpecError("failed writing spec file: " + path);
}

}  // namespace vncore
