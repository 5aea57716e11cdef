#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vncore/axioms.hpp"
#include "vncore/coend.hpp"
#include "vncore/fibre.hpp"
#include "vncore/fixtures.hpp"
#include "vncore/report.hpp"
#include "vncore/specfile.hpp"

namespace {

using namespace vncore;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 pass, 1 check failure, 2 input error, 3 descent failure.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDescentFailure = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<CheckReport> validate_battery(const SpecData& spec, Grading* grading) {
    std::vector<CheckReport> checks;
    checks.push_back(report_validation(validate_category(spec.cat)));
    checks.push_back(report_validation(validate_monoidal(spec.cat, spec.mon)));
    checks.push_back(
        report_validation(validate_functor(spec.cat, spec.mon, spec.functor)));
    checks.push_back(check_separability(spec.cat, spec.mon, spec.functor));
    checks.push_back(check_frobenius(spec.cat, spec.mon, spec.functor));
    checks.push_back(check_braided_compat(spec.cat, spec.mon, spec.functor));
    checks.push_back(check_duality_compat(spec.cat, spec.mon, spec.functor));
    checks.push_back(check_utrace_compat(spec.cat, spec.mon, spec.functor));
    checks.push_back(check_u_irreducibility(spec.cat, spec.functor, grading));
    return checks;
}

void fill_grading(const SpecData& spec, const Grading& grading, RunReport& rep) {
    for (const auto& [dim, objs] : grading.classes) {
        std::vector<std::string> names;
        for (std::size_t a : objs) names.push_back(spec.cat.objects[a]);
        rep.grading.emplace_back(dim, std::move(names));
    }
}

void emit_report(const RunReport& rep, const std::string& format, bool timings) {
    if (format == "json")
        std::cout << render_json(rep, timings);
    else
        std::cout << render_text(rep, timings);
}

int cmd_validate(const std::string& path, const std::string& format,
                 bool timings) {
    SpecData spec = load_spec(path);
    RunReport rep;
    rep.tool_version = kVersion;
    rep.spec_name = spec.name;
    rep.command = "validate";
    auto t0 = std::chrono::steady_clock::now();
    Grading grading;
    rep.checks = validate_battery(spec, &grading);
    fill_grading(spec, grading, rep);
    rep.timings_ms.emplace_back("validate", ms_since(t0));
    emit_report(rep, format, timings);
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

nlohmann::ordered_json mat_json(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(row);
    }
    return rows;
}

int cmd_coend(const std::string& path, const std::string& out,
              const std::string& format) {
    SpecData spec = load_spec(path);
    Grading grading;
    CheckReport irr = check_u_irreducibility(spec.cat, spec.functor, &grading);
    if (irr.failed()) {
        RunReport rep;
        rep.tool_version = kVersion;
        rep.spec_name = spec.name;
        rep.command = "coend";
        rep.checks.push_back(irr);
        emit_report(rep, format, false);
        return kExitCheckFailure;
    }
    CoendSpace e = build_coend(spec.cat, spec.functor);
    CoreMaps maps = build_core_maps(spec.cat, spec.mon, spec.functor, e, grading);

    nlohmann::ordered_json doc;
    doc["tool"] = "vncore";
    doc["version"] = kVersion;
    doc["spec"] = spec.name;
    doc["coend_dim"] = e.dim();
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < spec.cat.size(); ++a)
        blocks.push_back({{"object", spec.cat.objects[a]},
                          {"offset", e.block_offset[a]},
                          {"size", e.block_size[a]}});
    doc["blocks"] = blocks;
    nlohmann::ordered_json jgrading = nlohmann::ordered_json::object();
    for (const auto& [dim, objs] : grading.classes) {
        std::vector<std::string> names;
        for (std::size_t a : objs) names.push_back(spec.cat.objects[a]);
        jgrading[std::to_string(dim)] = names;
    }
    doc["grading"] = jgrading;
    nlohmann::ordered_json jmaps;
    jmaps["mu"] = mat_json(maps.mu);
    jmaps["eta"] = mat_json(maps.eta);
    jmaps["delta"] = mat_json(maps.delta);
    jmaps["eps"] = mat_json(maps.eps);
    nlohmann::ordered_json jsigma = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < spec.cat.size(); ++a)
        jsigma[spec.cat.objects[a]] = mat_json(maps.sigma_blocks[a]);
    jmaps["sigma"] = jsigma;
    jmaps["antipode"] = mat_json(maps.antipode);
    doc["maps"] = jmaps;
    doc["verdict"] = "pass";
    std::string text = doc.dump(2) + "\n";

    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw SpecError("cannot write output file: " + out);
        f << text;
        std::cout << "coend dimension: " << e.dim() << "\nwrote " << out << "\n";
    } else {
        std::cout << text;
    }
    return kExitPass;
}

int cmd_check(const std::string& path, const std::string& suite,
              const std::string& format, bool timings,
              const std::string& debug_antipode,
              const std::string& density_gens) {
    SpecData spec = load_spec(path);
    RunReport rep;
    rep.tool_version = kVersion;
    rep.spec_name = spec.name;
    rep.command = "check";
    rep.suite = suite;

    auto t0 = std::chrono::steady_clock::now();
    Grading grading;
    rep.checks = validate_battery(spec, &grading);
    fill_grading(spec, grading, rep);
    rep.timings_ms.emplace_back("validate", ms_since(t0));
    if (!rep.pass()) {
        emit_report(rep, format, timings);
        return kExitCheckFailure;
    }

    t0 = std::chrono::steady_clock::now();
    CoendSpace e = build_coend(spec.cat, spec.functor);
    CoreMaps maps = build_core_maps(spec.cat, spec.mon, spec.functor, e, grading);
    rep.coend_dim = e.dim();
    rep.timings_ms.emplace_back("construct", ms_since(t0));

    AlgebraDatum datum =
        export_algebra_datum(e, maps, spec.functor.dim_u[spec.mon.unit]);
    if (debug_antipode == "zero")
        datum.antipode = Mat::zero(datum.dim, datum.dim);
    else if (debug_antipode == "identity")
        datum.antipode = Mat::identity(datum.dim);

    t0 = std::chrono::steady_clock::now();
    CheckReport algebra = check_algebra(datum);
    CheckReport coalgebra = check_coalgebra(datum);
    CheckReport vwb = check_very_weak_bialgebra(datum);
    CheckReport vn = check_vn_core(datum);
    CheckReport unital = check_unital_core(datum);
    rep.checks.push_back(algebra);
    rep.checks.push_back(coalgebra);
    rep.checks.push_back(vwb);
    rep.checks.push_back(vn);
    rep.checks.push_back(unital);

    if (suite == "all") {
        FusionReports fusion = check_fusion(datum);
        rep.checks.push_back(fusion.left_inverse);
        rep.checks.push_back(fusion.fgf);
        rep.checks.push_back(fusion.gfg);
        rep.checks.push_back(fusion.equation);
        DefectReports defects = check_counit_unit_defects(datum);
        rep.checks.push_back(defects.counit_mult);
        rep.checks.push_back(defects.rescaled_unit);

        std::vector<std::size_t> gens;
        if (density_gens.empty()) {
            for (std::size_t a = 0; a < spec.cat.size(); ++a) gens.push_back(a);
        } else {
            std::stringstream ss(density_gens);
            std::string tok;
            while (std::getline(ss, tok, ','))
                gens.push_back(spec.cat.index_of(tok));
        }
        rep.checks.push_back(check_density(spec.cat, spec.functor, gens));
        rep.checks.push_back(implication_check("implication_unital_vn", unital, vn));
        rep.checks.push_back(
            implication_check("implication_vn_fusion", vn, fusion.left_inverse));
    } else {
        rep.checks.push_back(implication_check("implication_unital_vn", unital, vn));
    }
    rep.timings_ms.emplace_back("axioms", ms_since(t0));

    emit_report(rep, format, timings);
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

int cmd_fixture(const std::string& name, const std::string& out) {
    emit_fixture(name, out);
    std::cout << "wrote fixture " << name << " to " << out << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coend algebra construction and exact axiom checking"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string path, out, format = "text", suite = "core";
    std::string debug_antipode, density_gens, fixture_name;
    bool timings = false;

    CLI::App* validate = app.add_subcommand("validate",
                                            "run the structural and functor "
                                            "hypothesis checks");
    validate->add_option("file", path, "spec file")->required();
    validate->add_option("--report", format, "report format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    validate->add_flag("--timings", timings, "include timings in the report");

    CLI::App* coend = app.add_subcommand("coend",
                                         "build the coend and its structure "
                                         "maps");
    coend->add_option("file", path, "spec file")->required();
    coend->add_option("--out", out, "write the maps document to a file");
    coend->add_option("--report", format, "report format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* check = app.add_subcommand("check",
                                         "build the coend datum and run the "
                                         "axiom suite");
    check->add_option("file", path, "spec file")->required();
    check->add_option("--suite", suite, "core|all")
        ->check(CLI::IsMember({"core", "all"}));
    check->add_option("--report", format, "report format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--timings", timings, "include timings in the report");
    check->add_option("--debug-antipode", debug_antipode,
                      "replace the built antipode (zero|identity)")
        ->check(CLI::IsMember({"zero", "identity"}));
    check->add_option("--density-gens", density_gens,
                      "comma-separated generating objects for the density "
                      "check (default: all)");

    CLI::App* fixture = app.add_subcommand("fixture", "emit a builtin fixture");
    fixture->add_option("--name", fixture_name, "fixture name")->required();
    fixture->add_option("--emit", out, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path, format, timings);
        if (app.got_subcommand(coend)) return cmd_coend(path, out, format);
        if (app.got_subcommand(check))
            return cmd_check(path, suite, format, timings, debug_antipode,
                             density_gens);
        if (app.got_subcommand(fixture)) return cmd_fixture(fixture_name, out);
    } catch (const DescentError& ex) {
        std::cerr << "descent failure: " << ex.what() << "\n  at "
                  << ex.witness.where;
        if (ex.witness.row >= 0)
            std::cerr << " entry (" << ex.witness.row << "," << ex.witness.col
                      << ") = " << ex.witness.value;
        std::cerr << "\n";
        return kExitDescentFailure;
    } catch (const SpecError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
