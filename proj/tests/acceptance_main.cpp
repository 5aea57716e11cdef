// Acceptance harness: runs the eight acceptance criteria end to end and
// prints one pass/fail line per criterion. Usage:
//   vncore_acceptance            run every criterion
//   vncore_acceptance <n>        run criterion n only
// The CLI binary under test is taken from $VNCORE_CLI (needed by criteria
// using exit codes and report bytes).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vncore/axioms.hpp"
#include "vncore/coend.hpp"
#include "vncore/fixtures.hpp"

#include "helpers.hpp"

namespace {

using namespace vncore;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* p = std::getenv("VNCORE_CLI");
    return p ? p : "./vncore";
}

CliResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult res;
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("vncore_accept_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

struct SuiteResult {
    SpecData spec;
    CoendSpace e;
    CoreMaps maps;
    AlgebraDatum datum;
    std::map<std::string, CheckReport> checks;
    double elapsed_s = 0;
};

void put(SuiteResult& out, const CheckReport& rep) { out.checks[rep.name] = rep; }

SuiteResult run_suite(const std::string& fixture) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult out;
    out.spec = make_fixture(fixture);
    const SpecData& spec = out.spec;

    put(out, report_validation(validate_category(spec.cat)));
    put(out, report_validation(validate_monoidal(spec.cat, spec.mon)));
    put(out, report_validation(validate_functor(spec.cat, spec.mon, spec.functor)));
    put(out, check_separability(spec.cat, spec.mon, spec.functor));
    put(out, check_frobenius(spec.cat, spec.mon, spec.functor));
    put(out, check_braided_compat(spec.cat, spec.mon, spec.functor));
    put(out, check_duality_compat(spec.cat, spec.mon, spec.functor));
    put(out, check_utrace_compat(spec.cat, spec.mon, spec.functor));
    Grading grading;
    put(out, check_u_irreducibility(spec.cat, spec.functor, &grading));

    out.e = build_coend(spec.cat, spec.functor);
    out.maps = build_core_maps(spec.cat, spec.mon, spec.functor, out.e, grading);
    out.datum =
        export_algebra_datum(out.e, out.maps, spec.functor.dim_u[spec.mon.unit]);

    put(out, check_algebra(out.datum));
    put(out, check_coalgebra(out.datum));
    put(out, check_very_weak_bialgebra(out.datum));
    CheckReport vn = check_vn_core(out.datum);
    CheckReport unital = check_unital_core(out.datum);
    put(out, vn);
    put(out, unital);
    FusionReports fusion = check_fusion(out.datum);
    put(out, fusion.left_inverse);
    put(out, fusion.fgf);
    put(out, fusion.gfg);
    put(out, fusion.equation);
    DefectReports defects = check_counit_unit_defects(out.datum);
    put(out, defects.counit_mult);
    put(out, defects.rescaled_unit);
    std::vector<std::size_t> gens;
    for (std::size_t a = 0; a < spec.cat.size(); ++a) gens.push_back(a);
    put(out, check_density(spec.cat, spec.functor, gens));
    put(out, implication_check("implication_unital_vn", unital, vn));
    put(out, implication_check("implication_vn_fusion", vn, fusion.left_inverse));

    out.elapsed_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return out;
}

bool is_pass(const SuiteResult& s, const std::string& name) {
    auto it = s.checks.find(name);
    return it != s.checks.end() &&
           it->second.verdict == CheckReport::Verdict::pass;
}

struct Tally {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += detail.empty() ? what : "; " + what;
        }
    }
};

bool criterion1() {
    SuiteResult s = run_suite("trivial");
    Tally t;
    t.expect(s.e.dim() == 1, "coend dim != 1");
    for (const auto& [name, rep] : s.checks)
        t.expect(rep.verdict == CheckReport::Verdict::pass,
                 "check not exactly satisfied: " + name);
    t.expect(s.elapsed_s < 1.0, "runtime over 1 s");
    std::printf("%s criterion 1: trivial fixture (dim %zu, %.3fs)%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", s.e.dim(), s.elapsed_s,
                t.ok ? "" : " -- ", t.detail.c_str());
    return t.ok;
}

bool criterion2() {
    SuiteResult s = run_suite("rep-c2");
    Tally t;
    t.expect(s.e.dim() == 2, "coend dim != 2");
    std::size_t oracle =
        s.e.ambient_dim - vntest::bareiss_rank(s.e.relations);
    t.expect(oracle == 2, "brute-force rank oracle disagrees");
    t.expect(oracle == (std::size_t{1} << 1), "classical dim |G| disagrees");
    for (const char* name :
         {"algebra", "coalgebra", "very_weak_bialgebra", "unital_core",
          "vn_core", "fusion_left_inverse", "fusion_fgf", "fusion_gfg"})
        t.expect(is_pass(s, name), std::string(name) + " failed");
    t.expect(s.maps.antipode * s.maps.antipode == Mat::identity(s.e.dim()),
             "S^2 != identity");
    Mat epseta = s.maps.eps * s.maps.eta;
    t.expect(epseta == Mat::identity(1), "eps.eta != 1");
    t.expect(s.spec.functor.dim_u[s.spec.mon.unit] == 1, "dim U(I) != 1");
    t.expect(s.elapsed_s < 5.0, "runtime over 5 s");
    std::printf("%s criterion 2: rep-c2 (dim %zu, %.3fs)%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", s.e.dim(), s.elapsed_s,
                t.ok ? "" : " -- ", t.detail.c_str());
    return t.ok;
}

bool criterion3() {
    SuiteResult s = run_suite("rep-c2c2");
    Tally t;
    t.expect(s.e.dim() == 4, "coend dim != 4");
    for (const auto& [name, rep] : s.checks)
        t.expect(rep.verdict == CheckReport::Verdict::pass,
                 "check not exactly satisfied: " + name);
    t.expect(s.elapsed_s < 10.0, "runtime over 10 s");
    std::printf("%s criterion 3: rep-c2c2 (dim %zu, %.3fs)%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", s.e.dim(), s.elapsed_s,
                t.ok ? "" : " -- ", t.detail.c_str());
    return t.ok;
}

bool criterion4() {
    SuiteResult s = run_suite("ho-c2");
    Tally t;
    t.expect(is_pass(s, "separability"), "separability failed");
    Mat scalar = s.spec.functor.i0 * s.spec.functor.r0;
    t.expect(scalar.at(0, 0) == Rational(2), "i0.r0 != 2");
    Mat epseta = s.maps.eps * s.maps.eta;
    t.expect(epseta.at(0, 0) == Rational(2), "eps.eta != 2");
    t.expect(is_pass(s, "very_weak_bialgebra"), "very_weak_bialgebra failed");
    t.expect(is_pass(s, "unital_core"), "unital_core failed");
    t.expect(is_pass(s, "vn_core"), "vn_core failed");
    t.expect(is_pass(s, "fusion_left_inverse"), "fusion g.f != 1");
    t.expect(s.elapsed_s < 10.0, "runtime over 10 s");
    std::printf("%s criterion 4: ho-c2 (dim %zu, %.3fs)%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", s.e.dim(), s.elapsed_s,
                t.ok ? "" : " -- ", t.detail.c_str());
    return t.ok;
}

bool criterion5() {
    Tally t;
    for (const auto& name : fixture_names()) {
        SuiteResult s = run_suite(name);
        t.expect(is_pass(s, "implication_unital_vn"),
                 name + ": unital_core pass must imply vn_core pass");
        t.expect(is_pass(s, "implication_vn_fusion"),
                 name + ": vn_core pass must imply g.f = 1");
    }
    std::printf("%s criterion 5: implication meta-checks%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", t.ok ? "" : " -- ",
                t.detail.c_str());
    return t.ok;
}

bool criterion6() {
    Tally t;
    auto dir = scratch_dir();

    // (a) perturb one entry of r in ho-c2
    auto ho_path = dir / "ho-c2.json";
    emit_fixture("ho-c2", ho_path.string());
    {
        std::ifstream in(ho_path);
        std::stringstream buf;
        buf << in.rdbuf();
        auto j = nlohmann::ordered_json::parse(buf.str());
        bool bumped = false;
        for (auto& entry : j["functor"]["r"])
            if (entry["a"] == "g" && entry["b"] == "g" && !bumped) {
                entry["m"][0][2] = "2";  // was 1: breaks r.i = 1
                bumped = true;
            }
        t.expect(bumped, "could not perturb r");
        std::ofstream out(dir / "ho-c2-perturbed.json");
        out << j.dump(2) << "\n";
    }
    CliResult a1 = run_cli("validate " + (dir / "ho-c2-perturbed.json").string() +
                           " --report json");
    CliResult a2 = run_cli("validate " + (dir / "ho-c2-perturbed.json").string() +
                           " --report json");
    t.expect(a1.exit_code == 1 || a1.exit_code == 3,
             "(a) expected exit 1 or 3, got " + std::to_string(a1.exit_code));
    t.expect(a1.output.find("witness") != std::string::npos,
             "(a) no witness in the report");
    t.expect(a1.output.find("separability") != std::string::npos &&
                 a1.output.find("\"fail\"") != std::string::npos,
             "(a) separability failure not reported");
    t.expect(a1.output == a2.output && a1.exit_code == a2.exit_code,
             "(a) not deterministic");

    // (b) corrupt the antipode on rep-c2 via the debug flag
    auto rep_path = dir / "rep-c2.json";
    emit_fixture("rep-c2", rep_path.string());
    CliResult b1 = run_cli("check " + rep_path.string() +
                           " --suite core --debug-antipode zero --report json");
    CliResult b2 = run_cli("check " + rep_path.string() +
                           " --suite core --debug-antipode zero --report json");
    t.expect(b1.exit_code == 1,
             "(b) expected exit 1, got " + std::to_string(b1.exit_code));
    t.expect(b1.output.find("unital_core") != std::string::npos &&
                 b1.output.find("\"fail\"") != std::string::npos,
             "(b) unital_core failure not reported");
    t.expect(b1.output == b2.output && b1.exit_code == b2.exit_code,
             "(b) not deterministic");

    // (c) density with gens = {1} fails at the sign object
    CliResult c1 = run_cli("check " + rep_path.string() +
                           " --suite all --density-gens 1 --report json");
    CliResult c2 = run_cli("check " + rep_path.string() +
                           " --suite all --density-gens 1 --report json");
    t.expect(c1.exit_code == 1,
             "(c) expected exit 1, got " + std::to_string(c1.exit_code));
    t.expect(c1.output.find("density") != std::string::npos &&
                 c1.output.find("object g") != std::string::npos,
             "(c) density failure at g not reported");
    t.expect(c1.output == c2.output && c1.exit_code == c2.exit_code,
             "(c) not deterministic");

    std::printf("%s criterion 6: negative controls%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", t.ok ? "" : " -- ",
                t.detail.c_str());
    return t.ok;
}

bool criterion7() {
    Tally t;
    auto dir = scratch_dir();
    for (const auto& name : fixture_names()) {
        auto path = dir / (name + ".json");
        emit_fixture(name, path.string());
        CliResult r1 =
            run_cli("check " + path.string() + " --suite all --report json");
        CliResult r2 =
            run_cli("check " + path.string() + " --suite all --report json");
        t.expect(r1.output == r2.output,
                 name + ": reports differ between runs");
        t.expect(r1.exit_code == r2.exit_code, name + ": exit codes differ");
        t.expect(!r1.output.empty(), name + ": empty report");
    }
    std::printf("%s criterion 7: byte-identical canonical reports%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", t.ok ? "" : " -- ",
                t.detail.c_str());
    return t.ok;
}

bool criterion8() {
    Tally t;
    for (const auto& name : fixture_names()) {
        SuiteResult s = run_suite(name);
        AlgebraDatum dd = dualize(dualize(s.datum));
        t.expect(dd.mu == s.datum.mu && dd.eta == s.datum.eta &&
                     *dd.delta == *s.datum.delta && *dd.eps == *s.datum.eps &&
                     *dd.antipode == *s.datum.antipode,
                 name + ": dualize.dualize != identity");
    }
    SuiteResult rep = run_suite("rep-c2");
    AlgebraDatum dual = dualize(rep.datum);
    t.expect(check_algebra(dual).verdict == CheckReport::Verdict::pass,
             "dual of rep-c2 fails check_algebra");
    std::printf("%s criterion 8: dualize involution%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", t.ok ? "" : " -- ",
                t.detail.c_str());
    return t.ok;
}

// Exit-code contract and miscellaneous CLI surface, exercised end to end.
bool cli_smoke() {
    Tally t;
    auto dir = scratch_dir();

    // exit 2: unknown fixture, unreadable file, malformed file
    t.expect(run_cli("fixture --name nope --emit " + (dir / "x.json").string())
                     .exit_code == 2,
             "unknown fixture should exit 2");
    t.expect(run_cli("validate /nonexistent/vncore-missing.json").exit_code == 2,
             "missing file should exit 2");
    {
        std::ofstream bad(dir / "bad.json");
        bad << "{ not json\n";
    }
    t.expect(run_cli("validate " + (dir / "bad.json").string()).exit_code == 2,
             "malformed file should exit 2");

    // exit 3: a non-natural r on an input whose coend has a relation makes
    // the multiplication fail its descent assertion
    SpecData arrow = vntest::make_arrow();
    arrow.functor.r[1][1] = Rational(2) * arrow.functor.r[1][1];
    save_spec(arrow, (dir / "arrow-bad-r.json").string());
    CliResult bad_r = run_cli("coend " + (dir / "arrow-bad-r.json").string());
    t.expect(bad_r.exit_code == 3,
             "descent failure should exit 3, got " +
                 std::to_string(bad_r.exit_code));
    t.expect(bad_r.output.find("descend") != std::string::npos,
             "descent message missing");

    // coend output document: deterministic, carries the dimension and maps
    auto rep_path = dir / "rep-c2.json";
    emit_fixture("rep-c2", rep_path.string());
    CliResult doc1 = run_cli("coend " + rep_path.string());
    CliResult doc2 = run_cli("coend " + rep_path.string());
    t.expect(doc1.exit_code == 0, "coend should exit 0");
    t.expect(doc1.output == doc2.output, "coend output not deterministic");
    t.expect(doc1.output.find("\"coend_dim\": 2") != std::string::npos,
             "coend_dim missing from the document");
    t.expect(doc1.output.find("\"antipode\"") != std::string::npos,
             "antipode missing from the document");
    CliResult out_file = run_cli("coend " + rep_path.string() + " --out " +
                                 (dir / "maps.json").string());
    t.expect(out_file.exit_code == 0 &&
                 std::filesystem::exists(dir / "maps.json"),
             "coend --out did not write the document");

    // json report mode parses and carries the canonical fields
    CliResult rep = run_cli("check " + rep_path.string() +
                            " --suite core --report json");
    t.expect(rep.exit_code == 0, "check core should exit 0 on rep-c2");
    auto parsed = nlohmann::ordered_json::parse(rep.output, nullptr, false);
    t.expect(!parsed.is_discarded(), "json report does not parse");
    if (!parsed.is_discarded()) {
        t.expect(parsed["verdict"] == "pass", "json verdict wrong");
        t.expect(parsed["coend_dim"] == 2, "json coend_dim wrong");
    }
    t.expect(run_cli("check " + rep_path.string() + " --suite all").exit_code ==
                 0,
             "check all should exit 0 on rep-c2");

    // the ho-c2 hypothesis battery is green even though its axiom suite is
    // not; validate must exit 0
    auto ho_clean = dir / "ho-c2-clean.json";
    emit_fixture("ho-c2", ho_clean.string());
    t.expect(run_cli("validate " + ho_clean.string()).exit_code == 0,
             "validate should exit 0 on ho-c2");

    auto trivial_path = dir / "trivial.json";
    emit_fixture("trivial", trivial_path.string());
    CliResult triv = run_cli("coend " + trivial_path.string());
    t.expect(triv.exit_code == 0 &&
                 triv.output.find("\"coend_dim\": 1") != std::string::npos,
             "trivial coend dimension not reported as 1");

    std::printf("%s cli smoke: exit-code contract and output surfaces%s%s\n",
                t.ok ? "[PASS]" : "[FAIL]", t.ok ? "" : " -- ",
                t.detail.c_str());
    return t.ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    if (argc > 1 && std::string(argv[1]) == "cli") {
        return cli_smoke() ? 0 : 1;
    }
    if (argc > 1) {
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 8) {
            std::cerr << "criterion number must be 1..8 or 'cli'\n";
            return 2;
        }
        if (!criteria[n - 1]()) ++failures;
    } else {
        for (auto* c : criteria)
            if (!c()) ++failures;
        if (!cli_smoke()) ++failures;
    }
    return failures;
}
