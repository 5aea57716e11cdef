#include "vncore/report.hpp"

#include <sstream>

#include "json.hpp"

namespace vncore {

const char* to_string(CheckReport::Verdict v) {
    switch (v) {
        case CheckReport::Verdict::pass: return "pass";
        case CheckReport::Verdict::fail: return "fail";
        case CheckReport::Verdict::info: return "informational";
    }
    return "?";
}

CheckReport report_pass(std::string name) {
    return CheckReport{std::move(name), CheckReport::Verdict::pass, std::nullopt};
}

CheckReport report_fail(std::string name, Witness w) {
    return CheckReport{std::move(name), CheckReport::Verdict::fail, std::move(w)};
}

CheckReport report_residual(std::string name, const Mat& residual, bool gating,
                            std::string where) {
    auto nz = residual.first_nonzero();
    if (!nz) return report_pass(std::move(name));
    Witness w;
    w.where = std::move(where);
    w.row = static_cast<long>(nz->first);
    w.col = static_cast<long>(nz->second);
    w.value = residual.at(nz->first, nz->second).str();
    CheckReport rep;
    rep.name = std::move(name);
    rep.verdict = gating ? CheckReport::Verdict::fail : CheckReport::Verdict::info;
    rep.witness = std::move(w);
    return rep;
}

CheckReport report_validation(const ValidationReport& v) {
    if (v.ok()) return report_pass(v.name);
    Witness w;
    w.where = v.failures.front() + " (+" +
              std::to_string(v.failures.size() - 1) + " more)";
    return report_fail(v.name, std::move(w));
}

std::string render_text(const RunReport& rep, bool with_timings) {
    std::ostringstream os;
    os << "spec: " << rep.spec_name << "  command: " << rep.command;
    if (!rep.suite.empty()) os << "  suite: " << rep.suite;
    os << "\n";
    if (rep.coend_dim) os << "coend dimension: " << *rep.coend_dim << "\n";
    if (!rep.grading.empty()) {
        os << "grading:";
        for (const auto& [dim, objs] : rep.grading) {
            os << "  " << dim << " -> {";
            for (std::size_t k = 0; k < objs.size(); ++k)
                os << (k ? "," : "") << objs[k];
            os << "}";
        }
        os << "\n";
    }
    for (const auto& c : rep.checks) {
        const char* mark = c.verdict == CheckReport::Verdict::pass ? "✓"
                           : c.verdict == CheckReport::Verdict::fail ? "✗"
                                                                     : "•";
        os << mark << " " << c.name;
        if (c.verdict == CheckReport::Verdict::info) os << " (informational)";
        if (c.witness) {
            os << "  [" << c.witness->where;
            if (c.witness->row >= 0)
                os << " entry (" << c.witness->row << "," << c.witness->col
                   << ") = " << c.witness->value;
            os << "]";
        }
        os << "\n";
    }
    os << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
    if (with_timings)
        for (const auto& [k, ms] : rep.timings_ms)
            os << "time " << k << ": " << ms << " ms\n";
    return os.str();
}

std::string render_json(const RunReport& rep, bool with_timings) {
    nlohmann::ordered_json j;
    j["tool"] = "vncore";
    j["version"] = rep.tool_version;
    j["spec"] = rep.spec_name;
    j["command"] = rep.command;
    if (!rep.suite.empty()) j["suite"] = rep.suite;
    if (rep.coend_dim) j["coend_dim"] = *rep.coend_dim;
    if (!rep.grading.empty()) {
        nlohmann::ordered_json g = nlohmann::ordered_json::object();
        for (const auto& [dim, objs] : rep.grading) g[std::to_string(dim)] = objs;
        j["grading"] = g;
    }
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["verdict"] = to_string(c.verdict);
        if (c.witness) {
            nlohmann::ordered_json w;
            w["where"] = c.witness->where;
            if (c.witness->row >= 0) {
                w["entry"] = {c.witness->row, c.witness->col};
                w["value"] = c.witness->value;
            }
            e["witness"] = w;
        }
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    if (with_timings) {
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [k, ms] : rep.timings_ms) t[k] = ms;
        j["timings_ms"] = t;
    }
    return j.dump(2) + "\n";
}

}  // namespace vncore
