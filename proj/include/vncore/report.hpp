#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vncore/category.hpp"
#include "vncore/mat.hpp"

namespace vncore {

/// Coordinates of the lexicographically first nonzero residual entry.
struct Witness {
    std::string where;
    long row = -1;
    long col = -1;
    std::string value;
};

/// Outcome of one named check. `pass` always means the residual was exactly
/// zero; `fail` is a nonzero residual on a gating check; `info` is a nonzero
/// residual on an informational check (recorded, never gates).
struct CheckReport {
    enum class Verdict { pass, fail, info };

    std::string name;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;

    bool failed() const { return verdict == Verdict::fail; }
};

const char* to_string(CheckReport::Verdict v);

CheckReport report_pass(std::string name);
CheckReport report_fail(std::string name, Witness w);

/// Zero residual -> pass; nonzero -> fail (or info when not gating), with the
/// first nonzero entry as witness.
CheckReport report_residual(std::string name, const Mat& residual, bool gating,
                            std::string where);

/// Collapse a validator's failure list into a check entry (witness = first
/// failure, the count recorded alongside).
CheckReport report_validation(const ValidationReport& v);

struct RunReport {
    std::string tool_version;
    std::string spec_name;
    std::string command;
    std::string suite;  // empty unless `check`
    std::optional<std::size_t> coend_dim;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> grading;
    std::vector<CheckReport> checks;
    std::vector<std::pair<std::string, double>> timings_ms;  // opt-in, non-canonical

    bool pass() const {
        for (const auto& c : checks)
            if (c.failed()) return false;
        return true;
    }
};

std::string render_text(const RunReport& rep, bool with_timings);
std::string render_json(const RunReport& rep, bool with_timings);

}  // namespace vncore
