#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ptq {

// One verification outcome. A deviation can be a float or the marker
// "exact-zero"; a tolerance can be a float or the marker "exact".
// "exact-zero" passes only "exact".
struct CheckRecord {
    std::string id;
    std::string paper_ref;
    bool pass = false;
    bool deviation_exact_zero = false;
    double deviation = 0;
    bool tolerance_exact = false;
    double tolerance = 0;
    std::int64_t runtime_ms = 0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::string version;
    std::vector<CheckRecord> checks;

    int pass_count() const;
    int fail_count() const;
    bool all_pass() const { return fail_count() == 0; }

    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();  // all, algebra, table, ...

// Runs the selected suite with the given seed and float tolerance. Exact
// checks ignore the tolerance. Throws std::invalid_argument for an unknown
// suite name.
Report run_suite(const std::string& suite, std::uint64_t seed, double tolerance);

}  // namespace ptq
