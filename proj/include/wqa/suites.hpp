#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wqa/report.hpp"

namespace wqa {

enum class Mode { Generic, Cyclotomic };

struct RunConfig {
    Mode mode = Mode::Generic;
    int d = 3;             // cyclotomic order; also the quotient order for the rmatrix suite
    bool v_flavor = false; // flavor-dependent suites run on the sandwiched algebra
    long degree_bound = 4;
    int samples = 200;
    unsigned seed = 1;
    bool timing = true;
};

// Throws InvalidArgument / InvalidOrder on a bad configuration.
void validate(const RunConfig& cfg);

struct SuiteInfo {
    std::string name;
    std::string summary;
};

// Registered suites in canonical order.
const std::vector<SuiteInfo>& suites();
bool has_suite(const std::string& name);
// Throws InvalidArgument for an unknown name.
Report run_suite(const std::string& name, const RunConfig& cfg);

// Individual suites.
Report suite_weak_antipode(const RunConfig& cfg);
Report suite_antipode_square(const RunConfig& cfg);
Report suite_bialgebra(const RunConfig& cfg);
Report suite_relations(const RunConfig& cfg);
Report suite_wv_connection(const RunConfig& cfg);
// [E^m, K^n]-type and [E, F^m]-type closed forms, w up to m, n <= w_bound and v up to v_bound.
Report suite_commutation(const RunConfig& cfg, long w_bound = 5, long v_bound = 3);
Report suite_grouplike(const RunConfig& cfg);
Report suite_ore(const RunConfig& cfg);
// J central, (J - 1) annihilators, confluence, the J = 1 quotient, quotient dimension.
Report suite_structure(const RunConfig& cfg, int confluence_samples = 500);
Report suite_rmatrix(const RunConfig& cfg);

} // namespace wqa
