#pragma once

#include <string>
#include <vector>

#include "gkm21/abelian.hpp"
#include "gkm21/config_graph.hpp"
#include "gkm21/models.hpp"
#include "gkm21/nslattice.hpp"
#include "gkm21/quatorder.hpp"
#include "gkm21/reference_tables.hpp"

namespace gkm21::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

// Shared, lazily built data.  Everything is deterministic; the caches only
// avoid repeated construction across suites.
const std::vector<quat::GeneratorSolution>& solutions();
const quat::GeneratorSolution& designated();
const std::vector<ab::CurveOnA>& curves();
const cfg::ConfigGraph& derived_graph();
const cfg::ConfigGraph& rules_graph();
const ns::GramData& gram_data();

std::array<std::array<long long, 8>, 8> derived_intersection_table();

struct CellDiff {
    int row = 0, col = 0;
    std::string transcribed;
    std::string derived;
};

// Derivation versus the bundled transcriptions; see reference_tables.hpp
// for the documented expectations.
std::vector<CellDiff> intersection_table_diff();
std::vector<CellDiff> f2_table_diff();
std::vector<CellDiff> f4_table_diff();

SuiteReport suite_gf2k();
SuiteReport suite_ecurve();
SuiteReport suite_quatorder();
SuiteReport suite_nslattice();
SuiteReport suite_abelian();
SuiteReport suite_gkm();
SuiteReport suite_models();

// All suites in dependency order.
std::vector<SuiteReport> run_all();

}  // namespace gkm21::verify
