#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gkm21/abelian.hpp"
#include "gkm21/nslattice.hpp"

namespace gkm21::cfg {

// Node of the 42-curve configuration: the image of one of the 24 elliptic
// curves, or one of the 18 exceptional curves l_qr / l'_qr over the
// rational point P_q x P_r.
struct ConfigNode {
    bool exceptional = false;
    CurveName curve{};   // valid when !exceptional
    int q = 0, r = 0;    // valid when exceptional
    bool second_family = false;
    std::string label() const;
};

// Fixed node order: E0..E2, F0..F2, V0..V2, pi0..pi2, l00..l22 (row-major),
// then the primed family in the same pattern.
std::vector<ConfigNode> config_nodes();
int node_index(const ConfigNode& n);
int image_node_index(const CurveName& name);
int exceptional_node_index(bool second_family, int q, int r);

struct ConfigGraph {
    std::vector<ConfigNode> nodes;          // 42
    ns::IntMatrix incidence;                // 42x42, zero diagonal
};

// Resolution bookkeeping: cross-family image incidence counts the size-3
// orbits of the common torsion points (rational common points are separated
// by the two-stage blow-up), same-family images are disjoint downstairs,
// l_qr meets the four opposite-family images through P_qr once each, and
// l_qr meets l'_qr once (the two halves of one A_2 resolution).
ConfigGraph derive_incidence(const std::vector<ab::CurveOnA>& curves);

// The same matrix filled from the closed-form incidence rules.
ConfigGraph closed_form_incidence();

struct CheckRow {
    std::string name;
    bool pass;
    std::string detail;
};

// 21+21 bipartite, within-family zero, 5-regular, entries 0/1, 105 edges.
std::vector<CheckRow> verify_config(const ConfigGraph& g);

struct FibrationReport {
    std::vector<std::vector<int>> hexagons;  // node indices, cycle order
    std::vector<CheckRow> checks;
    int euler_number = 0;
    bool pass() const;
};

// Partitions the 24 image curves into alternating 6-cycles, checks the four
// fiber classes (square zero, equal pairing against everything), and the 18
// exceptional curves as sections meeting every fiber once.
FibrationReport fibration_analysis(const ConfigGraph& g);

struct ShiodaTateReport {
    int picard_number = 0;
    long long discriminant = 0;
    long long span_index = 0;        // 0 when |disc| is not 4*square
    int mordell_weil_order = 0;
    int artin_invariant = 0;         // from |disc| = 2^(2*sigma)
    std::string mordell_weil_structure_unverified;
    std::vector<CheckRow> checks;
    bool pass() const;
};

ShiodaTateReport shioda_tate_report(const ConfigGraph& g, const ns::GramData& gram);

enum class Family { First, Second };

std::vector<CheckRow> contract_family(const ConfigGraph& g, Family family);

// Gram data of the 42 curves (incidence with diagonal -2).
ns::GramData gram_of_config(const ConfigGraph& g);

}  // namespace gkm21::cfg
