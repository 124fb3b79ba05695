#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gkm21/config_graph.hpp"
#include "gkm21/gf2k.hpp"

namespace gkm21::models {

using gf2k::Fe;

// Point of P^2(F_4), canonical representative: first nonzero coordinate 1.
struct ProjPoint {
    std::array<Fe, 3> coords;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint canonicalize(std::array<Fe, 3> coords);
std::vector<ProjPoint> enumerate_proj_points();  // 21, deterministic order
std::string to_string(const ProjPoint& p);

// Bipartite (21)_5 incidence structure; adjacency[i][j] connects part-one
// node i with part-two node j.
struct BipartiteGraph {
    std::vector<std::string> part1;
    std::vector<std::string> part2;
    std::vector<std::vector<int>> adjacency;  // |part1| x |part2|, 0/1
};

// Points versus lines of the projective plane over F_4 (dot product zero).
BipartiteGraph pg24();

// The 42 lines of the bidegree (1,2)+(2,1) surface in P^2 x P^2: x-constant
// lines against y-constant lines; incidence holds when the product point
// satisfies both surface equations (computed, not assumed).
BipartiteGraph p2p2_lines();

// Cross-family incidence of a 42-curve configuration graph.
BipartiteGraph from_config_graph(const cfg::ConfigGraph& g);

struct InvolutionReport {
    std::vector<cfg::CheckRow> checks;
    bool pass() const;
};

// The coordinate swap A(a) <-> B(a) on p2p2_lines: an incidence-preserving
// involution exchanging the families, with no fixed line.
InvolutionReport involution_swap(const BipartiteGraph& g);

// Diagonal points of P^2(F_4) lying on the surface (all satisfy
// a0^3+a1^3+a2^3 = 0); returns how many there are.
int fixed_curve_count();

struct GraphIso {
    bool family_swapped = false;
    std::vector<int> part1_map;  // g1.part1[i] -> target index
    std::vector<int> part2_map;
};

// Deterministic backtracking search with adjacency pruning; empty optional
// means the graphs are not isomorphic.
std::optional<GraphIso> graph_iso(const BipartiteGraph& g1, const BipartiteGraph& g2);

bool check_iso(const BipartiteGraph& g1, const BipartiteGraph& g2, const GraphIso& iso);

}  // namespace gkm21::models
