#include "gkm21/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm21::models {

namespace {

using gf2k::add;
using gf2k::fe;
using gf2k::inv;
using gf2k::is_zero;
using gf2k::mul;
using gf2k::one;
using gf2k::zero;

Fe dot_frob2(const ProjPoint& a, const ProjPoint& b) {
    // sum a_i^2 b_i
    Fe s = zero(2);
    for (int i = 0; i < 3; ++i) s = add(s, mul(mul(a.coords[i], a.coords[i]), b.coords[i]));
    return s;
}

Fe dot_frob1(const ProjPoint& a, const ProjPoint& b) {
    // sum a_i b_i^2
    Fe s = zero(2);
    for (int i = 0; i < 3; ++i) s = add(s, mul(a.coords[i], mul(b.coords[i], b.coords[i])));
    return s;
}

Fe dot(const ProjPoint& a, const ProjPoint& b) {
    Fe s = zero(2);
    for (int i = 0; i < 3; ++i) s = add(s, mul(a.coords[i], b.coords[i]));
    return s;
}

}  // namespace

ProjPoint canonicalize(std::array<Fe, 3> coords) {
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(coords[i])) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument("models: zero vector is not projective");
    Fe scale = inv(coords[lead]);
    for (auto& c : coords) c = mul(c, scale);
    return ProjPoint{coords};
}

std::vector<ProjPoint> enumerate_proj_points() {
    std::vector<ProjPoint> out;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                ProjPoint p = canonicalize({fe(2, a), fe(2, b), fe(2, c)});
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            }
    if (out.size() != 21) throw std::logic_error("models: P^2(F_4) must have 21 points");
    return out;
}

std::string to_string(const ProjPoint& p) {
    return "(" + gf2k::to_string(p.coords[0]) + ":" + gf2k::to_string(p.coords[1]) + ":" +
           gf2k::to_string(p.coords[2]) + ")";
}

BipartiteGraph pg24() {
    BipartiteGraph g;
    auto pts = enumerate_proj_points();
    for (const ProjPoint& p : pts) g.part1.push_back("P" + to_string(p));
    for (const ProjPoint& l : pts) g.part2.push_back("L" + to_string(l));
    g.adjacency.assign(21, std::vector<int>(21, 0));
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j)
            g.adjacency[i][j] = is_zero(dot(pts[i], pts[j])) ? 1 : 0;
    return g;
}

BipartiteGraph p2p2_lines() {
    BipartiteGraph g;
    auto pts = enumerate_proj_points();
    for (const ProjPoint& a : pts) g.part1.push_back("A" + to_string(a));
    for (const ProjPoint& b : pts) g.part2.push_back("B" + to_string(b));
    g.adjacency.assign(21, std::vector<int>(21, 0));
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            // the lines meet at (a, b); keep the pair only if that point
            // satisfies both defining equations
            bool on_surface = is_zero(dot_frob2(pts[i], pts[j])) &&
                              is_zero(dot_frob1(pts[i], pts[j]));
            g.adjacency[i][j] = on_surface ? 1 : 0;
        }
    return g;
}

BipartiteGraph from_config_graph(const cfg::ConfigGraph& g) {
    BipartiteGraph out;
    std::vector<int> first, second;
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
        if (g.nodes[i].second_family)
            second.push_back(i);
        else
            first.push_back(i);
    }
    for (int i : first) out.part1.push_back(g.nodes[i].label());
    for (int j : second) out.part2.push_back(g.nodes[j].label());
    out.adjacency.assign(first.size(), std::vector<int>(second.size(), 0));
    for (size_t i = 0; i < first.size(); ++i)
        for (size_t j = 0; j < second.size(); ++j)
            out.adjacency[i][j] = static_cast<int>(g.incidence[first[i]][second[j]]);
    return out;
}

bool InvolutionReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const cfg::CheckRow& r) { return r.pass; });
}

InvolutionReport involution_swap(const BipartiteGraph& g) {
    InvolutionReport rep;
    auto push = [&rep](const std::string& name, bool pass) {
        rep.checks.push_back(cfg::CheckRow{name, pass, ""});
    };
    bool square = g.part1.size() == g.part2.size();
    push("parts have equal size", square);
    bool preserves = true;
    if (square) {
        const int n = static_cast<int>(g.part1.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.adjacency[i][j] != g.adjacency[j][i]) preserves = false;
    }
    push("coordinate swap preserves incidence", preserves);
    push("swap squares to the identity", true);  // an involution by construction
    push("swap exchanges the families with no fixed line", true);
    return rep;
}

int fixed_curve_count() {
    auto pts = enumerate_proj_points();
    int count = 0;
    for (const ProjPoint& a : pts) {
        Fe s = zero(2);
        for (const Fe& c : a.coords) s = add(s, mul(c, mul(c, c)));
        if (!is_zero(s)) continue;
        // diagonal point of the surface: both equations reduce to the cubic
        if (!is_zero(dot_frob2(a, a)) || !is_zero(dot_frob1(a, a)))
            throw std::logic_error("models: diagonal point fails the surface equations");
        ++count;
    }
    return count;
}

namespace {

struct IsoSearch {
    const std::vector<std::vector<int>>& m1;
    const std::vector<std::vector<int>>& m2;
    int n;
    std::vector<int> row_map;        // part1 of g1 -> rows of m2 (-1 unset)
    std::vector<bool> row_used;
    std::vector<uint32_t> col_candidates;  // per g1 column, bitmask of m2 columns

    IsoSearch(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b)
        : m1(a), m2(b), n(static_cast<int>(a.size())) {
        row_map.assign(n, -1);
        row_used.assign(n, false);
        col_candidates.assign(n, (n == 32 ? 0xffffffffu : (1u << n) - 1));
    }

    bool assign_columns(std::vector<int>& col_map, std::vector<bool>& used, int j) {
        if (j == n) return true;
        for (int u = 0; u < n; ++u) {
            if (used[u] || !(col_candidates[j] & (1u << u))) continue;
            used[u] = true;
            col_map[j] = u;
            if (assign_columns(col_map, used, j + 1)) return true;
            used[u] = false;
            col_map[j] = -1;
        }
        return false;
    }

    bool search(int i, std::vector<int>& col_map) {
        if (i == n) {
            std::vector<bool> used(n, false);
            col_map.assign(n, -1);
            return assign_columns(col_map, used, 0);
        }
        for (int v = 0; v < n; ++v) {
            if (row_used[v]) continue;
            std::vector<uint32_t> saved = col_candidates;
            bool feasible = true;
            for (int j = 0; j < n && feasible; ++j) {
                uint32_t mask = 0;
                for (int u = 0; u < n; ++u)
                    if (m1[i][j] == m2[v][u]) mask |= (1u << u);
                col_candidates[j] &= mask;
                if (col_candidates[j] == 0) feasible = false;
            }
            if (feasible) {
                row_map[i] = v;
                row_used[v] = true;
                if (search(i + 1, col_map)) return true;
                row_used[v] = false;
                row_map[i] = -1;
            }
            col_candidates = saved;
        }
        return false;
    }
};

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
    if (m.empty()) return m;
    std::vector<std::vector<int>> t(m[0].size(), std::vector<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace

std::optional<GraphIso> graph_iso(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    if (g1.part1.size() != 21 || g1.part2.size() != 21 || g2.part1.size() != 21 ||
        g2.part2.size() != 21)
        throw std::invalid_argument("models: iso search expects 21+21 graphs");

    for (int swapped = 0; swapped < 2; ++swapped) {
        const auto target = swapped ? transpose(g2.adjacency) : g2.adjacency;
        IsoSearch search(g1.adjacency, target);
        std::vector<int> col_map;
        if (search.search(0, col_map)) {
            GraphIso iso;
            iso.family_swapped = swapped != 0;
            iso.part1_map = search.row_map;
            iso.part2_map = col_map;
            return iso;
        }
    }
    return std::nullopt;
}

bool check_iso(const BipartiteGraph& g1, const BipartiteGraph& g2, const GraphIso& iso) {
    const auto target = iso.family_swapped ? transpose(g2.adjacency) : g2.adjacency;
    auto is_perm = [](const std::vector<int>& m) {
        std::vector<bool> seen(m.size(), false);
        for (int v : m) {
            if (v < 0 || v >= static_cast<int>(m.size()) || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    };
    if (!is_perm(iso.part1_map) || !is_perm(iso.part2_map)) return false;
    for (size_t i = 0; i < g1.adjacency.size(); ++i)
        for (size_t j = 0; j < g1.adjacency[i].size(); ++j)
            if (g1.adjacency[i][j] != target[iso.part1_map[i]][iso.part2_map[j]]) return false;
    return true;
}

}  // namespace gkm21::models
