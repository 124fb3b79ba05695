// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds.  Documented transcription discrepancies (see reference_tables.hpp)
// are themselves asserted: the derivation must differ from the transcription
// in exactly the registered cells, no more and no fewer.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "gkm21/verify.hpp"

using namespace gkm21;

namespace {

int failures = 0;

void criterion(const std::string& id, bool pass, const std::string& note = "") {
    std::printf("[%s] %s: %s%s%s\n", pass ? "PASS" : "FAIL", id.c_str(),
                pass ? "ok" : "failed", note.empty() ? "" : " - ", note.c_str());
    if (!pass) ++failures;
}

}  // namespace

int main() {
    // C1: endomorphism identities, exhaustive on the 81 points of E(F_64)
    {
        auto rows = ec::verify_relations();
        int sound = 0, documented_failures = 0, surprises = 0;
        for (const auto& r : rows) {
            if (r.expected && r.holds) ++sound;
            if (!r.expected && !r.holds) ++documented_failures;
            if (r.holds != r.expected) ++surprises;
        }
        criterion("C1 relations", surprises == 0 && sound == 11 && documented_failures == 1,
                  "11 identities hold; the transcribed sign variant of the projection "
                  "identity fails as documented");
    }

    // C2: quaternion model and invariance of the table across solutions
    {
        const auto& sols = verify::solutions();
        bool norms = true;
        auto table = verify::derived_intersection_table();
        bool invariant = true;
        for (const auto& s : sols) {
            if (quat::nrd(s.frob) != 2 || quat::nrd(s.two_sigma_plus_one()) != 3) norms = false;
            if (ns::intersection_table(s) != table) invariant = false;
        }
        criterion("C2 quaternion model", !sols.empty() && norms && invariant,
                  std::to_string(sols.size()) + " solutions, identical 8x8 table");
    }

    // C3: the 8x8 table against the transcription
    {
        auto table = verify::derived_intersection_table();
        bool witnesses = table[1][5] == 3 && table[3][4] == 3;
        bool diag = true, sym = true;
        for (int i = 0; i < 8; ++i) {
            if (table[i][i] != 0) diag = false;
            for (int j = 0; j < 8; ++j)
                if (table[i][j] != table[j][i]) sym = false;
        }
        auto diffs = verify::intersection_table_diff();
        std::vector<std::pair<int, int>> cells;
        for (const auto& d : diffs) cells.emplace_back(d.row, d.col);
        bool documented = cells == ref::expected_intersection_discrepancies();
        std::string note = "entry-for-entry up to " + std::to_string(diffs.size()) +
                           " documented cells (pi0' row/column against F,V curves)";
        criterion("C3 intersection table", witnesses && diag && sym && documented, note);
    }

    // C4: torsion incidence tables, derived and diffed against transcription
    {
        const auto& cs = verify::curves();
        auto f2 = ab::incidence_table_f2(cs);
        bool f2_shape = true;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                int first = 0;
                for (const CurveName& n : f2.cells[r][c])
                    if (!n.primed) ++first;
                if (f2.cells[r][c].size() != 8 || first != 4) f2_shape = false;
            }
        auto f4 = ab::incidence_table_f4(cs);
        bool f4_shape = true;
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) {
                if (r >= 6 && c >= 6) continue;
                const auto& cell = f4.cells[r][c];
                if (cell.size() != 2 || cell[0].primed == cell[1].primed) f4_shape = false;
            }
        auto d2 = verify::f2_table_diff();
        auto d4 = verify::f4_table_diff();
        std::vector<std::pair<int, int>> c2, c4;
        for (const auto& d : d2) c2.emplace_back(d.row, d.col);
        for (const auto& d : d4) c4.emplace_back(d.row, d.col);
        bool documented = c2 == ref::expected_f2_discrepancies() &&
                          c4 == ref::expected_f4_discrepancies();
        std::string note = std::to_string(d2.size()) + " + " + std::to_string(d4.size()) +
                           " documented transcription discrepancies reported";
        criterion("C4 torsion tables", f2_shape && f4_shape && documented, note);
    }

    // C5: multiplicity accounting over the 276 pairs
    {
        const auto& sol = verify::designated();
        const auto& cs = verify::curves();
        bool ok = true;
        int pairs = 0;
        for (size_t a = 0; a < cs.size(); ++a)
            for (size_t b = a + 1; b < cs.size(); ++b) {
                ++pairs;
                long long pairing = ns::intersection(ns::curve_class(cs[a].name, sol),
                                                     ns::curve_class(cs[b].name, sol));
                long long commons = static_cast<long long>(ab::common_points(cs[a], cs[b]).size());
                bool same = cs[a].second_family() == cs[b].second_family();
                if (pairing != (same ? 2 * commons : commons)) ok = false;
            }
        criterion("C5 multiplicities", ok && pairs == 276, "276 pairs checked");
    }

    // C6: the two incidence constructions agree and validate
    {
        const auto& g = verify::derived_graph();
        bool equal = g.incidence == verify::rules_graph().incidence;
        bool valid = true;
        for (const auto& row : cfg::verify_config(g))
            if (!row.pass) valid = false;
        criterion("C6 configuration", equal && valid,
                  "derived = closed form; 21+21, 5-regular, 105 incidences");
    }

    // C7: fibration structure
    {
        auto fib = cfg::fibration_analysis(verify::derived_graph());
        criterion("C7 fibration", fib.pass() && fib.hexagons.size() == 4 &&
                                      fib.euler_number == 24,
                  "four I6 fibers, 18 sections, Euler number 24");
    }

    // C8: lattice arithmetic
    {
        const auto& gram = verify::gram_data();
        auto st = cfg::shioda_tate_report(verify::derived_graph(), gram);
        criterion("C8 lattice", gram.rank == 22 && gram.discriminant == -4 && st.pass(),
                  "rank 22, disc -4, span index " + std::to_string(st.span_index) +
                      ", Artin invariant " + std::to_string(st.artin_invariant));
    }

    // C9: model equivalence within the time budget
    {
        auto start = std::chrono::steady_clock::now();
        auto gk = models::from_config_graph(verify::derived_graph());
        auto pg = models::pg24();
        auto pp = models::p2p2_lines();
        auto i1 = models::graph_iso(gk, pg);
        auto i2 = models::graph_iso(pg, pp);
        auto i3 = models::graph_iso(gk, pp);
        bool isos = i1 && i2 && i3 && models::check_iso(gk, pg, *i1) &&
                    models::check_iso(pg, pp, *i2) && models::check_iso(gk, pp, *i3);
        bool involution = models::involution_swap(pp).pass();
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        criterion("C9 model equivalence", isos && involution && elapsed < 5000,
                  "three explicit isomorphisms in " + std::to_string(elapsed) + " ms");
    }

    // C10: quotient map behaviour on E(F_64)
    {
        bool equation = true, invariance = true, translation = true;
        const ec::Point p1 = ec::embed_point(
            ec::affine(gf2k::zero(1), gf2k::zero(1)), 6);
        for (const ec::Point& p : ec::enumerate_points(6)) {
            ec::Point t = ec::apply_basic(ec::Endo::Tau, p);
            if (t != ec::add(p, p1)) translation = false;
            if (p.inf || gf2k::is_zero(p.x)) continue;
            auto [w, z] = ec::quotient_map(p);
            if (gf2k::add(gf2k::mul(z, z), z) != gf2k::mul(w, gf2k::mul(w, w)))
                equation = false;
            if (!t.inf && !gf2k::is_zero(t.x) && ec::quotient_map(t) != ec::quotient_map(p))
                invariance = false;
        }
        bool poles = false;
        try {
            ec::quotient_map(ec::infinity(6));
        } catch (const std::domain_error&) {
            poles = true;
        }
        criterion("C10 quotient map", equation && invariance && translation && poles,
                  "z^2 + z = w^3, tau-invariance, tau = translation by P1");
    }

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
