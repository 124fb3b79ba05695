#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkm21/verify.hpp"

namespace py = pybind11;
using namespace gkm21;

namespace {

py::dict check_to_dict(const verify::CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    if (!c.expected.empty()) d["expected"] = c.expected;
    if (!c.actual.empty()) d["actual"] = c.actual;
    return d;
}

py::dict suite_to_dict(const verify::SuiteReport& rep) {
    py::list checks;
    for (const auto& c : rep.checks) checks.append(check_to_dict(c));
    py::dict d;
    d["suite"] = rep.suite;
    d["passed"] = rep.pass();
    d["checks"] = checks;
    return d;
}

py::list diffs_to_list(const std::vector<verify::CellDiff>& diffs) {
    py::list out;
    for (const auto& d : diffs) {
        py::dict e;
        e["row"] = d.row;
        e["col"] = d.col;
        e["transcribed"] = d.transcribed;
        e["derived"] = d.derived;
        out.append(e);
    }
    return out;
}

py::dict bipartite_to_dict(const models::BipartiteGraph& g) {
    py::dict d;
    d["part1"] = g.part1;
    d["part2"] = g.part2;
    d["adjacency"] = g.adjacency;
    return d;
}

models::BipartiteGraph graph_by_source(const std::string& source) {
    if (source == "derived") return models::from_config_graph(verify::derived_graph());
    if (source == "rules") return models::from_config_graph(verify::rules_graph());
    if (source == "pg24") return models::pg24();
    if (source == "p2p2") return models::p2p2_lines();
    throw std::invalid_argument("unknown graph source: " + source);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verifier for the 42-curve configuration on the order-3 "
              "generalized Kummer surface in characteristic 2.";

    m.def("verify_all", [] {
        py::list out;
        for (const auto& rep : verify::run_all()) out.append(suite_to_dict(rep));
        return out;
    }, "Run every verification suite in dependency order.");

    m.def("intersection_table", [] {
        auto t = verify::derived_intersection_table();
        py::list rows;
        for (const auto& row : t) {
            py::list r;
            for (long long v : row) r.append(v);
            rows.append(r);
        }
        py::dict d;
        py::list order;
        for (const auto& l : ref::base_curve_labels()) order.append(l);
        d["order"] = order;
        d["entries"] = rows;
        d["transcription_discrepancies"] = diffs_to_list(verify::intersection_table_diff());
        return d;
    }, "The derived 8x8 pairing table of the base curves.");

    m.def("torsion_tables", [] {
        auto f2 = ab::incidence_table_f2(verify::curves());
        auto f4 = ab::incidence_table_f4(verify::curves());
        auto cell = [](const std::vector<CurveName>& names) {
            py::list out;
            for (const auto& n : names) out.append(to_string(n));
            return out;
        };
        py::list f2cells;
        for (int r = 0; r < 3; ++r) {
            py::list row;
            for (int c = 0; c < 3; ++c) row.append(cell(f2.cells[r][c]));
            f2cells.append(row);
        }
        py::list f4cells;
        for (int r = 0; r < 9; ++r) {
            py::list row;
            for (int c = 0; c < 9; ++c) row.append(cell(f4.cells[r][c]));
            f4cells.append(row);
        }
        py::dict d;
        d["rational"] = f2cells;
        d["rational_discrepancies"] = diffs_to_list(verify::f2_table_diff());
        py::list axis;
        for (const auto& l : ref::f4_axis_labels()) axis.append(l);
        d["axis"] = axis;
        d["nonrational"] = f4cells;
        d["nonrational_discrepancies"] = diffs_to_list(verify::f4_table_diff());
        return d;
    }, "Both torsion incidence tables with their transcription diffs.");

    m.def("config_graph", [](const std::string& source) {
        return bipartite_to_dict(graph_by_source(source));
    }, py::arg("source") = "derived",
       "Bipartite 21+21 graph from: derived, rules, pg24, p2p2.");

    m.def("gram_data", [] {
        const auto& gram = verify::gram_data();
        auto st = cfg::shioda_tate_report(verify::derived_graph(), gram);
        py::dict d;
        d["rank"] = gram.rank;
        d["radical_dimension"] = gram.radical_dim;
        d["elementary_divisors"] = gram.elementary_divisors;
        d["discriminant"] = gram.discriminant;
        d["span_index"] = st.span_index;
        d["artin_invariant"] = st.artin_invariant;
        d["mordell_weil_order"] = st.mordell_weil_order;
        d["mordell_weil_structure_unverified"] = st.mordell_weil_structure_unverified;
        return d;
    }, "Exact lattice data of the 42-curve span.");

    m.def("graph_iso", [](const std::string& a, const std::string& b) -> py::object {
        auto g1 = graph_by_source(a);
        auto g2 = graph_by_source(b);
        auto iso = models::graph_iso(g1, g2);
        if (!iso) return py::none();
        py::dict d;
        d["family_swapped"] = iso->family_swapped;
        d["part1_map"] = iso->part1_map;
        d["part2_map"] = iso->part2_map;
        return d;
    }, py::arg("a"), py::arg("b"),
       "Explicit isomorphism between two of the models, or None.");

    m.def("generator_solutions", [] {
        py::list out;
        for (const auto& s : verify::solutions()) {
            py::dict d;
            d["sigma"] = quat::to_string(s.sigma);
            d["theta"] = quat::to_string(s.theta);
            d["frob"] = quat::to_string(s.frob);
            d["two_sigma_plus_one"] = quat::to_string(s.two_sigma_plus_one());
            out.append(d);
        }
        return out;
    }, "All Hurwitz generator solutions, designated one first.");

    m.def("relation_report", [] {
        py::list out;
        for (const auto& r : ec::verify_relations()) {
            py::dict d;
            d["name"] = r.name;
            d["holds"] = r.holds;
            d["expected"] = r.expected;
            if (!r.note.empty()) d["note"] = r.note;
            out.append(d);
        }
        return out;
    }, "The endomorphism identities checked exhaustively on E(F_64).");

    m.def("ec_add", [](const std::string& p, const std::string& q, int k) {
        return ec::to_string(ec::add(ec::parse_point(k, p), ec::parse_point(k, q)));
    }, py::arg("p"), py::arg("q"), py::arg("k") = 2,
       "Group law of y^2 + y = x^3 on textual points, e.g. '(1,w)'.");

    m.def("ec_points", [](int k) {
        py::list out;
        for (const auto& p : ec::enumerate_points(k)) out.append(ec::to_string(p));
        return out;
    }, py::arg("k") = 2, "All points of E(F_{2^k}) for k in {1,2,4,6}.");

    m.def("quotient_map", [](const std::string& p, int k) {
        auto [w, z] = ec::quotient_map(ec::parse_point(k, p));
        return py::make_tuple(gf2k::to_string(w), gf2k::to_string(z));
    }, py::arg("p"), py::arg("k") = 2,
       "The order-3 quotient projection (w, z); poles raise ValueError.");
}
