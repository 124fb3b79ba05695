#include <doctest.h>

#include "gkm21/config_graph.hpp"
#include "gkm21/verify.hpp"

using namespace gkm21;
using namespace gkm21::cfg;

TEST_CASE("node ordering is stable") {
    auto nodes = config_nodes();
    REQUIRE(nodes.size() == 42);
    CHECK(nodes[0].label() == "E0");
    CHECK(nodes[9].label() == "pi0");
    CHECK(nodes[12].label() == "l00");
    CHECK(nodes[20].label() == "l22");
    CHECK(nodes[21].label() == "E0'");
    CHECK(nodes[33].label() == "l'00");
    CHECK(nodes[41].label() == "l'22");
    for (int i = 0; i < 42; ++i) CHECK(node_index(nodes[i]) == i);
}

TEST_CASE("derived incidence against the printed rules") {
    const auto& g = verify::derived_graph();
    auto img = [](const char* n) { return image_node_index(parse_curve_name(n)); };
    CHECK(g.incidence[img("F2")][img("F0'")] == 1);
    CHECK(g.incidence[img("F0")][img("F0'")] == 0);
    CHECK(g.incidence[img("E1")][img("pi1'")] == 0);
    CHECK(g.incidence[img("E1")][img("pi0'")] == 1);
    CHECK(g.incidence[exceptional_node_index(false, 0, 1)][exceptional_node_index(true, 0, 1)] == 1);
    CHECK(g.incidence[exceptional_node_index(false, 0, 1)][exceptional_node_index(true, 1, 0)] == 0);
    CHECK(g.incidence[exceptional_node_index(false, 0, 1)][img("F1'")] == 1);
    CHECK(g.incidence[exceptional_node_index(false, 0, 0)][img("V0'")] == 1);
    CHECK(g.incidence[exceptional_node_index(false, 1, 1)][img("V2'")] == 1);
    CHECK(g.incidence[exceptional_node_index(false, 2, 1)][img("E1'")] == 1);
    CHECK(g.incidence[exceptional_node_index(true, 2, 1)][img("pi1")] == 1);
}

TEST_CASE("derived equals closed form and validates") {
    const auto& g = verify::derived_graph();
    const auto& rules = verify::rules_graph();
    CHECK(g.incidence == rules.incidence);
    for (const CheckRow& row : verify_config(g)) CHECK(row.pass);
}

TEST_CASE("fibration analysis") {
    auto fib = fibration_analysis(verify::derived_graph());
    CHECK(fib.pass());
    REQUIRE(fib.hexagons.size() == 4);
    for (const auto& hex : fib.hexagons) CHECK(hex.size() == 6);
    CHECK(fib.euler_number == 24);
}

TEST_CASE("lattice data and the Shioda-Tate bookkeeping") {
    const auto& gram = verify::gram_data();
    CHECK(gram.rank == 22);
    CHECK(gram.radical_dim == 20);
    CHECK(gram.discriminant == -4);
    long long product = 1;
    for (long long d : gram.elementary_divisors) product *= d;
    CHECK(product == 4);

    auto st = shioda_tate_report(verify::derived_graph(), gram);
    CHECK(st.pass());
    CHECK(st.picard_number == 22);
    CHECK(st.span_index == 1);
    CHECK(st.mordell_weil_order == 18);
    CHECK(st.artin_invariant == 1);
}

TEST_CASE("contractions") {
    for (Family f : {Family::First, Family::Second})
        for (const CheckRow& row : contract_family(verify::derived_graph(), f)) CHECK(row.pass);
}
