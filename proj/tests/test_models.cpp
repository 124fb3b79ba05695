#include <doctest.h>

#include <stdexcept>

#include "gkm21/models.hpp"
#include "gkm21/verify.hpp"

using namespace gkm21::models;

TEST_CASE("projective points") {
    auto pts = enumerate_proj_points();
    CHECK(pts.size() == 21);
    for (const ProjPoint& p : pts) {
        int lead = -1;
        for (int i = 0; i < 3; ++i)
            if (!gkm21::gf2k::is_zero(p.coords[i])) {
                lead = i;
                break;
            }
        REQUIRE(lead >= 0);
        CHECK(p.coords[lead] == gkm21::gf2k::one(2));
    }
    CHECK_THROWS_AS(canonicalize({gkm21::gf2k::zero(2), gkm21::gf2k::zero(2),
                                  gkm21::gf2k::zero(2)}),
                    std::invalid_argument);
}

TEST_CASE("plane incidence") {
    auto g = pg24();
    for (int i = 0; i < 21; ++i) {
        int deg = 0;
        for (int j = 0; j < 21; ++j) deg += g.adjacency[i][j];
        CHECK(deg == 5);
    }
}

TEST_CASE("product-surface lines") {
    auto g = p2p2_lines();
    long long total = 0;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) total += g.adjacency[i][j];
    CHECK(total == 105);
    CHECK(involution_swap(g).pass());
    CHECK(fixed_curve_count() == 9);
}

TEST_CASE("isomorphism search ties the models together") {
    auto gk = from_config_graph(gkm21::verify::derived_graph());
    auto pg = pg24();
    auto pp = p2p2_lines();
    auto iso = graph_iso(gk, pg);
    REQUIRE(iso.has_value());
    CHECK(check_iso(gk, pg, *iso));
    auto iso2 = graph_iso(pg, pp);
    REQUIRE(iso2.has_value());
    CHECK(check_iso(pg, pp, *iso2));
    auto self_iso = graph_iso(pp, pp);
    REQUIRE(self_iso.has_value());
    CHECK(check_iso(pp, pp, *self_iso));
}

TEST_CASE("non-isomorphic graphs are rejected") {
    auto pg = pg24();
    BipartiteGraph broken = pg;
    // swap one incidence for a non-incidence in the first row; the
    // two-points-one-line invariant breaks, so no isomorphism survives
    int j_one = -1, j_zero = -1;
    for (int j = 0; j < 21; ++j) {
        if (j_one < 0 && broken.adjacency[0][j] == 1) j_one = j;
        if (j_zero < 0 && broken.adjacency[0][j] == 0) j_zero = j;
    }
    REQUIRE(j_one >= 0);
    REQUIRE(j_zero >= 0);
    broken.adjacency[0][j_one] = 0;
    broken.adjacency[0][j_zero] = 1;
    auto iso = graph_iso(pg, broken);
    CHECK_FALSE(iso.has_value());
}
