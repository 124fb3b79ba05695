#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gkm21/abelian.hpp"
#include "gkm21/verify.hpp"

using namespace gkm21;
using namespace gkm21::ab;

namespace {

APoint mk(const char* x1, const char* y1, const char* x2, const char* y2) {
    return APoint{ec::affine(gf2k::parse(2, x1), gf2k::parse(2, y1)),
                  ec::affine(gf2k::parse(2, x2), gf2k::parse(2, y2))};
}

}  // namespace

TEST_CASE("torsion points") {
    auto f2 = torsion_points(TorsionLevel::F2);
    auto f4 = torsion_points(TorsionLevel::F4);
    CHECK(f2.size() == 9);
    CHECK(f4.size() == 81);
    for (const APoint& p : f4) {
        APoint t = a_smul(3, p);
        CHECK(t.first.inf);
        CHECK(t.second.inf);
    }
    std::set<APoint> rational(f2.begin(), f2.end());
    for (const APoint& p : f4) CHECK((sigma_cross(p) == p) == rational.contains(p));
}

TEST_CASE("the twenty-four curves") {
    const auto& cs = verify::curves();
    REQUIRE(cs.size() == 24);
    int first = 0;
    for (const CurveOnA& c : cs)
        if (!c.second_family()) ++first;
    CHECK(first == 12);
    for (const CurveOnA& c : cs) {
        CHECK(c.points.size() == 9);
        int rational = 0;
        for (const APoint& p : c.points) {
            CHECK(ec::on_curve(p.first));
            CHECK(ec::on_curve(p.second));
            if (sigma_cross(p) == p) ++rational;
            CHECK(c.contains(sigma_cross(p)));
        }
        CHECK(rational == 3);
    }
}

TEST_CASE("rational incidence table matches the worked rows") {
    auto table = incidence_table_f2(verify::curves());
    // F1 passes through P1 x P0, P2 x P1, P0 x P2
    auto has = [&](int row, int col, const char* name) {
        for (const CurveName& n : table.cells[row][col])
            if (to_string(n) == name) return true;
        return false;
    };
    CHECK(has(0, 1, "F1"));  // P1 x P0
    CHECK(has(1, 2, "F1"));  // P2 x P1
    CHECK(has(2, 0, "F1"));  // P0 x P2
    // the P00 cell carries the eight base curves
    for (const char* n : {"E0", "F0", "V0", "pi0", "E0'", "F0'", "V0'", "pi0'"})
        CHECK(has(0, 0, n));
    // pi0 meets E0' at P00, P10, P20 (second coordinate O)
    CHECK(has(0, 0, "pi0"));
    CHECK(has(0, 1, "pi0"));
    CHECK(has(0, 2, "pi0"));
}

TEST_CASE("second incidence table carries two curves per point") {
    auto table = incidence_table_f4(verify::curves());
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
            if (r >= 6 && c >= 6) continue;
            REQUIRE(table.cells[r][c].size() == 2);
            CHECK(table.cells[r][c][0].primed != table.cells[r][c][1].primed);
        }
    // worked example: F1 meets F1' at (1,w^2) x (1,w): row (1,w) col (1,w^2)
    CHECK(to_string(table.cells[0][1][0]) == "F1");
    CHECK(to_string(table.cells[0][1][1]) == "F1'");
}

TEST_CASE("common point sets") {
    const auto& cs = verify::curves();
    const CurveOnA& f2c = curve_by_name(cs, CurveName{CurveLetter::F, 2, false});
    const CurveOnA& f0p = curve_by_name(cs, CurveName{CurveLetter::F, 0, true});
    auto common = common_points(f2c, f0p);
    std::vector<APoint> expect = {mk("w^2", "w^2", "1", "w"), mk("1", "w^2", "w^2", "w"),
                                  mk("w", "w^2", "w", "w")};
    std::sort(expect.begin(), expect.end());
    CHECK(common == expect);
    auto dec = orbit_decomposition(common);
    CHECK(dec.fixed.empty());
    CHECK(dec.orbits.size() == 1);

    auto whole = orbit_decomposition(torsion_points(TorsionLevel::F4));
    CHECK(whole.fixed.size() == 9);
    CHECK(whole.orbits.size() == 24);

    // truncated orbits are rejected
    APoint nonrational = mk("1", "w", "1", "w");
    CHECK_THROWS_AS(orbit_decomposition(std::vector<APoint>{nonrational}), std::logic_error);
}

TEST_CASE("serialization") {
    CHECK(to_string(mk("1", "w", "0", "1")) == "(1,w)x(0,1)");
    CHECK(to_string(a_infinity(2)) == "OxO");
}
