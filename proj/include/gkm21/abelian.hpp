#pragma once

#include <array>
#include <string>
#include <vector>

#include "gkm21/curve_names.hpp"
#include "gkm21/ecurve.hpp"

namespace gkm21::ab {

using ec::EndoExpr;
using ec::Point;

// Point of the abelian surface A = E x E, both components over one field.
struct APoint {
    Point first;
    Point second;
    friend bool operator==(const APoint&, const APoint&) = default;
    friend auto operator<=>(const APoint&, const APoint&) = default;
};

APoint apoint(const Point& first, const Point& second);
APoint a_infinity(int k);
APoint a_add(const APoint& p, const APoint& q);
APoint a_neg(const APoint& p);
APoint a_smul(long long n, const APoint& p);
APoint a_embed(const APoint& p, int to_k);
std::string to_string(const APoint& p);

// sigma x sigma^2, the order-3 automorphism whose quotient is resolved.
APoint sigma_cross(const APoint& p);

// The three rational points of E as F_4 points: P0 = O, P1 = (0,0), P2 = (0,1).
std::array<Point, 3> rational_points();

enum class TorsionLevel { F2, F4 };

// A(F_2): the 9 products P_i x P_j.  A(F_4): all 81 pairs of 3-torsion
// points.  Deterministic order, coordinates over F_4.
std::vector<APoint> torsion_points(TorsionLevel level);

// One of the 24 elliptic curves: an injective homomorphism E -> A given by
// a component pair of endomorphism expressions, shifted by a 3-torsion
// translate.  Point sets over F_4 are materialized once.
struct CurveOnA {
    CurveName name;
    EndoExpr hom_first;
    EndoExpr hom_second;
    APoint translate;             // over F_4
    std::vector<APoint> points;   // the 9 F_4 points, sorted
    bool second_family() const { return name.primed; }

    APoint map_point(const Point& p) const;  // hom(p) + translate, any field
    bool contains(const APoint& p) const;    // membership among the F_4 points
};

// The 8 base curves and their 16 translates, in all_curve_names() order.
std::vector<CurveOnA> build_curves();

const CurveOnA& curve_by_name(const std::vector<CurveOnA>& curves, const CurveName& name);

// Curves through each rational point; cells[row][col] belongs to the point
// P_col x P_row.  Every cell carries 4 first-family + 4 second-family names.
struct F2IncidenceTable {
    std::array<std::array<std::vector<CurveName>, 3>, 3> cells;
};

F2IncidenceTable incidence_table_f2(const std::vector<CurveOnA>& curves);

// Axis order for the F_4 tables: the six non-rational 3-torsion points of E
// in the fixed order (1,w), (1,w^2), (w,w), (w,w^2), (w^2,w), (w^2,w^2),
// then P0, P1, P2.
std::array<Point, 9> f4_axis_points();

// Curves through each point of A(F_4) \ A(F_2); cells[row][col] belongs to
// the point axis[col] x axis[row].  Each populated cell has exactly two
// names; the nine rational x rational cells stay empty.
struct F4IncidenceTable {
    std::array<std::array<std::vector<CurveName>, 9>, 9> cells;
};

F4IncidenceTable incidence_table_f4(const std::vector<CurveOnA>& curves);

std::vector<APoint> common_points(const CurveOnA& c1, const CurveOnA& c2);

struct OrbitDecomposition {
    std::vector<APoint> fixed;
    std::vector<std::array<APoint, 3>> orbits;
};

// Partition of a subset of A(F_4) under sigma x sigma^2; fixed points are
// exactly the rational ones.  A truncated orbit means the input set was not
// stable and is reported as a hard error.
OrbitDecomposition orbit_decomposition(const std::vector<APoint>& points);

}  // namespace gkm21::ab
