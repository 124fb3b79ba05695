#include "gkm21/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm21::ab {

namespace {

Point p1_at(int k) { return ec::embed_point(ec::affine(gf2k::zero(1), gf2k::zero(1)), k); }
Point p2_at(int k) { return ec::embed_point(ec::affine(gf2k::zero(1), gf2k::one(1)), k); }

Point rational_at(int i, int k) {
    switch (i) {
        case 0: return ec::infinity(k);
        case 1: return p1_at(k);
        case 2: return p2_at(k);
    }
    throw std::invalid_argument("abelian: rational point index out of range");
}

}  // namespace

APoint apoint(const Point& first, const Point& second) {
    if (first.k != second.k)
        throw std::invalid_argument("abelian: components live in different fields");
    return APoint{first, second};
}

APoint a_infinity(int k) { return APoint{ec::infinity(k), ec::infinity(k)}; }

APoint a_add(const APoint& p, const APoint& q) {
    return APoint{ec::add(p.first, q.first), ec::add(p.second, q.second)};
}

APoint a_neg(const APoint& p) { return APoint{ec::neg(p.first), ec::neg(p.second)}; }

APoint a_smul(long long n, const APoint& p) {
    return APoint{ec::scalar_mul(n, p.first), ec::scalar_mul(n, p.second)};
}

APoint a_embed(const APoint& p, int to_k) {
    return APoint{ec::embed_point(p.first, to_k), ec::embed_point(p.second, to_k)};
}

std::string to_string(const APoint& p) {
    return ec::to_string(p.first) + "x" + ec::to_string(p.second);
}

APoint sigma_cross(const APoint& p) {
    return APoint{ec::apply_basic(ec::Endo::Sigma, p.first),
                  ec::apply_basic(ec::Endo::SigmaSq, p.second)};
}

std::array<Point, 3> rational_points() {
    return {rational_at(0, 2), rational_at(1, 2), rational_at(2, 2)};
}

std::vector<APoint> torsion_points(TorsionLevel level) {
    std::vector<APoint> out;
    if (level == TorsionLevel::F2) {
        auto ps = rational_points();
        for (const Point& a : ps)
            for (const Point& b : ps) out.push_back(APoint{a, b});
    } else {
        auto pts = ec::enumerate_points(2);
        for (const Point& a : pts)
            for (const Point& b : pts) out.push_back(APoint{a, b});
    }
    return out;
}

APoint CurveOnA::map_point(const Point& p) const {
    APoint image{hom_first.apply(p), hom_second.apply(p)};
    return a_add(image, a_embed(translate, p.k));
}

bool CurveOnA::contains(const APoint& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

namespace {

CurveOnA make_curve(CurveName name, EndoExpr h1, EndoExpr h2, int ti, int tj) {
    CurveOnA c;
    c.name = name;
    c.hom_first = std::move(h1);
    c.hom_second = std::move(h2);
    c.translate = APoint{rational_at(ti, 2), rational_at(tj, 2)};
    for (const Point& p : ec::enumerate_points(2)) c.points.push_back(c.map_point(p));
    std::sort(c.points.begin(), c.points.end());
    if (c.points.size() != 9 ||
        std::unique(c.points.begin(), c.points.end()) != c.points.end())
        throw std::logic_error("abelian: image curve does not have 9 rational points");
    return c;
}

}  // namespace

std::vector<CurveOnA> build_curves() {
    using EE = EndoExpr;
    const EE zero = EE::scale(0, EE::identity());
    const EE id = EE::identity();
    const EE sg = EE::sigma();
    const EE sg2 = EE::sigma_sq();
    const EE f = EE::frob();
    const EE v = EE::versch();
    const EE pi = EE::pi();

    struct Base {
        CurveLetter letter;
        bool primed;
        EE h1, h2;
    };
    const std::vector<Base> bases = {
        {CurveLetter::E, false, zero, id}, {CurveLetter::F, false, f, sg},
        {CurveLetter::V, false, v, sg2},   {CurveLetter::Pi, false, v, pi},
        {CurveLetter::E, true, id, zero},  {CurveLetter::F, true, sg2, f},
        {CurveLetter::V, true, sg, v},     {CurveLetter::Pi, true, pi, f},
    };

    std::vector<CurveOnA> out;
    for (const Base& b : bases) {
        for (int i = 0; i < 3; ++i) {
            // E_i, F_i, V_i translate on the first factor, pi_i on the second;
            // primed curves swap the convention.
            int ti = 0, tj = 0;
            if (!b.primed) {
                if (b.letter == CurveLetter::Pi)
                    tj = i;
                else
                    ti = i;
            } else {
                if (b.letter == CurveLetter::Pi)
                    ti = i;
                else
                    tj = i;
            }
            out.push_back(make_curve(CurveName{b.letter, i, b.primed}, b.h1, b.h2, ti, tj));
        }
    }
    // reorder to all_curve_names() order (letter-major per family)
    std::vector<CurveOnA> ordered;
    for (const CurveName& n : all_curve_names()) ordered.push_back(curve_by_name(out, n));
    return ordered;
}

const CurveOnA& curve_by_name(const std::vector<CurveOnA>& curves, const CurveName& name) {
    for (const CurveOnA& c : curves)
        if (c.name == name) return c;
    throw std::invalid_argument("abelian: unknown curve " + gkm21::to_string(name));
}

F2IncidenceTable incidence_table_f2(const std::vector<CurveOnA>& curves) {
    F2IncidenceTable t;
    auto ps = rational_points();
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            APoint p{ps[col], ps[row]};
            for (const CurveOnA& c : curves)
                if (c.contains(p)) t.cells[row][col].push_back(c.name);
        }
    return t;
}

std::array<Point, 9> f4_axis_points() {
    using gf2k::fe;
    auto pt = [](unsigned xb, unsigned yb) { return ec::affine(fe(2, xb), fe(2, yb)); };
    // (1,w), (1,w^2), (w,w), (w,w^2), (w^2,w), (w^2,w^2), P0, P1, P2
    return {pt(1, 2), pt(1, 3), pt(2, 2), pt(2, 3), pt(3, 2), pt(3, 3),
            ec::infinity(2), pt(0, 0), pt(0, 1)};
}

F4IncidenceTable incidence_table_f4(const std::vector<CurveOnA>& curves) {
    F4IncidenceTable t;
    auto axis = f4_axis_points();
    for (int row = 0; row < 9; ++row)
        for (int col = 0; col < 9; ++col) {
            if (row >= 6 && col >= 6) continue;  // rational x rational is the other table
            APoint p{axis[col], axis[row]};
            for (const CurveOnA& c : curves)
                if (c.contains(p)) t.cells[row][col].push_back(c.name);
        }
    return t;
}

std::vector<APoint> common_points(const CurveOnA& c1, const CurveOnA& c2) {
    std::vector<APoint> out;
    std::set_intersection(c1.points.begin(), c1.points.end(), c2.points.begin(),
                          c2.points.end(), std::back_inserter(out));
    return out;
}

OrbitDecomposition orbit_decomposition(const std::vector<APoint>& points) {
    OrbitDecomposition out;
    std::vector<APoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    auto in_set = [&](const APoint& p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    };
    std::vector<APoint> seen;
    auto visited = [&](const APoint& p) {
        return std::binary_search(seen.begin(), seen.end(), p);
    };
    for (const APoint& p : sorted) {
        if (visited(p)) continue;
        APoint q = sigma_cross(p);
        if (q == p) {
            out.fixed.push_back(p);
            seen.insert(std::lower_bound(seen.begin(), seen.end(), p), p);
            continue;
        }
        APoint r = sigma_cross(q);
        if (!in_set(q) || !in_set(r) || sigma_cross(r) != p)
            throw std::logic_error("abelian: point set is not stable under sigma x sigma^2");
        out.orbits.push_back({p, q, r});
        for (const APoint& s : {p, q, r})
            seen.insert(std::lower_bound(seen.begin(), seen.end(), s), s);
    }
    return out;
}

}  // namespace gkm21::ab
