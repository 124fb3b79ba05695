#include "gkm21/ecurve.hpp"

#include <stdexcept>

namespace gkm21::ec {

namespace {

using gf2k::add;
using gf2k::embed;
using gf2k::fe;
using gf2k::inv;
using gf2k::is_zero;
using gf2k::mul;
using gf2k::omega;
using gf2k::one;
using gf2k::zero;

void require_same_field(const Point& p, const Point& q) {
    if (p.k != q.k) throw std::invalid_argument("ecurve: points live in different fields");
}

Fe cube(Fe v) { return mul(v, mul(v, v)); }

}  // namespace

Point infinity(int k) {
    if (!gf2k::supported_degree(k)) throw std::invalid_argument("ecurve: unsupported field degree");
    return Point{static_cast<uint8_t>(k), true, zero(k), zero(k)};
}

Point affine(Fe x, Fe y) {
    if (x.k != y.k) throw std::invalid_argument("ecurve: coordinate fields differ");
    return Point{x.k, false, x, y};
}

bool on_curve(const Point& p) {
    if (p.inf) return true;
    Fe lhs = add(mul(p.y, p.y), p.y);
    return lhs == cube(p.x);
}

Point neg(const Point& p) {
    if (p.inf) return p;
    return affine(p.x, add(p.y, one(p.k)));
}

Point dbl(const Point& p) {
    if (p.inf) return p;
    Fe x4 = mul(mul(p.x, p.x), mul(p.x, p.x));
    Fe y4 = mul(mul(p.y, p.y), mul(p.y, p.y));
    return affine(x4, add(y4, one(p.k)));
}

Point add(const Point& p, const Point& q) {
    require_same_field(p, q);
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x) {
        if (p.y == q.y) return dbl(p);
        return infinity(p.k);  // y-coordinates differ by 1: inverse pair
    }
    Fe dx = add(p.x, q.x);
    Fe lam = mul(add(p.y, q.y), inv(dx));
    Fe x3 = add(add(p.x, q.x), mul(lam, lam));
    Fe cross = mul(add(mul(p.x, p.y), mul(q.x, q.y)), inv(dx));
    Fe y3 = add(add(cube(lam), cross), one(p.k));
    return affine(x3, y3);
}

Point scalar_mul(long long n, const Point& p) {
    if (n < 0) return scalar_mul(-n, neg(p));
    Point acc = infinity(p.k);
    Point base = p;
    while (n) {
        if (n & 1) acc = add(acc, base);
        base = dbl(base);
        n >>= 1;
    }
    return acc;
}

Point embed_point(const Point& p, int to_k) {
    if (p.inf) return infinity(to_k);
    return affine(embed(p.x, to_k), embed(p.y, to_k));
}

std::vector<Point> enumerate_points(int k) {
    if (!gf2k::supported_degree(k)) throw std::invalid_argument("ecurve: unsupported field degree");
    std::vector<Point> pts;
    pts.push_back(infinity(k));
    for (const Fe& x : gf2k::enumerate_field(k))
        for (const Fe& y : gf2k::enumerate_field(k)) {
            Point p = affine(x, y);
            if (on_curve(p)) pts.push_back(p);
        }
    return pts;
}

Point apply_basic(Endo e, const Point& p) {
    switch (e) {
        case Endo::Frob:
            if (p.inf) return p;
            return affine(mul(p.x, p.x), mul(p.y, p.y));
        case Endo::Versch:
            return neg(apply_basic(Endo::Frob, p));
        case Endo::Tau: {
            Point p1 = embed_point(affine(zero(1), zero(1)), p.k);
            return add(p, p1);
        }
        case Endo::Sigma: {
            if (p.inf) return p;
            Fe w = omega(p.k);
            return affine(mul(w, p.x), p.y);
        }
        case Endo::SigmaSq: {
            if (p.inf) return p;
            Fe w = omega(p.k);
            return affine(mul(mul(w, w), p.x), p.y);
        }
        case Endo::Theta: {
            if (p.inf) return p;
            Fe w = omega(p.k);
            return affine(add(p.x, one(p.k)), add(add(p.y, p.x), w));
        }
    }
    throw std::logic_error("ecurve: unknown endomorphism");
}

EndoExpr EndoExpr::identity() { return EndoExpr{}; }

EndoExpr EndoExpr::sigma() {
    EndoExpr e;
    e.kind_ = Kind::Sigma;
    return e;
}

EndoExpr EndoExpr::sigma_sq() {
    EndoExpr e;
    e.kind_ = Kind::SigmaSq;
    return e;
}

EndoExpr EndoExpr::theta() {
    EndoExpr e;
    e.kind_ = Kind::Theta;
    return e;
}

EndoExpr EndoExpr::frob() {
    EndoExpr e;
    e.kind_ = Kind::Frob;
    return e;
}

EndoExpr EndoExpr::versch() {
    EndoExpr e;
    e.kind_ = Kind::Versch;
    return e;
}

EndoExpr EndoExpr::sum(EndoExpr a, EndoExpr b) {
    EndoExpr e;
    e.kind_ = Kind::Sum;
    e.children_ = {std::move(a), std::move(b)};
    return e;
}

EndoExpr EndoExpr::diff(EndoExpr a, EndoExpr b) {
    return sum(std::move(a), scale(-1, std::move(b)));
}

EndoExpr EndoExpr::compose(EndoExpr outer, EndoExpr inner) {
    EndoExpr e;
    e.kind_ = Kind::Compose;
    e.children_ = {std::move(outer), std::move(inner)};
    return e;
}

EndoExpr EndoExpr::scale(long long n, EndoExpr inner) {
    EndoExpr e;
    e.kind_ = Kind::Scale;
    e.scalar_ = n;
    e.children_ = {std::move(inner)};
    return e;
}

EndoExpr EndoExpr::pi() {
    return compose(theta(), diff(identity(), frob()));
}

Point EndoExpr::apply(const Point& p) const {
    switch (kind_) {
        case Kind::Identity: return p;
        case Kind::Sigma: return apply_basic(Endo::Sigma, p);
        case Kind::SigmaSq: return apply_basic(Endo::SigmaSq, p);
        case Kind::Theta: return apply_basic(Endo::Theta, p);
        case Kind::Frob: return apply_basic(Endo::Frob, p);
        case Kind::Versch: return apply_basic(Endo::Versch, p);
        case Kind::Sum: return ec::add(children_[0].apply(p), children_[1].apply(p));
        case Kind::Compose: return children_[0].apply(children_[1].apply(p));
        case Kind::Scale: return scalar_mul(scalar_, children_[0].apply(p));
    }
    throw std::logic_error("ecurve: malformed expression");
}

std::string EndoExpr::to_string() const {
    switch (kind_) {
        case Kind::Identity: return "id";
        case Kind::Sigma: return "sigma";
        case Kind::SigmaSq: return "sigma^2";
        case Kind::Theta: return "theta";
        case Kind::Frob: return "F";
        case Kind::Versch: return "V";
        case Kind::Sum:
            return "(" + children_[0].to_string() + " + " + children_[1].to_string() + ")";
        case Kind::Compose:
            return "(" + children_[0].to_string() + " o " + children_[1].to_string() + ")";
        case Kind::Scale:
            return std::to_string(scalar_) + "*" + children_[0].to_string();
    }
    return "?";
}

std::pair<Fe, Fe> quotient_map(const Point& p) {
    if (p.inf || is_zero(p.x))
        throw std::domain_error("ecurve: quotient map has a pole at x = 0 and infinity");
    int k = p.k;
    Fe x3 = cube(p.x);
    Fe w = mul(add(x3, one(k)), inv(mul(p.x, p.x)));
    Fe z = add(add(add(p.y, one(k)), inv(x3)), omega(k));
    return {w, z};
}

std::vector<RelationCheck> verify_relations() {
    std::vector<RelationCheck> out;
    const auto pts = enumerate_points(6);
    auto all = [&](auto&& pred) {
        for (const Point& p : pts)
            if (!pred(p)) return false;
        return true;
    };

    auto sig = [](const Point& p) { return apply_basic(Endo::Sigma, p); };
    auto sig2 = [](const Point& p) { return apply_basic(Endo::SigmaSq, p); };
    auto th = [](const Point& p) { return apply_basic(Endo::Theta, p); };
    auto fr = [](const Point& p) { return apply_basic(Endo::Frob, p); };
    auto ve = [](const Point& p) { return apply_basic(Endo::Versch, p); };

    EndoExpr pi = EndoExpr::pi();
    EndoExpr two_sigma_plus_one =
        EndoExpr::sum(EndoExpr::scale(2, EndoExpr::sigma()), EndoExpr::identity());

    out.push_back({"F o V = 2", all([&](const Point& p) {
                       return fr(ve(p)) == dbl(p) && ve(fr(p)) == dbl(p);
                   }),
                   true, ""});
    out.push_back({"F^2 = -2", all([&](const Point& p) { return fr(fr(p)) == neg(dbl(p)); }),
                   true, ""});
    out.push_back({"F o sigma = sigma^2 o F",
                   all([&](const Point& p) { return fr(sig(p)) == sig2(fr(p)); }), true, ""});
    out.push_back({"sigma^3 = id",
                   all([&](const Point& p) { return sig(sig(sig(p))) == p && sig(sig(p)) == sig2(p); }),
                   true, ""});
    out.push_back({"theta^2 = -id", all([&](const Point& p) { return th(th(p)) == neg(p); }),
                   true, ""});
    out.push_back({"F = sigma o theta - theta o sigma",
                   all([&](const Point& p) { return fr(p) == add(sig(th(p)), neg(th(sig(p)))); }),
                   true, ""});
    out.push_back({"F = theta o sigma^2 - sigma^2 o theta",
                   all([&](const Point& p) { return fr(p) == add(th(sig2(p)), neg(sig2(th(p)))); }),
                   true, ""});
    out.push_back({"id = theta o sigma - sigma^2 o theta",
                   all([&](const Point& p) { return p == add(th(sig(p)), neg(sig2(th(p)))); }),
                   true, ""});
    out.push_back({"F o pi = -pi o F",
                   all([&](const Point& p) { return fr(pi.apply(p)) == neg(pi.apply(fr(p))); }),
                   true, ""});
    out.push_back({"pi = theta o (id - F)", all([&](const Point& p) {
                       if (p.inf || is_zero(p.x)) return true;
                       auto [w, z] = quotient_map(p);
                       return pi.apply(p) == affine(w, z);
                   }),
                   true, "quotient map (w,z) compared where defined"});
    out.push_back({"pi = 2*sigma + 1 (as transcribed)",
                   all([&](const Point& p) { return pi.apply(p) == two_sigma_plus_one.apply(p); }),
                   false,
                   "sign slip in the source transcription; the corrected identity follows"});
    out.push_back({"pi = -(2*sigma + 1)", all([&](const Point& p) {
                       return pi.apply(p) == neg(two_sigma_plus_one.apply(p));
                   }),
                   true, ""});
    return out;
}

std::string to_string(const Point& p) {
    if (p.inf) return "O";
    return "(" + gf2k::to_string(p.x) + "," + gf2k::to_string(p.y) + ")";
}

Point parse_point(int k, const std::string& text) {
    if (text == "O") return infinity(k);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("ecurve: cannot parse point '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("ecurve: cannot parse point '" + text + "'");
    Fe x = gf2k::parse(k, body.substr(0, comma));
    Fe y = gf2k::parse(k, body.substr(comma + 1));
    return affine(x, y);
}

}  // namespace gkm21::ec
