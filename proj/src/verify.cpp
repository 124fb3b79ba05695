#include "gkm21/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkm21::verify {

namespace {

using ab::APoint;
using ab::CurveOnA;
using ec::EndoExpr;
using ec::Point;
using gf2k::Fe;
using quat::Quat;

void push(SuiteReport& rep, const std::string& name, bool pass,
          const std::string& expected = "", const std::string& actual = "") {
    rep.checks.push_back(CheckResult{name, pass, expected, actual});
}

std::string join_names(const std::vector<CurveName>& names) {
    std::vector<std::string> s;
    for (const CurveName& n : names) s.push_back(gkm21::to_string(n));
    std::sort(s.begin(), s.end());
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out;
}

std::string join_sorted(std::vector<std::string> s) {
    std::sort(s.begin(), s.end());
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const std::vector<quat::GeneratorSolution>& solutions() {
    static const auto sols = quat::solve_generators();
    return sols;
}

const quat::GeneratorSolution& designated() { return solutions().front(); }

const std::vector<CurveOnA>& curves() {
    static const auto cs = ab::build_curves();
    return cs;
}

const cfg::ConfigGraph& derived_graph() {
    static const auto g = cfg::derive_incidence(curves());
    return g;
}

const cfg::ConfigGraph& rules_graph() {
    static const auto g = cfg::closed_form_incidence();
    return g;
}

const ns::GramData& gram_data() {
    static const auto d = cfg::gram_of_config(derived_graph());
    return d;
}

std::array<std::array<long long, 8>, 8> derived_intersection_table() {
    return ns::intersection_table(designated());
}

std::vector<CellDiff> intersection_table_diff() {
    auto derived = derived_intersection_table();
    const auto& transcribed = ref::transcribed_intersection_table();
    std::vector<CellDiff> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (derived[i][j] != transcribed[i][j])
                out.push_back(CellDiff{i, j, std::to_string(transcribed[i][j]),
                                       std::to_string(derived[i][j])});
    return out;
}

std::vector<CellDiff> f2_table_diff() {
    auto table = ab::incidence_table_f2(curves());
    const auto& transcribed = ref::transcribed_f2_cells();
    std::vector<CellDiff> out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            std::string d = join_names(table.cells[r][c]);
            std::string t = join_sorted(transcribed[r][c]);
            if (d != t) out.push_back(CellDiff{r, c, t, d});
        }
    return out;
}

std::vector<CellDiff> f4_table_diff() {
    auto table = ab::incidence_table_f4(curves());
    const auto& transcribed = ref::transcribed_f4_cells();
    std::vector<CellDiff> out;
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
            if (r >= 6 && c >= 6) continue;
            std::string d = join_names(table.cells[r][c]);
            std::string t = join_sorted(transcribed[r][c]);
            if (d != t) out.push_back(CellDiff{r, c, t, d});
        }
    return out;
}

SuiteReport suite_gf2k() {
    using namespace gf2k;
    SuiteReport rep{"gf2k", {}};

    for (int k : {4, 6}) {
        auto elems = enumerate_field(k);
        bool ax = true;
        for (const Fe& a : elems)
            for (const Fe& b : elems) {
                if (mul(a, b) != mul(b, a) || add(a, b) != add(b, a)) ax = false;
                for (const Fe& c : elems) {
                    if (add(add(a, b), c) != add(a, add(b, c))) ax = false;
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) ax = false;
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) ax = false;
                }
                if (!is_zero(b) && mul(mul(a, b), inv(b)) != a) ax = false;
            }
        push(rep, "field axioms exhaustive on F_" + std::to_string(1 << k), ax);
    }

    {
        Fe w = omega(2), w2 = mul(omega(2), omega(2));
        push(rep, "w + w^2 = 1", add(w, w2) == one(2));
        push(rep, "w * w^2 = 1", mul(w, w2) == one(2));
        push(rep, "inv(w) = w^2", inv(w) == w2);
        push(rep, "w^2 + w + 1 = 0", is_zero(add(add(w2, w), one(2))));
    }
    {
        bool frob_ok = frobenius(omega(2)) == mul(omega(2), omega(2)) &&
                       frobenius(zero(2)) == zero(2);
        for (const Fe& x : enumerate_field(2))
            if (frobenius(frobenius(x)) != x) frob_ok = false;
        push(rep, "frobenius: w -> w^2, order 2 on F_4", frob_ok);
        bool order_ok = true;
        for (int k : {2, 4, 6})
            for (const Fe& x : enumerate_field(k)) {
                Fe y = x;
                for (int i = 0; i < k; ++i) y = frobenius(y);
                if (y != x) order_ok = false;
            }
        push(rep, "frobenius^k = id on F_{2^k}", order_ok);
    }
    {
        bool sizes = enumerate_field(1).size() == 2 && enumerate_field(2).size() == 4 &&
                     enumerate_field(4).size() == 16 && enumerate_field(6).size() == 64;
        bool heads = true;
        for (int k : {1, 2, 4, 6}) {
            auto e = enumerate_field(k);
            if (e[0] != zero(k) || e[1] != one(k)) heads = false;
        }
        bool closure = true;
        for (const Fe& x : enumerate_field(6))
            if (pow(x, 64) != x) closure = false;
        push(rep, "enumerate_field sizes and x^64 = x on F_64", sizes && heads && closure);
    }
    {
        bool ok = true;
        for (int to_k : {4, 6}) {
            Fe img = embed(omega(2), to_k);
            if (!is_zero(add(add(mul(img, img), img), one(to_k)))) ok = false;
            for (const Fe& a : enumerate_field(2))
                for (const Fe& b : enumerate_field(2)) {
                    if (embed(add(a, b), to_k) != add(embed(a, to_k), embed(b, to_k))) ok = false;
                    if (embed(mul(a, b), to_k) != mul(embed(a, to_k), embed(b, to_k))) ok = false;
                }
            for (const Fe& a : enumerate_field(2))
                if (embed(frobenius(a), to_k) != frobenius(embed(a, to_k))) ok = false;
            std::set<uint8_t> images;
            for (const Fe& a : enumerate_field(2)) images.insert(embed(a, to_k).bits);
            if (images.size() != 4) ok = false;
        }
        if (embed(embed(one(1), 2), 4) != embed(one(1), 4)) ok = false;
        push(rep, "embeddings are injective ring maps commuting with frobenius", ok);

        bool rejected = false;
        try {
            embed(fe(4, 2), 6);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        push(rep, "no embedding F_16 -> F_64 (4 does not divide 6)", rejected);
    }
    {
        bool err = false;
        try {
            add(one(2), one(4));
        } catch (const std::invalid_argument&) {
            err = true;
        }
        bool err2 = false;
        try {
            inv(zero(4));
        } catch (const std::domain_error&) {
            err2 = true;
        }
        bool err3 = false;
        try {
            enumerate_field(3);
        } catch (const std::invalid_argument&) {
            err3 = true;
        }
        push(rep, "mixed-degree ops, inv(0), unsupported degree rejected", err && err2 && err3);
    }
    {
        bool ok = true;
        for (int k : {1, 2, 4, 6})
            for (const Fe& x : enumerate_field(k))
                if (parse(k, to_string(x)) != x) ok = false;
        push(rep, "render/parse round trip", ok);
    }
    return rep;
}

SuiteReport suite_ecurve() {
    using namespace ec;
    SuiteReport rep{"ecurve", {}};
    const auto e4 = enumerate_points(2);
    const auto e64 = enumerate_points(6);
    const Fe w = gf2k::omega(2);
    const Fe w2 = gf2k::mul(w, w);
    const Point p1 = affine(gf2k::zero(2), gf2k::zero(2));
    const Point p2 = affine(gf2k::zero(2), gf2k::one(2));

    push(rep, "(0,0), (1,w) on curve; (1,1) off curve",
         on_curve(p1) && on_curve(affine(gf2k::one(2), w)) &&
             !on_curve(affine(gf2k::one(2), gf2k::one(2))));

    {
        bool inv_pairs = add(p1, p2).inf && add(affine(gf2k::one(2), w), affine(gf2k::one(2), w2)).inf;
        push(rep, "inverse pairs sum to infinity", inv_pairs);
        Point r = add(p1, affine(gf2k::one(2), w));
        Point s = add(r, p2);
        bool closure = r == affine(w, w) && on_curve(r) && scalar_mul(3, r).inf &&
                       std::find(e4.begin(), e4.end(), s) != e4.end() && scalar_mul(3, s).inf;
        bool closed_all = true;
        for (const Point& a : e4)
            for (const Point& b : e4)
                if (std::find(e4.begin(), e4.end(), add(a, b)) == e4.end()) closed_all = false;
        push(rep, "(0,0)+(1,w) = (w,w); E(F_4) closed under addition", closure && closed_all);
    }
    {
        bool d = dbl(p1) == p2 && dbl(affine(gf2k::one(2), w)) == affine(gf2k::one(2), w2) &&
                 dbl(infinity(2)).inf;
        push(rep, "doubling: (0,0)->(0,1), (1,w)->(1,w^2), O->O", d);
        bool chain = true;
        for (const Point& p : e64)
            if (add(dbl(p), neg(p)) != p) chain = false;
        push(rep, "2P - P = P on E(F_64) (doubling against the chord law)", chain);
    }
    {
        bool n = neg(p1) == p2 && neg(infinity(2)).inf;
        for (const Point& p : e64) {
            if (!add(p, neg(p)).inf) n = false;
            if (neg(neg(p)) != p) n = false;
        }
        push(rep, "negation: (x,y) -> (x,y+1), involutive, inverse law", n);
    }
    {
        bool s = true;
        for (const Point& p : e4)
            if (!scalar_mul(3, p).inf) s = false;
        for (const Point& p : e64) {
            if (scalar_mul(1, p) != p) s = false;
            if (scalar_mul(0, p) != infinity(6)) s = false;
            if (scalar_mul(2, p) != dbl(p)) s = false;
            if (scalar_mul(-1, p) != neg(p)) s = false;
            if (!scalar_mul(81, p).inf) s = false;
        }
        push(rep, "scalar multiples: 3-torsion on E(F_4), 81P = O on E(F_64)", s);
    }
    {
        auto e2 = enumerate_points(1);
        bool sizes = e2.size() == 3 && e4.size() == 9 && enumerate_points(4).size() == 9 &&
                     e64.size() == 81;
        std::set<Point> listed;
        listed.insert(infinity(2));
        listed.insert(p1);
        listed.insert(p2);
        for (unsigned xb : {1u, 2u, 3u})
            for (unsigned yb : {2u, 3u}) listed.insert(affine(gf2k::fe(2, xb), gf2k::fe(2, yb)));
        bool listed_ok = std::set<Point>(e4.begin(), e4.end()) == listed;
        std::set<Point> e4_in_16, e16;
        for (const Point& p : e4) e4_in_16.insert(embed_point(p, 4));
        for (const Point& p : enumerate_points(4)) e16.insert(p);
        push(rep, "point counts 3/9/9/81; E(F_4) as listed; E(F_16) = E(F_4)",
             sizes && listed_ok && e4_in_16 == e16);
    }
    {
        bool assoc16 = true;
        auto e16 = enumerate_points(4);
        for (const Point& a : e16)
            for (const Point& b : e16)
                for (const Point& c : e16)
                    if (add(add(a, b), c) != add(a, add(b, c))) assoc16 = false;
        push(rep, "associativity exhaustive on E(F_16)", assoc16);

        bool assoc64 = true;
        uint64_t state = 0x9e3779b97f4a7c15ULL;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int trial = 0; trial < 10000; ++trial) {
            const Point& a = e64[next() % e64.size()];
            const Point& b = e64[next() % e64.size()];
            const Point& c = e64[next() % e64.size()];
            if (add(add(a, b), c) != add(a, add(b, c))) assoc64 = false;
        }
        push(rep, "associativity on 10^4 deterministic E(F_64) triples", assoc64);

        bool idinv = true;
        for (const Point& p : e64)
            if (add(p, infinity(6)) != p || !add(p, neg(p)).inf) idinv = false;
        push(rep, "identity and inverse laws exhaustive on E(F_64)", idinv);
    }
    {
        std::set<Point> tor3;
        for (const Point& p : e64)
            if (scalar_mul(3, p).inf) tor3.insert(p);
        std::set<Point> e4_in_64;
        for (const Point& p : e4) e4_in_64.insert(embed_point(p, 6));
        push(rep, "3-torsion of E(F_64) is exactly E(F_4)", tor3 == e4_in_64);
    }
    {
        bool endo_ok = true;
        for (Endo e : {Endo::Sigma, Endo::SigmaSq, Endo::Theta, Endo::Frob, Endo::Versch,
                       Endo::Tau}) {
            std::set<Point> image;
            for (const Point& p : e64) {
                Point q = apply_basic(e, p);
                if (!on_curve(q)) endo_ok = false;
                image.insert(q);
            }
            if (image.size() != e64.size()) endo_ok = false;
        }
        push(rep, "sigma, theta, F, V, tau map E(F_64) onto itself", endo_ok);

        bool examples = apply_basic(Endo::Sigma, affine(gf2k::one(2), w)) == affine(w, w) &&
                        apply_basic(Endo::Theta, p1) == affine(gf2k::one(2), w) &&
                        apply_basic(Endo::Tau, affine(gf2k::one(2), w)) == affine(w, w);
        push(rep, "sigma((1,w)) = (w,w); theta((0,0)) = (1,w); tau((1,w)) = (w,w)", examples);

        bool tau_ok = true;
        for (const Point& p : e64) {
            Point expect = add(p, embed_point(p1, 6));
            if (apply_basic(Endo::Tau, p) != expect) tau_ok = false;
            if (!p.inf && !gf2k::is_zero(p.x)) {
                Fe x2 = gf2k::mul(p.x, p.x);
                Fe x3 = gf2k::mul(x2, p.x);
                Point formula = affine(gf2k::mul(p.y, gf2k::inv(x2)), gf2k::mul(p.y, gf2k::inv(x3)));
                if (formula != expect) tau_ok = false;
            }
        }
        push(rep, "tau = translation by P1; rational formula agrees away from x = 0", tau_ok);
    }
    for (const RelationCheck& rc : verify_relations()) {
        std::string name = "relation: " + rc.name;
        push(rep, name, rc.holds == rc.expected, rc.expected ? "holds" : "fails (documented)",
             rc.holds ? "holds" : "fails");
    }
    {
        bool quot = true, inv_ok = true;
        for (const Point& p : e64) {
            if (p.inf || gf2k::is_zero(p.x)) continue;
            auto [qw, qz] = quotient_map(p);
            Fe lhs = gf2k::add(gf2k::mul(qz, qz), qz);
            Fe rhs = gf2k::mul(qw, gf2k::mul(qw, qw));
            if (lhs != rhs) quot = false;
            Point t = apply_basic(Endo::Tau, p);
            if (!t.inf && !gf2k::is_zero(t.x) && quotient_map(t) != quotient_map(p))
                inv_ok = false;
        }
        push(rep, "quotient map lands on z^2 + z = w^3 over E(F_64)", quot);
        push(rep, "quotient map is tau-invariant", inv_ok);
        auto [qw, qz] = quotient_map(affine(gf2k::one(2), w));
        push(rep, "quotient of (1,w) is (0,0)", gf2k::is_zero(qw) && gf2k::is_zero(qz));
        bool pole = false, pole2 = false;
        try {
            quotient_map(infinity(2));
        } catch (const std::domain_error&) {
            pole = true;
        }
        try {
            quotient_map(p1);
        } catch (const std::domain_error&) {
            pole2 = true;
        }
        push(rep, "quotient map reports poles at O and x = 0", pole && pole2);
    }
    return rep;
}

SuiteReport suite_quatorder() {
    using namespace quat;
    SuiteReport rep{"quatorder", {}};
    const Quat i = from_units(0, 1, 0, 0);
    const Quat j = from_units(0, 0, 1, 0);
    const Quat k = from_units(0, 0, 0, 1);

    push(rep, "i*j = k and j*i = -k", mul(i, j) == k && mul(j, i) == neg(k));
    push(rep, "Trd((-1+i+j+k)/2) = -1", trd(from_halves(-1, 1, 1, 1)) == -1);
    push(rep, "Nrd(i+j) = 2", nrd(add(i, j)) == 2);
    {
        auto units = hurwitz_units();
        auto norm2 = hurwitz_norm2();
        bool assoc = true;
        for (const Quat& a : units)
            for (const Quat& b : units)
                for (const Quat& c : units)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) assoc = false;
        bool integral = true;
        for (const Quat& u : units) {
            if (!is_hurwitz(u) || nrd(u) != 1) integral = false;
            if (nrd(mul(u, conj(u))) != 1 || !is_scalar(mul(u, conj(u)))) integral = false;
        }
        for (const Quat& u : norm2)
            if (!is_hurwitz(u) || nrd(u) != 2) integral = false;
        push(rep, "24 units / 24 norm-2 elements, associative, integral norms",
             units.size() == 24 && norm2.size() == 24 && assoc && integral);
    }
    {
        const auto& sols = solutions();
        push(rep, "relation search finds solutions", !sols.empty(),
             ">= 1", std::to_string(sols.size()) + " solutions");
        bool props = true;
        for (const GeneratorSolution& s : sols) {
            Quat pi = s.two_sigma_plus_one();
            if (nrd(s.sigma) != 1 || nrd(s.theta) != 1 || nrd(s.frob) != 2 || nrd(pi) != 3)
                props = false;
            Quat sigma3 = mul(s.sigma, mul(s.sigma, s.sigma));
            if (sigma3 != from_units(1, 0, 0, 0) || s.sigma == from_units(1, 0, 0, 0))
                props = false;
            if (conj(pi) != neg(pi)) props = false;
        }
        push(rep, "Nrd(sigma) = 1, Nrd(F) = 2, Nrd(2*sigma+1) = 3, sigma^3 = 1", props);
        bool designated_least = std::is_sorted(sols.begin(), sols.end()) && sols.front() == designated();
        push(rep, "designated solution is the least under the coefficient order",
             designated_least);
    }
    {
        const auto& sol = designated();
        bool h = true;
        Quat vf = mul(endo_to_quat(EndoExpr::versch(), sol), endo_to_quat(EndoExpr::frob(), sol));
        Quat fv = mul(endo_to_quat(EndoExpr::frob(), sol), endo_to_quat(EndoExpr::versch(), sol));
        if (vf != from_units(2, 0, 0, 0) || fv != from_units(2, 0, 0, 0)) h = false;
        if (endo_to_quat(EndoExpr::identity(), sol) != from_units(1, 0, 0, 0)) h = false;
        Quat proj = endo_to_quat(EndoExpr::pi(), sol);
        if (proj != neg(sol.two_sigma_plus_one())) h = false;
        push(rep, "endo_to_quat: V*F = F*V = 2, id -> 1, projection -> -(2*sigma+1)", h);
    }
    {
        // expression corpus: quaternion equality must match pointwise equality
        const auto& sol = designated();
        std::vector<EndoExpr> corpus = {EndoExpr::identity(), EndoExpr::sigma(),
                                        EndoExpr::sigma_sq(), EndoExpr::theta(),
                                        EndoExpr::frob(),     EndoExpr::versch()};
        const size_t base_count = corpus.size();
        for (size_t a = 0; a < base_count; ++a)
            for (size_t b = 0; b < base_count; ++b) {
                corpus.push_back(EndoExpr::compose(corpus[a], corpus[b]));
                corpus.push_back(EndoExpr::sum(corpus[a], corpus[b]));
            }
        const std::vector<EndoExpr> depth2 = {EndoExpr::sigma(), EndoExpr::theta(),
                                              EndoExpr::frob()};
        for (const EndoExpr& a : depth2)
            for (const EndoExpr& b : depth2)
                for (const EndoExpr& c : depth2) {
                    corpus.push_back(EndoExpr::compose(EndoExpr::compose(a, b), c));
                    corpus.push_back(EndoExpr::sum(EndoExpr::compose(a, b), c));
                    corpus.push_back(EndoExpr::diff(EndoExpr::compose(a, b), c));
                }
        corpus.push_back(EndoExpr::sum(EndoExpr::scale(2, EndoExpr::sigma()), EndoExpr::identity()));
        corpus.push_back(EndoExpr::scale(-1, EndoExpr::pi()));
        corpus.push_back(EndoExpr::pi());

        const auto pts = ec::enumerate_points(6);
        std::vector<std::vector<Point>> signatures;
        std::vector<Quat> values;
        for (const EndoExpr& e : corpus) {
            std::vector<Point> sig;
            for (const Point& p : pts) sig.push_back(e.apply(p));
            signatures.push_back(std::move(sig));
            values.push_back(endo_to_quat(e, sol));
        }
        bool faithful = true;
        for (size_t a = 0; a < corpus.size() && faithful; ++a)
            for (size_t b = a + 1; b < corpus.size(); ++b)
                if ((values[a] == values[b]) != (signatures[a] == signatures[b])) {
                    faithful = false;
                    break;
                }
        push(rep, "quaternion model is faithful on a depth-3 expression corpus", faithful,
             "", std::to_string(corpus.size()) + " expressions");
    }
    return rep;
}

SuiteReport suite_nslattice() {
    using namespace ns;
    SuiteReport rep{"nslattice", {}};
    const auto& sol = designated();
    const Quat one = quat::from_units(1, 0, 0, 0);

    {
        NSClass d = delta_class(one, one);
        push(rep, "delta(1,1) = [[1,1],[1,1]]",
             d.alpha == 1 && d.delta == 1 && d.beta == one);
    }
    {
        const Quat sigma2 = quat::mul(sol.sigma, sol.sigma);
        const Quat versch = quat::neg(sol.frob);
        NSClass f0 = curve_class(CurveName{CurveLetter::F, 0, false}, sol);
        bool disp = f0.alpha == 1 && f0.delta == 2 &&
                    f0.beta == quat::mul(sol.sigma, versch) &&
                    f0 == delta_class(sigma2, versch);
        push(rep, "F0 class matches its displayed matrix [[1, sigma V],[F sigma^2, 2]]", disp);

        NSClass pi0p = curve_class(CurveName{CurveLetter::Pi, 0, true}, sol);
        push(rep, "pi0' class has alpha = 2, delta = 3", pi0p.alpha == 2 && pi0p.delta == 3);
    }
    {
        push(rep, "X^2 = 2 for the principal polarization",
             self_intersection(principal_polarization()) == 2);
        push(rep, "E0^2 = 0",
             self_intersection(curve_class(CurveName{CurveLetter::E, 0, false}, sol)) == 0);
        bool zeros = true;
        for (const Quat& a1 : quat::hurwitz_units())
            for (const Quat& a2 : quat::hurwitz_norm2())
                if (self_intersection(delta_class(a1, a2)) != 0) zeros = false;
        push(rep, "delta classes have square zero (units x norm-2 sweep)", zeros);
    }
    {
        bool sym = true, diag_row = true;
        std::vector<NSClass> cls;
        for (const CurveName& n : base_curve_names()) cls.push_back(curve_class(n, sol));
        cls.push_back(principal_polarization());
        for (const NSClass& a : cls)
            for (const NSClass& b : cls)
                if (intersection(a, b) != intersection(b, a)) sym = false;
        for (const NSClass& a : cls) {
            if (intersection(a, class_of_first_factor()) != a.alpha) diag_row = false;
            if (intersection(a, class_of_second_factor()) != a.delta) diag_row = false;
        }
        push(rep, "pairing symmetric; (L,E1) = alpha and (L,E2) = delta", sym && diag_row);
    }
    {
        bool translates = true;
        for (CurveLetter l : {CurveLetter::E, CurveLetter::F, CurveLetter::V, CurveLetter::Pi})
            for (bool primed : {false, true})
                for (int idx : {1, 2})
                    if (!(curve_class(CurveName{l, idx, primed}, sol) ==
                          curve_class(CurveName{l, 0, primed}, sol)))
                        translates = false;
        push(rep, "translates share the class of their base curve", translates);
    }
    {
        // expected table, rederived independently from point counting with
        // multiplicities (common torsion points; cross-family weight 1,
        // same-family weight 2)
        static const std::array<std::array<long long, 8>, 8> expected = {{
            {0, 2, 2, 2, 1, 1, 1, 3},
            {2, 0, 2, 2, 1, 3, 1, 1},
            {2, 2, 0, 2, 1, 1, 3, 1},
            {2, 2, 2, 0, 3, 1, 1, 1},
            {1, 1, 1, 3, 0, 2, 2, 2},
            {1, 3, 1, 1, 2, 0, 2, 2},
            {1, 1, 3, 1, 2, 2, 0, 2},
            {3, 1, 1, 1, 2, 2, 2, 0},
        }};
        auto table = derived_intersection_table();
        push(rep, "8x8 table equals the pairing-derived values", table == expected);
        push(rep, "witnesses: (F0,F0') = 3, (pi0,E0') = 3, zero diagonal",
             table[1][5] == 3 && table[3][4] == 3 && table[0][0] == 0 && table[7][7] == 0);

        bool invariant = true;
        for (const quat::GeneratorSolution& s : solutions())
            if (ns::intersection_table(s) != table) invariant = false;
        push(rep, "table identical across all generator solutions", invariant, "",
             std::to_string(solutions().size()) + " solutions");

        auto diffs = intersection_table_diff();
        std::vector<std::pair<int, int>> cells;
        for (const CellDiff& d : diffs) cells.emplace_back(d.row, d.col);
        push(rep, "transcription differs exactly in the 8 documented cells",
             cells == ref::expected_intersection_discrepancies(), "8 cells",
             std::to_string(diffs.size()) + " cells");
    }
    return rep;
}

SuiteReport suite_abelian() {
    using namespace ab;
    SuiteReport rep{"abelian", {}};
    const auto& cs = curves();
    const auto& sol = designated();

    {
        auto f2 = torsion_points(TorsionLevel::F2);
        auto f4 = torsion_points(TorsionLevel::F4);
        bool ann = true;
        for (const APoint& p : f4)
            if (!a_smul(3, p).first.inf || !a_smul(3, p).second.inf) ann = false;
        bool fixed = true;
        std::set<APoint> f2set(f2.begin(), f2.end());
        for (const APoint& p : f4)
            if ((sigma_cross(p) == p) != f2set.contains(p)) fixed = false;
        push(rep, "9 rational points, 81 torsion points, 3Q = O", f2.size() == 9 && f4.size() == 81 && ann);
        push(rep, "fixed points of sigma x sigma^2 are exactly A(F_2)", fixed);
    }
    {
        int first = 0, second = 0;
        bool nine = true, split = true, stable = true, orbits_ok = true;
        for (const CurveOnA& c : cs) {
            (c.second_family() ? second : first)++;
            if (c.points.size() != 9) nine = false;
            int rational = 0;
            for (const APoint& p : c.points)
                if (sigma_cross(p) == p) ++rational;
            if (rational != 3) split = false;
            std::vector<APoint> nonrat;
            for (const APoint& p : c.points) {
                if (std::find(c.points.begin(), c.points.end(), sigma_cross(p)) == c.points.end())
                    stable = false;
                if (sigma_cross(p) != p) nonrat.push_back(p);
            }
            auto dec = orbit_decomposition(nonrat);
            if (dec.fixed.size() != 0 || dec.orbits.size() != 2) orbits_ok = false;
        }
        push(rep, "24 curves, 12 per family", cs.size() == 24 && first == 12 && second == 12);
        push(rep, "each curve: 9 points, 3 rational + two 3-orbits, stable",
             nine && split && stable && orbits_ok);
    }
    {
        bool inj = true, rational_only = true;
        auto e64 = ec::enumerate_points(6);
        std::set<ec::Point> e4_in_64;
        for (const ec::Point& p : ec::enumerate_points(2)) e4_in_64.insert(ec::embed_point(p, 6));
        std::set<APoint> a4;
        for (const APoint& p : torsion_points(TorsionLevel::F4)) a4.insert(a_embed(p, 6));
        for (const CurveOnA& c : cs) {
            if (c.name.index != 0) continue;  // base homomorphisms
            int kernel = 0;
            for (const ec::Point& p : e64) {
                APoint img{c.hom_first.apply(p), c.hom_second.apply(p)};
                if (img.first.inf && img.second.inf) ++kernel;
                bool p_in_f4 = e4_in_64.contains(p);
                APoint shifted = a_add(img, a_embed(c.translate, 6));
                if (!p_in_f4 && a4.contains(shifted)) rational_only = false;
            }
            if (kernel != 1) inj = false;
        }
        push(rep, "the 8 base homomorphisms are injective over F_64", inj);
        push(rep, "F_4 points of each curve come only from E(F_4)", rational_only);
    }
    {
        // displayed kernel-form pairs (a1, a2): a1(x) + a2(y) = 0 on the image
        using EE = ec::EndoExpr;
        const EE pi = EE::pi();
        struct Form {
            CurveName name;
            EE a1, a2;
        };
        const std::vector<Form> forms = {
            {CurveName{CurveLetter::F, 0, false}, EE::sigma_sq(), EE::versch()},
            {CurveName{CurveLetter::V, 0, false}, EE::sigma(), EE::frob()},
            {CurveName{CurveLetter::Pi, 0, false}, EE::scale(-1, pi), EE::frob()},
            {CurveName{CurveLetter::F, 0, true}, EE::versch(), EE::sigma()},
            {CurveName{CurveLetter::V, 0, true}, EE::frob(), EE::sigma_sq()},
            {CurveName{CurveLetter::Pi, 0, true}, EE::versch(), EE::scale(-1, pi)},
        };
        bool ok = true;
        for (const Form& f : forms) {
            const CurveOnA& c = curve_by_name(cs, f.name);
            for (const ec::Point& p : ec::enumerate_points(6)) {
                APoint img{c.hom_first.apply(p), c.hom_second.apply(p)};
                ec::Point v = ec::add(f.a1.apply(img.first), f.a2.apply(img.second));
                if (!v.inf) ok = false;
            }
        }
        push(rep, "kernel forms annihilate their image curves over F_64", ok);
    }
    {
        auto table = incidence_table_f2(cs);
        bool cells8 = true;
        std::map<std::string, int> appearances;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const auto& cell = table.cells[r][c];
                int first = 0;
                for (const CurveName& n : cell)
                    if (!n.primed) ++first;
                if (cell.size() != 8 || first != 4) cells8 = false;
                for (const CurveName& n : cell) appearances[gkm21::to_string(n)]++;
            }
        bool three_each = appearances.size() == 24 &&
                          std::all_of(appearances.begin(), appearances.end(),
                                      [](const auto& kv) { return kv.second == 3; });
        push(rep, "rational table: 8 curves per cell, 4 + 4, 3 cells per curve",
             cells8 && three_each);

        auto diffs = f2_table_diff();
        std::vector<std::pair<int, int>> cells;
        for (const CellDiff& d : diffs) cells.emplace_back(d.row, d.col);
        push(rep, "rational table: transcription differs only at P2 x P0 (V1' vs V2')",
             cells == ref::expected_f2_discrepancies());
    }
    {
        auto table = incidence_table_f4(cs);
        bool two = true;
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) {
                if (r >= 6 && c >= 6) continue;
                const auto& cell = table.cells[r][c];
                if (cell.size() != 2) two = false;
                else if (cell[0].primed == cell[1].primed) two = false;
            }
        push(rep, "72 non-rational points carry exactly two curves, one per family", two);

        auto diffs = f4_table_diff();
        std::vector<std::pair<int, int>> cells;
        for (const CellDiff& d : diffs) cells.emplace_back(d.row, d.col);
        push(rep, "second table: transcription differs exactly in the 19 documented cells",
             cells == ref::expected_f4_discrepancies(), "19 cells (18 pi' + 1 stray E')",
             std::to_string(diffs.size()) + " cells");
    }
    {
        const CurveOnA& f2c = curve_by_name(cs, CurveName{CurveLetter::F, 2, false});
        const CurveOnA& f0p = curve_by_name(cs, CurveName{CurveLetter::F, 0, true});
        auto common = common_points(f2c, f0p);
        auto mk = [](const char* a, const char* b, const char* c, const char* d) {
            return APoint{ec::affine(gf2k::parse(2, a), gf2k::parse(2, b)),
                          ec::affine(gf2k::parse(2, c), gf2k::parse(2, d))};
        };
        std::vector<APoint> expect = {mk("w^2", "w^2", "1", "w"), mk("1", "w^2", "w^2", "w"),
                                      mk("w", "w^2", "w", "w")};
        std::sort(expect.begin(), expect.end());
        push(rep, "F2 meets F0' at the three listed points", common == expect);
        auto dec = orbit_decomposition(common);
        push(rep, "that triple is one orbit", dec.fixed.empty() && dec.orbits.size() == 1);

        const CurveOnA& f0 = curve_by_name(cs, CurveName{CurveLetter::F, 0, false});
        auto c2 = common_points(f0, f0p);
        auto rats = rational_points();
        std::vector<APoint> expect2 = {APoint{rats[0], rats[0]}, APoint{rats[1], rats[1]},
                                       APoint{rats[2], rats[2]}};
        std::sort(expect2.begin(), expect2.end());
        auto dec2 = orbit_decomposition(c2);
        push(rep, "F0 meets F0' at P00, P11, P22 (all fixed)",
             c2 == expect2 && dec2.fixed.size() == 3 && dec2.orbits.empty());

        const CurveOnA& e0 = curve_by_name(cs, CurveName{CurveLetter::E, 0, false});
        auto c3 = common_points(e0, f0);
        push(rep, "E0 meets F0 exactly at the origin",
             c3.size() == 1 && c3[0] == APoint{rats[0], rats[0]});

        auto whole = orbit_decomposition(torsion_points(TorsionLevel::F4));
        push(rep, "A(F_4) splits as 9 fixed points and 24 orbits",
             whole.fixed.size() == 9 && whole.orbits.size() == 24);
    }
    {
        bool mult = true;
        for (size_t a = 0; a < cs.size(); ++a)
            for (size_t b = a + 1; b < cs.size(); ++b) {
                long long pairing = ns::intersection(ns::curve_class(cs[a].name, sol),
                                                     ns::curve_class(cs[b].name, sol));
                long long commons = static_cast<long long>(common_points(cs[a], cs[b]).size());
                bool same_family = cs[a].second_family() == cs[b].second_family();
                long long expected = same_family ? 2 * commons : commons;
                if (pairing != expected) mult = false;
            }
        push(rep, "multiplicity accounting over all 276 pairs", mult);
    }
    return rep;
}

SuiteReport suite_gkm() {
    SuiteReport rep{"gkm", {}};
    const auto& g = derived_graph();
    const auto& rules = rules_graph();
    const auto& gram = gram_data();
    const auto& sol = designated();

    push(rep, "derived incidence equals the closed-form rules",
         g.incidence == rules.incidence);
    {
        // the published F-block rule (1 - delta_ij) differs from the
        // derivation in exactly the eight documented cells
        ns::IntMatrix printed = rules.incidence;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int a = cfg::image_node_index(CurveName{CurveLetter::F, i, false});
                int b = cfg::image_node_index(CurveName{CurveLetter::F, j, true});
                printed[a][b] = printed[b][a] = (i == j ? 0 : 1);
            }
        int diffs = 0;
        for (int i = 0; i < 42; ++i)
            for (int j = 0; j < 42; ++j)
                if (printed[i][j] != g.incidence[i][j]) ++diffs;
        push(rep, "published F-block rule differs from the derivation in 8 cells (documented)",
             diffs == 8, "8", std::to_string(diffs));
    }
    for (const cfg::CheckRow& row : cfg::verify_config(g))
        push(rep, "config: " + row.name, row.pass, "", row.detail);

    {
        bool consistent = true;
        for (const ab::CurveOnA& c1 : curves())
            for (const ab::CurveOnA& c2 : curves()) {
                if (&c1 >= &c2 || c1.second_family() == c2.second_family()) continue;
                auto common = ab::common_points(c1, c2);
                auto dec = ab::orbit_decomposition(common);
                long long pairing = ns::intersection(ns::curve_class(c1.name, sol),
                                                     ns::curve_class(c2.name, sol));
                long long downstairs =
                    g.incidence[cfg::image_node_index(c1.name)][cfg::image_node_index(c2.name)];
                if (downstairs != static_cast<long long>(dec.orbits.size())) consistent = false;
                if (pairing != 3 * static_cast<long long>(dec.orbits.size()) +
                                   static_cast<long long>(dec.fixed.size()))
                    consistent = false;
            }
        push(rep, "orbit bookkeeping matches the class pairing (3*orbits + fixed)", consistent);
    }
    {
        auto fib = cfg::fibration_analysis(g);
        for (const cfg::CheckRow& row : fib.checks)
            push(rep, "fibration: " + row.name, row.pass, "", row.detail);
        std::set<std::set<std::string>> found;
        for (const auto& hex : fib.hexagons) {
            std::set<std::string> labels;
            for (int v : hex) labels.insert(g.nodes[v].label());
            found.insert(labels);
        }
        std::set<std::set<std::string>> expected = {
            {"F0", "F1", "F2", "F0'", "F1'", "F2'"},
            {"V0", "V1", "V2", "V0'", "V1'", "V2'"},
            {"pi0", "pi1", "pi2", "E0'", "E1'", "E2'"},
            {"E0", "E1", "E2", "pi0'", "pi1'", "pi2'"},
        };
        push(rep, "fibration: the four fibers are the listed hexagons", found == expected);
    }
    {
        bool diag = true;
        for (size_t i = 0; i < gram.matrix.size(); ++i)
            if (gram.matrix[i][i] != -2) diag = false;
        push(rep, "Gram diagonal is -2", diag);
        long long product = 1;
        for (long long d : gram.elementary_divisors) product *= d;
        push(rep, "invariant factor product matches |disc|",
             product == (gram.discriminant < 0 ? -gram.discriminant : gram.discriminant));
        auto st = cfg::shioda_tate_report(g, gram);
        for (const cfg::CheckRow& row : st.checks)
            push(rep, "lattice: " + row.name, row.pass, "", row.detail);
        push(rep, "Mordell-Weil order 18 recorded (structure Z/6 x Z/3 unverified)",
             st.mordell_weil_order == 18);
    }
    for (cfg::Family fam : {cfg::Family::First, cfg::Family::Second}) {
        std::string label = fam == cfg::Family::First ? "first" : "second";
        for (const cfg::CheckRow& row : cfg::contract_family(g, fam))
            push(rep, "contract " + label + ": " + row.name, row.pass, "", row.detail);
    }
    return rep;
}

SuiteReport suite_models() {
    using namespace models;
    SuiteReport rep{"models", {}};

    auto pg = pg24();
    {
        bool reg = true;
        for (int i = 0; i < 21; ++i) {
            int dr = 0, dc = 0;
            for (int j = 0; j < 21; ++j) {
                dr += pg.adjacency[i][j];
                dc += pg.adjacency[j][i];
            }
            if (dr != 5 || dc != 5) reg = false;
        }
        push(rep, "plane model: 21 + 21, lines carry 5 points", reg);
        bool unique_line = true;
        for (int p = 0; p < 21; ++p)
            for (int q = p + 1; q < 21; ++q) {
                int shared = 0;
                for (int l = 0; l < 21; ++l)
                    if (pg.adjacency[p][l] && pg.adjacency[q][l]) ++shared;
                if (shared != 1) unique_line = false;
            }
        bool unique_point = true;
        for (int l = 0; l < 21; ++l)
            for (int m = l + 1; m < 21; ++m) {
                int shared = 0;
                for (int p = 0; p < 21; ++p)
                    if (pg.adjacency[p][l] && pg.adjacency[p][m]) ++shared;
                if (shared != 1) unique_point = false;
            }
        push(rep, "plane model: two points span one line, dual axiom holds",
             unique_line && unique_point);
    }

    auto pp = p2p2_lines();
    {
        bool reg = true;
        long long total = 0;
        for (int i = 0; i < 21; ++i) {
            int dr = 0, dc = 0;
            for (int j = 0; j < 21; ++j) {
                dr += pp.adjacency[i][j];
                dc += pp.adjacency[j][i];
            }
            if (dr != 5 || dc != 5) reg = false;
            total += dr;
        }
        push(rep, "product model: 5-regular both ways, 105 incidences", reg && total == 105);

        auto pts = enumerate_proj_points();
        bool twin = true;
        for (const ProjPoint& a : pts)
            for (const ProjPoint& b : pts) {
                Fe s2 = gf2k::zero(2), s1 = gf2k::zero(2);
                for (int i = 0; i < 3; ++i) {
                    s2 = gf2k::add(s2, gf2k::mul(gf2k::mul(a.coords[i], a.coords[i]), b.coords[i]));
                    s1 = gf2k::add(s1, gf2k::mul(a.coords[i], gf2k::mul(b.coords[i], b.coords[i])));
                }
                if (gf2k::is_zero(s2) != gf2k::is_zero(s1)) twin = false;
            }
        push(rep, "the two incidence conditions agree on all 441 pairs", twin);

        int a100 = -1;
        for (int i = 0; i < 21; ++i)
            if (pp.part1[i] == "A(1:0:0)") a100 = i;
        bool five_b = a100 >= 0;
        if (five_b) {
            for (int j = 0; j < 21; ++j) {
                bool b0_zero = gf2k::is_zero(pts[j].coords[0]);
                if ((pp.adjacency[a100][j] != 0) != b0_zero) five_b = false;
            }
        }
        push(rep, "A(1:0:0) meets exactly the five B-lines with b0 = 0", five_b);
    }
    {
        auto inv = involution_swap(pp);
        push(rep, "coordinate swap is a family-exchanging involution", inv.pass());
        push(rep, "nine diagonal points on the fixed cubic", fixed_curve_count() == 9);
        auto pts = enumerate_proj_points();
        std::set<ProjPoint> diag;
        for (const ProjPoint& a : pts) {
            Fe s = gf2k::zero(2);
            for (const Fe& c : a.coords) s = gf2k::add(s, gf2k::mul(c, gf2k::mul(c, c)));
            if (gf2k::is_zero(s)) diag.insert(a);
        }
        bool perm_stable = true;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const ProjPoint& a : diag)
            for (const auto& pm : perms) {
                ProjPoint b = canonicalize({a.coords[pm[0]], a.coords[pm[1]], a.coords[pm[2]]});
                if (!diag.contains(b)) perm_stable = false;
            }
        push(rep, "fixed-point set stable under coordinate permutations", perm_stable);
    }
    {
        auto gk = from_config_graph(derived_graph());
        auto i1 = graph_iso(gk, pg);
        auto i2 = graph_iso(pg, pp);
        auto i3 = graph_iso(gk, pp);
        push(rep, "configuration graph isomorphic to the plane model",
             i1.has_value() && check_iso(gk, pg, *i1));
        push(rep, "plane model isomorphic to the product model",
             i2.has_value() && check_iso(pg, pp, *i2));
        push(rep, "configuration graph isomorphic to the product model",
             i3.has_value() && check_iso(gk, pp, *i3));
        auto self_iso = graph_iso(pg, pg);
        push(rep, "self isomorphism found and valid",
             self_iso.has_value() && check_iso(pg, pg, *self_iso));
        auto again = graph_iso(gk, pg);
        push(rep, "search is deterministic",
             again.has_value() && again->part1_map == i1->part1_map &&
                 again->part2_map == i1->part2_map &&
                 again->family_swapped == i1->family_swapped);
    }
    return rep;
}

std::vector<SuiteReport> run_all() {
    return {suite_gf2k(),  suite_ecurve(),  suite_quatorder(), suite_nslattice(),
            suite_abelian(), suite_gkm(),   suite_models()};
}

}  // namespace gkm21::verify
