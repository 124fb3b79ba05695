#include "gkm21/quatorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm21::quat {

Quat from_units(long long a, long long b, long long c, long long d) {
    return Quat{2 * a, 2 * b, 2 * c, 2 * d};
}

Quat from_halves(long long a2, long long b2, long long c2, long long d2) {
    return Quat{a2, b2, c2, d2};
}

bool is_hurwitz(const Quat& q) {
    bool even = (q.a2 % 2 == 0) && (q.b2 % 2 == 0) && (q.c2 % 2 == 0) && (q.d2 % 2 == 0);
    bool odd = (q.a2 % 2 != 0) && (q.b2 % 2 != 0) && (q.c2 % 2 != 0) && (q.d2 % 2 != 0);
    return even || odd;
}

bool is_scalar(const Quat& q) { return q.b2 == 0 && q.c2 == 0 && q.d2 == 0; }

Quat add(const Quat& p, const Quat& q) {
    return Quat{p.a2 + q.a2, p.b2 + q.b2, p.c2 + q.c2, p.d2 + q.d2};
}

Quat sub(const Quat& p, const Quat& q) {
    return Quat{p.a2 - q.a2, p.b2 - q.b2, p.c2 - q.c2, p.d2 - q.d2};
}

Quat neg(const Quat& q) { return Quat{-q.a2, -q.b2, -q.c2, -q.d2}; }

Quat mul(const Quat& p, const Quat& q) {
    // doubled*doubled = 4*(true product); halve once to stay doubled
    long long a = p.a2 * q.a2 - p.b2 * q.b2 - p.c2 * q.c2 - p.d2 * q.d2;
    long long b = p.a2 * q.b2 + p.b2 * q.a2 + p.c2 * q.d2 - p.d2 * q.c2;
    long long c = p.a2 * q.c2 - p.b2 * q.d2 + p.c2 * q.a2 + p.d2 * q.b2;
    long long d = p.a2 * q.d2 + p.b2 * q.c2 - p.c2 * q.b2 + p.d2 * q.a2;
    if ((a | b | c | d) & 1)
        throw std::logic_error("quatorder: product left the half-integer lattice");
    return Quat{a / 2, b / 2, c / 2, d / 2};
}

Quat scalar_mul(long long n, const Quat& q) {
    return Quat{n * q.a2, n * q.b2, n * q.c2, n * q.d2};
}

Quat conj(const Quat& q) { return Quat{q.a2, -q.b2, -q.c2, -q.d2}; }

long long trd(const Quat& q) { return q.a2; }

long long nrd(const Quat& q) {
    long long s = q.a2 * q.a2 + q.b2 * q.b2 + q.c2 * q.c2 + q.d2 * q.d2;
    if (s % 4 != 0) throw std::logic_error("quatorder: norm of a non-Hurwitz element");
    return s / 4;
}

std::string to_string(const Quat& q) {
    auto coeff = [](long long twice) {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    };
    std::string out;
    if (q.a2 != 0) out = coeff(q.a2);
    auto append = [&out, &coeff](long long twice, const char* unit) {
        if (twice == 0) return;
        std::string mag = (twice == 2 || twice == -2) ? "" : coeff(twice < 0 ? -twice : twice);
        if (twice > 0)
            out += (out.empty() ? "" : "+") + mag + unit;
        else
            out += "-" + mag + unit;
    };
    append(q.b2, "i");
    append(q.c2, "j");
    append(q.d2, "k");
    return out.empty() ? "0" : out;
}

Quat GeneratorSolution::two_sigma_plus_one() const {
    return add(scalar_mul(2, sigma), from_units(1, 0, 0, 0));
}

std::vector<Quat> hurwitz_units() {
    std::vector<Quat> out;
    for (int s = -1; s <= 1; s += 2)
        for (int pos = 0; pos < 4; ++pos) {
            long long c[4] = {0, 0, 0, 0};
            c[pos] = 2 * s;
            out.push_back(from_halves(c[0], c[1], c[2], c[3]));
        }
    for (int a = -1; a <= 1; a += 2)
        for (int b = -1; b <= 1; b += 2)
            for (int c = -1; c <= 1; c += 2)
                for (int d = -1; d <= 1; d += 2) out.push_back(from_halves(a, b, c, d));
    return out;
}

std::vector<Quat> hurwitz_norm2() {
    std::vector<Quat> out;
    for (int p0 = 0; p0 < 4; ++p0)
        for (int p1 = p0 + 1; p1 < 4; ++p1)
            for (int s0 = -1; s0 <= 1; s0 += 2)
                for (int s1 = -1; s1 <= 1; s1 += 2) {
                    long long c[4] = {0, 0, 0, 0};
                    c[p0] = 2 * s0;
                    c[p1] = 2 * s1;
                    out.push_back(from_halves(c[0], c[1], c[2], c[3]));
                }
    return out;
}

std::vector<GeneratorSolution> solve_generators() {
    const Quat one = from_units(1, 0, 0, 0);
    const Quat minus_one = from_units(-1, 0, 0, 0);
    const Quat minus_two = from_units(-2, 0, 0, 0);

    std::vector<GeneratorSolution> found;
    for (const Quat& s : hurwitz_units()) {
        if (add(add(mul(s, s), s), one) != Quat{}) continue;
        if (conj(s) != mul(s, s)) continue;
        const Quat s2 = mul(s, s);
        for (const Quat& t : hurwitz_units()) {
            if (mul(t, t) != minus_one) continue;
            if (sub(mul(t, s), mul(s2, t)) != one) continue;
            for (const Quat& f : hurwitz_norm2()) {
                if (mul(f, f) != minus_two) continue;
                if (mul(f, s) != mul(s2, f)) continue;
                if (sub(mul(s, t), mul(t, s)) != f) continue;
                if (sub(mul(t, s2), mul(s2, t)) != f) continue;
                GeneratorSolution sol{s, t, f};
                Quat pi = sol.two_sigma_plus_one();
                if (conj(pi) != neg(pi)) continue;
                if (mul(f, pi) != neg(mul(pi, f))) continue;
                found.push_back(sol);
            }
        }
    }
    if (found.empty())
        throw std::logic_error("quatorder: relation system has no Hurwitz solution");
    std::sort(found.begin(), found.end());
    return found;
}

const GeneratorSolution& designated_solution() {
    static const GeneratorSolution sol = solve_generators().front();
    return sol;
}

Quat endo_to_quat(const ec::EndoExpr& e, const GeneratorSolution& sol) {
    using Kind = ec::EndoExpr::Kind;
    switch (e.kind()) {
        case Kind::Identity: return from_units(1, 0, 0, 0);
        case Kind::Sigma: return sol.sigma;
        case Kind::SigmaSq: return mul(sol.sigma, sol.sigma);
        case Kind::Theta: return sol.theta;
        case Kind::Frob: return sol.frob;
        case Kind::Versch: return neg(sol.frob);
        case Kind::Sum:
            return add(endo_to_quat(e.children()[0], sol), endo_to_quat(e.children()[1], sol));
        case Kind::Compose:
            return mul(endo_to_quat(e.children()[0], sol), endo_to_quat(e.children()[1], sol));
        case Kind::Scale:
            return scalar_mul(e.scalar(), endo_to_quat(e.children()[0], sol));
    }
    throw std::logic_error("quatorder: malformed expression");
}

}  // namespace gkm21::quat
