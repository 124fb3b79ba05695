#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkm21/ecurve.hpp"

namespace gkm21::quat {

// Hurwitz quaternion a + bi + cj + dk with i^2 = j^2 = -1, ij = k = -ji.
// Coordinates are stored doubled (a2 = 2a, ...), so Hurwitz membership is
// "all even or all odd".  Products of doubled coordinates halve exactly.
struct Quat {
    long long a2 = 0, b2 = 0, c2 = 0, d2 = 0;
    friend bool operator==(const Quat&, const Quat&) = default;
    friend auto operator<=>(const Quat&, const Quat&) = default;
};

Quat from_units(long long a, long long b, long long c, long long d);  // integer coords
Quat from_halves(long long a2, long long b2, long long c2, long long d2);

bool is_hurwitz(const Quat& q);
bool is_scalar(const Quat& q);

Quat add(const Quat& p, const Quat& q);
Quat sub(const Quat& p, const Quat& q);
Quat neg(const Quat& q);
Quat mul(const Quat& p, const Quat& q);
Quat scalar_mul(long long n, const Quat& q);
Quat conj(const Quat& q);
long long trd(const Quat& q);  // reduced trace, an integer for Hurwitz input
long long nrd(const Quat& q);  // reduced norm, a non-negative integer

std::string to_string(const Quat& q);

// Concrete quaternions realizing the curve maps sigma, theta, F inside the
// Hurwitz order (V = -F, and 2*sigma+1 is the trace-zero norm-3 element
// whose negative matches the order-3 projection pointwise).
struct GeneratorSolution {
    Quat sigma;
    Quat theta;
    Quat frob;
    Quat versch() const { return neg(frob); }
    Quat two_sigma_plus_one() const;
    friend bool operator==(const GeneratorSolution&, const GeneratorSolution&) = default;
    friend auto operator<=>(const GeneratorSolution&, const GeneratorSolution&) = default;
};

// Exhaustive search over Hurwitz units (sigma, theta) and norm-2 elements
// (frob) for triples satisfying the full relation list.  Sorted by the
// coefficient tuple (sigma, theta, frob); the designated solution is the
// first.  Throws if the solution set is empty.
std::vector<GeneratorSolution> solve_generators();
const GeneratorSolution& designated_solution();

// Ring homomorphism from endomorphism expressions: sums to sums,
// compositions to products, id to 1, V to -frob.
Quat endo_to_quat(const ec::EndoExpr& e, const GeneratorSolution& sol);

// All 24 Hurwitz units / all 24 Hurwitz elements of reduced norm 2.
std::vector<Quat> hurwitz_units();
std::vector<Quat> hurwitz_norm2();

}  // namespace gkm21::quat
