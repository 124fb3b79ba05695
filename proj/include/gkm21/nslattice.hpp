#pragma once

#include <array>
#include <vector>

#include "gkm21/bigint.hpp"
#include "gkm21/curve_names.hpp"
#include "gkm21/quatorder.hpp"

namespace gkm21::ns {

using quat::GeneratorSolution;
using quat::Quat;

// Divisor class of E x E as the Hermitian matrix [[alpha, beta],[conj(beta),
// delta]] with integer diagonal.
struct NSClass {
    long long alpha = 0;
    Quat beta{};
    long long delta = 0;
    friend bool operator==(const NSClass&, const NSClass&) = default;
};

// alpha1*delta2 + alpha2*delta1 - conj(beta1)*beta2 - conj(beta2)*beta1;
// the quaternion combination must land in the scalars.
long long intersection(const NSClass& l1, const NSClass& l2);
long long self_intersection(const NSClass& l);  // 2(alpha*delta - conj(beta)*beta)

// Class of the pullback of the antidiagonal under a1 x a2:
// [[conj(a1)a1, conj(a1)a2],[conj(a2)a1, conj(a2)a2]].
NSClass delta_class(const Quat& a1, const Quat& a2);

NSClass principal_polarization();  // [[1,0],[0,1]], square 2
NSClass class_of_first_factor();   // E x {0}:  [[0,0],[0,1]]
NSClass class_of_second_factor();  // {0} x E:  [[1,0],[0,0]]

// Class of any of the 24 named curves; translates share their base class.
NSClass curve_class(const CurveName& name, const GeneratorSolution& sol);

// 8x8 pairing table over the base curves E0,F0,V0,pi0,E0',F0',V0',pi0'.
std::array<std::array<long long, 8>, 8> intersection_table(const GeneratorSolution& sol);

using IntMatrix = std::vector<std::vector<long long>>;

struct GramData {
    IntMatrix matrix;                          // symmetric, diagonal -2
    int rank = 0;                              // rank over Z
    int radical_dim = 0;                       // dimension of the kernel
    std::vector<long long> elementary_divisors;  // nonzero invariant factors
    long long discriminant = 0;                // det of the radical quotient
};

// Gram matrix of n (-2)-curves from their incidence matrix, then exact
// integer reduction: Smith form for rank/divisors, Bareiss for the signed
// determinant of the radical quotient.  The two routes must agree up to
// sign; disagreement throws.
GramData gram_and_discriminant(const IntMatrix& incidence);

}  // namespace gkm21::ns
