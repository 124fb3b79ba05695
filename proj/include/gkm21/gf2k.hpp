#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gkm21::gf2k {

// Element of F_{2^k}, k in {1,2,4,6}, in a fixed polynomial basis:
//
//   F_2  = F_2[t]/(t)            residues are the constants {0,1}
//   F_4  = F_2[w]/(w^2+w+1)
//   F_16 = F_2[t]/(t^4+t+1)
//   F_64 = F_2[s]/(s^6+s+1)
//
// bits holds the coordinate vector, LSB = constant term.  The designated
// cube root of unity is omega := w (bit pattern 0b10); picking w^2 instead
// is a Galois symmetry and every derived table is invariant under the swap.
struct Fe {
    uint8_t k = 1;
    uint8_t bits = 0;
    friend bool operator==(const Fe&, const Fe&) = default;
    friend auto operator<=>(const Fe&, const Fe&) = default;
};

bool supported_degree(int k);

Fe fe(int k, unsigned bits);
Fe zero(int k);
Fe one(int k);
// The designated generator of F_4 inside F_{2^k} (k even); satisfies
// omega^2 + omega + 1 = 0.
Fe omega(int k);

Fe add(Fe a, Fe b);
Fe mul(Fe a, Fe b);
Fe inv(Fe a);
Fe pow(Fe a, long long e);
Fe frobenius(Fe a);  // x -> x^2
bool is_zero(Fe a);

// Ring embedding F_{2^j} -> F_{2^k}; defined exactly when j divides k.
// The image of the F_4 generator is the lexicographically least root of
// t^2+t+1 outside F_2 in the target basis (precomputed, tested).
Fe embed(Fe a, int to_k);

// All 2^k elements, deterministic order: 0, 1, then increasing bit pattern.
std::vector<Fe> enumerate_field(int k);

std::string to_string(Fe a);
Fe parse(int k, const std::string& text);

}  // namespace gkm21::gf2k
