#include <doctest.h>

#include <stdexcept>

#include "gkm21/nslattice.hpp"
#include "gkm21/reference_tables.hpp"
#include "gkm21/verify.hpp"

using namespace gkm21;
using namespace gkm21::ns;

TEST_CASE("pairing on the factor classes") {
    NSClass e0 = class_of_second_factor();   // {0} x E
    NSClass e0p = class_of_first_factor();   // E x {0}
    CHECK(intersection(e0, e0p) == 1);
    CHECK(self_intersection(e0) == 0);
    CHECK(self_intersection(e0p) == 0);
    CHECK(self_intersection(principal_polarization()) == 2);
}

TEST_CASE("delta classes") {
    const Quat one = quat::from_units(1, 0, 0, 0);
    NSClass d = delta_class(one, one);
    CHECK(d.alpha == 1);
    CHECK(d.delta == 1);
    CHECK(d.beta == one);
    CHECK(self_intersection(d) == 0);
    CHECK_THROWS_AS(delta_class(quat::from_halves(1, 0, 0, 0), one), std::invalid_argument);
}

TEST_CASE("base classes against the displayed matrices") {
    const auto& sol = verify::designated();
    NSClass f0 = curve_class(CurveName{CurveLetter::F, 0, false}, sol);
    CHECK(f0.alpha == 1);
    CHECK(f0.delta == 2);
    CHECK(f0.beta == quat::mul(sol.sigma, quat::neg(sol.frob)));

    NSClass v0 = curve_class(CurveName{CurveLetter::V, 0, false}, sol);
    CHECK(v0.alpha == 1);
    CHECK(v0.delta == 2);
    CHECK(v0.beta == quat::mul(quat::conj(sol.sigma), sol.frob));

    NSClass pi0 = curve_class(CurveName{CurveLetter::Pi, 0, false}, sol);
    CHECK(pi0.alpha == 3);
    CHECK(pi0.delta == 2);
    NSClass pi0p = curve_class(CurveName{CurveLetter::Pi, 0, true}, sol);
    CHECK(pi0p.alpha == 2);
    CHECK(pi0p.delta == 3);

    CHECK(curve_class(CurveName{CurveLetter::E, 0, true}, sol) == class_of_first_factor());
    CHECK(curve_class(CurveName{CurveLetter::E, 0, false}, sol) == class_of_second_factor());

    for (const CurveName& n : base_curve_names())
        CHECK(self_intersection(curve_class(n, sol)) == 0);
}

TEST_CASE("8x8 table: derived values and the transcription diff") {
    auto table = verify::derived_intersection_table();
    CHECK(table[1][5] == 3);  // (F0, F0')
    CHECK(table[3][4] == 3);  // (pi0, E0')
    CHECK(table[0][7] == 3);  // (E0, pi0')
    CHECK(table[1][7] == 1);  // (F0, pi0'), transcription says 2
    CHECK(table[5][7] == 2);  // (F0', pi0'), transcription says 1
    for (int i = 0; i < 8; ++i) {
        CHECK(table[i][i] == 0);
        long long cross = 0, same = 0;
        for (int j = 0; j < 8; ++j) (((i < 4) == (j < 4)) ? same : cross) += table[i][j];
        CHECK(cross == 6);
        CHECK(same == 6);
    }
    auto diffs = verify::intersection_table_diff();
    std::vector<std::pair<int, int>> cells;
    for (const auto& d : diffs) cells.emplace_back(d.row, d.col);
    CHECK(cells == ref::expected_intersection_discrepancies());
}

TEST_CASE("gram reduction on small frozen lattices") {
    // negated A_2: Gram [[-2,1],[1,-2]], det 3
    IntMatrix a2 = {{0, 1}, {1, 0}};
    GramData d = gram_and_discriminant(a2);
    CHECK(d.rank == 2);
    CHECK(d.radical_dim == 0);
    CHECK(d.discriminant == 3);
    CHECK(d.elementary_divisors == std::vector<long long>{1, 3});

    // negated A_3 path 1-3-2: det by cofactors is -4, divisors 1,1,4
    IntMatrix a3 = {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}};
    GramData e = gram_and_discriminant(a3);
    CHECK(e.rank == 3);
    CHECK(e.radical_dim == 0);
    CHECK(e.discriminant == -4);
    CHECK(e.elementary_divisors == std::vector<long long>{1, 1, 4});

    // [[-2,2],[2,-2]] is rank 1: radical (1,1), quotient Gram (-2)
    IntMatrix rad = {{0, 2}, {2, 0}};
    GramData f = gram_and_discriminant(rad);
    CHECK(f.rank == 1);
    CHECK(f.radical_dim == 1);
    CHECK(f.discriminant == -2);
    CHECK(f.elementary_divisors == std::vector<long long>{2});

    CHECK_THROWS_AS(gram_and_discriminant(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

namespace {

// independent oracle: cofactor expansion over machine integers
long long det_cofactor(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    long long det = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntMatrix minor(n - 1, std::vector<long long>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        det += (c % 2 ? -1 : 1) * m[0][c] * det_cofactor(minor);
    }
    return det;
}

}  // namespace

TEST_CASE("gram reduction against a cofactor-expansion oracle") {
    uint64_t state = 0xa4093822299f31d0ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    int full_rank_seen = 0, deficient_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix inc(4, std::vector<long long>(4, 0));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inc[i][j] = inc[j][i] = next() % 4;
        GramData d = gram_and_discriminant(inc);
        IntMatrix gram = inc;
        for (int i = 0; i < 4; ++i) gram[i][i] = -2;
        long long det = det_cofactor(gram);
        if (det != 0) {
            ++full_rank_seen;
            CHECK(d.rank == 4);
            CHECK(d.discriminant == det);
        } else {
            ++deficient_seen;
            CHECK(d.rank < 4);
        }
        long long product = 1;
        for (long long e : d.elementary_divisors) product *= e;
        CHECK(product == (d.discriminant < 0 ? -d.discriminant : d.discriminant));
    }
    CHECK(full_rank_seen > 0);
}
