#include <doctest.h>

#include <stdexcept>

#include "gkm21/quatorder.hpp"

using namespace gkm21::quat;
using gkm21::ec::EndoExpr;

TEST_CASE("defining relations of the algebra") {
    Quat i = from_units(0, 1, 0, 0), j = from_units(0, 0, 1, 0), k = from_units(0, 0, 0, 1);
    CHECK(mul(i, j) == k);
    CHECK(mul(j, i) == neg(k));
    CHECK(mul(i, i) == from_units(-1, 0, 0, 0));
    CHECK(mul(j, k) == i);
    CHECK(mul(k, i) == j);
    CHECK(trd(from_halves(-1, 1, 1, 1)) == -1);
    CHECK(nrd(add(i, j)) == 2);
    CHECK(nrd(from_halves(1, 1, 1, 1)) == 1);
    CHECK(conj(from_units(1, 2, 3, 4)) == from_units(1, -2, -3, -4));
}

TEST_CASE("hurwitz predicates") {
    CHECK(is_hurwitz(from_halves(1, 1, 1, 1)));
    CHECK(is_hurwitz(from_units(3, 0, -1, 2)));
    CHECK_FALSE(is_hurwitz(from_halves(1, 0, 0, 0)));
    CHECK(hurwitz_units().size() == 24);
    CHECK(hurwitz_norm2().size() == 24);
    for (const Quat& u : hurwitz_units()) CHECK(nrd(u) == 1);
    for (const Quat& u : hurwitz_norm2()) CHECK(nrd(u) == 2);
}

TEST_CASE("generator search") {
    const auto& sols = solve_generators();
    REQUIRE(!sols.empty());
    const Quat one = from_units(1, 0, 0, 0);
    for (const GeneratorSolution& s : sols) {
        Quat s2 = mul(s.sigma, s.sigma);
        CHECK(add(add(s2, s.sigma), one) == Quat{});
        CHECK(conj(s.sigma) == s2);
        CHECK(mul(s.theta, s.theta) == neg(one));
        CHECK(mul(s.frob, s.frob) == from_units(-2, 0, 0, 0));
        CHECK(mul(s.frob, s.sigma) == mul(s2, s.frob));
        CHECK(sub(mul(s.sigma, s.theta), mul(s.theta, s.sigma)) == s.frob);
        CHECK(sub(mul(s.theta, s2), mul(s2, s.theta)) == s.frob);
        CHECK(sub(mul(s.theta, s.sigma), mul(s2, s.theta)) == one);
        Quat pi = s.two_sigma_plus_one();
        CHECK(nrd(pi) == 3);
        CHECK(conj(pi) == neg(pi));
        CHECK(mul(s.frob, pi) == neg(mul(pi, s.frob)));
    }
    CHECK(designated_solution() == sols.front());
}

TEST_CASE("expression homomorphism") {
    const auto& sol = designated_solution();
    CHECK(endo_to_quat(EndoExpr::identity(), sol) == from_units(1, 0, 0, 0));
    Quat fv = endo_to_quat(EndoExpr::compose(EndoExpr::frob(), EndoExpr::versch()), sol);
    Quat vf = endo_to_quat(EndoExpr::compose(EndoExpr::versch(), EndoExpr::frob()), sol);
    CHECK(fv == from_units(2, 0, 0, 0));
    CHECK(vf == from_units(2, 0, 0, 0));
    // theta o (id - F) carries the corrected sign
    CHECK(endo_to_quat(EndoExpr::pi(), sol) == neg(sol.two_sigma_plus_one()));
    Quat lhs = endo_to_quat(
        EndoExpr::diff(EndoExpr::compose(EndoExpr::theta(), EndoExpr::sigma()),
                       EndoExpr::compose(EndoExpr::sigma_sq(), EndoExpr::theta())),
        sol);
    CHECK(lhs == from_units(1, 0, 0, 0));
}

TEST_CASE("rendering") {
    CHECK(to_string(from_units(1, -1, 0, 2)) == "1-i+2k");
    CHECK(to_string(from_halves(-1, 1, 1, 1)) == "-1/2+1/2i+1/2j+1/2k");
    CHECK(to_string(from_units(0, 0, 0, 1)) == "k");
    CHECK(to_string(Quat{}) == "0");
    CHECK(to_string(from_units(-2, 0, 0, 0)) == "-2");
}
