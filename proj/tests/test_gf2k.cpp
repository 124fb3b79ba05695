#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gkm21/gf2k.hpp"

using namespace gkm21::gf2k;

TEST_CASE("omega generates F_4 with the right minimal polynomial") {
    Fe w = omega(2);
    Fe w2 = mul(w, w);
    CHECK(add(w, w2) == one(2));
    CHECK(mul(w, w2) == one(2));
    CHECK(inv(w) == w2);
    CHECK(is_zero(add(add(w2, w), one(2))));
    CHECK(pow(w, 3) == one(2));
}

TEST_CASE("frobenius is the squaring automorphism") {
    CHECK(frobenius(omega(2)) == mul(omega(2), omega(2)));
    CHECK(frobenius(zero(2)) == zero(2));
    CHECK(frobenius(one(6)) == one(6));
    for (int k : {2, 4, 6})
        for (const Fe& a : enumerate_field(k))
            for (const Fe& b : enumerate_field(k)) {
                CHECK(frobenius(add(a, b)) == add(frobenius(a), frobenius(b)));
                CHECK(frobenius(mul(a, b)) == mul(frobenius(a), frobenius(b)));
            }
}

TEST_CASE("enumeration is deterministic and complete") {
    CHECK(enumerate_field(2).size() == 4);
    CHECK(enumerate_field(4).size() == 16);
    auto e6 = enumerate_field(6);
    CHECK(e6.size() == 64);
    CHECK(e6[0] == zero(6));
    CHECK(e6[1] == one(6));
    for (const Fe& x : e6) CHECK(pow(x, 64) == x);
    CHECK_THROWS_AS(enumerate_field(5), std::invalid_argument);
}

TEST_CASE("embeddings preserve omega and compose") {
    for (int k : {4, 6}) {
        Fe img = embed(omega(2), k);
        CHECK(is_zero(add(add(mul(img, img), img), one(k))));
        CHECK(img != one(k));
        CHECK(!is_zero(img));
    }
    CHECK(embed(embed(omega(2), 4), 4) == embed(omega(2), 4));
    CHECK(embed(one(1), 6) == one(6));
    CHECK_THROWS_AS(embed(fe(4, 5), 6), std::invalid_argument);
    // injectivity of 2 -> 6 on all four elements
    std::set<uint8_t> images;
    for (const Fe& a : enumerate_field(2)) images.insert(embed(a, 6).bits);
    CHECK(images.size() == 4);
}

TEST_CASE("rendering follows the generator grammar") {
    CHECK(to_string(zero(2)) == "0");
    CHECK(to_string(one(2)) == "1");
    CHECK(to_string(omega(2)) == "w");
    CHECK(to_string(mul(omega(2), omega(2))) == "w^2");
    CHECK(parse(2, "w^2") == mul(omega(2), omega(2)));
    CHECK(parse(2, "w+1") == mul(omega(2), omega(2)));
    CHECK(to_string(fe(6, 0b001011)) == "s^3+s+1");
    CHECK(parse(6, "s^3+s+1") == fe(6, 0b001011));
    for (int k : {1, 2, 4, 6})
        for (const Fe& x : enumerate_field(k)) CHECK(parse(k, to_string(x)) == x);
    CHECK_THROWS_AS(parse(2, "q"), std::invalid_argument);
}

TEST_CASE("errors on misuse") {
    CHECK_THROWS_AS(add(one(2), one(4)), std::invalid_argument);
    CHECK_THROWS_AS(mul(one(2), one(6)), std::invalid_argument);
    CHECK_THROWS_AS(inv(zero(6)), std::domain_error);
    CHECK_THROWS_AS(fe(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(fe(2, 7), std::invalid_argument);
}
