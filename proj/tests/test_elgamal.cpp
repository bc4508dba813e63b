#include <doctest.h>

#include <set>
#include "evercred/codebook.hpp"
#include "evercred/elgamal.hpp"
#include "oracle.hpp"

using namespace evercred;

TEST_CASE("worked vector: sk=3, m=4, r=2 gives ct (4, 3)") {
    GroupParams gp = GroupParams::test_small();
    Element pk = gp.gpow(Scalar(3));
    REQUIRE(pk.v == 8);
    Ciphertext ct = elgamal_encrypt(pk, Element(4), Scalar(2), gp);
    CHECK(ct.c1.v == 4);
    CHECK(ct.c2.v == 3);
    auto [oc1, oc2] = oracle::elgamal_encrypt(8, 4, 2);
    CHECK(ct.c1.v == oc1);
    CHECK(ct.c2.v == oc2);
    CHECK(elgamal_decrypt(Scalar(3), ct, gp).v == 4);
    CHECK(oracle::elgamal_decrypt(3, 4, 3) == 4);
}

TEST_CASE("roundtrip law, exhaustive over the toy group") {
    GroupParams gp = GroupParams::test_small();
    for (uint64_t sk = 1; sk < oracle::Q; sk++) {
        Element pk = gp.gpow(Scalar(sk));
        for (uint64_t m : oracle::subgroup_elements())
            for (uint64_t r = 0; r < oracle::Q; r++) {
                Ciphertext ct = elgamal_encrypt(pk, Element(m), Scalar(r), gp);
                CHECK(elgamal_decrypt(Scalar(sk), ct, gp).v == m);
            }
    }
}

TEST_CASE("roundtrip law at production size") {
    GroupParams gp = GroupParams::production();
    Rng rng = Rng::seeded(31);
    ElGamalKeypair key = elgamal_keygen(rng, gp);
    CHECK(key.pk == gp.gpow(key.sk));
    Codebook cb = Codebook::standard(gp, 5);
    for (int i = 0; i < 20; i++) {
        const Element& m = cb.at(i % 5);
        Ciphertext ct = elgamal_encrypt(key.pk, m, rng.nonzero_scalar(gp), gp);
        CHECK(elgamal_decrypt(key.sk, ct, gp) == m);
    }
}

TEST_CASE("encryption with fixed randomness is deterministic") {
    GroupParams gp = GroupParams::test_small();
    Element pk = gp.gpow(Scalar(5));
    Ciphertext a = elgamal_encrypt(pk, Element(4), Scalar(7), gp);
    Ciphertext b = elgamal_encrypt(pk, Element(4), Scalar(7), gp);
    CHECK(a == b);
    CHECK(a != elgamal_encrypt(pk, Element(4), Scalar(8), gp));
}

TEST_CASE("malformed inputs are rejected") {
    GroupParams gp = GroupParams::test_small();
    Element pk = gp.gpow(Scalar(3));
    // 5 is not in the order-11 subgroup mod 23
    CHECK_THROWS_AS(elgamal_encrypt(pk, Element(5), Scalar(2), gp), std::invalid_argument);
    CHECK_THROWS_AS(elgamal_decrypt(Scalar(3), Ciphertext{Element(5), Element(4)}, gp),
                    std::invalid_argument);
    CHECK_THROWS_AS(elgamal_decrypt(Scalar(3), Ciphertext{Element(4), Element(0)}, gp),
                    std::invalid_argument);
}

TEST_CASE("codebook entries are distinct subgroup elements") {
    GroupParams gp = GroupParams::test_small();
    Codebook cb = Codebook::standard(gp, 10);
    std::set<mpz_class> seen;
    for (size_t i = 0; i < cb.size(); i++) {
        CHECK(gp.in_subgroup(cb.at(i)));
        seen.insert(cb.at(i).v);
        CHECK(cb.index_of(cb.at(i)) == i);
    }
    CHECK(seen.size() == 10);
    CHECK_FALSE(cb.index_of(Element(1)).has_value());  // identity never encodes a choice
    CHECK_THROWS_AS(cb.at(10), std::out_of_range);
    CHECK_THROWS_AS(Codebook::standard(gp, 0), std::invalid_argument);
    CHECK_THROWS_AS(Codebook::standard(gp, 11), std::invalid_argument);
}
