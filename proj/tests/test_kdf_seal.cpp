#include <doctest.h>

#include <set>

#include "evercred/kdf.hpp"
#include "evercred/seal.hpp"

using namespace evercred;

static size_t hamming(ByteView a, ByteView b) {
    REQUIRE(a.size() == b.size());
    size_t bits = 0;
    for (size_t i = 0; i < a.size(); i++) bits += __builtin_popcount(a[i] ^ b[i]);
    return bits;
}

TEST_CASE("derivation is deterministic and the two outputs never coincide") {
    DerivedSecrets a = derive_from_passcode("CORRECT-HORSE-BATTERY");
    DerivedSecrets b = derive_from_passcode("CORRECT-HORSE-BATTERY");
    CHECK(a.seal_key == b.seal_key);
    CHECK(a.login_password == b.login_password);
    CHECK(a.seal_key.size() == 32);
    CHECK_FALSE(a.login_password.empty());

    CHECK_THROWS_AS(derive_from_passcode(""), std::invalid_argument);

    Rng rng = Rng::seeded(77);
    for (int i = 0; i < 1000; i++) {
        Passcode tau = generate_passcode(rng);
        DerivedSecrets d = derive_from_passcode(tau);
        CHECK(to_hex(d.seal_key) != d.login_password);
    }
}

TEST_CASE("one-character passcode changes produce unrelated outputs") {
    Rng rng = Rng::seeded(78);
    for (int i = 0; i < 100; i++) {
        Passcode tau = generate_passcode(rng);
        Passcode tau2 = tau;
        tau2[rng.below(tau2.size())] ^= 0x02;  // stays printable
        if (tau2 == tau) continue;
        DerivedSecrets a = derive_from_passcode(tau);
        DerivedSecrets b = derive_from_passcode(tau2);
        // 256-bit keys: expected distance 128; anything below 64 would be
        // astronomically unlikely for independent outputs.
        CHECK(hamming(a.seal_key, b.seal_key) > 64);
        CHECK(a.login_password.substr(0, 8) != b.login_password.substr(0, 8));
    }
}

TEST_CASE("passcodes carry their stated entropy format") {
    Rng rng = Rng::seeded(79);
    std::set<Passcode> seen;
    for (int i = 0; i < 100; i++) {
        Passcode tau = generate_passcode(rng);
        CHECK(tau.size() == 20);
        seen.insert(tau);
    }
    CHECK(seen.size() == 100);
}

TEST_CASE("seal/unseal roundtrip and integrity failures") {
    Rng rng = Rng::seeded(80);
    Bytes key = derive_from_passcode("TAU-ONE").seal_key;
    Bytes other_key = derive_from_passcode("TAU-TWO").seal_key;
    Bytes secret = to_bytes("the signing key bytes");

    SealedBlob blob = seal(key, secret, rng);
    CHECK(unseal(key, blob) == secret);

    CHECK_THROWS_AS(unseal(other_key, blob), IntegrityError);

    SealedBlob tampered = blob;
    tampered.data[tampered.data.size() / 2] ^= 0x40;
    CHECK_THROWS_AS(unseal(key, tampered), IntegrityError);

    SealedBlob truncated{Bytes(blob.data.begin(), blob.data.begin() + 10)};
    CHECK_THROWS_AS(unseal(key, truncated), IntegrityError);

    SealedBlob empty_ok = seal(key, {}, rng);
    CHECK(unseal(key, empty_ok).empty());
}

TEST_CASE("sealing twice yields distinct blobs that both open") {
    Rng rng = Rng::seeded(81);
    Bytes key = derive_from_passcode("TAU-THREE").seal_key;
    Bytes secret = to_bytes("t");
    std::set<Bytes> nonces;
    for (int i = 0; i < 1000; i++) {
        SealedBlob blob = seal(key, secret, rng);
        nonces.insert(Bytes(blob.data.begin(), blob.data.begin() + 12));
        CHECK(unseal(key, blob) == secret);
    }
    CHECK(nonces.size() == 1000);  // fresh nonce every time
}

TEST_CASE("stored password hashes are salted by vid") {
    Bytes a = hash_login_password("alice", "pw");
    Bytes b = hash_login_password("bob", "pw");
    Bytes a2 = hash_login_password("alice", "pw");
    CHECK(a == a2);
    CHECK(a != b);
    CHECK(a != hash_login_password("alice", "pw2"));
}
