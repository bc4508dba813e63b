#ifndef EVERCRED_ELGAMAL_HPP
#define EVERCRED_ELGAMAL_HPP

#include "evercred/group.hpp"
#include "evercred/rng.hpp"

namespace evercred {

struct ElGamalKeypair {
    Scalar sk;
    Element pk;  // g^sk

    void wipe() { sk.wipe(); }
};

struct Ciphertext {
    Element c1;  // g^r
    Element c2;  // m * pk^r

    bool operator==(const Ciphertext& o) const { return c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Ciphertext& o) const { return !(*this == o); }
};

ElGamalKeypair elgamal_keygen(Rng& rng, const GroupParams& params);

// Encryption with caller-supplied randomness is deterministic; the audit path
// re-derives the ciphertext from the disclosed r to recover the plaintext.
Ciphertext elgamal_encrypt(const Element& pk, const Element& m, const Scalar& r,
                           const GroupParams& params);

// Throws std::invalid_argument when either ciphertext component lies outside
// the order-q subgroup.
Element elgamal_decrypt(const Scalar& sk, const Ciphertext& ct, const GroupParams& params);

}  // namespace evercred

#endif
