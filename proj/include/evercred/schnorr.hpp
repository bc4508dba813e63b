#ifndef EVERCRED_SCHNORR_HPP
#define EVERCRED_SCHNORR_HPP

#include "evercred/group.hpp"
#include "evercred/rng.hpp"

namespace evercred {

struct SigningKeypair {
    Scalar sk;
    Element vk;  // g^sk

    void wipe() { sk.wipe(); }
};

// Schnorr signature over the same group as the commitments. Challenge is
// key-prefixed: e = H(A || vk || msg).
struct Signature {
    Element nonce_point;  // A = g^u
    Scalar response;      // z = u + sk*e mod q

    bool operator==(const Signature& o) const {
        return nonce_point == o.nonce_point && response == o.response;
    }
};

SigningKeypair schnorr_keygen(Rng& rng, const GroupParams& params);
Element schnorr_public_key(const Scalar& sk, const GroupParams& params);

Signature schnorr_sign(const SigningKeypair& key, ByteView msg, Rng& rng,
                       const GroupParams& params);

bool schnorr_verify(const Element& vk, ByteView msg, const Signature& sig,
                    const GroupParams& params);

// Wire form: encode(A) || encode(z). decode returns false (not a throw) on
// any malformed input so verification of attacker-supplied bytes cannot crash.
Bytes encode_signature(const Signature& sig, const GroupParams& params);
bool decode_signature(ByteView raw, const GroupParams& params, Signature& out);

bool schnorr_verify_encoded(const Element& vk, ByteView msg, ByteView sig_bytes,
                            const GroupParams& params);

}  // namespace evercred

#endif
