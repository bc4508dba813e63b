#include "evercred/schnorr.hpp"

#include "evercred/hash.hpp"

namespace evercred {

SigningKeypair schnorr_keygen(Rng& rng, const GroupParams& params) {
    SigningKeypair kp;
    kp.sk = rng.nonzero_scalar(params);
    kp.vk = params.gpow(kp.sk);
    return kp;
}

Element schnorr_public_key(const Scalar& sk, const GroupParams& params) {
    return params.gpow(sk);
}

static Scalar challenge(const Element& nonce_point, const Element& vk, ByteView msg,
                        const GroupParams& params) {
    Bytes pre = params.encode(nonce_point);
    append(pre, params.encode(vk));
    append(pre, msg);
    return hash_to_scalar(hashtag::kSchnorrChallenge, pre, params);
}

Signature schnorr_sign(const SigningKeypair& key, ByteView msg, Rng& rng,
                       const GroupParams& params) {
    Scalar u = rng.nonzero_scalar(params);
    Signature sig;
    sig.nonce_point = params.gpow(u);
    Scalar e = challenge(sig.nonce_point, key.vk, msg, params);
    sig.response = params.sc_add(u, params.sc_mul(key.sk, e));
    u.wipe();
    return sig;
}

bool schnorr_verify(const Element& vk, ByteView msg, const Signature& sig,
                    const GroupParams& params) {
    if (!params.in_subgroup(vk) || !params.in_subgroup(sig.nonce_point)) return false;
    if (sig.response.v < 0 || sig.response.v >= params.q()) return false;
    Scalar e = challenge(sig.nonce_point, vk, msg, params);
    // g^z == A * vk^e
    return params.gpow(sig.response) == params.mul(sig.nonce_point, params.pow(vk, e));
}

Bytes encode_signature(const Signature& sig, const GroupParams& params) {
    Bytes out = params.encode(sig.nonce_point);
    append(out, params.encode(sig.response));
    return out;
}

bool decode_signature(ByteView raw, const GroupParams& params, Signature& out) {
    if (raw.size() != params.element_bytes() + params.scalar_bytes()) return false;
    try {
        out.nonce_point = params.decode_element(raw.subspan(0, params.element_bytes()));
        out.response = params.decode_scalar(raw.subspan(params.element_bytes()));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

bool schnorr_verify_encoded(const Element& vk, ByteView msg, ByteView sig_bytes,
                            const GroupParams& params) {
    Signature sig;
    if (!decode_signature(sig_bytes, params, sig)) return false;
    return schnorr_verify(vk, msg, sig, params);
}

}  // namespace evercred
