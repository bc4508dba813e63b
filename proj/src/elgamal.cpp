#include "evercred/elgamal.hpp"

#include <stdexcept>

namespace evercred {

ElGamalKeypair elgamal_keygen(Rng& rng, const GroupParams& params) {
    ElGamalKeypair kp;
    kp.sk = rng.nonzero_scalar(params);
    kp.pk = params.gpow(kp.sk);
    return kp;
}

Ciphertext elgamal_encrypt(const Element& pk, const Element& m, const Scalar& r,
                           const GroupParams& params) {
    if (!params.in_subgroup(m)) throw std::invalid_argument("plaintext not in the subgroup");
    return Ciphertext{params.gpow(r), params.mul(m, params.pow(pk, r))};
}

Element elgamal_decrypt(const Scalar& sk, const Ciphertext& ct, const GroupParams& params) {
    if (!params.in_subgroup(ct.c1) || !params.in_subgroup(ct.c2))
        throw std::invalid_argument("malformed ciphertext: component outside the subgroup");
    return params.mul(ct.c2, params.inv(params.pow(ct.c1, sk)));
}

}  // namespace evercred
