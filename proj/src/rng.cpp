#include "evercred/rng.hpp"

#include <openssl/rand.h>

#include <stdexcept>

#include "evercred/hash.hpp"

namespace evercred {

Rng Rng::seeded(uint64_t seed) {
    Bytes key(8);
    for (int i = 0; i < 8; i++) key[i] = static_cast<uint8_t>(seed >> (56 - 8 * i));
    return seeded_bytes(key);
}

Rng Rng::seeded_bytes(ByteView key) {
    Rng r;
    r.deterministic_ = true;
    r.key_ = Bytes(key.begin(), key.end());
    Bytes digest = tagged_hash("evercred.rng.seed.v1", key);
    std::seed_seq seq(digest.begin(), digest.end());
    r.gen_.seed(seq);
    return r;
}

Rng Rng::system() {
    Rng r;
    r.deterministic_ = false;
    return r;
}

Bytes Rng::bytes(size_t n) {
    Bytes out(n);
    if (!deterministic_) {
        if (n > 0 && RAND_bytes(out.data(), static_cast<int>(n)) != 1)
            throw std::runtime_error("system RNG failure");
        return out;
    }
    size_t i = 0;
    while (i < n) {
        uint64_t w = gen_();
        for (int b = 0; b < 8 && i < n; b++, i++) out[i] = static_cast<uint8_t>(w >> (56 - 8 * b));
    }
    return out;
}

uint64_t Rng::u64() {
    if (deterministic_) return gen_();
    Bytes b = bytes(8);
    uint64_t w = 0;
    for (int i = 0; i < 8; i++) w = (w << 8) | b[i];
    return w;
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t w = u64();
        if (w < limit) return w % n;
    }
}

Scalar Rng::scalar(const GroupParams& params) {
    size_t nbits = mpz_sizeinbase(params.q().get_mpz_t(), 2);
    size_t nbytes = (nbits + 7) / 8;
    uint8_t top_mask = nbits % 8 ? static_cast<uint8_t>((1u << (nbits % 8)) - 1) : 0xff;
    for (;;) {
        Bytes raw = bytes(nbytes);
        raw[0] &= top_mask;
        mpz_class x = mpz_from_bytes(raw);
        if (x < params.q()) return Scalar(std::move(x));
    }
}

Scalar Rng::nonzero_scalar(const GroupParams& params) {
    for (;;) {
        Scalar s = scalar(params);
        if (s.v != 0) return s;
    }
}

Rng Rng::child(std::string_view label) const {
    if (!deterministic_) return system();
    Bytes material = key_;
    material.push_back(0);
    append(material, to_bytes(label));
    return seeded_bytes(tagged_hash("evercred.rng.child.v1", material));
}

}  // namespace evercred
