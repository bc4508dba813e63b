#include "evercred/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace evercred {

Bytes sha256(ByteView data) {
    Bytes out(32);
    unsigned int n = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &n, EVP_sha256(), nullptr) != 1 || n != 32)
        throw std::runtime_error("sha256 failed");
    return out;
}

static void push_u32(Bytes& b, uint32_t x) {
    b.push_back(static_cast<uint8_t>(x >> 24));
    b.push_back(static_cast<uint8_t>(x >> 16));
    b.push_back(static_cast<uint8_t>(x >> 8));
    b.push_back(static_cast<uint8_t>(x));
}

Bytes hash_expand(std::string_view tag, ByteView data, size_t out_len) {
    Bytes out;
    out.reserve(out_len + 32);
    uint32_t ctr = 0;
    while (out.size() < out_len) {
        Bytes block;
        push_u32(block, static_cast<uint32_t>(tag.size()));
        append(block, to_bytes(tag));
        push_u32(block, ctr++);
        append(block, data);
        append(out, sha256(block));
    }
    out.resize(out_len);
    return out;
}

Bytes tagged_hash(std::string_view tag, ByteView data) {
    Bytes pre;
    push_u32(pre, static_cast<uint32_t>(tag.size()));
    append(pre, to_bytes(tag));
    append(pre, data);
    return sha256(pre);
}

Scalar hash_to_scalar(std::string_view tag, ByteView data, const GroupParams& params) {
    size_t wide = params.scalar_bytes() + 16;  // 128 bits of slack before reduction
    Bytes raw = hash_expand(tag, data, wide);
    return params.reduce(mpz_from_bytes(raw));
}

Scalar vid_scalar(std::string_view vid, const GroupParams& params) {
    return hash_to_scalar(hashtag::kVoterId, to_bytes(vid), params);
}

Element hash_to_group(std::string_view seed, const mpz_class& p, const mpz_class& q) {
    if (p != 2 * q + 1) throw std::invalid_argument("hash_to_group expects a safe prime");
    size_t wide = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8 + 16;
    for (uint32_t attempt = 0;; attempt++) {
        Bytes input = to_bytes(seed);
        push_u32(input, attempt);
        mpz_class u = mpz_from_bytes(hash_expand("evercred.h2g.v1", input, wide));
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        mpz_class h = u * u;  // cofactor 2: squaring lands in the order-q subgroup
        mpz_mod(h.get_mpz_t(), h.get_mpz_t(), p.get_mpz_t());
        if (h != 0 && h != 1) return Element(h);
    }
}

}  // namespace evercred
