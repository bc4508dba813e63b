#include "evercred/seal.hpp"

#include <openssl/evp.h>

#include <memory>

namespace evercred {

static constexpr size_t kNonceLen = 12;
static constexpr size_t kTagLen = 16;

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

SealedBlob seal(ByteView key32, ByteView plaintext, Rng& rng) {
    if (key32.size() != 32) throw std::invalid_argument("seal key must be 32 bytes");
    Bytes nonce = rng.bytes(kNonceLen);

    CipherCtx ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) throw std::runtime_error("cipher context allocation failed");
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(), nonce.data()) != 1)
        throw std::runtime_error("seal init failed");

    Bytes out = nonce;
    out.resize(kNonceLen + plaintext.size() + kTagLen);
    int len = 0;
    if (EVP_EncryptUpdate(ctx.get(), out.data() + kNonceLen, &len, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1 ||
        static_cast<size_t>(len) != plaintext.size())
        throw std::runtime_error("seal update failed");
    int fin = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + kNonceLen + len, &fin) != 1 || fin != 0)
        throw std::runtime_error("seal finalization failed");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kTagLen,
                            out.data() + kNonceLen + plaintext.size()) != 1)
        throw std::runtime_error("seal tag extraction failed");
    return SealedBlob{std::move(out)};
}

Bytes unseal(ByteView key32, const SealedBlob& blob) {
    if (key32.size() != 32) throw std::invalid_argument("seal key must be 32 bytes");
    if (blob.data.size() < kNonceLen + kTagLen)
        throw IntegrityError("sealed blob too short");
    size_t ct_len = blob.data.size() - kNonceLen - kTagLen;

    CipherCtx ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) throw std::runtime_error("cipher context allocation failed");
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                           blob.data.data()) != 1)
        throw std::runtime_error("unseal init failed");

    Bytes out(ct_len);
    int len = 0;
    if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, blob.data.data() + kNonceLen,
                          static_cast<int>(ct_len)) != 1)
        throw IntegrityError("unseal failed");
    Bytes tag(blob.data.end() - kTagLen, blob.data.end());
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data()) != 1)
        throw std::runtime_error("unseal tag setup failed");
    int fin = 0;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1) {
        wipe(out);
        throw IntegrityError("authentication tag mismatch");
    }
    out.resize(static_cast<size_t>(len) + static_cast<size_t>(fin));
    return out;
}

}  // namespace evercred
