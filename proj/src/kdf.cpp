#include "evercred/kdf.hpp"

#include <openssl/evp.h>
#include <openssl/kdf.h>

#include <memory>
#include <stdexcept>

#include "evercred/hash.hpp"

namespace evercred {

static constexpr std::string_view kHkdfSalt = "evercred.kdf.v1";
static constexpr std::string_view kSealKeyLabel = "evercred.kdf.seal-key.v1";
static constexpr std::string_view kLoginPwLabel = "evercred.kdf.login-password.v1";

static Bytes hkdf(ByteView key, std::string_view info, size_t out_len) {
    using CtxPtr = std::unique_ptr<EVP_PKEY_CTX, decltype(&EVP_PKEY_CTX_free)>;
    CtxPtr ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_HKDF, nullptr), EVP_PKEY_CTX_free);
    if (!ctx) throw std::runtime_error("HKDF context allocation failed");
    Bytes out(out_len);
    size_t len = out_len;
    if (EVP_PKEY_derive_init(ctx.get()) != 1 ||
        EVP_PKEY_CTX_set_hkdf_md(ctx.get(), EVP_sha256()) != 1 ||
        EVP_PKEY_CTX_set1_hkdf_salt(ctx.get(),
                                    reinterpret_cast<const unsigned char*>(kHkdfSalt.data()),
                                    static_cast<int>(kHkdfSalt.size())) != 1 ||
        EVP_PKEY_CTX_set1_hkdf_key(ctx.get(), key.data(), static_cast<int>(key.size())) != 1 ||
        EVP_PKEY_CTX_add1_hkdf_info(ctx.get(),
                                    reinterpret_cast<const unsigned char*>(info.data()),
                                    static_cast<int>(info.size())) != 1 ||
        EVP_PKEY_derive(ctx.get(), out.data(), &len) != 1 || len != out_len)
        throw std::runtime_error("HKDF derivation failed");
    return out;
}

void DerivedSecrets::wipe() {
    evercred::wipe(seal_key);
    std::fill(login_password.begin(), login_password.end(), '\0');
    login_password.clear();
}

DerivedSecrets derive_from_passcode(const Passcode& passcode) {
    if (passcode.empty()) throw std::invalid_argument("empty passcode");
    Bytes key = to_bytes(passcode);
    DerivedSecrets out;
    out.seal_key = hkdf(key, kSealKeyLabel, 32);
    out.login_password = to_hex(hkdf(key, kLoginPwLabel, 16));
    return out;
}

Bytes hash_login_password(std::string_view vid, std::string_view password) {
    Bytes pre = to_bytes(vid);
    pre.push_back(0);
    append(pre, to_bytes(password));
    return tagged_hash(hashtag::kPasswordStore, pre);
}

Passcode generate_passcode(Rng& rng) {
    static const char* alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ234567";
    std::string out;
    out.reserve(20);
    for (int i = 0; i < 20; i++) out.push_back(alphabet[rng.below(32)]);
    return out;
}

}  // namespace evercred
