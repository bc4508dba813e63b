#ifndef EVERCRED_SEAL_HPP
#define EVERCRED_SEAL_HPP

#include <stdexcept>

#include "evercred/bytes.hpp"
#include "evercred/rng.hpp"

namespace evercred {

class IntegrityError : public std::runtime_error {
  public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// AES-256-GCM blob: nonce(12) || ciphertext || tag(16).
struct SealedBlob {
    Bytes data;

    bool operator==(const SealedBlob& o) const { return data == o.data; }
};

// The registrar's sealed (s, t) pair from the passcode delivery variant.
struct SealedCredentials {
    SealedBlob signing_key;
    SealedBlob opening;
};

SealedBlob seal(ByteView key32, ByteView plaintext, Rng& rng);

// Throws IntegrityError on a wrong key or any tampering with the blob.
Bytes unseal(ByteView key32, const SealedBlob& blob);

}  // namespace evercred

#endif
