#ifndef EVERCRED_KDF_HPP
#define EVERCRED_KDF_HPP

#include <string>

#include "evercred/bytes.hpp"
#include "evercred/rng.hpp"

namespace evercred {

// A voter's single delivered secret in passcode mode. High entropy by
// construction (base32, 100 bits), so key derivation needs no stretching.
using Passcode = std::string;

struct DerivedSecrets {
    Bytes seal_key;              // 32 bytes, unlocks the sealed credentials
    std::string login_password;  // authenticates toward the voting server

    void wipe();
};

// HKDF-SHA256 with distinct expansion labels for the two outputs. Throws
// std::invalid_argument on an empty passcode.
DerivedSecrets derive_from_passcode(const Passcode& passcode);

// Salted storage hash of a login password; this is what the server keeps.
Bytes hash_login_password(std::string_view vid, std::string_view password);

Passcode generate_passcode(Rng& rng);

}  // namespace evercred

#endif
