#ifndef EVERCRED_HASH_HPP
#define EVERCRED_HASH_HPP

#include <string_view>

#include "evercred/bytes.hpp"
#include "evercred/group.hpp"

namespace evercred {

// Domain-separation tags. Every hash use site gets its own tag so that the
// identity hash, the signature challenge, and friends can never collide.
namespace hashtag {
inline constexpr std::string_view kVoterId = "evercred.h2s.vid.v1";
inline constexpr std::string_view kSchnorrChallenge = "evercred.h2s.schnorr.v1";
inline constexpr std::string_view kFingerprint = "evercred.fingerprint.v1";
inline constexpr std::string_view kPasswordStore = "evercred.pwhash.v1";
}  // namespace hashtag

Bytes sha256(ByteView data);

// Counter-mode SHA-256 expansion: len(tag) || tag || ctr32 || data per block.
Bytes hash_expand(std::string_view tag, ByteView data, size_t out_len);

// Maps an arbitrary byte string to a uniform scalar in Z_q. Expands to
// |q| + 128 bits before reducing so the result stays uniform for large q.
Scalar hash_to_scalar(std::string_view tag, ByteView data, const GroupParams& params);

// Identity hash used inside every commitment to a voter identifier.
Scalar vid_scalar(std::string_view vid, const GroupParams& params);

// Maps a public seed into the order-q subgroup of Z_p^* (p = 2q+1): hash to
// Z_p, square to land in the subgroup, bump a counter until the result is
// not the identity.
Element hash_to_group(std::string_view seed, const mpz_class& p, const mpz_class& q);

// SHA-256 over a tagged preimage, hex-encoded. Used for the ballot fingerprint.
Bytes tagged_hash(std::string_view tag, ByteView data);

}  // namespace evercred

#endif
