#ifndef EVERCRED_RNG_HPP
#define EVERCRED_RNG_HPP

#include <random>
#include <string_view>

#include "evercred/bytes.hpp"
#include "evercred/group.hpp"

namespace evercred {

// Randomness source for all protocol actors. Seeded instances replay
// identically across runs and platforms (mt19937_64 keystream over a hashed
// key), which is what makes scenario reports byte-reproducible; unseeded
// instances pull from the system CSPRNG.
//
// child(label) derives an independent stream from the construction-time key,
// unaffected by how much the parent has already drawn. The registrar keys
// per-voter streams this way so a voter's credentials do not depend on
// registration order.
class Rng {
  public:
    static Rng seeded(uint64_t seed);
    static Rng seeded_bytes(ByteView key);
    static Rng system();

    bool deterministic() const { return deterministic_; }

    Bytes bytes(size_t n);
    uint64_t u64();
    uint64_t below(uint64_t n);  // uniform in [0, n), n > 0

    Scalar scalar(const GroupParams& params);          // uniform in [0, q)
    Scalar nonzero_scalar(const GroupParams& params);  // uniform in [1, q)

    Rng child(std::string_view label) const;

  private:
    Rng() = default;

    bool deterministic_ = false;
    Bytes key_;  // empty for system source
    std::mt19937_64 gen_;
};

}  // namespace evercred

#endif
