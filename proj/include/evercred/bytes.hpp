#ifndef EVERCRED_BYTES_HPP
#define EVERCRED_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evercred {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input
bool is_hex(std::string_view s);

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline void append(Bytes& out, ByteView more) {
    out.insert(out.end(), more.begin(), more.end());
}

// Overwrite with zeros. Simulation-grade destruction: the point is that the
// value is no longer recoverable from a state dump, not side-channel safety.
void wipe(Bytes& b);

}  // namespace evercred

#endif
