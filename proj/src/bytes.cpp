#include "evercred/bytes.hpp"

#include <algorithm>
#include <stdexcept>

namespace evercred {

static const char* kHexDigits = "0123456789abcdef";

std::string to_hex(ByteView data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

bool is_hex(std::string_view s) {
    if (s.empty() || s.size() % 2 != 0) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return hex_nibble(c) >= 0; });
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

void wipe(Bytes& b) {
    std::fill(b.begin(), b.end(), uint8_t{0});
    b.clear();
}

}  // namespace evercred
