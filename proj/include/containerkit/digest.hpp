#ifndef CONTAINERKIT_DIGEST_HPP
#define CONTAINERKIT_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace containerkit {

// FNV-1a 64-bit content hash, rendered as 16 hex digits. Used to tie run
// records to their canonical input files; not cryptographic.
inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace containerkit

#endif
