#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qecstat {

// FNV-1a 64-bit content digest. Integrity checking only, not cryptographic.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string digest_hex(std::string_view data);
std::string digest_file(const std::string& path);  // throws runtime_failure

}  // namespace qecstat
