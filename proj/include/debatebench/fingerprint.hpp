#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace debatebench {

namespace detail {

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace detail

/// Stable identity of one chat request: backend name + prompt + temperature.
/// Deliberately excludes timestamps and worker identity so scripted lookups
/// and replay caches behave identically across runs and thread counts.
inline std::string request_fingerprint(std::string_view backend_name, std::string_view prompt,
                                       double temperature) {
    char temp_buf[32];
    std::snprintf(temp_buf, sizeof(temp_buf), "%.6f", temperature);

    std::uint64_t h = detail::fnv1a64(backend_name);
    h = detail::fnv1a64("\x1f", h);
    h = detail::fnv1a64(prompt, h);
    h = detail::fnv1a64("\x1f", h);
    h = detail::fnv1a64(temp_buf, h);

    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return std::string(out);
}

}  // namespace debatebench
