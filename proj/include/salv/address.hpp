#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace salv {

/// Dotted-quad IPv4 address held as a host-order integer.
struct Ipv4 {
    uint32_t bits = 0;

    auto operator<=>(const Ipv4&) const = default;

    std::string to_string() const;

    /// Parses "a.b.c.d". Returns nullopt on any malformed input
    /// (octet out of range, wrong count, stray characters).
    static std::optional<Ipv4> parse(const std::string& text);
};

/// Address range in prefix notation. A /32 range is a single host.
/// The base address must have all host bits zero.
struct AddrRange {
    Ipv4 base;
    int prefix_len = 32;

    auto operator<=>(const AddrRange&) const = default;

    bool contains(Ipv4 addr) const;
    bool contains(const AddrRange& other) const;

    /// Canonical text: bare address for /32, "a.b.c.d/len" otherwise.
    std::string to_string() const;

    static AddrRange host(Ipv4 addr) { return AddrRange{addr, 32}; }

    /// Parses "a.b.c.d" (taken as /32) or "a.b.c.d/len". Rejects
    /// prefix lengths outside 0..32 and ranges with host bits set.
    static std::optional<AddrRange> parse(const std::string& text);
};

inline uint32_t prefix_mask(int len) {
    return len == 0 ? 0u : ~uint32_t{0} << (32 - len);
}

} // namespace salv
