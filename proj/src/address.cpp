#include "salv/address.hpp"

#include <charconv>

namespace salv {

std::string Ipv4::to_string() const {
    std::string out;
    for (int shift = 24; shift >= 0; shift -= 8) {
        if (!out.empty()) out += '.';
        out += std::to_string((bits >> shift) & 0xff);
    }
    return out;
}

std::optional<Ipv4> Ipv4::parse(const std::string& text) {
    uint32_t bits = 0;
    const char* p = text.data();
    const char* end = p + text.size();
    for (int octet = 0; octet < 4; ++octet) {
        if (octet > 0) {
            if (p == end || *p != '.') return std::nullopt;
            ++p;
        }
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || next == p || next - p > 3 || value > 255) return std::nullopt;
        bits = bits << 8 | value;
        p = next;
    }
    if (p != end) return std::nullopt;
    return Ipv4{bits};
}

bool AddrRange::contains(Ipv4 addr) const {
    return (addr.bits & prefix_mask(prefix_len)) == base.bits;
}

bool AddrRange::contains(const AddrRange& other) const {
    return other.prefix_len >= prefix_len && contains(other.base);
}

std::string AddrRange::to_string() const {
    if (prefix_len == 32) return base.to_string();
    return base.to_string() + "/" + std::to_string(prefix_len);
}

std::optional<AddrRange> AddrRange::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto addr = Ipv4::parse(text);
        if (!addr) return std::nullopt;
        return AddrRange{*addr, 32};
    }
    auto addr = Ipv4::parse(text.substr(0, slash));
    if (!addr) return std::nullopt;
    int len = -1;
    const char* p = text.data() + slash + 1;
    const char* end = text.data() + text.size();
    auto [next, ec] = std::from_chars(p, end, len);
    if (ec != std::errc{} || next != end || len < 0 || len > 32) return std::nullopt;
    if ((addr->bits & ~prefix_mask(len)) != 0) return std::nullopt; // host bits set
    return AddrRange{*addr, len};
}

} // namespace salv
