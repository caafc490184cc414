#include "orthocover/geometry.hpp"

#include <algorithm>

namespace orthocover {

BigInt to_bigint(UWide v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    BigInt lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}

BigInt to_bigint(Wide v) {
    if (v >= 0) return to_bigint(static_cast<UWide>(v));
    return -to_bigint(static_cast<UWide>(-(v + 1)) + 1);
}

std::string to_decimal(UWide v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace orthocover
