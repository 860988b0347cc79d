#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

namespace atomlat {

/// Unsigned 128-bit counter. Every arithmetic operation is overflow-checked
/// and throws std::overflow_error instead of wrapping.
class BigCount {
public:
    __extension__ typedef unsigned __int128 value_type;

    constexpr BigCount() noexcept = default;
    constexpr BigCount(std::uint64_t v) noexcept : value_(v) {}  // NOLINT(implicit)

    static constexpr BigCount from_raw(value_type v) noexcept {
        BigCount c;
        c.value_ = v;
        return c;
    }

    /// Parses a decimal string; throws ParseError on junk or overflow.
    static BigCount parse(std::string_view text);

    constexpr value_type raw() const noexcept { return value_; }
    constexpr bool fits_u64() const noexcept { return value_ <= UINT64_MAX; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit
    long double to_long_double() const noexcept { return static_cast<long double>(value_); }

    std::string to_string() const;
    /// Decimal with a space every three digits ("66 960 965 307").
    std::string to_grouped_string() const;

    BigCount& operator+=(BigCount other);
    BigCount& operator-=(BigCount other);
    BigCount& operator*=(BigCount other);

    friend BigCount operator+(BigCount a, BigCount b) { return a += b; }
    friend BigCount operator-(BigCount a, BigCount b) { return a -= b; }
    friend BigCount operator*(BigCount a, BigCount b) { return a *= b; }

    friend constexpr bool operator==(BigCount a, BigCount b) noexcept { return a.value_ == b.value_; }
    friend constexpr std::strong_ordering operator<=>(BigCount a, BigCount b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    value_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, BigCount c);

}  // namespace atomlat
