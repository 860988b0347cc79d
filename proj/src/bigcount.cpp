#include "atomlat/bigcount.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "atomlat/errors.hpp"

namespace atomlat {

namespace {
constexpr BigCount::value_type kMax = ~BigCount::value_type{0};
}

BigCount BigCount::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer", 1);
    value_type v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9') throw ParseError("invalid digit in integer '" + std::string(text) + "'", i + 1);
        const value_type d = static_cast<value_type>(ch - '0');
        if (v > (kMax - d) / 10) throw ParseError("integer exceeds 128 bits", i + 1);
        v = v * 10 + d;
    }
    return from_raw(v);
}

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigCount does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
}

std::string BigCount::to_string() const {
    if (value_ == 0) return "0";
    std::string out;
    value_type v = value_;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string BigCount::to_grouped_string() const {
    const std::string digits = to_string();
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(' ');
        out.push_back(digits[i]);
    }
    return out;
}

BigCount& BigCount::operator+=(BigCount other) {
    if (kMax - value_ < other.value_) throw std::overflow_error("BigCount addition overflow");
    value_ += other.value_;
    return *this;
}

BigCount& BigCount::operator-=(BigCount other) {
    if (other.value_ > value_) throw std::overflow_error("BigCount subtraction underflow");
    value_ -= other.value_;
    return *this;
}

BigCount& BigCount::operator*=(BigCount other) {
    if (value_ != 0 && other.value_ > kMax / value_) throw std::overflow_error("BigCount multiplication overflow");
    value_ *= other.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, BigCount c) { return os << c.to_string(); }

}  // namespace atomlat
