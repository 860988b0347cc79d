#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "atomlat/combinatorics.hpp"

namespace atomlat {

/// Fixed-length bitset whose length is chosen at runtime. Used for the
/// object and attribute sets of formal contexts, which may exceed one word
/// (the standard context of L_7 has 119 rows and 399 columns).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVec full(std::size_t size);
    static BitVec from_word(std::size_t size, Word bits);
    static BitVec from_indices(std::size_t size, std::initializer_list<std::size_t> indices);
    static BitVec from_indices(std::size_t size, const std::vector<std::size_t>& indices);

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / 64] |= Word{1} << (i % 64); }
    void reset(std::size_t i) noexcept { words_[i / 64] &= ~(Word{1} << (i % 64)); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == size_; }
    bool is_subset_of(const BitVec& other) const noexcept;
    bool is_proper_subset_of(const BitVec& other) const noexcept { return *this != other && is_subset_of(other); }

    /// Value of the first word; only meaningful when size() <= 64.
    Word to_word() const noexcept { return words_.empty() ? 0 : words_[0]; }
    std::vector<std::size_t> indices() const;

    BitVec& operator&=(const BitVec& other) noexcept;
    BitVec& operator|=(const BitVec& other) noexcept;
    BitVec complement() const;

    friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) noexcept { return a |= b; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    /// Orders as unsigned integers (bit i has weight 2^i).
    std::strong_ordering compare_numeric(const BitVec& other) const noexcept;
    bool numeric_less(const BitVec& other) const noexcept { return compare_numeric(other) < 0; }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace atomlat
