#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atomlat/bigcount.hpp"

namespace atomlat {

/// One machine word of subset bits. Element i of [n] lives at bit i-1,
/// so 7 encodes {1,2,3}.
using Word = std::uint64_t;

inline constexpr int kMaxGround = 32;

constexpr Word full_mask(int n) noexcept { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }
constexpr int popcount(Word w) noexcept { return std::popcount(w); }
constexpr bool is_subset_of(Word a, Word b) noexcept { return (a & ~b) == 0; }
constexpr bool is_proper_subset_of(Word a, Word b) noexcept { return a != b && is_subset_of(a, b); }

/// Lectic order used by NextClosure: a < b iff the smallest element in
/// which they differ belongs to b. Element 1 (bit 0) is the most significant.
///   {2} < {1}    {1,3} < {1,2}    {} < anything
constexpr bool lectic_less(Word a, Word b) noexcept {
    const Word diff = a ^ b;
    if (diff == 0) return false;
    return (b & (diff & (~diff + 1))) != 0;
}

/// A subset of [n], 0 <= n <= 32.
class Subset {
public:
    Subset() = default;
    /// Throws UsageError if n is out of range or bits fall outside [n].
    Subset(int n, Word bits);

    static Subset from_elements(int n, std::span<const int> elements);

    int ground() const noexcept { return n_; }
    Word bits() const noexcept { return bits_; }
    bool contains(int element) const noexcept {
        return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U) != 0;
    }
    int size() const noexcept { return popcount(bits_); }
    std::vector<int> elements() const;
    /// "{1,2,3}"
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    int n_ = 0;
    Word bits_ = 0;
};

/// A bijection on {1,...,n}; image()[i-1] is the image of i.
class Permutation {
public:
    /// Throws UsageError unless `image` contains each of 1..n exactly once.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    /// Transposition of a and b on [n].
    static Permutation swap(int n, int a, int b);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int element) const { return image_.at(static_cast<std::size_t>(element - 1)); }
    const std::vector<int>& image() const noexcept { return image_; }
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// (outer ∘ inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// All n! permutations of [n] in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int n);

/// Element p(i) belongs to the result for every i in s.
Subset permute_subset(const Subset& s, const Permutation& p);

/// Image of raw subset bits under p, without validation.
Word permute_bits(Word bits, const Permutation& p) noexcept;

/// Exact binomial coefficient; n <= 128, k > n gives 0.
BigCount binom(int n, int k);

/// Smallest k with binom(k, floor(k/2)) >= n; k_min(1) = 0.
int k_min(int n);

/// Albano-Chornomaz sum: sum_{i=0}^{k-1} binom(j, i).
BigCount f_ac(int j, int k);

/// Largest k with f_ac(j, k) < lattice_size, 0 if none. A lattice whose
/// standard context has j rows has at most 2^j elements; larger sizes are
/// rejected with UsageError.
int estimated_breadth(int j, BigCount lattice_size);

}  // namespace atomlat
