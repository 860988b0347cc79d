#include "atomlat/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "atomlat/errors.hpp"

namespace atomlat {

Subset::Subset(int n, Word bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxGround) throw UsageError("ground set size must be in [0, 32], got " + std::to_string(n));
    if ((bits & ~full_mask(n)) != 0) {
        throw UsageError("subset bits " + std::to_string(bits) + " exceed ground set [" + std::to_string(n) + "]");
    }
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
    Word bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw UsageError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
        bits |= Word{1} << (e - 1);
    }
    return Subset(n, bits);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        if ((bits_ >> i) & 1U) out.push_back(i + 1);
    }
    return out;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw UsageError("permutation image is not a bijection on [" + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::swap(int n, int a, int b) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    if (a < 1 || a > n || b < 1 || b > n) throw UsageError("swap positions outside [1, n]");
    std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw UsageError("composing permutations of different degree");
    std::vector<int> image(static_cast<std::size_t>(inner.size()));
    for (int i = 1; i <= inner.size(); ++i) image[static_cast<std::size_t>(i - 1)] = outer(inner(i));
    return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

Word permute_bits(Word bits, const Permutation& p) noexcept {
    Word out = 0;
    const auto& image = p.image();
    while (bits != 0) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        out |= Word{1} << (image[static_cast<std::size_t>(i)] - 1);
    }
    return out;
}

Subset permute_subset(const Subset& s, const Permutation& p) {
    if (s.ground() != p.size()) {
        throw UsageError("subset over [" + std::to_string(s.ground()) + "] permuted by a permutation of degree " +
                         std::to_string(p.size()));
    }
    return Subset(s.ground(), permute_bits(s.bits(), p));
}

BigCount binom(int n, int k) {
    if (n < 0 || k < 0) throw UsageError("binom arguments must be non-negative");
    if (n > 128) throw UsageError("binom supports n <= 128");
    if (k > n) return BigCount{0};
    k = std::min(k, n - k);
    // Pascal rows with checked additions; intermediate products would overflow
    // long before the coefficients themselves do.
    std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, BigCount{0});
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(k)];
}

int k_min(int n) {
    if (n < 1) throw UsageError("k_min requires n >= 1");
    int k = 0;
    while (binom(k, k / 2) < BigCount(static_cast<std::uint64_t>(n))) ++k;
    return k;
}

BigCount f_ac(int j, int k) {
    if (j < 1 || k < 1) throw UsageError("f_ac requires positive arguments");
    if (j > 128) throw UsageError("f_ac supports j <= 128");
    BigCount sum{0};
    for (int i = 0; i < k && i <= j; ++i) sum += binom(j, i);
    return sum;
}

int estimated_breadth(int j, BigCount lattice_size) {
    if (j < 1) throw UsageError("estimated_breadth requires j >= 1");
    if (lattice_size < BigCount{1}) throw UsageError("lattice size must be at least 1");
    if (j < 127 && lattice_size > BigCount::from_raw(BigCount::value_type{1} << j)) {
        throw UsageError("a lattice with " + std::to_string(j) + " join-irreducibles has at most 2^" +
                         std::to_string(j) + " elements");
    }
    // f_ac(j, k) is strictly increasing for k <= j + 1 and constant afterwards.
    int best = 0;
    for (int k = 1; k <= j + 1; ++k) {
        if (f_ac(j, k) < lattice_size) {
            best = k;
        } else {
            break;
        }
    }
    return best;
}

}  // namespace atomlat
