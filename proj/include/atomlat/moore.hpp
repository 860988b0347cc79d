#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomlat/combinatorics.hpp"

namespace atomlat {

/// Intersection-closed family of subsets of [n] containing [n].
/// Members are kept strictly increasing by integer value.
class MooreFamily {
public:
    MooreFamily() = default;
    /// Validates the invariants; throws UsageError on violation.
    MooreFamily(int n, std::vector<Word> members);

    int ground() const noexcept { return n_; }
    const std::vector<Word>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Word s) const noexcept;
    Word top() const noexcept { return full_mask(n_); }
    /// Intersection of all members (itself a member).
    Word bottom() const noexcept;

    friend bool operator==(const MooreFamily&, const MooreFamily&) = default;

private:
    int n_ = 0;
    std::vector<Word> members_;
};

/// Smallest intersection-closed family over [n] containing `generators` and [n].
/// Generators may be arbitrary subsets of [n].
MooreFamily close_under_intersection(int n, std::span<const Word> generators);

/// Family generated by a column tuple: strictly increasing, nonempty-or-empty
/// subsets of [n] none of which is [n] itself.
MooreFamily generate_family(int n, std::span<const Word> columns);

/// The full power set of [n].
MooreFamily boolean_family(int n);

/// Closure φ(X): the smallest member containing X.
Word phi(const MooreFamily& fam, Word x);

/// Every singleton {i} is a member.
bool is_t1(const MooreFamily& fam);
/// The empty set is a member.
bool is_strict(const MooreFamily& fam);
/// Upper covers of the bottom element.
std::vector<Word> family_atoms(const MooreFamily& fam);
/// Every member is the closure of the union of the atoms below it.
bool is_atomic(const MooreFamily& fam);

/// {"n": n, "members": [ascending integers]}
std::string family_to_json(const MooreFamily& fam);
MooreFamily family_from_json(std::string_view text);

}  // namespace atomlat
