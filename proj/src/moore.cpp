#include "atomlat/moore.hpp"

#include <algorithm>
#include <unordered_set>

#include "atomlat/errors.hpp"
#include "json.hpp"

namespace atomlat {

MooreFamily::MooreFamily(int n, std::vector<Word> members) : n_(n), members_(std::move(members)) {
    if (n < 0 || n > kMaxGround) throw UsageError("ground set size must be in [0, 32]");
    const Word full = full_mask(n);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if ((members_[i] & ~full) != 0) throw UsageError("member " + std::to_string(members_[i]) + " exceeds [n]");
        if (i > 0 && members_[i - 1] >= members_[i]) throw UsageError("members must be strictly increasing");
    }
    if (!contains(full)) throw UsageError("Moore family must contain the ground set");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (!contains(members_[i] & members_[j])) {
                throw UsageError("family is not closed under intersection: " + std::to_string(members_[i]) + " & " +
                                 std::to_string(members_[j]));
            }
        }
    }
}

bool MooreFamily::contains(Word s) const noexcept { return std::binary_search(members_.begin(), members_.end(), s); }

Word MooreFamily::bottom() const noexcept {
    Word b = full_mask(n_);
    for (Word m : members_) b &= m;
    return b;
}

MooreFamily close_under_intersection(int n, std::span<const Word> generators) {
    if (n < 0 || n > kMaxGround) throw UsageError("ground set size must be in [0, 32]");
    const Word full = full_mask(n);
    std::vector<Word> members{full};
    std::unordered_set<Word> seen{full};
    for (Word g : generators) {
        if ((g & ~full) != 0) throw UsageError("generator " + std::to_string(g) + " exceeds [n]");
        if (seen.insert(g).second) members.push_back(g);
    }
    // Worklist saturation: each new member is intersected with everything known so far.
    for (std::size_t head = 0; head < members.size(); ++head) {
        const Word cur = members[head];
        for (std::size_t k = 0; k < head; ++k) {
            const Word meet = cur & members[k];
            if (seen.insert(meet).second) members.push_back(meet);
        }
    }
    std::sort(members.begin(), members.end());
    return MooreFamily(n, std::move(members));
}

MooreFamily generate_family(int n, std::span<const Word> columns) {
    if (n < 0 || n > kMaxGround) throw UsageError("ground set size must be in [0, 32]");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] >= full_mask(n)) {
            throw UsageError("column " + std::to_string(columns[i]) + " is the full set or exceeds [n]");
        }
        if (i > 0 && columns[i - 1] >= columns[i]) throw UsageError("columns must be strictly increasing");
    }
    return close_under_intersection(n, columns);
}

MooreFamily boolean_family(int n) {
    if (n < 0 || n > 12) throw UsageError("boolean_family supports n <= 12");
    std::vector<Word> all(std::size_t{1} << n);
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
    return MooreFamily(n, std::move(all));
}

Word phi(const MooreFamily& fam, Word x) {
    if ((x & ~fam.top()) != 0) throw UsageError("argument exceeds the ground set");
    Word result = fam.top();
    for (Word m : fam.members()) {
        if (is_subset_of(x, m)) result &= m;
    }
    return result;
}

bool is_t1(const MooreFamily& fam) {
    for (int i = 0; i < fam.ground(); ++i) {
        if (!fam.contains(Word{1} << i)) return false;
    }
    return true;
}

bool is_strict(const MooreFamily& fam) { return fam.contains(0); }

std::vector<Word> family_atoms(const MooreFamily& fam) {
    const Word bot = fam.bottom();
    std::vector<Word> atoms;
    for (Word m : fam.members()) {
        if (m == bot) continue;
        bool minimal = true;
        for (Word k : fam.members()) {
            if (k != bot && is_proper_subset_of(k, m)) {
                minimal = false;
                break;
            }
        }
        if (minimal) atoms.push_back(m);
    }
    return atoms;
}

bool is_atomic(const MooreFamily& fam) {
    const auto atoms = family_atoms(fam);
    for (Word m : fam.members()) {
        Word join = 0;
        for (Word a : atoms) {
            if (is_subset_of(a, m)) join |= a;
        }
        if (phi(fam, join) != m) return false;
    }
    return true;
}

std::string family_to_json(const MooreFamily& fam) {
    nlohmann::json j;
    j["n"] = fam.ground();
    j["members"] = fam.members();
    return j.dump();
}

MooreFamily family_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        return MooreFamily(j.at("n").get<int>(), j.at("members").get<std::vector<Word>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid Moore family JSON: ") + e.what(), 1);
    }
}

}  // namespace atomlat
