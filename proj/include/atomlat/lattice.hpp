#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atomlat/bigcount.hpp"
#include "atomlat/context.hpp"
#include "atomlat/moore.hpp"

namespace atomlat {

/// A Moore family ordered by inclusion, with its Hasse diagram.
/// Elements keep the family's increasing integer order, so index 0 is the
/// bottom and the last index is the top.
struct Lattice {
    int n = 0;
    std::vector<Word> elements;
    std::vector<std::vector<std::size_t>> upper_covers;
    std::vector<std::vector<std::size_t>> lower_covers;

    std::size_t size() const noexcept { return elements.size(); }
    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return elements.size() - 1; }
    std::size_t index_of(Word element) const;  // UsageError if absent
    /// Meet is intersection; join is the closure of the union.
    Word meet(Word a, Word b) const;
    Word join(Word a, Word b) const;
};

Lattice build_lattice(const MooreFamily& fam);

/// Length of the longest chain from bottom to top.
std::size_t height(const Lattice& lat);

std::vector<Word> atoms(const Lattice& lat);
std::vector<Word> coatoms(const Lattice& lat);
/// Exactly one lower cover.
std::vector<Word> join_irreducibles(const Lattice& lat);
/// Exactly one upper cover.
std::vector<Word> meet_irreducibles(const Lattice& lat);

/// Rows J(L), columns M(L), j incident to m iff j <= m. Labels are the
/// subsets in "{1,2}" form.
FormalContext standard_context(const Lattice& lat);

/// Each element mapped to the set of atoms below it, atoms numbered in
/// increasing integer order. For an atomic lattice this is a T1 Moore
/// family on [#atoms] isomorphic to the lattice. Requires <= 32 atoms.
MooreFamily atom_ideal_family(const Lattice& lat);

/// Standard context of the lattice of T1 Moore families on [n], n >= 3:
/// rows are the sets τ with 2 <= |τ| <= n-1, columns the pairs (σ, i) with
/// |σ| >= 2 and i not in σ, and τ is incident to (σ, i) unless σ ⊆ τ and
/// i ∉ τ. Rows are labelled "ab", columns "[ab,U\c]".
FormalContext ln_standard_context(int n);

/// Join-irreducibles of that lattice: 2^n - n - 2 (n >= 2).
BigCount ln_atom_count(int n);
/// Meet-irreducibles: n (2^(n-1) - n) for n >= 2, and 1 for n = 1.
BigCount ln_meetirr_count(int n);

struct BreadthOptions {
    bool count_embeddings = false;
    /// Stop searching once an embedding of this size is found.
    std::optional<std::size_t> max_k;
    /// Search nodes before giving up with a lower bound; 0 = unlimited.
    std::uint64_t node_budget = 0;
};

struct BreadthResult {
    /// Largest k with an embedded contranominal scale N^c(k).
    std::size_t k = 0;
    /// Number of (row set, column set) pairs carrying an N^c(k); the
    /// matching between them is forced.
    std::optional<BigCount> embeddings;
    /// False when the budget ran out: k is then only a lower bound and the
    /// embedding count is a partial count.
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Breadth of the concept lattice of ctx. One side of the context must
/// have at most 64 elements.
BreadthResult breadth(const FormalContext& ctx, const BreadthOptions& options = {});

/// Hasse diagram in Graphviz DOT, nodes labelled by their subsets.
std::string lattice_to_dot(const Lattice& lat, const std::string& name = "L");

}  // namespace atomlat
