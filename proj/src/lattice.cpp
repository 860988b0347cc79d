#include "atomlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "atomlat/errors.hpp"

namespace atomlat {

std::size_t Lattice::index_of(Word element) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), element);
    if (it == elements.end() || *it != element) throw UsageError("element " + std::to_string(element) + " not in lattice");
    return static_cast<std::size_t>(it - elements.begin());
}

Word Lattice::meet(Word a, Word b) const {
    index_of(a);
    index_of(b);
    return a & b;
}

Word Lattice::join(Word a, Word b) const {
    index_of(a);
    index_of(b);
    const Word u = a | b;
    Word best = full_mask(n);
    for (Word e : elements) {
        if (is_subset_of(u, e)) best &= e;
    }
    return best;
}

Lattice build_lattice(const MooreFamily& fam) {
    Lattice lat;
    lat.n = fam.ground();
    lat.elements = fam.members();
    const std::size_t size = lat.elements.size();
    lat.upper_covers.assign(size, {});
    lat.lower_covers.assign(size, {});
    const auto& e = lat.elements;
    // A strict superset of x has a larger value, so candidates lie to the right.
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<std::size_t> above;
        for (std::size_t j = i + 1; j < size; ++j) {
            if (is_proper_subset_of(e[i], e[j])) above.push_back(j);
        }
        for (std::size_t j : above) {
            const bool covered = std::none_of(above.begin(), above.end(),
                                              [&](std::size_t k) { return is_proper_subset_of(e[k], e[j]); });
            if (covered) {
                lat.upper_covers[i].push_back(j);
                lat.lower_covers[j].push_back(i);
            }
        }
    }
    return lat;
}

std::size_t height(const Lattice& lat) {
    std::vector<std::size_t> depth(lat.size(), 0);
    for (std::size_t i = 0; i < lat.size(); ++i) {
        for (std::size_t j : lat.upper_covers[i]) depth[j] = std::max(depth[j], depth[i] + 1);
    }
    return lat.size() == 0 ? 0 : depth[lat.top()];
}

std::vector<Word> atoms(const Lattice& lat) {
    std::vector<Word> out;
    if (lat.size() == 0) return out;
    for (std::size_t j : lat.upper_covers[lat.bottom()]) out.push_back(lat.elements[j]);
    return out;
}

std::vector<Word> coatoms(const Lattice& lat) {
    std::vector<Word> out;
    if (lat.size() == 0) return out;
    for (std::size_t j : lat.lower_covers[lat.top()]) out.push_back(lat.elements[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> join_irreducibles(const Lattice& lat) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat.lower_covers[i].size() == 1) out.push_back(lat.elements[i]);
    }
    return out;
}

std::vector<Word> meet_irreducibles(const Lattice& lat) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat.upper_covers[i].size() == 1) out.push_back(lat.elements[i]);
    }
    return out;
}

FormalContext standard_context(const Lattice& lat) {
    const auto rows = join_irreducibles(lat);
    const auto cols = meet_irreducibles(lat);
    std::vector<BitVec> columns;
    columns.reserve(cols.size());
    for (Word m : cols) {
        BitVec col(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) col.assign(i, is_subset_of(rows[i], m));
        columns.push_back(std::move(col));
    }
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    for (Word j : rows) row_labels.push_back(Subset(lat.n, j).to_string());
    for (Word m : cols) col_labels.push_back(Subset(lat.n, m).to_string());
    return FormalContext(rows.size(), std::move(columns), std::move(row_labels), std::move(col_labels));
}

MooreFamily atom_ideal_family(const Lattice& lat) {
    const auto at = atoms(lat);
    if (at.size() > static_cast<std::size_t>(kMaxGround)) throw UsageError("more than 32 atoms");
    std::vector<Word> members;
    members.reserve(lat.size());
    for (Word e : lat.elements) {
        Word ideal = 0;
        for (std::size_t a = 0; a < at.size(); ++a) {
            if (is_subset_of(at[a], e)) ideal |= Word{1} << a;
        }
        members.push_back(ideal);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return MooreFamily(static_cast<int>(at.size()), std::move(members));
}

namespace {

std::string letters(int n, Word s) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1U) out += static_cast<char>('a' + i);
    }
    return out;
}

}  // namespace

FormalContext ln_standard_context(int n) {
    if (n < 3 || n > 12) throw UsageError("ln_standard_context needs 3 <= n <= 12");
    const Word full = full_mask(n);
    std::vector<Word> rows;
    for (Word t = 0; t <= full; ++t) {
        const int k = popcount(t);
        if (k >= 2 && k <= n - 1) rows.push_back(t);
    }
    std::vector<std::string> row_labels;
    for (Word t : rows) row_labels.push_back(letters(n, t));

    std::vector<BitVec> columns;
    std::vector<std::string> col_labels;
    for (Word s = 0; s <= full; ++s) {
        if (popcount(s) < 2) continue;
        for (int i = 0; i < n; ++i) {
            const Word bit = Word{1} << i;
            if (s & bit) continue;
            BitVec col(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const bool inside = is_subset_of(s, rows[r]) && (rows[r] & bit) == 0;
                col.assign(r, !inside);
            }
            columns.push_back(std::move(col));
            col_labels.push_back("[" + letters(n, s) + ",U\\" + letters(n, bit) + "]");
        }
    }
    return FormalContext(rows.size(), std::move(columns), std::move(row_labels), std::move(col_labels),
                         "L" + std::to_string(n));
}

BigCount ln_atom_count(int n) {
    if (n < 2 || n > 64) throw UsageError("ln_atom_count needs 2 <= n <= 64");
    return BigCount::from_raw((static_cast<BigCount::value_type>(1) << n)) - BigCount(static_cast<std::uint64_t>(n) + 2);
}

BigCount ln_meetirr_count(int n) {
    if (n < 1 || n > 64) throw UsageError("ln_meetirr_count needs 1 <= n <= 64");
    if (n == 1) return 1;
    const BigCount half = BigCount::from_raw(static_cast<BigCount::value_type>(1) << (n - 1));
    return BigCount(static_cast<std::uint64_t>(n)) * (half - BigCount(static_cast<std::uint64_t>(n)));
}

// ---- breadth ----------------------------------------------------------------------

namespace {

/// Branch and bound over embedded contranominal scales. Columns are taken
/// in a fixed order and each gets one row that misses it but meets every
/// other chosen column, so every (row set, column set) pair is visited once.
class BreadthSearch {
public:
    BreadthSearch(std::vector<Word> colmask, Word all_rows, const BreadthOptions& options)
        : colmask_(std::move(colmask)), all_rows_(all_rows), options_(options) {}

    BreadthResult run() {
        std::vector<std::size_t> order(colmask_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return popcount(colmask_[a]) < popcount(colmask_[b]); });
        // A column incident to every row can never be chosen.
        std::erase_if(order, [&](std::size_t c) { return (all_rows_ & ~colmask_[c]) == 0; });
        search(0, all_rows_, order, 0);
        BreadthResult result;
        result.k = best_;
        if (options_.count_embeddings) result.embeddings = count_;
        result.exact = !exhausted_;
        result.nodes = nodes_;
        return result;
    }

private:
    void search(Word chosen_rows, Word open_rows, const std::vector<std::size_t>& cands, std::size_t depth) {
        if (stop_) return;
        if (options_.node_budget != 0 && nodes_ >= options_.node_budget) {
            exhausted_ = stop_ = true;
            return;
        }
        ++nodes_;
        if (depth > best_) {
            best_ = depth;
            count_ = 1;
        } else if (depth == best_) {
            count_ += 1;
        }
        if (options_.max_k && depth >= *options_.max_k) {
            if (!options_.count_embeddings) stop_ = true;
            return;
        }
        const auto rows_left = static_cast<std::size_t>(popcount(open_rows));
        std::vector<std::size_t> next;
        next.reserve(cands.size());
        for (std::size_t idx = 0; idx < cands.size() && !stop_; ++idx) {
            const std::size_t bound = depth + std::min(cands.size() - idx, rows_left);
            if (options_.count_embeddings ? bound < best_ : bound <= best_) break;
            const std::size_t c = cands[idx];
            const Word open_after = open_rows & colmask_[c];
            for (Word free = open_rows & ~colmask_[c]; free != 0 && !stop_; free &= free - 1) {
                const Word r = free & (~free + 1);
                const Word chosen = chosen_rows | r;
                next.clear();
                for (std::size_t j = idx + 1; j < cands.size(); ++j) {
                    const Word m = colmask_[cands[j]];
                    if ((m & chosen) == chosen && (open_after & ~m) != 0) next.push_back(cands[j]);
                }
                search(chosen, open_after, next, depth + 1);
            }
        }
    }

    std::vector<Word> colmask_;
    Word all_rows_;
    BreadthOptions options_;
    std::size_t best_ = 0;
    BigCount count_{0};
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool stop_ = false;
};

}  // namespace

BreadthResult breadth(const FormalContext& ctx, const BreadthOptions& options) {
    if (ctx.rows() > 64 && ctx.cols() > 64) throw ResourceError("breadth needs one side of at most 64 elements");
    // N^c(k) is self-dual, so the transpose has the same embeddings.
    const FormalContext work = ctx.rows() <= 64 ? ctx : ctx.transpose();
    std::vector<Word> colmask;
    colmask.reserve(work.cols());
    for (std::size_t c = 0; c < work.cols(); ++c) colmask.push_back(work.column(c).to_word());
    return BreadthSearch(std::move(colmask), full_mask(static_cast<int>(work.rows())), options).run();
}

std::string lattice_to_dot(const Lattice& lat, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  v" << i << " [label=\"" << Subset(lat.n, lat.elements[i]).to_string() << "\"];\n";
    }
    for (std::size_t i = 0; i < lat.size(); ++i) {
        for (std::size_t j : lat.upper_covers[i]) out << "  v" << i << " -> v" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace atomlat
