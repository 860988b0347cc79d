#include "atomlat/context.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "atomlat/adjunction.hpp"
#include "atomlat/errors.hpp"

namespace atomlat {

// ---- BitVec ---------------------------------------------------------------

BitVec BitVec::full(std::size_t size) {
    BitVec b(size);
    for (auto& w : b.words_) w = ~Word{0};
    if (size % 64 != 0) b.words_.back() = (Word{1} << (size % 64)) - 1;
    return b;
}

BitVec BitVec::from_word(std::size_t size, Word bits) {
    if (size > 64 || (size < 64 && (bits >> size) != 0)) throw UsageError("word does not fit in BitVec of given size");
    BitVec b(size);
    if (size != 0) b.words_[0] = bits;
    return b;
}

BitVec BitVec::from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    return from_indices(size, std::vector<std::size_t>(indices));
}

BitVec BitVec::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
    BitVec b(size);
    for (std::size_t i : indices) {
        if (i >= size) throw UsageError("bit index " + std::to_string(i) + " out of range");
        b.set(i);
    }
    return b;
}

std::size_t BitVec::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BitVec::is_subset_of(const BitVec& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVec& BitVec::operator&=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitVec BitVec::complement() const {
    BitVec out = full(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
    return out;
}

std::strong_ordering BitVec::compare_numeric(const BitVec& other) const noexcept {
    const std::size_t n = std::max(words_.size(), other.words_.size());
    for (std::size_t k = n; k-- > 0;) {
        const Word a = k < words_.size() ? words_[k] : 0;
        const Word b = k < other.words_.size() ? other.words_[k] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

// ---- FormalContext ----------------------------------------------------------

std::string default_column_label(std::size_t j) {
    if (j < 26) return std::string(1, static_cast<char>('a' + j));
    return "m" + std::to_string(j + 1);
}

namespace {

std::vector<BitVec> transpose_sets(std::size_t from, std::size_t to, const std::vector<BitVec>& sets) {
    std::vector<BitVec> out(to, BitVec(from));
    for (std::size_t j = 0; j < sets.size(); ++j) {
        for (std::size_t i : sets[j].indices()) out[i].set(j);
    }
    return out;
}

}  // namespace

FormalContext::FormalContext(std::size_t rows, std::vector<BitVec> columns, std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels, std::string name)
    : rows_(rows), columns_(std::move(columns)), row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)), name_(std::move(name)) {
    for (const auto& c : columns_) {
        if (c.size() != rows_) throw UsageError("column length does not match row count");
    }
    if (row_labels_.empty()) {
        for (std::size_t i = 0; i < rows_; ++i) row_labels_.push_back(std::to_string(i + 1));
    }
    if (col_labels_.empty()) {
        for (std::size_t j = 0; j < columns_.size(); ++j) col_labels_.push_back(default_column_label(j));
    }
    if (row_labels_.size() != rows_ || col_labels_.size() != columns_.size()) {
        throw UsageError("label count does not match context dimensions");
    }
    row_sets_ = transpose_sets(columns_.size(), rows_, columns_);
}

FormalContext FormalContext::from_rows(std::size_t cols, const std::vector<BitVec>& rows,
                                       std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                                       std::string name) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw UsageError("row length does not match column count");
    }
    return FormalContext(rows.size(), transpose_sets(rows.size(), cols, rows), std::move(row_labels),
                         std::move(col_labels), std::move(name));
}

FormalContext FormalContext::from_words(int n, std::span<const Word> columns) {
    if (n < 0 || n > kMaxGround) throw UsageError("ground set size must be in [0, 32]");
    std::vector<BitVec> cols;
    cols.reserve(columns.size());
    for (Word w : columns) cols.push_back(BitVec::from_word(static_cast<std::size_t>(n), w));
    return FormalContext(static_cast<std::size_t>(n), std::move(cols));
}

FormalContext FormalContext::nominal(std::size_t k) {
    std::vector<BitVec> cols;
    for (std::size_t j = 0; j < k; ++j) cols.push_back(BitVec::from_indices(k, {j}));
    return FormalContext(k, std::move(cols));
}

FormalContext FormalContext::contranominal(std::size_t k) {
    std::vector<BitVec> cols;
    for (std::size_t j = 0; j < k; ++j) {
        BitVec c = BitVec::full(k);
        c.reset(j);
        cols.push_back(std::move(c));
    }
    return FormalContext(k, std::move(cols));
}

FormalContext FormalContext::order_scale(std::size_t k) {
    // column j (0-based) is incident to rows 0..k-1-j
    std::vector<BitVec> cols;
    for (std::size_t j = 0; j < k; ++j) {
        BitVec c(k);
        for (std::size_t i = 0; i + j < k; ++i) c.set(i);
        cols.push_back(std::move(c));
    }
    return FormalContext(k, std::move(cols));
}

FormalContext FormalContext::transpose() const {
    return FormalContext(cols(), row_sets_, col_labels_, row_labels_, name_);
}

FormalContext FormalContext::clarify() const {
    std::vector<std::size_t> keep_rows;
    std::vector<std::size_t> keep_cols;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool dup = false;
        for (std::size_t k : keep_rows) dup = dup || row_sets_[k] == row_sets_[i];
        if (!dup) keep_rows.push_back(i);
    }
    for (std::size_t j = 0; j < cols(); ++j) {
        bool dup = false;
        for (std::size_t k : keep_cols) dup = dup || columns_[k] == columns_[j];
        if (!dup) keep_cols.push_back(j);
    }
    return subcontext(keep_rows, keep_cols);
}

FormalContext FormalContext::subcontext(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    std::vector<BitVec> new_cols;
    std::vector<std::string> rl;
    std::vector<std::string> cl;
    for (std::size_t i : rows) rl.push_back(row_labels_.at(i));
    for (std::size_t j : cols) {
        BitVec c(rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) c.assign(k, columns_.at(j).test(rows[k]));
        new_cols.push_back(std::move(c));
        cl.push_back(col_labels_.at(j));
    }
    return FormalContext(rows.size(), std::move(new_cols), std::move(rl), std::move(cl), name_);
}

// ---- adjunction operators ------------------------------------------------------

BitVec up(const FormalContext& ctx, const BitVec& rows) {
    BitVec out(ctx.cols());
    for (std::size_t i : rows.indices()) out |= ctx.row(i);
    return out;
}

BitVec down(const FormalContext& ctx, const BitVec& cols) {
    BitVec out(ctx.rows());
    for (std::size_t i = 0; i < ctx.rows(); ++i) {
        if (ctx.row(i).is_subset_of(cols)) out.set(i);
    }
    return out;
}

BitVec row_hull(const FormalContext& ctx, const BitVec& rows) { return down(ctx, up(ctx, rows)); }

BitVec column_kernel(const FormalContext& ctx, const BitVec& cols) { return up(ctx, down(ctx, cols)); }

BitVec prime_rows(const FormalContext& ctx, const BitVec& rows) {
    BitVec out = ctx.all_cols();
    for (std::size_t i : rows.indices()) out &= ctx.row(i);
    return out;
}

BitVec prime_cols(const FormalContext& ctx, const BitVec& cols) {
    BitVec out = ctx.all_rows();
    for (std::size_t j : cols.indices()) out &= ctx.column(j);
    return out;
}

FormalContext complement(const FormalContext& ctx) {
    std::vector<BitVec> cols;
    cols.reserve(ctx.cols());
    for (const auto& c : ctx.columns()) cols.push_back(c.complement());
    return FormalContext(ctx.rows(), std::move(cols), ctx.row_labels(), ctx.col_labels(), ctx.name());
}

namespace {

bool has_duplicates(const std::vector<BitVec>& sets) {
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            if (sets[a] == sets[b]) return true;
        }
    }
    return false;
}

std::vector<std::size_t> reducible_sets(const std::vector<BitVec>& sets, std::size_t universe) {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < sets.size(); ++u) {
        BitVec meet = BitVec::full(universe);
        for (std::size_t v = 0; v < sets.size(); ++v) {
            if (v != u && sets[u].is_proper_subset_of(sets[v])) meet &= sets[v];
        }
        if (meet == sets[u]) out.push_back(u);
    }
    return out;
}

}  // namespace

bool is_clarified(const FormalContext& ctx) {
    return !has_duplicates(ctx.columns()) && !has_duplicates(ctx.row_sets());
}

std::vector<std::size_t> reducible_columns(const FormalContext& ctx) {
    return reducible_sets(ctx.columns(), ctx.rows());
}

bool is_column_reduced(const FormalContext& ctx) {
    return is_clarified(ctx) && reducible_sets(ctx.columns(), ctx.rows()).empty();
}

bool is_row_reduced(const FormalContext& ctx) {
    return is_clarified(ctx) && reducible_sets(ctx.row_sets(), ctx.cols()).empty();
}

bool is_reduced(const FormalContext& ctx) { return is_column_reduced(ctx) && is_row_reduced(ctx); }

bool is_t1_rows(const FormalContext& ctx) {
    const auto& rows = ctx.row_sets();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i != j && rows[i].is_subset_of(rows[j])) return false;
        }
    }
    return true;
}

std::vector<UpperConcept> upper_concepts(const FormalContext& ctx) {
    // Intents are exactly the unions of rows; saturate under union.
    std::vector<BitVec> intents{BitVec(ctx.cols())};
    std::set<std::vector<std::size_t>> seen{{}};
    for (std::size_t head = 0; head < intents.size(); ++head) {
        for (const auto& r : ctx.row_sets()) {
            BitVec next = intents[head] | r;
            if (seen.insert(next.indices()).second) intents.push_back(std::move(next));
        }
    }
    std::vector<UpperConcept> out;
    out.reserve(intents.size());
    for (auto& b : intents) out.push_back({down(ctx, b), std::move(b)});
    std::sort(out.begin(), out.end(),
              [](const UpperConcept& a, const UpperConcept& b) { return a.extent.numeric_less(b.extent); });
    return out;
}

}  // namespace atomlat
