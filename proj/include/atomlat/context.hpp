#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "atomlat/bitvec.hpp"
#include "atomlat/combinatorics.hpp"

namespace atomlat {

/// Boolean incidence between `rows()` objects and `cols()` attributes.
/// Stored column-major; the row view is derived once at construction.
/// Immutable after construction.
class FormalContext {
public:
    FormalContext() = default;
    /// Each column is the set of incident rows. Empty label vectors get
    /// default labels ("1".."n" for rows, "a".."z" then "m27".. for columns).
    FormalContext(std::size_t rows, std::vector<BitVec> columns, std::vector<std::string> row_labels = {},
                  std::vector<std::string> col_labels = {}, std::string name = {});

    static FormalContext from_rows(std::size_t cols, const std::vector<BitVec>& rows,
                                   std::vector<std::string> row_labels = {},
                                   std::vector<std::string> col_labels = {}, std::string name = {});
    /// Context of a column tuple over [n]: row i is incident to column u iff i is in u.
    static FormalContext from_words(int n, std::span<const Word> columns);

    /// The three 3x3 scales of the classic FCA examples, generalised to k.
    static FormalContext nominal(std::size_t k);
    static FormalContext contranominal(std::size_t k);
    /// Row i incident to the first k+1-i columns (row 1 full, row k = {a}).
    static FormalContext order_scale(std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const BitVec& column(std::size_t j) const { return columns_.at(j); }
    const BitVec& row(std::size_t i) const { return row_sets_.at(i); }
    const std::vector<BitVec>& columns() const noexcept { return columns_; }
    const std::vector<BitVec>& row_sets() const noexcept { return row_sets_; }
    bool incident(std::size_t i, std::size_t j) const { return columns_.at(j).test(i); }

    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    const std::string& name() const noexcept { return name_; }

    FormalContext transpose() const;
    /// Keeps the first occurrence of every duplicate row and column.
    FormalContext clarify() const;
    FormalContext subcontext(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    BitVec all_rows() const { return BitVec::full(rows_); }
    BitVec all_cols() const { return BitVec::full(cols()); }

    friend bool operator==(const FormalContext& a, const FormalContext& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_ && a.row_labels_ == b.row_labels_ &&
               a.col_labels_ == b.col_labels_ && a.name_ == b.name_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<BitVec> columns_;
    std::vector<BitVec> row_sets_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::string name_;
};

std::string default_column_label(std::size_t j);

}  // namespace atomlat
