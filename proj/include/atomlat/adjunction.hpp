#pragma once

#include <vector>

#include "atomlat/context.hpp"

namespace atomlat {

// Axialities of a relation R between rows [n] and columns U:
//   up(A)   = columns incident to at least one row of A   (union of rows)
//   down(B) = rows whose whole row lies inside B
// They satisfy up(A) ⊆ B  <=>  A ⊆ down(B), so up is the lower adjoint:
// down∘up is a closure on rows and up∘down a kernel on columns.

BitVec up(const FormalContext& ctx, const BitVec& rows);
BitVec down(const FormalContext& ctx, const BitVec& cols);

/// down(up(A)): rows whose row is covered by the union of A's rows.
/// Extensive, monotone, idempotent. Its fixed points are the upper-concept extents.
BitVec row_hull(const FormalContext& ctx, const BitVec& rows);

/// up(down(B)): union of the rows contained in B.
/// Contractive, monotone, idempotent.
BitVec column_kernel(const FormalContext& ctx, const BitVec& cols);

// Polarity (derivation) operators.
BitVec prime_rows(const FormalContext& ctx, const BitVec& rows);  // columns incident to every row of A
BitVec prime_cols(const FormalContext& ctx, const BitVec& cols);  // rows incident to every column of B

/// Complementary relation with the same dimensions and labels.
FormalContext complement(const FormalContext& ctx);

bool is_clarified(const FormalContext& ctx);
/// Clarified, and no column equals the intersection of its strict supersets
/// among the other columns (an empty intersection is the full row set, so a
/// full column is reducible).
bool is_column_reduced(const FormalContext& ctx);
bool is_row_reduced(const FormalContext& ctx);
bool is_reduced(const FormalContext& ctx);

/// Indices of columns that are intersections of other columns.
std::vector<std::size_t> reducible_columns(const FormalContext& ctx);

/// The rows form an antichain under inclusion.
bool is_t1_rows(const FormalContext& ctx);

struct UpperConcept {
    BitVec extent;  // rows
    BitVec intent;  // columns

    friend bool operator==(const UpperConcept&, const UpperConcept&) = default;
};

/// All (A, B) with up(A) = B and down(B) = A, sorted by extent as an integer.
std::vector<UpperConcept> upper_concepts(const FormalContext& ctx);

}  // namespace atomlat
