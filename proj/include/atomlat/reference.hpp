#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomlat/bigcount.hpp"
#include "atomlat/combinatorics.hpp"

namespace atomlat {

/// Published sequence values for n = 0..6.
///   A334254  T1 Moore families on [n]
///   A334255  strict T1 Moore families on [n]
///   A235604  strict T1 Moore families up to isomorphism
///   A355517  T1 Moore families up to isomorphism
///   A193674  all Moore families on [n]
struct ReferenceRow {
    int n = 0;
    BigCount a334254;
    BigCount a334255;
    BigCount a235604;
    BigCount a355517;
    BigCount a193674;
};

const std::vector<ReferenceRow>& reference_table();

/// Known breadth of the lattice of T1 Moore families: exact for n <= 5,
/// a lower bound beyond.
struct BreadthRow {
    int n = 0;
    int breadth = 0;
    bool exact = false;
    std::optional<BigCount> embeddings;
};

const std::vector<BreadthRow>& breadth_table();

/// Maximal size of an intersection-free T1 column tuple, n = 1..6.
const std::vector<int>& max_reduced_sizes();

/// Lookup by sequence id ("A334254", ...); nullopt outside the table.
std::optional<BigCount> reference_value(std::string_view sequence, int n);

/// |M_n| - 2^n - n, an upper bound on the number of T1 Moore families.
/// Defined for 2 <= n <= 6; UsageError otherwise.
BigCount upper_bound_Ln(int n);

/// The sequence table as CSV with a header line.
std::string reference_csv();

/// Known witnesses of the maxima at n = 6 (24 columns) and n = 7 (41 columns).
const std::vector<Word>& witness_n6();
const std::vector<Word>& witness_n7();

}  // namespace atomlat
