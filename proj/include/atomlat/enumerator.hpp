#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomlat/bigcount.hpp"
#include "atomlat/combinatorics.hpp"

namespace atomlat {

/// Counting modes. `all` counts every T1 Moore family, `strict` only those
/// containing the empty set; they differ only for n = 1.
enum class CountMode { all, strict };

std::string to_string(CountMode mode);
CountMode parse_count_mode(std::string_view text);

/// Strictly increasing columns over [n], each a nonempty proper subset
/// (value in [1, 2^n - 2]). The column set of a candidate reduced context.
class ColumnTuple {
public:
    ColumnTuple() = default;
    /// Throws UsageError when the invariants do not hold.
    ColumnTuple(int n, std::vector<Word> cols);

    /// Parses "7, 11, 13" (commas and/or whitespace). n = 0 infers the ground
    /// set from the highest set bit. Non-numeric tokens and non-increasing
    /// sequences raise ParseError naming the offending token; values outside
    /// [1, 2^n - 2] raise UsageError.
    static ColumnTuple parse(std::string_view text, int n = 0);

    int ground() const noexcept { return n_; }
    const std::vector<Word>& cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return cols_.size(); }
    std::string to_string() const;

    friend bool operator==(const ColumnTuple&, const ColumnTuple&) = default;
    /// Lectic order on tuples: numeric lexicographic order of the columns.
    friend auto operator<=>(const ColumnTuple& a, const ColumnTuple& b) {
        return std::lexicographical_compare_three_way(a.cols_.begin(), a.cols_.end(), b.cols_.begin(), b.cols_.end());
    }

private:
    int n_ = 0;
    std::vector<Word> cols_;
};

/// Splits a comma/whitespace separated integer list; ParseError on junk.
std::vector<Word> parse_integer_list(std::string_view text);

/// No column equals the intersection of its strict supersets in the tuple,
/// i.e. the tuple's context is column-reduced up to row duplicates. An empty
/// intersection is [n]; duplicate columns count as reducible.
bool is_intersection_free(int n, std::span<const Word> cols);

/// Every singleton of [n] is an intersection of columns, i.e. the rows of
/// the tuple's context form an antichain.
bool is_t1_tuple(int n, std::span<const Word> cols);

/// Sorted images of the columns under a permutation of [n].
std::vector<Word> permute_tuple(std::span<const Word> cols, const Permutation& p);

/// True iff no permutation maps t to a lectically smaller tuple.
bool is_canonic(const ColumnTuple& t);

/// Distinct sorted images of t under all n! permutations, in lectic order.
std::vector<ColumnTuple> orbit(const ColumnTuple& t);

struct CountReport {
    int n = 0;
    CountMode mode = CountMode::all;
    bool inequivalent = false;
    BigCount total{0};
    /// Root-combination rank -> count of its subtree (zero entries omitted).
    std::map<std::uint64_t, BigCount> per_root;
    double elapsed_seconds = 0.0;
    unsigned workers = 1;
    std::uint64_t roots_total = 0;
    std::uint64_t roots_completed = 0;
    bool complete = true;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Resumable state of a counting run. All roots with rank <= the
/// `last_completed_root_index` are finished and their partials recorded.
struct Checkpoint {
    static constexpr int kVersion = 1;

    int n = 0;
    CountMode mode = CountMode::all;
    bool inequivalent = false;
    bool prune = false;
    std::uint64_t roots_total = 0;
    std::int64_t last_completed_root_index = -1;
    std::map<std::uint64_t, BigCount> per_root;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct Progress {
    std::uint64_t roots_completed = 0;
    std::uint64_t roots_total = 0;
    BigCount partial_total{0};
    double elapsed_seconds = 0.0;
};

struct CountOptions {
    unsigned workers = 1;
    /// Allow n > 7 (still capped at 8).
    bool force = false;
    /// Skip subtrees in which some pair of rows can no longer be separated
    /// by any larger column (T1 unreachable). Off by default.
    bool prune_unseparable = false;
    /// Roots per checkpoint/progress block.
    std::uint64_t checkpoint_every = 1000;
    std::optional<std::filesystem::path> checkpoint_path;
    std::optional<Checkpoint> resume;
    /// Process only roots with rank below this bound and return an
    /// incomplete report (simulates an interrupted run).
    std::optional<std::uint64_t> stop_at_root;
    std::function<void(const Progress&)> progress;
};

/// Number of T1 Moore families on [n] (A334254 for `all`, A334255 for
/// `strict`). For n >= 2 this is the number of intersection-free T1 column
/// tuples, found by depth-first extension of all intersection-free roots of
/// size k_min(n).
CountReport count_families(int n, CountMode mode, const CountOptions& options = {});

/// Number of T1 Moore families up to permutations of [n] (A235604 for
/// `strict`, A355517 for `all`): counts canonic tuples only.
CountReport count_inequivalent(int n, CountMode mode, const CountOptions& options = {});

Checkpoint make_checkpoint(const CountReport& report, bool prune = false);

struct MaxReducedResult {
    int n = 0;
    std::size_t max_size = 0;
    /// Lectically smallest maximiser. For n = 1 this is the single empty
    /// column {0}, which is outside the ColumnTuple value range.
    std::vector<Word> witness;
    BigCount witness_count{0};
};

/// Largest intersection-free T1 column tuple on [n]. Exhaustive, so n >= 7
/// is refused with ResourceError.
MaxReducedResult max_reduced_size(int n, unsigned workers = 1);

struct WitnessReport {
    int n = 0;
    std::size_t size = 0;
    bool column_reduced = false;
    bool t1 = false;
    bool strict = false;
    std::size_t family_size = 0;
    std::size_t orbit_size = 0;
    bool canonic = false;

    bool passed() const noexcept { return column_reduced && t1; }
};

WitnessReport verify_witness(const ColumnTuple& t);

/// Calls `visit(cols, t1)` for every intersection-free tuple of size >= 1
/// over [n] in lectic order (single-threaded, intended for n <= 4).
void visit_intersection_free(int n, const std::function<void(std::span<const Word>, bool)>& visit);

// JSON forms of the report and the checkpoint. BigCounts that fit 64 bits
// are written as numbers, larger ones as decimal strings.
std::string report_to_json(const CountReport& report);
CountReport report_from_json(std::string_view text);
std::string checkpoint_to_json(const Checkpoint& cp);
Checkpoint checkpoint_from_json(std::string_view text);
void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace atomlat
