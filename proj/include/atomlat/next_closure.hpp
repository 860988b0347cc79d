#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atomlat/bigcount.hpp"
#include "atomlat/combinatorics.hpp"
#include "atomlat/context.hpp"
#include "atomlat/errors.hpp"

namespace atomlat {

/// A closure function on subsets of a ground set of size m <= 64.
using ClosureOracle = std::function<Word(Word)>;

/// Ganter's NextClosure over the lectic order (see lectic_less). Yields every
/// closed set exactly once, smallest first.
///
/// With prefix_len = p > 0 only the closed sets whose intersection with the
/// first p elements equals `prefix` are produced. These form a contiguous
/// lectic interval, so shards with different prefixes partition the output.
///
/// Every yielded set is re-closed; a set that closes differently raises
/// OracleError.
template <class Closure>
class NextClosure {
public:
    NextClosure(Closure closure, int m, int prefix_len = 0, Word prefix = 0)
        : closure_(std::move(closure)), m_(m), prefix_len_(prefix_len), prefix_(prefix) {
        if (m < 0 || m > 64) throw UsageError("NextClosure supports ground sets of size <= 64");
        if (prefix_len < 0 || prefix_len > m) throw UsageError("prefix length out of range");
        if ((prefix & ~full_mask(prefix_len)) != 0) throw UsageError("prefix pattern exceeds prefix length");
    }

    std::optional<Word> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            const Word first = close(prefix_);
            if ((first & full_mask(prefix_len_)) != prefix_) {
                done_ = true;
                return std::nullopt;
            }
            current_ = first;
            return current_;
        }
        for (int i = m_ - 1; i >= prefix_len_; --i) {
            const Word bit = Word{1} << i;
            if ((current_ & bit) != 0) continue;
            const Word below = bit - 1;
            const Word candidate = close((current_ & below) | bit);
            if ((candidate & below) == (current_ & below)) {
                current_ = candidate;
                return current_;
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    Word close(Word x) {
        const Word c = closure_(x);
        if ((x & ~c) != 0) throw OracleError("closure oracle is not extensive at " + std::to_string(x));
        if (closure_(c) != c) throw OracleError("closure oracle is not idempotent at " + std::to_string(x));
        return c;
    }

    Closure closure_;
    int m_;
    int prefix_len_;
    Word prefix_;
    Word current_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// All closed sets of `oracle` on a ground set of size m, in lectic order.
std::vector<Word> next_closure_all(const ClosureOracle& oracle, int m);

/// Polarity closure A -> A'' on the rows of ctx (requires ctx.rows() <= 64).
ClosureOracle row_polarity_closure(const FormalContext& ctx);

/// All row sets A with A'' = A, in lectic order (requires ctx.rows() <= 64).
std::vector<Word> closed_row_sets(const FormalContext& ctx);

/// Number of formal concepts of ctx. Enumerates on whichever side has at
/// most 64 elements; with workers > 1 the lectic enumeration is split into
/// 2^p prefix shards (2^p >= 4 * workers) counted concurrently.
BigCount count_closed_sets(const FormalContext& ctx, unsigned workers = 1);

}  // namespace atomlat
