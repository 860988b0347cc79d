#include "atomlat/next_closure.hpp"

#include <algorithm>
#include <exception>
#include <atomic>
#include <mutex>
#include <thread>

namespace atomlat {

namespace {

/// Column extents as words; closure(A) = ∩ {ext(c) : A ⊆ ext(c)}.
struct WordPolarity {
    std::vector<Word> extents;
    Word full;

    Word operator()(Word a) const noexcept {
        Word result = full;
        for (Word e : extents) {
            if ((a & ~e) == 0) result &= e;
        }
        return result;
    }
};

WordPolarity make_polarity(const FormalContext& ctx) {
    if (ctx.rows() > 64) throw UsageError("word-based closure needs at most 64 rows");
    WordPolarity p{{}, full_mask(static_cast<int>(ctx.rows()))};
    p.extents.reserve(ctx.cols());
    for (const auto& c : ctx.columns()) p.extents.push_back(c.to_word());
    // Duplicate extents do not change the closure.
    std::sort(p.extents.begin(), p.extents.end());
    p.extents.erase(std::unique(p.extents.begin(), p.extents.end()), p.extents.end());
    return p;
}

}  // namespace

std::vector<Word> next_closure_all(const ClosureOracle& oracle, int m) {
    NextClosure<const ClosureOracle&> nc(oracle, m);
    std::vector<Word> out;
    while (auto s = nc.next()) out.push_back(*s);
    return out;
}

ClosureOracle row_polarity_closure(const FormalContext& ctx) { return make_polarity(ctx); }

std::vector<Word> closed_row_sets(const FormalContext& ctx) {
    NextClosure<WordPolarity> nc(make_polarity(ctx), static_cast<int>(ctx.rows()));
    std::vector<Word> out;
    while (auto s = nc.next()) out.push_back(*s);
    return out;
}

BigCount count_closed_sets(const FormalContext& ctx, unsigned workers) {
    if (workers == 0) throw UsageError("worker count must be positive");
    if (ctx.rows() > 64 && ctx.cols() > 64) throw ResourceError("count_closed_sets needs one side with at most 64 elements");
    // Concepts are in bijection with closed row sets and with closed column sets.
    const WordPolarity closure = ctx.rows() <= 64 ? make_polarity(ctx) : make_polarity(ctx.transpose());
    const int m = ctx.rows() <= 64 ? static_cast<int>(ctx.rows()) : static_cast<int>(ctx.cols());

    int p = 0;
    while ((std::uint64_t{1} << p) < 4ULL * workers && p < m) ++p;
    const std::uint64_t shards = std::uint64_t{1} << p;

    std::atomic<std::uint64_t> next_shard{0};
    std::mutex merge;
    BigCount total{0};
    std::exception_ptr failure;
    auto work = [&] {
        try {
            BigCount local{0};
            for (std::uint64_t s = next_shard++; s < shards; s = next_shard++) {
                NextClosure<const WordPolarity&> nc(closure, m, p, static_cast<Word>(s));
                std::uint64_t n = 0;
                while (nc.next()) ++n;
                local += BigCount(n);
            }
            std::lock_guard lock(merge);
            total += local;
        } catch (...) {
            std::lock_guard lock(merge);
            if (!failure) failure = std::current_exception();
            next_shard = shards;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

}  // namespace atomlat
