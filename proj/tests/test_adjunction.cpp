#include <set>

#include "atomlat/adjunction.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace atomlat;
using testing::bits_of;

namespace {

const FormalContext nominal3 = FormalContext::nominal(3);
const FormalContext contranominal3 = FormalContext::contranominal(3);
const FormalContext order3 = FormalContext::order_scale(3);

// Elements and column letters as bit masks: row 1 / column a is bit 0.
BitVec R(Word w) { return bits_of(3, w); }
constexpr Word a = 1, b = 2, c = 4;

/// Literal set-comprehension forms, evaluated cell by cell.
Word up_literal(const FormalContext& ctx, Word rows) {
    Word out = 0;
    for (std::size_t u = 0; u < ctx.cols(); ++u) {
        for (std::size_t i = 0; i < ctx.rows(); ++i) {
            if (((rows >> i) & 1U) && ctx.incident(i, u)) out |= Word{1} << u;
        }
    }
    return out;
}

Word down_literal(const FormalContext& ctx, Word cols) {
    Word out = 0;
    for (std::size_t i = 0; i < ctx.rows(); ++i) {
        bool inside = true;
        for (std::size_t u = 0; u < ctx.cols(); ++u) {
            if (ctx.incident(i, u) && !((cols >> u) & 1U)) inside = false;
        }
        if (inside) out |= Word{1} << i;
    }
    return out;
}

FormalContext random_small(std::mt19937_64& g) {
    return testing::random_context(g, testing::uniform(g, 1, 6), testing::uniform(g, 1, 8),
                                   std::uniform_real_distribution<double>(0.2, 0.8)(g));
}

}  // namespace

TEST_SUITE("adjunction") {

TEST_CASE("up") {
    CHECK(up(nominal3, R(0b011)) == R(a | b));
    CHECK(up(contranominal3, R(0b001)) == R(b | c));
    CHECK(up(order3, R(0)).none());
}

TEST_CASE("down") {
    CHECK(down(order3, R(a)) == R(0b100));
    CHECK(down(order3, order3.all_cols()) == order3.all_rows());
    CHECK(down(contranominal3, R(b | c)) == R(0b001));
}

TEST_CASE("row hull (down after up)") {
    // Row 1 of the order scale is full, so its hull takes in every row.
    CHECK(row_hull(order3, R(0b001)) == R(0b111));
    CHECK(row_hull(order3, R(0b100)) == R(0b100));
    CHECK(row_hull(contranominal3, R(0b001)) == R(0b001));
    CHECK(row_hull(contranominal3, R(0)).none());
}

TEST_CASE("column kernel (up after down)") {
    // No row of the contranominal scale fits inside {b}.
    CHECK(column_kernel(contranominal3, R(b)).none());
    CHECK(column_kernel(contranominal3, contranominal3.all_cols()) == contranominal3.all_cols());
    CHECK(column_kernel(nominal3, R(a | b)) == R(a | b));
}

TEST_CASE("polarity") {
    CHECK(prime_rows(nominal3, R(0b001)) == R(a));
    CHECK(prime_rows(nominal3, R(0)) == nominal3.all_cols());
    CHECK(prime_rows(contranominal3, R(0b011)) == R(c));
    CHECK(prime_cols(contranominal3, R(c)) == R(0b011));
}

TEST_CASE("complement") {
    CHECK(complement(contranominal3).columns() == nominal3.columns());
    const FormalContext full2 = FormalContext::from_words(2, std::vector<Word>{3, 3});
    const FormalContext empty2 = complement(full2);
    for (const auto& col : empty2.columns()) CHECK(col.none());
    auto g = testing::rng(10);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        CHECK(complement(complement(ctx)) == ctx);
    }
}

TEST_CASE("reduction predicates") {
    CHECK(is_column_reduced(contranominal3));
    CHECK_FALSE(is_column_reduced(FormalContext::from_words(2, std::vector<Word>{1, 2, 0})));
    CHECK(is_column_reduced(FormalContext::from_words(3, std::vector<Word>{1, 2, 3, 4})));
    // A full column is the empty intersection.
    CHECK_FALSE(is_column_reduced(FormalContext::from_words(2, std::vector<Word>{1, 3})));
    CHECK_FALSE(is_column_reduced(FormalContext::from_words(3, std::vector<Word>{1, 1})));
    CHECK(is_reduced(nominal3));
    CHECK(is_clarified(order3));
    CHECK(is_row_reduced(contranominal3));
}

TEST_CASE("T1 rows") {
    CHECK(is_t1_rows(FormalContext::from_words(3, std::vector<Word>{3, 5, 6})));
    CHECK_FALSE(is_t1_rows(order3));
    CHECK(is_t1_rows(FormalContext::from_words(1, std::vector<Word>{1})));
}

TEST_CASE("upper concepts of the three scales") {
    auto extents = [](const FormalContext& ctx) {
        std::vector<std::pair<Word, Word>> out;
        for (const auto& uc : upper_concepts(ctx)) out.emplace_back(uc.extent.to_word(), uc.intent.to_word());
        return out;
    };
    using P = std::vector<std::pair<Word, Word>>;
    CHECK(extents(nominal3) ==
          P{{0, 0}, {1, a}, {2, b}, {3, a | b}, {4, c}, {5, a | c}, {6, b | c}, {7, a | b | c}});
    CHECK(extents(contranominal3) == P{{0, 0}, {1, b | c}, {2, a | c}, {4, a | b}, {7, a | b | c}});
    CHECK(extents(order3) == P{{0, 0}, {4, a}, {6, a | b}, {7, a | b | c}});
}

TEST_CASE("operators match their literal definitions") {
    auto g = testing::rng(11);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        const Word A = testing::random_word(g, static_cast<int>(ctx.rows()));
        const Word B = testing::random_word(g, static_cast<int>(ctx.cols()));
        CHECK(up(ctx, bits_of(ctx.rows(), A)).to_word() == up_literal(ctx, A));
        CHECK(down(ctx, bits_of(ctx.cols(), B)).to_word() == down_literal(ctx, B));
    }
}

TEST_CASE("adjunction law: up(A) <= B iff A <= down(B)") {
    auto g = testing::rng(12);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        const std::size_t n = ctx.rows();
        const std::size_t m = ctx.cols();
        for (Word A = 0; A <= full_mask(static_cast<int>(n)); ++A) {
            const BitVec upA = up(ctx, bits_of(n, A));
            const Word B = testing::random_word(g, static_cast<int>(m));
            const BitVec Bv = bits_of(m, B);
            CHECK(upA.is_subset_of(Bv) == bits_of(n, A).is_subset_of(down(ctx, Bv)));
        }
    }
}

TEST_CASE("closure and kernel laws") {
    auto g = testing::rng(13);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        const std::size_t n = ctx.rows();
        const std::size_t m = ctx.cols();
        const BitVec A1 = bits_of(n, testing::random_word(g, static_cast<int>(n)));
        const BitVec A2 = A1 | bits_of(n, testing::random_word(g, static_cast<int>(n)));
        const BitVec B1 = bits_of(m, testing::random_word(g, static_cast<int>(m)));
        const BitVec B2 = B1 | bits_of(m, testing::random_word(g, static_cast<int>(m)));
        // monotone
        CHECK(up(ctx, A1).is_subset_of(up(ctx, A2)));
        CHECK(down(ctx, B1).is_subset_of(down(ctx, B2)));
        // the row hull is extensive, the column kernel contractive
        CHECK(A1.is_subset_of(row_hull(ctx, A1)));
        CHECK(column_kernel(ctx, B1).is_subset_of(B1));
        // up and down are unchanged by the hull and the kernel
        CHECK(up(ctx, row_hull(ctx, A1)) == up(ctx, A1));
        CHECK(down(ctx, column_kernel(ctx, B1)) == down(ctx, B1));
        // idempotent
        CHECK(row_hull(ctx, row_hull(ctx, A1)) == row_hull(ctx, A1));
        CHECK(column_kernel(ctx, column_kernel(ctx, B1)) == column_kernel(ctx, B1));
    }
}

TEST_CASE("column reducibility agrees with brute force") {
    auto g = testing::rng(14);
    int checked = 0;
    while (checked < testing::kInstances) {
        const FormalContext ctx = testing::random_context(g, testing::uniform(g, 1, 6), testing::uniform(g, 1, 6));
        if (!is_clarified(ctx)) continue;
        ++checked;
        std::vector<std::size_t> brute;
        const std::size_t m = ctx.cols();
        for (std::size_t u = 0; u < m; ++u) {
            bool reducible = false;
            for (Word S = 0; S < (Word{1} << m) && !reducible; ++S) {
                if ((S >> u) & 1U) continue;
                BitVec meet = ctx.all_rows();
                for (std::size_t v = 0; v < m; ++v) {
                    if ((S >> v) & 1U) meet &= ctx.column(v);
                }
                reducible = meet == ctx.column(u);
            }
            if (reducible) brute.push_back(u);
        }
        CHECK(reducible_columns(ctx) == brute);
        CHECK(is_column_reduced(ctx) == brute.empty());
    }
}

TEST_CASE("three readings of T1 agree") {
    auto g = testing::rng(15);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        const std::size_t n = ctx.rows();
        bool hull_fixed = true;
        bool intersections = true;
        for (std::size_t r = 0; r < n; ++r) {
            const BitVec single = BitVec::from_indices(n, {r});
            hull_fixed = hull_fixed && row_hull(ctx, single) == single;
            BitVec meet = ctx.all_rows();
            for (const auto& col : ctx.columns()) {
                if (col.test(r)) meet &= col;
            }
            intersections = intersections && meet == single;
        }
        CHECK(is_t1_rows(ctx) == hull_fixed);
        CHECK(is_t1_rows(ctx) == intersections);
    }
}

TEST_CASE("hull-closed row sets are the concept extents of the complement") {
    auto g = testing::rng(16);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        const FormalContext co = complement(ctx);
        const std::size_t n = ctx.rows();
        for (Word A = 0; A <= full_mask(static_cast<int>(n)); ++A) {
            const BitVec Av = bits_of(n, A);
            CHECK((row_hull(ctx, Av) == Av) == (prime_cols(co, prime_rows(co, Av)) == Av));
        }
    }
}

TEST_CASE("upper concepts correspond to the distinct up-images") {
    auto g = testing::rng(17);
    for (int i = 0; i < testing::kInstances; ++i) {
        const FormalContext ctx = random_small(g);
        std::set<Word> images;
        for (Word A = 0; A <= full_mask(static_cast<int>(ctx.rows())); ++A) {
            images.insert(up(ctx, bits_of(ctx.rows(), A)).to_word());
        }
        const auto concepts = upper_concepts(ctx);
        CHECK(concepts.size() == images.size());
        for (const auto& uc : concepts) {
            CHECK(up(ctx, uc.extent) == uc.intent);
            CHECK(down(ctx, uc.intent) == uc.extent);
        }
    }
}

}
