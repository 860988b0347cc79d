// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "atomlat/adjunction.hpp"
#include "atomlat/enumerator.hpp"
#include "atomlat/lattice.hpp"
#include "atomlat/moore.hpp"
#include "atomlat/next_closure.hpp"
#include "atomlat/reference.hpp"

using namespace atomlat;

namespace {

using Words = std::vector<Word>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failures of one criterion; the first few are printed.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            failures.push_back(os.str());
        }
    }
    void within(double elapsed, double limit, const std::string& what) {
        if (elapsed > limit) {
            std::ostringstream os;
            os << what << " took " << elapsed << "s, limit " << limit << "s";
            failures.push_back(os.str());
        }
    }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    const bool ok = c.failures.empty();
    if (!ok) ++failed_criteria;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
              << std::setprecision(2) << dt << "s]";
    const std::string notes = c.notes.str();
    if (!notes.empty()) std::cout << "  " << notes;
    std::cout << '\n';
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::cout << "    - " << c.failures[i] << '\n';
    if (c.failures.size() > 5) std::cout << "    - ... " << c.failures.size() - 5 << " more\n";
    std::cout.flush();
}

BigCount timed_total(const std::function<CountReport()>& run, double limit, const std::string& what, Check& c) {
    const auto t0 = Clock::now();
    const CountReport r = run();
    c.within(seconds_since(t0), limit, what);
    return r.total;
}

std::vector<Words> all_tuples(int n) {
    const Word values = full_mask(n) - 1;
    std::vector<Words> out;
    for (Word mask = 0; mask < (Word{1} << values); ++mask) {
        Words t;
        for (Word v = 1; v <= values; ++v) {
            if ((mask >> (v - 1)) & 1U) t.push_back(v);
        }
        out.push_back(std::move(t));
    }
    return out;
}

// ---- random instances for the property criterion ----

constexpr int kInstances = 1000;

FormalContext random_context(std::mt19937_64& g, int max_rows, int max_cols) {
    const int rows = std::uniform_int_distribution<int>(1, max_rows)(g);
    const int cols = std::uniform_int_distribution<int>(1, max_cols)(g);
    std::bernoulli_distribution cell(std::uniform_real_distribution<double>(0.2, 0.8)(g));
    std::vector<BitVec> columns;
    for (int j = 0; j < cols; ++j) {
        BitVec col(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) col.assign(static_cast<std::size_t>(i), cell(g));
        columns.push_back(std::move(col));
    }
    return FormalContext(static_cast<std::size_t>(rows), std::move(columns));
}

MooreFamily random_family(std::mt19937_64& g, int n) {
    Words gens;
    const int k = std::uniform_int_distribution<int>(0, 2 * n)(g);
    for (int i = 0; i < k; ++i) gens.push_back(g() & full_mask(n));
    return close_under_intersection(n, gens);
}

BitVec word_bits(std::size_t size, Word w) { return BitVec::from_word(size, w); }

}  // namespace

int main() {
    std::cout << "acceptance run\n";

    criterion(1, "labelled counts n=0..5", [](Check& c) {
        const std::uint64_t all[] = {1, 2, 1, 8, 545, 702525};
        const std::uint64_t strict[] = {1, 1, 1, 8, 545, 702525};
        for (int n = 0; n <= 5; ++n) {
            const double limit = n <= 4 ? 5.0 : 600.0;
            c.equal(timed_total([&] { return count_families(n, CountMode::all); }, limit, "all n=" + std::to_string(n), c),
                    BigCount(all[n]), "all n=" + std::to_string(n));
            c.equal(timed_total([&] { return count_families(n, CountMode::strict); }, limit,
                                "strict n=" + std::to_string(n), c),
                    BigCount(strict[n]), "strict n=" + std::to_string(n));
        }
        c.notes << "1 2 1 8 545 702525 / 1 1 1 8 545 702525";
    });

    criterion(2, "inequivalent counts n=0..5", [](Check& c) {
        const std::uint64_t strict[] = {1, 1, 1, 4, 50, 7443};
        for (int n = 0; n <= 5; ++n) {
            c.equal(timed_total([&] { return count_inequivalent(n, CountMode::strict); }, 1800.0,
                                "strict n=" + std::to_string(n), c),
                    BigCount(strict[n]), "strict n=" + std::to_string(n));
        }
        c.equal(count_inequivalent(1, CountMode::all).total, BigCount(2), "all n=1");
        c.notes << "1 1 1 4 50 7443; all-mode n=1 = 2";
    });

    criterion(3, "enumerator properties (brute force n=3,4, prefixes, orbits, workers)", [](Check& c) {
        for (int n = 3; n <= 4; ++n) {
            const std::string tag = " n=" + std::to_string(n);
            std::set<Words> brute_counted;
            std::size_t free_count = 0;
            for (const auto& t : all_tuples(n)) {
                const FormalContext ctx = FormalContext::from_words(n, t);
                if (is_column_reduced(ctx) && is_t1_rows(ctx)) brute_counted.insert(t);
                if (!is_intersection_free(n, t)) continue;
                ++free_count;
                for (std::size_t len = 0; len < t.size(); ++len) {
                    c.expect(is_intersection_free(n, std::span<const Word>(t.data(), len)), "prefix closed" + tag);
                }
            }
            c.equal(count_families(n, CountMode::all).total, BigCount(brute_counted.size()), "brute force" + tag);

            std::set<Words> dfs_counted;
            std::size_t dfs_free = 0;
            visit_intersection_free(n, [&](std::span<const Word> cols, bool t1) {
                ++dfs_free;
                if (t1) dfs_counted.emplace(cols.begin(), cols.end());
            });
            c.expect(dfs_counted == brute_counted, "DFS visits the brute-force set" + tag);
            c.equal(dfs_free + 1, free_count, "intersection-free tuples incl. empty" + tag);

            std::size_t orbit_sum = 0;
            std::size_t canonic = 0;
            for (const auto& t : brute_counted) {
                const ColumnTuple ct(n, t);
                if (!is_canonic(ct)) continue;
                ++canonic;
                orbit_sum += orbit(ct).size();
            }
            c.equal(orbit_sum, brute_counted.size(), "orbit-sum identity" + tag);
            c.equal(count_inequivalent(n, CountMode::strict).total, BigCount(canonic), "canonic per orbit" + tag);
        }
        for (int n = 4; n <= 5; ++n) {
            const CountReport one = count_families(n, CountMode::all, {.workers = 1});
            for (unsigned w : {2U, 4U}) {
                const CountReport many = count_families(n, CountMode::all, {.workers = w});
                c.expect(many.total == one.total && many.per_root == one.per_root,
                         "determinism n=" + std::to_string(n) + " workers=" + std::to_string(w));
            }
        }
        const CountReport full = count_families(4, CountMode::all);
        for (std::uint64_t stop = 0; stop <= full.roots_total; ++stop) {
            const CountReport part = count_families(4, CountMode::all, {.stop_at_root = stop});
            const CountReport rest = count_families(4, CountMode::all, {.resume = make_checkpoint(part)});
            c.expect(rest.total == full.total, "resume after root " + std::to_string(stop));
        }
        c.notes << "n=6 values are reference constants only";
    });

    criterion(4, "k_min n=2..7", [](Check& c) {
        const int expected[] = {2, 3, 4, 4, 4, 5};
        for (int n = 2; n <= 7; ++n) c.equal(k_min(n), expected[n - 2], "k_min(" + std::to_string(n) + ")");
        c.notes << "2 3 4 4 4 5";
    });

    criterion(5, "max reduced sizes n=1..5", [](Check& c) {
        const std::size_t expected[] = {1, 2, 4, 7, 13};
        for (int n = 1; n <= 5; ++n) {
            const auto t0 = Clock::now();
            const MaxReducedResult r = max_reduced_size(n);
            c.within(seconds_since(t0), 600.0, "n=" + std::to_string(n));
            c.equal(r.max_size, expected[n - 1], "n=" + std::to_string(n));
            if (n == 5) c.notes << "maximisers at n=5: " << r.witness_count;
        }
    });

    criterion(6, "published witnesses n=6 (24) and n=7 (41, orbit 420)", [](Check& c) {
        const auto t0 = Clock::now();
        const WitnessReport six = verify_witness(ColumnTuple(6, witness_n6()));
        const WitnessReport seven = verify_witness(ColumnTuple(7, witness_n7()));
        c.within(seconds_since(t0), 60.0, "witness checks");
        c.expect(six.column_reduced && six.t1, "n=6 witness");
        c.equal(six.size, std::size_t{24}, "n=6 size");
        c.expect(seven.column_reduced && seven.t1, "n=7 witness");
        c.equal(seven.size, std::size_t{41}, "n=7 size");
        c.equal(seven.orbit_size, std::size_t{420}, "n=7 orbit");
        c.notes << "n=6 witness orbit size " << six.orbit_size;
    });

    criterion(7, "standard context of L_n", [](Check& c) {
        for (int n = 3; n <= 7; ++n) {
            const FormalContext ctx = ln_standard_context(n);
            const std::uint64_t rows = (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n) - 2;
            const std::uint64_t cols = static_cast<std::uint64_t>(n) * ((std::uint64_t{1} << (n - 1)) - static_cast<std::uint64_t>(n));
            c.equal(ctx.rows(), rows, "rows n=" + std::to_string(n));
            c.equal(ctx.cols(), cols, "cols n=" + std::to_string(n));
        }
        const FormalContext ln4 = ln_standard_context(4);
        c.expect(ln4.rows() == 10 && ln4.cols() == 16, "10 x 16 at n=4");
        const auto t0 = Clock::now();
        c.equal(count_closed_sets(ln_standard_context(3)), BigCount(8), "closed sets n=3");
        c.equal(count_closed_sets(ln4), BigCount(545), "closed sets n=4");
        c.within(seconds_since(t0), 10.0, "closed sets n=3,4");
        c.equal(count_closed_sets(ln_standard_context(5)), BigCount(702525), "closed sets n=5");
        c.notes << "closed sets 8, 545, 702525";
    });

    criterion(8, "f_AC values and estimated breadths", [](Check& c) {
        c.equal(f_ac(56, 11), BigCount(44872116214ULL), "f_ac(56,11)");
        c.equal(f_ac(56, 12), BigCount(193774331494ULL), "f_ac(56,12)");
        const int est_l[] = {3, 5, 7, 11};
        const int est_m[] = {3, 5, 7, 10};
        for (int n = 3; n <= 6; ++n) {
            const int jl = static_cast<int>(ln_atom_count(n).to_u64());
            const int jm = (1 << n) - 1;
            c.equal(estimated_breadth(jl, *reference_value("A334255", n)), est_l[n - 3], "L_" + std::to_string(n));
            c.equal(estimated_breadth(jm, *reference_value("A193674", n)), est_m[n - 3], "M_" + std::to_string(n));
        }
        c.notes << "L: 3 5 7 11, M: 3 5 7 10";
    });

    criterion(9, "breadth of L_3, L_4 (and L_5)", [](Check& c) {
        const auto t0 = Clock::now();
        c.equal(breadth(ln_standard_context(3)).k, std::size_t{3}, "L_3");
        const BreadthResult l4 = breadth(ln_standard_context(4), {.count_embeddings = true});
        c.within(seconds_since(t0), 300.0, "L_3 and L_4");
        c.equal(l4.k, std::size_t{7}, "L_4 breadth");
        c.equal(*l4.embeddings, BigCount(80), "L_4 embeddings");
        const BreadthResult l5 = breadth(ln_standard_context(5), {.count_embeddings = true});
        c.equal(l5.k, std::size_t{13}, "L_5 breadth");
        c.equal(*l5.embeddings, BigCount(10980), "L_5 embeddings");
        c.notes << "3; 7 (80 embeddings); 13 (" << *l5.embeddings << " embeddings)";
    });

    criterion(10, "counts below |M_n| - 2^n - n", [](Check& c) {
        for (int n = 2; n <= 5; ++n) {
            const BigCount count = count_families(n, CountMode::strict).total;
            c.expect(count <= upper_bound_Ln(n), "n=" + std::to_string(n));
        }
        c.expect(*reference_value("A334255", 6) <= upper_bound_Ln(6), "n=6 (table value)");
        c.notes << "n=6: " << *reference_value("A334255", 6) << " <= " << upper_bound_Ln(6);
    });

    criterion(11, "property suites (1000 random instances each)", [](Check& c) {
        std::mt19937_64 g(0xacce97);
        for (int i = 0; i < kInstances; ++i) {
            const FormalContext ctx = random_context(g, 6, 8);
            const std::size_t n = ctx.rows();
            const std::size_t m = ctx.cols();
            const FormalContext co = complement(ctx);
            bool t1_hull = true;
            bool t1_meet = true;
            for (Word a = 0; a <= full_mask(static_cast<int>(n)); ++a) {
                const BitVec A = word_bits(n, a);
                const BitVec A2 = A | word_bits(n, g() & full_mask(static_cast<int>(n)));
                const BitVec B = word_bits(m, g() & full_mask(static_cast<int>(m)));
                const BitVec B2 = B | word_bits(m, g() & full_mask(static_cast<int>(m)));
                // adjunction law
                c.expect(up(ctx, A).is_subset_of(B) == A.is_subset_of(down(ctx, B)), "adjunction law");
                // monotone, extensive / contractive, absorption, idempotent
                c.expect(up(ctx, A).is_subset_of(up(ctx, A2)) && down(ctx, B).is_subset_of(down(ctx, B2)), "monotone");
                c.expect(A.is_subset_of(row_hull(ctx, A)) && column_kernel(ctx, B).is_subset_of(B), "hull/kernel");
                c.expect(up(ctx, row_hull(ctx, A)) == up(ctx, A) && down(ctx, column_kernel(ctx, B)) == down(ctx, B),
                         "absorption");
                c.expect(row_hull(ctx, row_hull(ctx, A)) == row_hull(ctx, A) &&
                             column_kernel(ctx, column_kernel(ctx, B)) == column_kernel(ctx, B),
                         "idempotent");
                // complement duality
                c.expect((row_hull(ctx, A) == A) == (prime_cols(co, prime_rows(co, A)) == A), "complement duality");
            }
            for (std::size_t r = 0; r < n; ++r) {
                const BitVec single = BitVec::from_indices(n, {r});
                t1_hull = t1_hull && row_hull(ctx, single) == single;
                BitVec meet = ctx.all_rows();
                for (const auto& col : ctx.columns()) {
                    if (col.test(r)) meet &= col;
                }
                t1_meet = t1_meet && meet == single;
            }
            c.expect(is_t1_rows(ctx) == t1_hull && is_t1_rows(ctx) == t1_meet, "T1 equivalence");

            // NextClosure on up to 12 rows
            const int rows = std::uniform_int_distribution<int>(1, 12)(g);
            const FormalContext big = random_context(g, rows, 10);
            const int mrows = static_cast<int>(big.rows());
            const ClosureOracle f = row_polarity_closure(big);
            const Words closed = next_closure_all(f, mrows);
            bool ordered = true;
            for (std::size_t k = 1; k < closed.size(); ++k) ordered = ordered && lectic_less(closed[k - 1], closed[k]);
            c.expect(ordered, "lectic order");
            std::size_t brute = 0;
            for (Word s = 0; s <= full_mask(mrows); ++s) brute += f(s) == s ? 1 : 0;
            c.equal(closed.size(), brute, "NextClosure count");

            // phi closure axioms
            const int fn = std::uniform_int_distribution<int>(1, 6)(g);
            const MooreFamily fam = random_family(g, fn);
            const Word x = g() & full_mask(fn);
            const Word y = x | (g() & full_mask(fn));
            c.expect(is_subset_of(x, phi(fam, x)) && phi(fam, phi(fam, x)) == phi(fam, x) &&
                         is_subset_of(phi(fam, x), phi(fam, y)),
                     "phi closure axioms");
        }
        // standard-context reconstruction on atomic families
        int checked = 0;
        while (checked < kInstances) {
            const int fn = std::uniform_int_distribution<int>(1, 4)(g);
            const MooreFamily fam = random_family(g, fn);
            if (!is_atomic(fam)) continue;
            ++checked;
            const FormalContext sc = standard_context(build_lattice(fam));
            c.expect(is_reduced(sc), "standard context reduced");
            c.equal(count_closed_sets(sc), BigCount(fam.size()), "standard context reconstruction");
        }
    });

    std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
              << '\n';
    return failed_criteria == 0 ? 0 : 1;
}
