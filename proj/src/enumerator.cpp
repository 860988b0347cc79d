#include "atomlat/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "atomlat/adjunction.hpp"
#include "atomlat/context.hpp"
#include "atomlat/errors.hpp"
#include "atomlat/moore.hpp"

namespace atomlat {

std::string to_string(CountMode mode) { return mode == CountMode::all ? "all" : "strict"; }

CountMode parse_count_mode(std::string_view text) {
    if (text == "all") return CountMode::all;
    if (text == "strict") return CountMode::strict;
    throw UsageError("mode must be 'all' or 'strict', got '" + std::string(text) + "'");
}

// ---- ColumnTuple ---------------------------------------------------------------

ColumnTuple::ColumnTuple(int n, std::vector<Word> cols) : n_(n), cols_(std::move(cols)) {
    if (n < 1 || n > kMaxGround) throw UsageError("ground set size must be in [1, 32]");
    const Word hi = full_mask(n) - 1;
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (cols_[i] < 1 || cols_[i] > hi) {
            throw UsageError("column " + std::to_string(cols_[i]) + " outside [1, " + std::to_string(hi) +
                             "] for n = " + std::to_string(n));
        }
        if (i > 0 && cols_[i - 1] >= cols_[i]) throw UsageError("columns must be strictly increasing");
    }
}

std::vector<Word> parse_integer_list(std::string_view text) {
    std::vector<Word> out;
    std::size_t i = 0;
    std::size_t token = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '{' || c == '}'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        ++token;
        const std::string_view tok = text.substr(i, j - i);
        BigCount v;
        try {
            v = BigCount::parse(tok);
        } catch (const ParseError&) {
            throw ParseError("invalid integer '" + std::string(tok) + "'", token);
        }
        if (!v.fits_u64()) throw ParseError("integer '" + std::string(tok) + "' too large", token);
        out.push_back(v.to_u64());
        i = j;
    }
    return out;
}

ColumnTuple ColumnTuple::parse(std::string_view text, int n) {
    std::vector<Word> cols = parse_integer_list(text);
    for (std::size_t i = 1; i < cols.size(); ++i) {
        if (cols[i - 1] >= cols[i]) {
            throw ParseError("tuple not strictly increasing at value " + std::to_string(cols[i]), i + 1);
        }
    }
    if (n == 0) {
        Word all = 0;
        for (Word c : cols) all |= c;
        n = all == 0 ? 1 : std::bit_width(all);
    }
    return ColumnTuple(n, std::move(cols));
}

std::string ColumnTuple::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(cols_[i]);
    }
    return out + ")";
}

// ---- predicates ------------------------------------------------------------------

bool is_intersection_free(int n, std::span<const Word> cols) {
    const Word full = full_mask(n);
    for (std::size_t u = 0; u < cols.size(); ++u) {
        Word meet = full;
        for (std::size_t v = 0; v < cols.size(); ++v) {
            if (v == u) continue;
            if (cols[v] == cols[u]) return false;
            if (is_subset_of(cols[u], cols[v])) meet &= cols[v];
        }
        if (meet == cols[u]) return false;
    }
    return true;
}

bool is_t1_tuple(int n, std::span<const Word> cols) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool separated = std::any_of(cols.begin(), cols.end(),
                                               [&](Word c) { return ((c >> i) & 1U) && !((c >> j) & 1U); });
            if (!separated) return false;
        }
    }
    return true;
}

std::vector<Word> permute_tuple(std::span<const Word> cols, const Permutation& p) {
    std::vector<Word> out;
    out.reserve(cols.size());
    for (Word c : cols) out.push_back(permute_bits(c, p));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_canonic(const ColumnTuple& t) {
    for (const auto& p : all_permutations(t.ground())) {
        const auto image = permute_tuple(t.cols(), p);
        if (std::lexicographical_compare(image.begin(), image.end(), t.cols().begin(), t.cols().end())) return false;
    }
    return true;
}

std::vector<ColumnTuple> orbit(const ColumnTuple& t) {
    std::set<std::vector<Word>> images;
    for (const auto& p : all_permutations(t.ground())) images.insert(permute_tuple(t.cols(), p));
    std::vector<ColumnTuple> out;
    out.reserve(images.size());
    for (const auto& img : images) out.emplace_back(t.ground(), img);
    return out;
}

// ---- search engine -----------------------------------------------------------------

namespace {

constexpr int kMaxCountingN = 8;

/// images[p * (full + 1) + s] = image of subset s under permutation p.
/// Permutation 0 is the identity.
struct PermTable {
    std::size_t stride = 0;
    std::size_t count = 0;
    std::vector<std::uint8_t> images;

    explicit PermTable(int n) {
        const auto perms = all_permutations(n);
        stride = std::size_t{1} << n;
        count = perms.size();
        images.resize(count * stride);
        for (std::size_t p = 0; p < count; ++p) {
            for (std::size_t s = 0; s < stride; ++s) {
                images[p * stride + s] = static_cast<std::uint8_t>(permute_bits(s, perms[p]));
            }
        }
    }
};

struct SearchSpec {
    int n = 0;
    bool canonic_only = false;
    bool prune = false;
    bool track_max = false;
};

/// Depth-first extension of one root. Column-reducedness is maintained
/// incrementally: for each column we keep the intersection of its strict
/// supersets (meet_), and for each element i the set of elements j that
/// some column separates from i (sep_).
class TupleSearch {
public:
    TupleSearch(const SearchSpec& spec, const PermTable* perms)
        : spec_(spec), perms_(perms), full_(full_mask(spec.n)), last_(full_ - 1) {
        cap_ = static_cast<std::size_t>(last_);
        cols_.reserve(cap_);
        meet_.assign((cap_ + 1) * (cap_ + 1), 0);
        sep_.assign((cap_ + 1) * static_cast<std::size_t>(spec.n), 0);
        t1_.assign(cap_ + 1, 0);
        scratch_.resize(cap_);
    }

    /// Returns the number of counted nodes in the subtree of `root`
    /// (0 if the root is not intersection-free).
    std::uint64_t run_root(std::span<const Word> root) {
        cols_.clear();
        t1_[0] = spec_.n <= 1 ? 1 : 0;
        count_ = 0;
        for (Word c : root) {
            if (!push(c)) return 0;
        }
        explore();
        return count_;
    }

    /// Visits every intersection-free tuple reachable by extending the empty tuple.
    void run_all(const std::function<void(std::span<const Word>, bool)>& visit) {
        cols_.clear();
        t1_[0] = spec_.n <= 1 ? 1 : 0;
        visit_ = &visit;
        explore_children();
        visit_ = nullptr;
    }

    std::size_t best_size() const noexcept { return best_size_; }
    const std::vector<Word>& best_witness() const noexcept { return best_witness_; }
    std::uint64_t best_count() const noexcept { return best_count_; }

private:
    bool push(Word c) {
        const std::size_t d = cols_.size();
        const Word* meet_in = &meet_[d * (cap_ + 1)];
        Word* meet_out = &meet_[(d + 1) * (cap_ + 1)];
        for (std::size_t i = 0; i < d; ++i) {
            Word m = meet_in[i];
            const Word u = cols_[i];
            if ((u & ~c) == 0) {  // u is a strict subset of c (columns are distinct)
                m &= c;
                if (m == u) return false;
            }
            meet_out[i] = m;
        }
        meet_out[d] = full_;

        const int n = spec_.n;
        const Word* sep_in = &sep_[d * static_cast<std::size_t>(n)];
        Word* sep_out = &sep_[(d + 1) * static_cast<std::size_t>(n)];
        const Word outside = full_ & ~c;
        for (int i = 0; i < n; ++i) sep_out[i] = sep_in[i] | (((c >> i) & 1U) ? outside : 0);

        if (t1_[d]) {
            t1_[d + 1] = 1;
        } else {
            bool t1 = true;
            for (int i = 0; i < n && t1; ++i) t1 = (sep_out[i] | (Word{1} << i)) == full_;
            t1_[d + 1] = t1 ? 1 : 0;
        }
        cols_.push_back(c);
        return true;
    }

    void pop() { cols_.pop_back(); }

    /// No larger column can separate some still-comparable pair of rows.
    bool t1_unreachable() const {
        const std::size_t d = cols_.size();
        const int n = spec_.n;
        const Word* sep = &sep_[d * static_cast<std::size_t>(n)];
        Word missing = 0;
        for (int i = 0; i < n; ++i) missing |= full_ & ~(sep[i] | (Word{1} << i));
        if (missing == 0) return false;
        // The largest column containing i but not j is full ^ bit(j); the
        // binding constraint comes from the highest missing j.
        const Word hardest = full_ ^ (Word{1} << (std::bit_width(missing) - 1));
        return hardest <= cols_.back();
    }

    bool canonic() {
        const std::size_t d = cols_.size();
        const Word first = cols_[0];
        for (std::size_t p = 1; p < perms_->count; ++p) {
            const std::uint8_t* img = &perms_->images[p * perms_->stride];
            Word smallest = ~Word{0};
            for (std::size_t k = 0; k < d; ++k) smallest = std::min<Word>(smallest, img[cols_[k]]);
            if (smallest < first) return false;
            if (smallest > first) continue;
            for (std::size_t k = 0; k < d; ++k) scratch_[k] = img[cols_[k]];
            std::sort(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(d));
            if (std::lexicographical_compare(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(d),
                                             cols_.begin(), cols_.end())) {
                return false;
            }
        }
        return true;
    }

    void explore() {
        const std::size_t d = cols_.size();
        const bool t1 = t1_[d] != 0;
        if (visit_ != nullptr) (*visit_)(cols_, t1);
        if (t1) {
            if (!spec_.canonic_only || canonic()) {
                ++count_;
                if (spec_.track_max) {
                    if (d > best_size_) {
                        best_size_ = d;
                        best_count_ = 1;
                        best_witness_ = cols_;
                    } else if (d == best_size_) {
                        ++best_count_;
                    }
                }
            }
        } else if (spec_.prune && t1_unreachable()) {
            return;
        }
        explore_children();
    }

    void explore_children() {
        const Word start = cols_.empty() ? 1 : cols_.back() + 1;
        for (Word c = start; c <= last_; ++c) {
            if (push(c)) {
                explore();
                pop();
            }
        }
    }

    SearchSpec spec_;
    const PermTable* perms_;
    Word full_;
    Word last_;
    std::size_t cap_ = 0;
    std::vector<Word> cols_;
    std::vector<Word> meet_;
    std::vector<Word> sep_;
    std::vector<std::uint8_t> t1_;
    std::vector<Word> scratch_;
    const std::function<void(std::span<const Word>, bool)>* visit_ = nullptr;

    std::uint64_t count_ = 0;
    std::size_t best_size_ = 0;
    std::vector<Word> best_witness_;
    std::uint64_t best_count_ = 0;
};

/// binom(N, k) tables for unranking root combinations.
class ComboRanker {
public:
    ComboRanker(std::uint64_t values, int k) : values_(values), k_(k) {
        table_.assign((values + 1) * static_cast<std::uint64_t>(k + 1), 0);
        for (std::uint64_t m = 0; m <= values; ++m) {
            for (int j = 0; j <= k; ++j) table_[m * static_cast<std::uint64_t>(k + 1) + static_cast<std::uint64_t>(j)] =
                binom(static_cast<int>(m), j).to_u64();
        }
    }

    std::uint64_t total() const { return choose(values_, k_); }

    /// Lexicographic unranking over values 1..N.
    std::vector<Word> unrank(std::uint64_t rank) const {
        std::vector<Word> combo;
        Word v = 1;
        for (int i = 0; i < k_; ++i) {
            for (;; ++v) {
                const std::uint64_t with_v = choose(values_ - v, k_ - i - 1);
                if (rank < with_v) break;
                rank -= with_v;
            }
            combo.push_back(v++);
        }
        return combo;
    }

    /// Advances to the lexicographic successor; false after the last one.
    bool advance(std::vector<Word>& combo) const {
        const int k = k_;
        for (int i = k - 1; i >= 0; --i) {
            const Word limit = values_ - static_cast<Word>(k - 1 - i);
            if (combo[static_cast<std::size_t>(i)] < limit) {
                ++combo[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    }

private:
    std::uint64_t choose(std::uint64_t m, int j) const {
        if (j < 0 || static_cast<std::uint64_t>(j) > m) return 0;
        return table_[m * static_cast<std::uint64_t>(k_ + 1) + static_cast<std::uint64_t>(j)];
    }

    std::uint64_t values_;
    int k_;
    std::vector<std::uint64_t> table_;
};

struct SearchOutcome {
    std::map<std::uint64_t, BigCount> per_root;
    std::uint64_t roots_total = 0;
    std::uint64_t roots_completed = 0;
    std::size_t best_size = 0;
    std::vector<Word> best_witness;
    std::uint64_t best_count = 0;
    double elapsed = 0.0;
};

BigCount sum_of(const std::map<std::uint64_t, BigCount>& per_root) {
    BigCount total{0};
    for (const auto& [rank, c] : per_root) total += c;
    return total;
}

SearchOutcome run_search(const SearchSpec& spec, const CountOptions& options, CountMode mode, bool inequivalent) {
    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count(); };

    const int n = spec.n;
    const Word values = full_mask(n) - 1;
    const int k = k_min(n);
    const ComboRanker ranker(values, k);
    SearchOutcome out;
    out.roots_total = ranker.total();

    std::uint64_t start = 0;
    if (options.resume) {
        const Checkpoint& cp = *options.resume;
        if (cp.n != n || cp.mode != mode || cp.inequivalent != inequivalent || cp.prune != spec.prune ||
            cp.roots_total != out.roots_total) {
            throw UsageError("checkpoint does not match the requested run");
        }
        start = static_cast<std::uint64_t>(cp.last_completed_root_index + 1);
        for (const auto& [rank, c] : cp.per_root) {
            if (rank >= start) throw UsageError("checkpoint records a partial beyond its completed prefix");
            out.per_root.emplace(rank, c);
        }
    }
    const std::uint64_t stop = std::min(out.roots_total, options.stop_at_root.value_or(out.roots_total));
    const std::uint64_t span = stop > start ? stop - start : 0;
    const unsigned workers = std::max(1U, options.workers);
    const std::uint64_t claim = std::clamp<std::uint64_t>(span / (std::uint64_t{workers} * 64), 1, 256);
    const std::uint64_t blocks = (span + claim - 1) / claim;
    const std::uint64_t every = std::max<std::uint64_t>(1, options.checkpoint_every);

    std::unique_ptr<PermTable> perms;
    if (spec.canonic_only) perms = std::make_unique<PermTable>(n);

    std::mutex merge;
    std::vector<std::uint8_t> block_done(blocks, 0);
    std::uint64_t done_blocks_prefix = 0;
    std::uint64_t watermark = start;  // all ranks < watermark are finished
    std::uint64_t next_mark = start + every;
    std::atomic<std::uint64_t> next_block{0};
    std::exception_ptr failure;

    auto checkpoint_now = [&]() {
        Checkpoint cp;
        cp.n = n;
        cp.mode = mode;
        cp.inequivalent = inequivalent;
        cp.prune = spec.prune;
        cp.roots_total = out.roots_total;
        cp.last_completed_root_index = static_cast<std::int64_t>(watermark) - 1;
        for (const auto& [rank, c] : out.per_root) {
            if (rank < watermark) cp.per_root.emplace(rank, c);
        }
        return cp;
    };

    auto work = [&] {
        try {
            TupleSearch search(spec, perms.get());
            std::vector<std::pair<std::uint64_t, std::uint64_t>> results;
            for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
                const std::uint64_t lo = start + b * claim;
                const std::uint64_t hi = std::min(stop, lo + claim);
                results.clear();
                std::vector<Word> combo = ranker.unrank(lo);
                for (std::uint64_t r = lo; r < hi; ++r) {
                    const std::uint64_t c = search.run_root(combo);
                    if (c != 0) results.emplace_back(r, c);
                    if (r + 1 < hi) ranker.advance(combo);
                }
                std::lock_guard lock(merge);
                for (const auto& [r, c] : results) out.per_root.emplace(r, BigCount(c));
                block_done[b] = 1;
                while (done_blocks_prefix < blocks && block_done[done_blocks_prefix]) {
                    ++done_blocks_prefix;
                    watermark = std::min(stop, start + done_blocks_prefix * claim);
                }
                while (watermark >= next_mark) {
                    next_mark += every;
                    if (options.progress) {
                        options.progress(Progress{watermark, out.roots_total, sum_of(out.per_root), elapsed()});
                    }
                    if (options.checkpoint_path) save_checkpoint(checkpoint_now(), *options.checkpoint_path);
                }
            }
            if (spec.track_max && search.best_size() > 0) {
                std::lock_guard lock(merge);
                if (search.best_size() > out.best_size) {
                    out.best_size = search.best_size();
                    out.best_count = search.best_count();
                    out.best_witness = search.best_witness();
                } else if (search.best_size() == out.best_size) {
                    out.best_count += search.best_count();
                    out.best_witness = std::min(out.best_witness, search.best_witness());
                }
            }
        } catch (...) {
            std::lock_guard lock(merge);
            if (!failure) failure = std::current_exception();
            next_block = blocks;
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    watermark = stop;
    out.roots_completed = watermark;
    if (options.checkpoint_path) save_checkpoint(checkpoint_now(), *options.checkpoint_path);
    out.elapsed = elapsed();
    return out;
}

void check_counting_n(int n, bool force) {
    if (n < 0) throw UsageError("n must be non-negative");
    if (n > kMaxCountingN) throw UsageError("counting supports n <= 8");
    if (n > 7 && !force) throw ResourceError("n > 7 is far beyond desk scale; pass force to run anyway");
}

CountReport count_impl(int n, CountMode mode, const CountOptions& options, bool inequivalent) {
    check_counting_n(n, options.force);
    if (options.workers == 0) throw UsageError("worker count must be positive");
    CountReport report;
    report.n = n;
    report.mode = mode;
    report.inequivalent = inequivalent;
    report.workers = options.workers;
    if (n <= 1) {
        // The DFS needs n > 1. On [1] the T1 families are {{1}} and {∅,{1}};
        // only the latter is strict. On [0] the single family {∅} is strict.
        const std::uint64_t value = (n == 1 && mode == CountMode::all) ? 2 : 1;
        report.total = value;
        report.per_root.emplace(0, BigCount(value));
        report.roots_total = 1;
        report.roots_completed = 1;
        return report;
    }
    SearchSpec spec{n, inequivalent, options.prune_unseparable, false};
    const SearchOutcome outcome = run_search(spec, options, mode, inequivalent);
    report.per_root = outcome.per_root;
    report.total = sum_of(report.per_root);
    report.roots_total = outcome.roots_total;
    report.roots_completed = outcome.roots_completed;
    report.complete = outcome.roots_completed == outcome.roots_total;
    report.elapsed_seconds = outcome.elapsed;
    return report;
}

}  // namespace

CountReport count_families(int n, CountMode mode, const CountOptions& options) {
    return count_impl(n, mode, options, false);
}

CountReport count_inequivalent(int n, CountMode mode, const CountOptions& options) {
    return count_impl(n, mode, options, true);
}

Checkpoint make_checkpoint(const CountReport& report, bool prune) {
    Checkpoint cp;
    cp.n = report.n;
    cp.mode = report.mode;
    cp.inequivalent = report.inequivalent;
    cp.prune = prune;
    cp.roots_total = report.roots_total;
    cp.last_completed_root_index = static_cast<std::int64_t>(report.roots_completed) - 1;
    for (const auto& [rank, c] : report.per_root) {
        if (rank < report.roots_completed) cp.per_root.emplace(rank, c);
    }
    return cp;
}

MaxReducedResult max_reduced_size(int n, unsigned workers) {
    if (n < 1) throw UsageError("max_reduced_size requires n >= 1");
    if (n >= 7) throw ResourceError("exhaustive maximum search for n >= 7 is out of desk scale; verify witnesses instead");
    MaxReducedResult result;
    result.n = n;
    if (n == 1) {
        // [1] admits only the empty column: {∅} cannot be an intersection of other columns.
        result.max_size = 1;
        result.witness = {0};
        result.witness_count = 1;
        return result;
    }
    CountOptions options;
    options.workers = workers;
    SearchSpec spec{n, false, false, true};
    const SearchOutcome outcome = run_search(spec, options, CountMode::all, false);
    result.max_size = outcome.best_size;
    result.witness = outcome.best_witness;
    result.witness_count = outcome.best_count;
    return result;
}

WitnessReport verify_witness(const ColumnTuple& t) {
    WitnessReport r;
    r.n = t.ground();
    r.size = t.size();
    const FormalContext ctx = FormalContext::from_words(t.ground(), t.cols());
    r.column_reduced = is_column_reduced(ctx);
    r.t1 = is_t1_tuple(t.ground(), t.cols());
    const MooreFamily fam = generate_family(t.ground(), t.cols());
    r.strict = is_strict(fam);
    r.family_size = fam.size();
    r.orbit_size = orbit(t).size();
    r.canonic = is_canonic(t);
    return r;
}

void visit_intersection_free(int n, const std::function<void(std::span<const Word>, bool)>& visit) {
    if (n < 1 || n > 5) throw UsageError("visit_intersection_free supports 1 <= n <= 5");
    TupleSearch search(SearchSpec{n, false, false, false}, nullptr);
    search.run_all(visit);
}

}  // namespace atomlat
