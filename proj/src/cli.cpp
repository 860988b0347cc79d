#include "atomlat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atomlat/adjunction.hpp"
#include "atomlat/cxt.hpp"
#include "atomlat/enumerator.hpp"
#include "atomlat/errors.hpp"
#include "atomlat/lattice.hpp"
#include "atomlat/moore.hpp"
#include "atomlat/next_closure.hpp"
#include "atomlat/reference.hpp"
#include "json.hpp"

namespace atomlat {

namespace {

constexpr const char* kWorkersEnv = "ATOMLAT_WORKERS";

unsigned default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

std::string labels_of(const BitVec& set, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i : set.indices()) {
        if (!out.empty()) out += ' ';
        out += labels[i];
    }
    return out.empty() ? "-" : out;
}

const char* sequence_for(CountMode mode, bool inequivalent) {
    if (inequivalent) return mode == CountMode::strict ? "A235604" : "A355517";
    return mode == CountMode::strict ? "A334255" : "A334254";
}

// ---- commands --------------------------------------------------------------------

struct CountArgs {
    int n = -1;
    std::string mode = "all";
    bool inequivalent = false;
    unsigned workers = 0;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 1000;
    bool resume = false;
    std::string format = "text";
    bool expect = false;
    bool force = false;
    bool prune = false;
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    const CountMode mode = parse_count_mode(a.mode);
    if (a.n < 0) throw UsageError("--n must be non-negative");
    if (a.n > 6 && !a.force) {
        throw ResourceError("n = " + std::to_string(a.n) + " is a multi-day run or worse; pass --force to start it");
    }
    CountOptions options;
    options.workers = a.workers != 0 ? a.workers : default_workers();
    options.force = a.force;
    options.prune_unseparable = a.prune;
    options.checkpoint_every = a.checkpoint_every;
    if (!a.checkpoint.empty()) {
        options.checkpoint_path = a.checkpoint;
        if (a.resume && std::filesystem::exists(a.checkpoint)) options.resume = load_checkpoint(a.checkpoint);
    } else if (a.resume) {
        throw UsageError("--resume needs --checkpoint");
    }
    options.progress = [&err](const Progress& p) {
        err << "progress " << p.roots_completed << "/" << p.roots_total << " roots, partial " << p.partial_total
            << ", " << std::fixed << std::setprecision(1) << p.elapsed_seconds << "s\n";
    };

    const CountReport report =
        a.inequivalent ? count_inequivalent(a.n, mode, options) : count_families(a.n, mode, options);

    if (a.format == "json") {
        out << report_to_json(report) << '\n';
    } else if (a.format == "csv") {
        out << "n,mode,inequivalent,total,roots,elapsed_seconds,workers\n"
            << report.n << ',' << to_string(report.mode) << ',' << (report.inequivalent ? 1 : 0) << ','
            << report.total << ',' << report.roots_total << ',' << report.elapsed_seconds << ',' << report.workers
            << '\n';
    } else {
        out << "n=" << report.n << " mode=" << to_string(report.mode)
            << (report.inequivalent ? " inequivalent" : "") << " total=" << report.total
            << " roots=" << report.roots_total << " workers=" << report.workers << " elapsed=" << std::fixed
            << std::setprecision(3) << report.elapsed_seconds << "s\n";
    }

    if (a.expect) {
        const char* seq = sequence_for(mode, a.inequivalent);
        const auto expected = reference_value(seq, a.n);
        if (!expected) throw UsageError(std::string("no reference value for ") + seq + " at n = " + std::to_string(a.n));
        if (*expected != report.total) {
            err << "MISMATCH " << seq << "(" << a.n << "): expected " << *expected << ", got " << report.total << '\n';
            return kExitFail;
        }
        err << "OK " << seq << "(" << a.n << ") = " << report.total << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& tuple_text, const std::string& file, int n, const std::string& format,
               std::ostream& out) {
    if (tuple_text.empty() == file.empty()) throw UsageError("give exactly one of a tuple or --file");
    const std::string text = file.empty() ? tuple_text : read_file(file);
    const std::vector<Word> values = parse_integer_list(text);
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] >= values[i]) {
            throw ParseError("tuple not strictly increasing at value " + std::to_string(values[i]), i + 1);
        }
    }
    if (n == 0) {
        Word all = 0;
        for (Word x : values) all |= x;
        n = std::max(1, static_cast<int>(std::bit_width(all)));
    }
    if (n > kMaxGround) throw UsageError("ground set size must be at most 32");
    // An out-of-range column is a failed witness, not a usage error.
    const Word hi = full_mask(n) - 1;
    for (Word x : values) {
        if (x < 1 || x > hi) {
            out << "FAIL column " << x << " is not a nonempty proper subset of [" << n << "]\n";
            return kExitFail;
        }
    }
    const ColumnTuple t(n, values);
    const WitnessReport r = verify_witness(t);
    if (format == "json") {
        nlohmann::json j;
        j["n"] = r.n;
        j["size"] = r.size;
        j["column_reduced"] = r.column_reduced;
        j["t1"] = r.t1;
        j["strict"] = r.strict;
        j["family_size"] = r.family_size;
        j["orbit_size"] = r.orbit_size;
        j["canonic"] = r.canonic;
        j["passed"] = r.passed();
        out << j.dump() << '\n';
    } else {
        out << (r.passed() ? "PASS" : "FAIL") << " n=" << r.n << " size=" << r.size
            << " column_reduced=" << r.column_reduced << " t1=" << r.t1 << " strict=" << r.strict
            << " family_size=" << r.family_size << " orbit_size=" << r.orbit_size << " canonic=" << r.canonic
            << '\n';
    }
    return r.passed() ? kExitOk : kExitFail;
}

FormalContext context_source(int ln, const std::string& cxt) {
    if ((ln != 0) == !cxt.empty()) throw UsageError("give exactly one of --ln or --cxt");
    return ln != 0 ? ln_standard_context(ln) : load_cxt(cxt);
}

int cmd_bounds(int n, std::ostream& out) {
    if (n < 2 || n > 7) throw UsageError("bounds supports 2 <= n <= 7");
    out << "k_min(" << n << ") = " << k_min(n) << '\n';
    const int j_l = static_cast<int>(ln_atom_count(n).to_u64());
    const int j_m = static_cast<int>((std::uint64_t{1} << n) - 1);
    out << "|J(L_" << n << ")| = " << j_l << "\n|J(M_" << n << ")| = " << j_m << '\n';
    if (const auto size = reference_value("A334255", n)) {
        const int k = estimated_breadth(j_l, *size);
        out << "|L_" << n << "| = " << size->to_grouped_string() << '\n';
        out << "f_AC(" << j_l << "," << k << ") = " << f_ac(j_l, k).to_grouped_string() << '\n';
        out << "f_AC(" << j_l << "," << k + 1 << ") = " << f_ac(j_l, k + 1).to_grouped_string() << '\n';
        out << "estimated breadth of L_" << n << " = " << k << '\n';
    }
    if (const auto size = reference_value("A193674", n)) {
        out << "|M_" << n << "| = " << size->to_grouped_string() << '\n';
        out << "estimated breadth of M_" << n << " = " << estimated_breadth(j_m, *size) << '\n';
        out << "upper bound |M_n| - 2^n - n = " << upper_bound_Ln(n).to_grouped_string() << '\n';
    }
    return kExitOk;
}

int cmd_breadth(const FormalContext& ctx, bool embeddings, std::uint64_t budget, int max_k, std::ostream& out) {
    BreadthOptions options;
    options.count_embeddings = embeddings;
    options.node_budget = budget;
    if (max_k > 0) options.max_k = static_cast<std::size_t>(max_k);
    const BreadthResult r = breadth(ctx, options);
    out << "breadth " << (r.exact ? "" : ">= ") << r.k << '\n';
    if (r.embeddings) out << "embeddings " << (r.exact ? "" : ">= ") << *r.embeddings << '\n';
    out << "nodes " << r.nodes << '\n';
    return kExitOk;
}

int cmd_concepts(const FormalContext& ctx, std::ostream& out) {
    const auto concepts = upper_concepts(ctx);
    for (const auto& c : concepts) {
        out << "(" << labels_of(c.extent, ctx.row_labels()) << " | " << labels_of(c.intent, ctx.col_labels())
            << ")\n";
    }
    out << concepts.size() << " upper concepts\n";
    return kExitOk;
}

int cmd_maxfree(int n, unsigned workers, std::ostream& out) {
    const MaxReducedResult r = max_reduced_size(n, workers);
    out << "n=" << r.n << " max=" << r.max_size << " witness=(";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
    out << ") maximisers=" << r.witness_count << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate T1 Moore families and analyse their lattices", "atomlat"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count T1 Moore families on [n]");
    c->add_option("--n", count.n, "Ground set size")->required();
    c->add_option("--mode", count.mode, "all | strict")->check(CLI::IsMember({"all", "strict"}));
    c->add_flag("--inequivalent", count.inequivalent, "Count up to permutations of [n]");
    c->add_option("--workers", count.workers, std::string("Worker threads (default $") + kWorkersEnv + " or 1)")
        ->check(CLI::PositiveNumber);
    c->add_option("--checkpoint", count.checkpoint, "Checkpoint file, rewritten as roots complete");
    c->add_option("--checkpoint-every", count.checkpoint_every, "Roots between checkpoints")->check(CLI::PositiveNumber);
    c->add_flag("--resume", count.resume, "Continue from --checkpoint if it exists");
    c->add_option("--format", count.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_flag("--expect", count.expect, "Compare with the embedded reference table");
    c->add_flag("--force", count.force, "Allow n > 6");
    c->add_flag("--prune", count.prune, "Skip subtrees that can no longer become T1");

    std::string tuple_text;
    std::string tuple_file;
    std::string verify_format = "text";
    int verify_n = 0;
    auto* v = app.add_subcommand("verify", "Check that a column tuple is intersection-free and T1");
    v->add_option("tuple", tuple_text, "Comma separated columns, e.g. \"3,5,6\"");
    v->add_option("--file", tuple_file, "Read the tuple from a file");
    v->add_option("--n", verify_n, "Ground set size (default: from the largest column)");
    v->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    int ctx_ln = 0;
    std::string family_path;
    std::string out_path;
    auto* s = app.add_subcommand("stdctx", "Write a standard context in CXT format");
    s->add_option("--ln", ctx_ln, "Standard context of the lattice of T1 Moore families on [n]");
    s->add_option("--family", family_path, "Standard context of a Moore family given as JSON");
    s->add_option("--out", out_path, "Output file (default stdout)");

    int br_ln = 0;
    std::string br_cxt;
    bool br_embeddings = false;
    std::uint64_t br_budget = 0;
    int br_max_k = 0;
    auto* b = app.add_subcommand("breadth", "Largest embedded contranominal scale");
    b->add_option("--ln", br_ln, "Use the standard context of L_n");
    b->add_option("--cxt", br_cxt, "Use a context file");
    b->add_flag("--embeddings", br_embeddings, "Also count embeddings of maximal size");
    b->add_option("--budget", br_budget, "Node budget; exhaustion reports a lower bound");
    b->add_option("--max-k", br_max_k, "Stop at this size");

    int bounds_n = 0;
    auto* bo = app.add_subcommand("bounds", "Counting and breadth bounds for n");
    bo->add_option("--n", bounds_n, "Ground set size")->required();

    std::string concepts_cxt;
    auto* co = app.add_subcommand("concepts", "List upper concepts of a context");
    co->add_option("--cxt", concepts_cxt, "Context file")->required();

    int cl_ln = 0;
    std::string cl_cxt;
    unsigned cl_workers = 0;
    auto* cl = app.add_subcommand("closed", "Count formal concepts of a context");
    cl->add_option("--ln", cl_ln, "Use the standard context of L_n");
    cl->add_option("--cxt", cl_cxt, "Use a context file");
    cl->add_option("--workers", cl_workers, "Worker threads")->check(CLI::PositiveNumber);

    int max_n = 0;
    unsigned max_workers = 0;
    auto* mf = app.add_subcommand("maxfree", "Largest intersection-free T1 column tuple");
    mf->add_option("--n", max_n, "Ground set size")->required();
    mf->add_option("--workers", max_workers, "Worker threads")->check(CLI::PositiveNumber);

    auto* tb = app.add_subcommand("tables", "Print the embedded reference sequences as CSV");

    std::string lat_family;
    std::string lat_out;
    auto* la = app.add_subcommand("lattice", "Hasse diagram of a Moore family in DOT");
    la->add_option("--family", lat_family, "Moore family JSON")->required();
    la->add_option("--out", lat_out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed()) return cmd_count(count, out, err);
        if (v->parsed()) return cmd_verify(tuple_text, tuple_file, verify_n, verify_format, out);
        if (s->parsed()) {
            if ((ctx_ln != 0) == !family_path.empty()) throw UsageError("give exactly one of --ln or --family");
            const FormalContext ctx = ctx_ln != 0
                                          ? ln_standard_context(ctx_ln)
                                          : standard_context(build_lattice(family_from_json(read_file(family_path))));
            write_output(write_cxt(ctx), out_path, out);
            return kExitOk;
        }
        if (b->parsed()) return cmd_breadth(context_source(br_ln, br_cxt), br_embeddings, br_budget, br_max_k, out);
        if (bo->parsed()) return cmd_bounds(bounds_n, out);
        if (co->parsed()) return cmd_concepts(load_cxt(concepts_cxt), out);
        if (cl->parsed()) {
            const unsigned w = cl_workers != 0 ? cl_workers : default_workers();
            out << count_closed_sets(context_source(cl_ln, cl_cxt), w) << '\n';
            return kExitOk;
        }
        if (mf->parsed()) return cmd_maxfree(max_n, max_workers != 0 ? max_workers : default_workers(), out);
        if (tb->parsed()) {
            out << reference_csv();
            return kExitOk;
        }
        if (la->parsed()) {
            write_output(lattice_to_dot(build_lattice(family_from_json(read_file(lat_family)))), lat_out, out);
            return kExitOk;
        }
    } catch (const ResourceError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace atomlat
