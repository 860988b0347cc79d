#include <fstream>
#include <sstream>

#include "atomlat/enumerator.hpp"
#include "atomlat/errors.hpp"
#include "json.hpp"

namespace atomlat {

namespace {

using nlohmann::json;

json count_to_json(BigCount c) {
    if (c.fits_u64()) return c.to_u64();
    return c.to_string();
}

BigCount count_from_json(const json& j) {
    if (j.is_string()) return BigCount::parse(j.get<std::string>());
    return BigCount(j.get<std::uint64_t>());
}

json partials_to_json(const std::map<std::uint64_t, BigCount>& per_root) {
    // Pairs rather than an object: root ranks are integers, JSON keys are not.
    json arr = json::array();
    for (const auto& [rank, c] : per_root) arr.push_back(json::array({rank, count_to_json(c)}));
    return arr;
}

std::map<std::uint64_t, BigCount> partials_from_json(const json& arr) {
    std::map<std::uint64_t, BigCount> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2) throw ParseError("per_root entries must be [rank, count] pairs", 1);
        const auto rank = item[0].get<std::uint64_t>();
        if (!out.emplace(rank, count_from_json(item[1])).second) {
            throw ParseError("duplicate root rank " + std::to_string(rank), 1);
        }
    }
    return out;
}

template <class F>
auto parse_guarded(std::string_view text, const char* what, F&& build) {
    try {
        return build(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid ") + what + " JSON: " + e.what(), 1);
    }
}

}  // namespace

std::string report_to_json(const CountReport& r) {
    json j;
    j["n"] = r.n;
    j["mode"] = to_string(r.mode);
    j["inequivalent"] = r.inequivalent;
    j["total"] = count_to_json(r.total);
    j["per_root"] = partials_to_json(r.per_root);
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["workers"] = r.workers;
    j["roots_total"] = r.roots_total;
    j["roots_completed"] = r.roots_completed;
    j["complete"] = r.complete;
    return j.dump();
}

CountReport report_from_json(std::string_view text) {
    return parse_guarded(text, "count report", [](const json& j) {
        CountReport r;
        r.n = j.at("n").get<int>();
        r.mode = parse_count_mode(j.at("mode").get<std::string>());
        r.inequivalent = j.at("inequivalent").get<bool>();
        r.total = count_from_json(j.at("total"));
        r.per_root = partials_from_json(j.at("per_root"));
        r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
        r.workers = j.at("workers").get<unsigned>();
        r.roots_total = j.at("roots_total").get<std::uint64_t>();
        r.roots_completed = j.at("roots_completed").get<std::uint64_t>();
        r.complete = j.at("complete").get<bool>();
        return r;
    });
}

std::string checkpoint_to_json(const Checkpoint& cp) {
    json j;
    j["version"] = Checkpoint::kVersion;
    j["n"] = cp.n;
    j["mode"] = to_string(cp.mode);
    j["inequivalent"] = cp.inequivalent;
    j["prune"] = cp.prune;
    j["roots_total"] = cp.roots_total;
    j["last_completed_root_index"] = cp.last_completed_root_index;
    j["per_root"] = partials_to_json(cp.per_root);
    return j.dump(1);
}

Checkpoint checkpoint_from_json(std::string_view text) {
    return parse_guarded(text, "checkpoint", [](const json& j) {
        const int version = j.at("version").get<int>();
        if (version != Checkpoint::kVersion) {
            throw ParseError("unsupported checkpoint version " + std::to_string(version), 1);
        }
        Checkpoint cp;
        cp.n = j.at("n").get<int>();
        cp.mode = parse_count_mode(j.at("mode").get<std::string>());
        cp.inequivalent = j.at("inequivalent").get<bool>();
        cp.prune = j.at("prune").get<bool>();
        cp.roots_total = j.at("roots_total").get<std::uint64_t>();
        cp.last_completed_root_index = j.at("last_completed_root_index").get<std::int64_t>();
        cp.per_root = partials_from_json(j.at("per_root"));
        return cp;
    });
}

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path) {
    // Write-then-rename so an interrupted write never leaves a truncated file.
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << checkpoint_to_json(cp) << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return checkpoint_from_json(buf.str());
}

}  // namespace atomlat
