#include "atomlat/cxt.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "atomlat/errors.hpp"

namespace atomlat {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::size_t parse_count(const std::string& line, std::size_t lineno) {
    std::size_t value = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) throw ParseError("expected a count, got '" + line + "'", lineno);
    return value;
}

}  // namespace

FormalContext read_cxt(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= lines.size()) throw ParseError(std::string("unexpected end of file, expected ") + what, pos + 1);
        return lines[pos++];
    };

    if (next("header 'B'") != "B") throw ParseError("CXT file must start with 'B'", 1);
    std::string name = next("name line");
    const std::size_t rows = parse_count(next("row count"), pos);
    const std::size_t cols = parse_count(next("column count"), pos);
    // Standard layout has an empty separator line here; files without it
    // have exactly 2*rows + cols lines left.
    if (pos < lines.size() && lines[pos].empty() && lines.size() - pos >= 2 * rows + cols + 1) ++pos;

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    for (std::size_t i = 0; i < rows; ++i) row_labels.push_back(next("row label"));
    for (std::size_t j = 0; j < cols; ++j) col_labels.push_back(next("column label"));

    std::vector<BitVec> row_sets;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string& line = next("incidence row");
        if (line.size() != cols) {
            throw ParseError("incidence row has " + std::to_string(line.size()) + " cells, expected " +
                                 std::to_string(cols),
                             pos);
        }
        BitVec r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            const char ch = line[j];
            if (ch == 'X' || ch == 'x') {
                r.set(j);
            } else if (ch != '.') {
                throw ParseError(std::string("invalid incidence character '") + ch + "'", pos);
            }
        }
        row_sets.push_back(std::move(r));
    }
    for (; pos < lines.size(); ++pos) {
        if (!lines[pos].empty()) throw ParseError("trailing content after incidence rows", pos + 1);
    }
    return FormalContext::from_rows(cols, row_sets, std::move(row_labels), std::move(col_labels), std::move(name));
}

std::string write_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.name() << "\n" << ctx.rows() << "\n" << ctx.cols() << "\n\n";
    for (const auto& l : ctx.row_labels()) out << l << "\n";
    for (const auto& l : ctx.col_labels()) out << l << "\n";
    for (std::size_t i = 0; i < ctx.rows(); ++i) {
        std::string line(ctx.cols(), '.');
        for (std::size_t j = 0; j < ctx.cols(); ++j) {
            if (ctx.incident(i, j)) line[j] = 'X';
        }
        out << line << "\n";
    }
    return out.str();
}

FormalContext load_cxt(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_cxt(buf.str());
}

void save_cxt(const FormalContext& ctx, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << write_cxt(ctx);
}

}  // namespace atomlat
