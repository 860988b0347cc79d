#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "atomlat/context.hpp"

namespace atomlat {

// Burmeister CXT format:
//
//   B
//   <name, may be empty>
//   <row count>
//   <column count>
//   <empty line>
//   <one row label per line>
//   <one column label per line>
//   <one line of '.'/'X' per row>
//
// The reader also accepts files without the empty line after the counts,
// lowercase 'x' and CRLF line endings. The writer always emits the layout
// above, so write(read(write(ctx))) is byte-identical.

FormalContext read_cxt(std::string_view text);
std::string write_cxt(const FormalContext& ctx);

FormalContext load_cxt(const std::filesystem::path& path);
void save_cxt(const FormalContext& ctx, const std::filesystem::path& path);

}  // namespace atomlat
