#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vigia {

std::string read_file(const std::string& path);  // throws ValidationError if unreadable

/// Write-to-temp-then-rename so interrupted runs never leave partial files.
void atomic_write_file(const std::string& path, std::string_view content);

bool file_exists(const std::string& path);

/// FNV-1a 64-bit; used for artifact manifests and cache file names.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

/// Splits one CSV line on ','. Fields in this project's formats never contain
/// commas or quotes, so no quoting rules apply.
std::vector<std::string_view> split_csv_line(std::string_view line);

/// Splits text into lines on LF, dropping a trailing empty line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace vigia
