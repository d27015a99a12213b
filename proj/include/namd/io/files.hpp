#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace namd::io {

std::string read_file(const std::filesystem::path& path);

/// Writes to `<path>.tmp` then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string sha256_hex(std::span<const std::byte> bytes);
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Hash over every regular file below `dir`, keyed by relative path in
/// lexicographic order. Files whose name is in `skip` are ignored.
std::string sha256_tree(const std::filesystem::path& dir,
                        std::span<const std::string_view> skip = {});

}  // namespace namd::io
