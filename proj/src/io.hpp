#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qhj {
namespace io {

/* JSON documents with stable member order: members serialize in insertion
 * order so output bytes are reproducible run to run. */
using ordered_json = nlohmann::ordered_json;

/* Shortest round-trip-safe decimal representation of a double ("%.17g"). */
std::string format_double(double x);

/* 64-bit FNV-1a hash. */
std::uint64_t fnv1a64(const void* data, std::size_t n);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string to_hex(std::uint64_t v);

/* CSV with '#'-prefixed comment lines, then a header row, then data rows.
 * All columns must share one length. Parent directories are created. */
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& columns);

/* Splits complex data into adjacent name_re / name_im columns. */
void append_complex_columns(std::vector<std::string>& names,
                            std::vector<std::vector<double>>& columns,
                            const std::string& name,
                            const std::vector<std::complex<double>>& data);

ordered_json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const ordered_json& doc);

}  // namespace io
}  // namespace qhj
