#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace qhj {
namespace io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for hashing: " + path.string());
    std::uint64_t h = 14695981039346656037ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size())
        throw InvalidArgumentError("write_csv: name/column count mismatch");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows)
            throw InvalidArgumentError("write_csv: columns have unequal lengths");

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());

    for (const auto& line : comments) out << "# " << line << "\n";
    for (std::size_t k = 0; k < names.size(); ++k)
        out << (k ? "," : "") << names[k];
    out << "\n";
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < columns.size(); ++k)
            out << (k ? "," : "") << format_double(columns[k][r]);
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

void append_complex_columns(std::vector<std::string>& names,
                            std::vector<std::vector<double>>& columns,
                            const std::string& name,
                            const std::vector<std::complex<double>>& data) {
    std::vector<double> re(data.size()), im(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        re[i] = data[i].real();
        im[i] = data[i].imag();
    }
    names.push_back(name + "_re");
    columns.push_back(std::move(re));
    names.push_back(name + "_im");
    columns.push_back(std::move(im));
}

ordered_json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const ordered_json& doc) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace io
}  // namespace qhj
