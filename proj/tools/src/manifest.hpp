#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace augraph::cli {

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ULL);

// Content digest of a file, or of a directory (its regular files hashed in
// sorted relative-path order, names mixed in).
std::uint64_t digest_path(const std::filesystem::path& path);

std::string digest_hex(std::uint64_t digest);

// Staged output writing: every output lands under a temporary name first and
// is renamed into place only when commit() runs, so a failure anywhere leaves
// no partial outputs behind. Uncommitted temporaries are removed on
// destruction.
class OutputStager {
public:
    ~OutputStager();
    OutputStager() = default;
    OutputStager(const OutputStager&) = delete;
    OutputStager& operator=(const OutputStager&) = delete;

    // Returns the temporary path to write in place of `final`.
    std::filesystem::path stage_file(const std::filesystem::path& final_path);
    std::filesystem::path stage_dir(const std::filesystem::path& final_path);

    void commit();

private:
    struct Entry {
        std::filesystem::path temp;
        std::filesystem::path final_path;
        bool is_dir = false;
    };
    std::vector<Entry> entries_;
    bool committed_ = false;
};

}  // namespace augraph::cli
