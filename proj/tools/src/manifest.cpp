#include "manifest.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace augraph::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = seed;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

namespace {

std::uint64_t digest_file(const fs::path& path, std::uint64_t seed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char buf[1 << 16];
    std::uint64_t hash = seed;
    while (in) {
        in.read(buf, sizeof(buf));
        hash = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), hash);
    }
    return hash;
}

}  // namespace

std::uint64_t digest_path(const fs::path& path) {
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(path))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end(),
                  [&](const fs::path& a, const fs::path& b) {
                      return a.lexically_relative(path) < b.lexically_relative(path);
                  });
        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (const fs::path& file : files) {
            const std::string rel = file.lexically_relative(path).generic_string();
            hash = fnv1a64(rel.data(), rel.size(), hash);
            hash = digest_file(file, hash);
        }
        return hash;
    }
    if (!fs::exists(path)) throw std::runtime_error("no such file: " + path.string());
    return digest_file(path, 0xcbf29ce484222325ULL);
}

std::string digest_hex(std::uint64_t digest) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

// ---------------------------------------------------------------------------
// OutputStager
// ---------------------------------------------------------------------------

namespace {

fs::path temp_name(const fs::path& final_path) {
    fs::path temp = final_path;
    temp += ".tmp-" + std::to_string(static_cast<unsigned long>(::getpid()));
    return temp;
}

}  // namespace

fs::path OutputStager::stage_file(const fs::path& final_path) {
    if (final_path.has_parent_path()) fs::create_directories(final_path.parent_path());
    Entry entry{temp_name(final_path), final_path, false};
    entries_.push_back(entry);
    return entry.temp;
}

fs::path OutputStager::stage_dir(const fs::path& final_path) {
    if (final_path.has_parent_path()) fs::create_directories(final_path.parent_path());
    Entry entry{temp_name(final_path), final_path, true};
    fs::create_directories(entry.temp);
    entries_.push_back(entry);
    return entry.temp;
}

void OutputStager::commit() {
    for (const Entry& entry : entries_) {
        if (!entry.is_dir) {
            fs::rename(entry.temp, entry.final_path);
            continue;
        }
        if (!fs::exists(entry.final_path)) {
            fs::rename(entry.temp, entry.final_path);
            continue;
        }
        // Merge into an existing directory file by file; all content already
        // exists on disk at this point.
        for (const auto& item : fs::directory_iterator(entry.temp))
            fs::rename(item.path(), entry.final_path / item.path().filename());
        fs::remove(entry.temp);
    }
    entries_.clear();
    committed_ = true;
}

OutputStager::~OutputStager() {
    for (const Entry& entry : entries_) {
        std::error_code ec;
        fs::remove_all(entry.temp, ec);
    }
}

}  // namespace augraph::cli
