#ifndef MNRULES_GOLDEN_HPP
#define MNRULES_GOLDEN_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace mnr {

struct GoldenFile {
    std::string name; // file name inside the corpus directory
    std::string content;
};

/// The worked examples, rendered from the current build.
std::vector<GoldenFile> golden_corpus();

struct GoldenDrift {
    std::string name;
    std::string diff; // unified diff, expected first; "missing" if absent
};

/// Compares the corpus with the files in `dir`.
std::vector<GoldenDrift> check_golden(const std::filesystem::path& dir);
/// Writes every corpus file into `dir`, creating it if needed.
void write_golden(const std::filesystem::path& dir);

/// Line-based unified diff with three lines of context.
std::string unified_diff(const std::string& expected, const std::string& actual,
                         const std::string& expected_label, const std::string& actual_label);

} // namespace mnr

#endif
