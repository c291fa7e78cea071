#ifndef QEALM_SCAN_HPP
#define QEALM_SCAN_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qealm/fragment.hpp"
#include "qealm/logic.hpp"

namespace qealm {

struct ScanRecord {
    std::string path;
    bool parsed = false;
    bool epr_legal = false;  // parsed and structurally valid
    bool member = false;
    std::set<int> fork_indices;
    int fork_count = 0;
    std::optional<Classification> classification;
    double milliseconds = 0.0;
    std::vector<Diagnostic> diagnostics;
};

struct ScanSummary {
    std::size_t total = 0;
    std::size_t parse_errors = 0;
    std::size_t epr = 0;
    std::size_t member = 0;
    // member problems bucketed by fork index count: "<=1", "=2", "=3", ">3"
    std::map<std::string, std::size_t> fork_histogram;
};

struct ScanReport {
    std::vector<ScanRecord> records;  // sorted by path
    ScanSummary summary;
};

// Walks root for .p/.cnf files (no symlinks), analyzes each one, and
// aggregates the membership/fork-index summary. Files are distributed
// over `parallelism` workers; records come back in path order either way.
ScanReport scan_corpus(const std::string& root, int parallelism,
                       const std::string& include_dir = "");

ScanRecord scan_file(const std::string& path, const std::string& include_dir = "");

std::string histogram_bucket(std::size_t fork_count);

}  // namespace qealm

#endif
