#include "qealm/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include "qealm/tptp.hpp"

namespace qealm {

std::string histogram_bucket(std::size_t fork_count) {
    if (fork_count <= 1) return "<=1";
    if (fork_count == 2) return "=2";
    if (fork_count == 3) return "=3";
    return ">3";
}

ScanRecord scan_file(const std::string& path, const std::string& include_dir) {
    ScanRecord record;
    record.path = path;
    auto started = std::chrono::steady_clock::now();

    ParseResult parsed = parse_tptp_file(
        path, include_dir.empty() ? std::nullopt : std::optional<std::string>(include_dir));
    record.diagnostics = parsed.diagnostics;
    record.parsed = parsed.ok();
    if (record.parsed) {
        const Problem& problem = *parsed.problem;
        std::vector<Diagnostic> structural = validate_problem(problem);
        record.diagnostics.insert(record.diagnostics.end(), structural.begin(),
                                  structural.end());
        record.epr_legal = std::none_of(structural.begin(), structural.end(),
                                        [](const Diagnostic& d) {
                                            return d.severity == Severity::Error;
                                        });
        if (record.epr_legal) {
            FragmentReport report = check_membership(problem);
            record.member = report.member;
            if (report.member) {
                record.fork_indices = fork_indices(problem);
                record.fork_count = static_cast<int>(record.fork_indices.size());
                if (problem.total_literals() > 0)
                    record.classification = classify(problem);
            }
        }
    }

    record.milliseconds = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return record;
}

ScanReport scan_corpus(const std::string& root, int parallelism,
                       const std::string& include_dir) {
    namespace fs = std::filesystem;

    std::vector<std::string> paths;
    std::error_code ec;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied,
                                        ec);
    if (!ec) {
        for (const fs::directory_entry& entry : it) {
            if (entry.is_symlink()) continue;
            if (!entry.is_regular_file()) continue;
            std::string extension = entry.path().extension().string();
            if (extension == ".p" || extension == ".cnf")
                paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());

    ScanReport report;
    report.records.resize(paths.size());

    int workers = std::max(1, parallelism);
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        while (true) {
            std::size_t index = cursor.fetch_add(1);
            if (index >= paths.size()) break;
            report.records[index] = scan_file(paths[index], include_dir);
        }
    };
    if (workers == 1 || paths.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    ScanSummary& summary = report.summary;
    summary.total = report.records.size();
    summary.fork_histogram = {{"<=1", 0}, {"=2", 0}, {"=3", 0}, {">3", 0}};
    for (const ScanRecord& record : report.records) {
        if (!record.parsed) ++summary.parse_errors;
        if (record.epr_legal) ++summary.epr;
        if (record.member) {
            ++summary.member;
            ++summary.fork_histogram[histogram_bucket(record.fork_indices.size())];
        }
    }
    return report;
}

}  // namespace qealm
