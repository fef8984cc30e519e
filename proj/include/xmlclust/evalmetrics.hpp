#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xmlclust/cluster.hpp"

namespace xmlclust {

// External ground-truth labeling used to score a computed partition.
struct ReferenceLabeling {
    std::string name;
    std::map<std::string, std::string> labels;  // doc_id -> class id
};

ReferenceLabeling parse_reference_csv(std::istream& in, std::string name,
                                      const std::string& origin);
ReferenceLabeling load_reference_csv(const std::filesystem::path& path,
                                     std::string name = "");

// Reads the `doc_id,cluster_id` CSV written by write_assignments_csv;
// k becomes the largest cluster id plus one.
Partition parse_assignments_csv(std::istream& in, const std::string& origin);
Partition load_assignments_csv(const std::filesystem::path& path);

// Cross-tabulation of cluster ids against reference classes, restricted
// to the documents present in both. Rows and columns with no shared
// documents are omitted, so every margin is positive.
struct ContingencyTable {
    std::vector<int> cluster_ids;        // ascending
    std::vector<std::string> class_ids;  // ascending
    std::vector<std::vector<std::int64_t>> cells;
    std::vector<std::int64_t> row_margins;
    std::vector<std::int64_t> col_margins;
    std::int64_t n = 0;
};

ContingencyTable contingency(const Partition& partition,
                             const ReferenceLabeling& reference);

// Class-size-weighted best-match F score:
//   F = Σ_k (n_.k / n) · max_i 2·n_ik / (n_i. + n_.k)
double f_measure(const ContingencyTable& table);

// Hubert-Arabie corrected Rand index; 1 for identical partitions, about 0
// for independent ones, negative for worse-than-chance agreement. Throws
// std::domain_error on a degenerate table that is not a perfect match.
double corrected_rand(const ContingencyTable& table);

struct MetricResult {
    std::string reference;
    std::int64_t documents = 0;  // intersection size
    double f = 0.0;
    double cr = 0.0;
};

MetricResult evaluate(const Partition& partition, const ReferenceLabeling& reference);

void write_metric_report(std::ostream& out, const std::vector<MetricResult>& results);

}  // namespace xmlclust
