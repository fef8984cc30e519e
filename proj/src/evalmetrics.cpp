#include "xmlclust/evalmetrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xmlclust {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

ReferenceLabeling parse_reference_csv(std::istream& in, std::string name,
                                      const std::string& origin) {
    ReferenceLabeling ref;
    ref.name = std::move(name);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "doc_id,class_id") {
        throw std::runtime_error(origin + ": expected header 'doc_id,class_id'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": expected 'doc_id,class_id'");
        }
        std::string doc_id = line.substr(0, comma);
        std::string class_id = line.substr(comma + 1);
        if (doc_id.empty() || class_id.empty()) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": empty doc_id or class_id");
        }
        if (!ref.labels.emplace(std::move(doc_id), std::move(class_id)).second) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": duplicate doc_id");
        }
    }
    return ref;
}

ReferenceLabeling load_reference_csv(const std::filesystem::path& path,
                                     std::string name) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open reference labeling " + path.string());
    }
    if (name.empty()) name = path.stem().string();
    return parse_reference_csv(in, std::move(name), path.string());
}

Partition parse_assignments_csv(std::istream& in, const std::string& origin) {
    Partition part;
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "doc_id,cluster_id") {
        throw std::runtime_error(origin + ": expected header 'doc_id,cluster_id'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto at = origin + ":" + std::to_string(line_no);
        const auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0) {
            throw std::runtime_error(at + ": expected 'doc_id,cluster_id'");
        }
        std::string doc_id = line.substr(0, comma);
        const std::string id_text = line.substr(comma + 1);
        int cluster_id = -1;
        try {
            std::size_t pos = 0;
            cluster_id = std::stoi(id_text, &pos);
            if (pos != id_text.size()) throw std::invalid_argument(id_text);
        } catch (const std::exception&) {
            throw std::runtime_error(at + ": bad cluster id '" + id_text + "'");
        }
        if (cluster_id < 0) {
            throw std::runtime_error(at + ": negative cluster id");
        }
        if (!part.assignment.emplace(std::move(doc_id), cluster_id).second) {
            throw std::runtime_error(at + ": duplicate doc_id");
        }
        part.k = std::max(part.k, cluster_id + 1);
    }
    if (part.assignment.empty()) {
        throw std::runtime_error(origin + ": no assignments");
    }
    return part;
}

Partition load_assignments_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open assignments " + path.string());
    }
    return parse_assignments_csv(in, path.string());
}

ContingencyTable contingency(const Partition& partition,
                             const ReferenceLabeling& reference) {
    std::vector<std::pair<int, const std::string*>> pairs;
    std::map<int, std::size_t> row_of;
    std::map<std::string, std::size_t> col_of;
    for (const auto& [doc_id, cluster_id] : partition.assignment) {
        const auto it = reference.labels.find(doc_id);
        if (it == reference.labels.end()) continue;
        pairs.emplace_back(cluster_id, &it->second);
        row_of.emplace(cluster_id, 0);
        col_of.emplace(it->second, 0);
    }
    if (pairs.empty()) {
        throw std::runtime_error("no documents shared between partition and reference " +
                                 reference.name);
    }

    ContingencyTable table;
    for (auto& [cluster_id, idx] : row_of) {
        idx = table.cluster_ids.size();
        table.cluster_ids.push_back(cluster_id);
    }
    for (auto& [class_id, idx] : col_of) {
        idx = table.class_ids.size();
        table.class_ids.push_back(class_id);
    }
    table.cells.assign(table.cluster_ids.size(),
                       std::vector<std::int64_t>(table.class_ids.size(), 0));
    table.row_margins.assign(table.cluster_ids.size(), 0);
    table.col_margins.assign(table.class_ids.size(), 0);
    for (const auto& [cluster_id, class_id] : pairs) {
        const auto i = row_of[cluster_id];
        const auto k = col_of[*class_id];
        ++table.cells[i][k];
        ++table.row_margins[i];
        ++table.col_margins[k];
        ++table.n;
    }
    return table;
}

double f_measure(const ContingencyTable& table) {
    double weighted = 0.0;
    for (std::size_t k = 0; k < table.class_ids.size(); ++k) {
        double best = 0.0;
        for (std::size_t i = 0; i < table.cluster_ids.size(); ++i) {
            const auto n_ik = table.cells[i][k];
            if (n_ik == 0) continue;
            // 2RP/(R+P) with R = n_ik/n_i. and P = n_ik/n_.k
            const double f = 2.0 * static_cast<double>(n_ik) /
                             static_cast<double>(table.row_margins[i] +
                                                 table.col_margins[k]);
            best = std::max(best, f);
        }
        weighted += best * static_cast<double>(table.col_margins[k]);
    }
    return weighted / static_cast<double>(table.n);
}

namespace {

__int128 choose2(std::int64_t m) {
    return static_cast<__int128>(m) * (m - 1) / 2;
}

}  // namespace

double corrected_rand(const ContingencyTable& table) {
    if (table.n < 2) {
        throw std::invalid_argument("corrected_rand requires at least two documents");
    }
    __int128 s = 0;
    for (const auto& row : table.cells) {
        for (const auto cell : row) s += choose2(cell);
    }
    __int128 si = 0, sk = 0;
    for (const auto m : table.row_margins) si += choose2(m);
    for (const auto m : table.col_margins) sk += choose2(m);
    const __int128 pairs = choose2(table.n);

    // (s - si*sk/pairs) / ((si+sk)/2 - si*sk/pairs), scaled by 2*pairs to
    // stay in integers; identical partitions then give numerator == denominator.
    const __int128 num = 2 * pairs * s - 2 * si * sk;
    const __int128 den = pairs * (si + sk) - 2 * si * sk;
    if (den == 0) {
        if (num == 0) return 1.0;  // both all-singleton or both one-class
        throw std::domain_error("corrected_rand: degenerate contingency table");
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

MetricResult evaluate(const Partition& partition, const ReferenceLabeling& reference) {
    const auto table = contingency(partition, reference);
    MetricResult result;
    result.reference = reference.name;
    result.documents = table.n;
    result.f = f_measure(table);
    result.cr = corrected_rand(table);
    return result;
}

void write_metric_report(std::ostream& out, const std::vector<MetricResult>& results) {
    char buf[64];
    for (const auto& r : results) {
        out << "reference = " << r.reference << '\n';
        out << "documents = " << r.documents << '\n';
        std::snprintf(buf, sizeof(buf), "%.6f", r.f);
        out << "f_measure = " << buf << '\n';
        std::snprintf(buf, sizeof(buf), "%.6f", r.cr);
        out << "corrected_rand = " << buf << '\n';
    }
}

}  // namespace xmlclust
