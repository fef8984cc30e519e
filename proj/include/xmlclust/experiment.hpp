#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xmlclust/cluster.hpp"
#include "xmlclust/corpus.hpp"
#include "xmlclust/evalmetrics.hpp"
#include "xmlclust/lexical.hpp"
#include "xmlclust/selector.hpp"
#include "xmlclust/vocab.hpp"

namespace xmlclust {

// Bad configuration (unknown key, invalid value, inconsistent options).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A pipeline stage failed; carries the stage name for diagnostics.
class StageError : public std::runtime_error {
  public:
    StageError(std::string stage_name, const std::string& message);
    const std::string stage;
};

struct ExperimentConfig {
    std::filesystem::path corpus_dir;
    std::string experiment = "custom";
    std::vector<Selector> selectors;
    PosClassSet pos_classes;
    bool tagging = true;
    bool normalize_aliases = false;
    int min_df = 2;
    std::vector<int> k_values{4, 5, 9};
    int restarts = 10;
    int max_iter = 100;
    std::uint64_t seed = 1;
    InitMode init = InitMode::Uniform;
    DistanceKind distance = DistanceKind::Chi2;
    WeightMode weighting = WeightMode::RowMass;
    EmptyPolicy empty_policy = EmptyPolicy::Reseed;
    std::string tagger = "fallback";  // or "external:<command line>"
    std::filesystem::path lexicon;    // extra entries for the fallback tagger
    std::filesystem::path alias_table;
    std::vector<std::pair<std::string, std::filesystem::path>> references;
    int top_words = 10;
    bool drop_stopwords = false;
    bool dump_matrix = false;
    std::filesystem::path out_dir;
};

// Config file: one `key = value` per line, `#` comments, blank lines
// ignored. Repeatable keys: `selector.<label> = <path spec>` and
// `reference.<name> = <csv path>`. A preset `experiment` fixes selectors,
// POS classes, tagging and alias handling; `selector.*`, `pos_classes`
// and `tagging` are then rejected.
ExperimentConfig parse_config(std::istream& in, const std::string& origin);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

const std::vector<std::string>& preset_ids();
bool is_preset(const std::string& id);
// Overwrites selectors, pos_classes, tagging and alias handling.
void apply_preset(ExperimentConfig& config, const std::string& id);

// Throws ConfigError; call after presets and command-line overrides.
void validate_config(const ExperimentConfig& config);

// Words over-represented in the prototype relative to the corpus,
// scored by lift (g_j/g_total)/(col_total_j/total), requiring g_j >= 2;
// ties broken lexicographically.
std::vector<std::pair<std::string, double>> top_words(const Prototype& prototype,
                                                      const CountMatrix& matrix,
                                                      int m);

struct ClusterSummary {
    int cluster_id = 0;
    std::int64_t size = 0;
    std::vector<std::pair<std::string, double>> words;
};

struct KResult {
    int k = 0;
    ClusterRun run;
    std::vector<ClusterSummary> clusters;
    std::vector<MetricResult> metrics;
};

struct ExperimentReport {
    std::string experiment;
    StatsRow stats;
    std::vector<std::string> dropped_docs;
    std::vector<ParseIssue> issues;
    bool aliases_applied = false;
    std::size_t unknown_conferences = 0;
    std::vector<KResult> results;
    CountMatrix matrix;
};

// ingest -> select -> (normalize) -> tokenize/tag/filter -> vocabulary ->
// matrix -> cluster per k -> evaluate per reference. Deterministic for a
// fixed seed. Throws StageError with the failing stage's name.
ExperimentReport run_experiment(const ExperimentConfig& config);

void write_report(std::ostream& out, const ExperimentReport& report);
void write_stats_csv(std::ostream& out, const ExperimentReport& report);
void write_metrics_csv(std::ostream& out, const ExperimentReport& report);

// report.txt, stats.csv, metrics.csv, and per-k assignments_<EXP>_k<K>.csv
// and run_<EXP>_k<K>.txt under config.out_dir (created if needed); the
// matrix dump matrix_<EXP>.tsv only when config.dump_matrix is set.
void write_report_files(const ExperimentReport& report, const ExperimentConfig& config);

}  // namespace xmlclust
