#include "xmlclust/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <memory>
#include <ostream>
#include <set>

#include "xmlclust/alias.hpp"

namespace xmlclust {

StageError::StageError(std::string stage_name, const std::string& message)
    : std::runtime_error(stage_name + ": " + message), stage(std::move(stage_name)) {}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
    try {
        if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid unsigned integer for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "off" || value == "no" || value == "0") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + value + "'");
}

std::vector<int> parse_k_list(const std::string& value, const std::string& key) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto piece =
            trim(std::string_view(value).substr(start, comma - start));
        if (!piece.empty()) out.push_back(parse_int(piece, key));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ConfigError(key + " must list at least one value");
    return out;
}

InitMode parse_init(const std::string& value) {
    if (value == "uniform") return InitMode::Uniform;
    if (value == "spread") return InitMode::Spread;
    throw ConfigError("init must be 'uniform' or 'spread', got '" + value + "'");
}

DistanceKind parse_distance(const std::string& value) {
    if (value == "chi2") return DistanceKind::Chi2;
    if (value == "euclidean") return DistanceKind::Euclidean;
    if (value == "cosine") return DistanceKind::Cosine;
    throw ConfigError("distance must be 'chi2', 'euclidean' or 'cosine', got '" +
                      value + "'");
}

WeightMode parse_weighting(const std::string& value) {
    if (value == "row_mass") return WeightMode::RowMass;
    if (value == "uniform") return WeightMode::Uniform;
    throw ConfigError("weighting must be 'row_mass' or 'uniform', got '" + value +
                      "'");
}

EmptyPolicy parse_empty_policy(const std::string& value) {
    if (value == "reseed") return EmptyPolicy::Reseed;
    if (value == "drop") return EmptyPolicy::Drop;
    throw ConfigError("empty_policy must be 'reseed' or 'drop', got '" + value +
                      "'");
}

struct PresetDef {
    const char* id;
    std::vector<std::pair<const char*, const char*>> selectors;  // label, spec
    const char* pos_classes;
    bool tagging;
    bool aliases;
};

const std::vector<PresetDef>& presets() {
    static const std::vector<PresetDef> table = {
        {"K-F", {{"keywords", "fondements//mot"}}, "noun,verb,adjective", true,
         false},
        {"K-all", {{"keywords", "mot"}}, "noun,verb,adjective", true, false},
        {"T-P", {{"presentation", "presentation"}}, "noun", true, false},
        {"T-PF",
         {{"presentation", "presentation"}, {"fondements", "fondements"}},
         "noun", true, false},
        {"T-C", {{"conference", "citation@conf"}}, "", false, true},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& p : presets()) out.push_back(p.id);
        return out;
    }();
    return ids;
}

bool is_preset(const std::string& id) {
    const auto& ids = preset_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void apply_preset(ExperimentConfig& config, const std::string& id) {
    for (const auto& def : presets()) {
        if (id != def.id) continue;
        config.experiment = id;
        config.selectors.clear();
        for (const auto& [label, spec] : def.selectors) {
            config.selectors.push_back(parse_selector(spec, label));
        }
        config.pos_classes = *def.pos_classes
                                 ? PosClassSet::parse(def.pos_classes)
                                 : PosClassSet{};
        config.tagging = def.tagging;
        config.normalize_aliases = def.aliases;
        return;
    }
    throw ConfigError("unknown experiment preset: '" + id + "'");
}

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
    ExperimentConfig config;
    bool saw_selector = false, saw_pos = false, saw_tagging = false;
    std::set<std::string> selector_labels, reference_names;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        const std::string at = origin + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw ConfigError(at + ": expected 'key = value'");
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) throw ConfigError(at + ": empty key");
        if (value.empty()) throw ConfigError(at + ": empty value for " + key);

        try {
            if (key == "corpus_dir") {
                config.corpus_dir = value;
            } else if (key == "out_dir") {
                config.out_dir = value;
            } else if (key == "experiment") {
                config.experiment = value;
            } else if (key == "pos_classes") {
                config.pos_classes = PosClassSet::parse(value);
                saw_pos = true;
            } else if (key == "tagging") {
                config.tagging = parse_bool(value, key);
                saw_tagging = true;
            } else if (key == "min_df") {
                config.min_df = parse_int(value, key);
            } else if (key == "k") {
                config.k_values = parse_k_list(value, key);
            } else if (key == "restarts") {
                config.restarts = parse_int(value, key);
            } else if (key == "max_iter") {
                config.max_iter = parse_int(value, key);
            } else if (key == "seed") {
                config.seed = parse_u64(value, key);
            } else if (key == "init") {
                config.init = parse_init(value);
            } else if (key == "distance") {
                config.distance = parse_distance(value);
            } else if (key == "weighting") {
                config.weighting = parse_weighting(value);
            } else if (key == "empty_policy") {
                config.empty_policy = parse_empty_policy(value);
            } else if (key == "tagger") {
                config.tagger = value;
            } else if (key == "lexicon") {
                config.lexicon = value;
            } else if (key == "alias_table") {
                config.alias_table = value;
                config.normalize_aliases = true;
            } else if (key == "top_words") {
                config.top_words = parse_int(value, key);
            } else if (key == "drop_stopwords") {
                config.drop_stopwords = parse_bool(value, key);
            } else if (key == "dump_matrix") {
                config.dump_matrix = parse_bool(value, key);
            } else if (key.starts_with("selector.")) {
                const std::string label = key.substr(9);
                if (label.empty()) throw ConfigError(at + ": empty selector label");
                if (!selector_labels.insert(label).second) {
                    throw ConfigError(at + ": duplicate selector label '" + label +
                                      "'");
                }
                config.selectors.push_back(parse_selector(value, label));
                saw_selector = true;
            } else if (key.starts_with("reference.")) {
                const std::string name = key.substr(10);
                if (name.empty()) throw ConfigError(at + ": empty reference name");
                if (!reference_names.insert(name).second) {
                    throw ConfigError(at + ": duplicate reference '" + name + "'");
                }
                config.references.emplace_back(name, value);
            } else {
                throw ConfigError(at + ": unknown key '" + key + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(at + ": " + e.what());
        }
    }

    if (is_preset(config.experiment)) {
        if (saw_selector || saw_pos || saw_tagging) {
            throw ConfigError(origin + ": preset experiment '" + config.experiment +
                              "' fixes selectors, pos_classes and tagging; use "
                              "experiment = custom to override");
        }
        const bool aliases_from_file = config.normalize_aliases;
        apply_preset(config, config.experiment);
        config.normalize_aliases = config.normalize_aliases || aliases_from_file;
    } else if (config.experiment == "custom") {
        if (config.tagging && !saw_pos) {
            config.pos_classes = PosClassSet::all_content();
        }
    } else {
        throw ConfigError(origin + ": unknown experiment '" + config.experiment +
                          "' (presets: K-F, K-all, T-P, T-PF, T-C, or custom)");
    }
    return config;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in, path.string());
}

void validate_config(const ExperimentConfig& config) {
    if (config.corpus_dir.empty()) throw ConfigError("corpus_dir is required");
    if (config.out_dir.empty()) throw ConfigError("out_dir is required");
    if (!is_preset(config.experiment) && config.experiment != "custom") {
        throw ConfigError("unknown experiment '" + config.experiment + "'");
    }
    if (config.selectors.empty()) {
        throw ConfigError("no selectors configured (set a preset experiment or "
                          "selector.<label> entries)");
    }
    if (config.tagging && config.pos_classes.empty()) {
        throw ConfigError("pos_classes must be non-empty when tagging is on");
    }
    if (config.min_df < 1) throw ConfigError("min_df must be >= 1");
    if (config.restarts < 1) throw ConfigError("restarts must be >= 1");
    if (config.max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (config.top_words < 0) throw ConfigError("top_words must be >= 0");
    if (config.k_values.empty()) throw ConfigError("k must list at least one value");
    for (const int k : config.k_values) {
        if (k < 1) throw ConfigError("k values must be >= 1");
    }
    if (config.tagger != "fallback" &&
        (!config.tagger.starts_with("external:") || config.tagger.size() <= 9)) {
        throw ConfigError("tagger must be 'fallback' or 'external:<command>'");
    }
    if (config.normalize_aliases && config.alias_table.empty()) {
        throw ConfigError("alias_table is required when conference names are "
                          "normalized");
    }
}

std::vector<std::pair<std::string, double>> top_words(const Prototype& prototype,
                                                      const CountMatrix& matrix,
                                                      int m) {
    if (m < 1) throw std::invalid_argument("top_words: m must be >= 1");
    if (prototype.counts.size() != matrix.n_words()) {
        throw std::invalid_argument("top_words: prototype width mismatch");
    }
    std::vector<std::pair<std::string, double>> scored;
    const double total = static_cast<double>(matrix.total());
    for (std::size_t j = 0; j < matrix.n_words(); ++j) {
        if (prototype.counts[j] < 2.0) continue;
        const double lift = (prototype.counts[j] / prototype.total) /
                            (static_cast<double>(matrix.col_total(j)) / total);
        scored.emplace_back(matrix.vocab().word(j), lift);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (scored.size() > static_cast<std::size_t>(m)) scored.resize(m);
    return scored;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    ExperimentReport report;
    report.experiment = config.experiment;

    CorpusLoad corpus;
    try {
        corpus = parse_corpus(config.corpus_dir.string());
    } catch (const std::exception& e) {
        throw StageError("corpus", e.what());
    }
    report.issues = corpus.issues;
    if (corpus.docs.empty()) {
        throw StageError("corpus",
                         "no documents loaded from " + config.corpus_dir.string());
    }

    std::map<std::string, std::vector<TextFragment>> frags_by_doc;
    try {
        for (const auto& doc : corpus.docs) {
            auto& frags = frags_by_doc[doc.doc_id];
            for (const auto& sel : config.selectors) {
                auto got = select(doc, sel);
                frags.insert(frags.end(), std::make_move_iterator(got.begin()),
                             std::make_move_iterator(got.end()));
            }
        }
    } catch (const std::exception& e) {
        throw StageError("select", e.what());
    }

    if (config.normalize_aliases) {
        report.aliases_applied = true;
        AliasTable aliases;
        try {
            aliases = AliasTable::load_file(config.alias_table.string());
        } catch (const std::exception& e) {
            throw StageError("normalize", e.what());
        }
        for (auto& [doc_id, frags] : frags_by_doc) {
            auto res = normalize_conferences(std::move(frags), aliases);
            frags = std::move(res.fragments);
            report.unknown_conferences += res.unknown;
        }
    }

    DocLemmas doc_lemmas;
    std::size_t extracted = 0, selected = 0;
    std::set<std::string> types;
    if (config.tagging) {
        std::unique_ptr<Tagger> tagger;
        try {
            if (config.tagger == "fallback") {
                auto fallback = std::make_unique<FallbackTagger>();
                if (!config.lexicon.empty()) {
                    fallback->load_lexicon(config.lexicon.string());
                }
                tagger = std::move(fallback);
            } else {
                tagger = std::make_unique<ExternalTagger>(config.tagger.substr(9));
            }
        } catch (const std::exception& e) {
            throw StageError("tagger", e.what());
        }
        const TagClassMap tag_classes;
        const auto& stopwords = builtin_stopword_lemmas();
        for (const auto& doc : corpus.docs) {
            std::vector<std::string> tokens;
            for (const auto& frag : frags_by_doc[doc.doc_id]) {
                auto frag_tokens = tokenize(frag.text);
                tokens.insert(tokens.end(),
                              std::make_move_iterator(frag_tokens.begin()),
                              std::make_move_iterator(frag_tokens.end()));
            }
            extracted += tokens.size();
            std::vector<std::string> lemmas;
            try {
                const auto records = tagger->tag(tokens);
                lemmas = filter_pos(records, config.pos_classes, tag_classes);
            } catch (const std::exception& e) {
                throw StageError("tag", doc.doc_id + ": " + e.what());
            }
            if (config.drop_stopwords) {
                std::erase_if(lemmas, [&](const std::string& lemma) {
                    return stopwords.count(lemma) > 0;
                });
            }
            selected += lemmas.size();
            types.insert(lemmas.begin(), lemmas.end());
            doc_lemmas[doc.doc_id] = std::move(lemmas);
        }
    } else {
        // features are the fragment texts themselves
        for (const auto& doc : corpus.docs) {
            std::vector<std::string> features;
            for (auto& frag : frags_by_doc[doc.doc_id]) {
                features.push_back(std::move(frag.text));
            }
            extracted += features.size();
            selected += features.size();
            types.insert(features.begin(), features.end());
            doc_lemmas[doc.doc_id] = std::move(features);
        }
    }

    Vocabulary vocab;
    try {
        vocab = build_vocabulary(doc_lemmas, config.min_df);
    } catch (const std::exception& e) {
        throw StageError("vocabulary", e.what());
    }
    if (vocab.empty()) {
        throw StageError("vocabulary", "no features survive filtering");
    }
    try {
        auto built = build_matrix(doc_lemmas, vocab);
        report.dropped_docs = std::move(built.dropped_docs);
        report.matrix = std::move(built.matrix);
    } catch (const std::exception& e) {
        throw StageError("matrix", e.what());
    }
    report.stats = corpus_stats(report.matrix.n_docs(), extracted, selected,
                                types.size(), report.matrix.vocab());

    std::vector<ReferenceLabeling> references;
    try {
        for (const auto& [name, path] : config.references) {
            references.push_back(load_reference_csv(path, name));
        }
    } catch (const std::exception& e) {
        throw StageError("reference", e.what());
    }

    ClusterOptions opts;
    opts.restarts = config.restarts;
    opts.max_iter = config.max_iter;
    opts.seed = config.seed;
    opts.empty_policy = config.empty_policy;
    opts.init = config.init;
    opts.distance = config.distance;
    opts.weighting = config.weighting;

    for (const int k : config.k_values) {
        KResult result;
        result.k = k;
        try {
            result.run = cluster(report.matrix, k, opts);
        } catch (const std::exception& e) {
            throw StageError("cluster", "k=" + std::to_string(k) + ": " + e.what());
        }
        std::map<int, std::int64_t> sizes;
        for (const auto& [doc_id, cluster_id] : result.run.partition.assignment) {
            ++sizes[cluster_id];
        }
        for (const auto& proto : result.run.prototypes) {
            ClusterSummary summary;
            summary.cluster_id = proto.cluster_id;
            summary.size = sizes[proto.cluster_id];
            if (config.top_words > 0) {
                summary.words = top_words(proto, report.matrix, config.top_words);
            }
            result.clusters.push_back(std::move(summary));
        }
        try {
            for (const auto& ref : references) {
                result.metrics.push_back(evaluate(result.run.partition, ref));
            }
        } catch (const std::exception& e) {
            throw StageError("evaluate", "k=" + std::to_string(k) + ": " + e.what());
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

void write_report(std::ostream& out, const ExperimentReport& report) {
    out << "experiment = " << report.experiment << '\n';
    out << "projects = " << report.stats.projects << '\n';
    out << "extracted_words = " << report.stats.extracted_words << '\n';
    out << "selected_words = " << report.stats.selected_words << '\n';
    out << "selected_types = " << report.stats.selected_types << '\n';
    out << "vocabulary = " << report.stats.vocabulary << '\n';
    out << "dropped_docs = " << report.dropped_docs.size();
    for (const auto& doc_id : report.dropped_docs) out << ' ' << doc_id;
    out << '\n';
    out << "parse_issues = " << report.issues.size() << '\n';
    if (report.aliases_applied) {
        out << "unknown_conferences = " << report.unknown_conferences << '\n';
    }
    for (const auto& kr : report.results) {
        out << '\n';
        out << "k = " << kr.k << '\n';
        out << "seed = " << kr.run.seed << '\n';
        out << "iterations = " << kr.run.iterations << '\n';
        out << "converged = " << (kr.run.converged ? "true" : "false") << '\n';
        out << "objective = " << fmt6(kr.run.objective()) << '\n';
        for (const auto& cs : kr.clusters) {
            out << "cluster " << cs.cluster_id << " = " << cs.size << " docs";
            if (!cs.words.empty()) {
                out << ':';
                for (const auto& [word, lift] : cs.words) out << ' ' << word;
            }
            out << '\n';
        }
        write_metric_report(out, kr.metrics);
    }
}

void write_stats_csv(std::ostream& out, const ExperimentReport& report) {
    out << "experiment,projects,extracted_words,selected_words,selected_types,"
           "vocabulary\n";
    out << report.experiment << ',' << report.stats.projects << ','
        << report.stats.extracted_words << ',' << report.stats.selected_words
        << ',' << report.stats.selected_types << ',' << report.stats.vocabulary
        << '\n';
}

void write_metrics_csv(std::ostream& out, const ExperimentReport& report) {
    out << "experiment,k,reference,documents,f_measure,corrected_rand\n";
    for (const auto& kr : report.results) {
        for (const auto& m : kr.metrics) {
            out << report.experiment << ',' << kr.k << ',' << m.reference << ','
                << m.documents << ',' << fmt6(m.f) << ',' << fmt6(m.cr) << '\n';
        }
    }
}

void write_report_files(const ExperimentReport& report,
                        const ExperimentConfig& config) {
    namespace fs = std::filesystem;
    if (config.out_dir.empty()) {
        throw ConfigError("out_dir is required to write reports");
    }
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) {
        throw StageError("report", "cannot create " + config.out_dir.string() +
                                       ": " + ec.message());
    }
    const auto open = [&](const std::string& name) {
        std::ofstream out(config.out_dir / name, std::ios::binary);
        if (!out) {
            throw StageError("report",
                             "cannot write " + (config.out_dir / name).string());
        }
        return out;
    };
    {
        auto out = open("report.txt");
        write_report(out, report);
    }
    {
        auto out = open("stats.csv");
        write_stats_csv(out, report);
    }
    {
        auto out = open("metrics.csv");
        write_metrics_csv(out, report);
    }
    for (const auto& kr : report.results) {
        const std::string suffix =
            report.experiment + "_k" + std::to_string(kr.k);
        {
            auto out = open("assignments_" + suffix + ".csv");
            write_assignments_csv(out, kr.run.partition);
        }
        {
            auto out = open("run_" + suffix + ".txt");
            write_run_metadata(out, kr.run);
        }
    }
    if (config.dump_matrix) {
        auto out = open("matrix_" + report.experiment + ".tsv");
        report.matrix.dump(out);
    }
}

}  // namespace xmlclust
