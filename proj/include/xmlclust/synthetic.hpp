#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace xmlclust {

struct SyntheticSpec {
    int k = 4;
    int docs_per_cluster = 10;
    int topic_vocab_size = 30;
    double overlap = 0.0;  // fraction of tokens drawn from the shared pool
    std::uint64_t seed = 1;
};

struct SyntheticCorpus {
    std::map<std::string, std::string> labels;          // doc_id -> class id
    std::vector<std::vector<std::string>> topic_words;  // per cluster
    std::vector<std::string> shared_words;
};

// Writes one report-shaped XML file per planted document plus labels.csv
// into out_dir. Word forms are digit-terminated so the whole planted
// vocabulary tags as nouns and survives every POS filter. Deterministic
// for a fixed spec. Throws on bad arguments or an unwritable directory.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec,
                                   const std::filesystem::path& out_dir);

}  // namespace xmlclust
