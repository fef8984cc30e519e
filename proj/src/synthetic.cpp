#include "xmlclust/synthetic.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "xmlclust/rng.hpp"

namespace xmlclust {

namespace {

std::string pad(int v, std::size_t width) {
    std::string s = std::to_string(v);
    while (s.size() < width) s.insert(s.begin(), '0');
    return s;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec,
                                   const std::filesystem::path& out_dir) {
    if (spec.k < 1) {
        throw std::invalid_argument("generate_synthetic: k must be >= 1");
    }
    if (spec.docs_per_cluster < 1) {
        throw std::invalid_argument("generate_synthetic: docs_per_cluster must be >= 1");
    }
    if (spec.topic_vocab_size < 1) {
        throw std::invalid_argument("generate_synthetic: topic_vocab_size must be >= 1");
    }
    if (!(spec.overlap >= 0.0 && spec.overlap < 1.0)) {
        throw std::invalid_argument("generate_synthetic: overlap must be in [0,1)");
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + out_dir.string() + ": " +
                                 ec.message());
    }

    SyntheticCorpus corpus;
    corpus.topic_words.resize(spec.k);
    for (int c = 0; c < spec.k; ++c) {
        for (int j = 0; j < spec.topic_vocab_size; ++j) {
            corpus.topic_words[c].push_back("t" + std::to_string(c) + "w" +
                                            pad(j, 2));
        }
    }
    for (int j = 0; j < spec.topic_vocab_size; ++j) {
        corpus.shared_words.push_back("common" + pad(j, 2));
    }

    Rng rng(spec.seed);
    const auto draw = [&](int c) -> const std::string& {
        if (rng.uniform() < spec.overlap) {
            return corpus.shared_words[rng.bounded(corpus.shared_words.size())];
        }
        const auto& topic = corpus.topic_words[c];
        return topic[rng.bounded(topic.size())];
    };
    const auto sentence = [&](int c, int count) {
        std::string text;
        for (int i = 0; i < count; ++i) {
            if (i > 0) text += ' ';
            text += draw(c);
        }
        text += '.';
        return text;
    };

    const int total = spec.k * spec.docs_per_cluster;
    const std::size_t width =
        std::max<std::size_t>(3, std::to_string(total - 1).size());
    for (int d = 0; d < total; ++d) {
        const int c = d / spec.docs_per_cluster;
        const std::string doc_id = "synth" + pad(d, width);
        corpus.labels[doc_id] = "c" + std::to_string(c);

        const int pres_count = 40 + static_cast<int>(rng.bounded(21));
        const int fond_count = 15 + static_cast<int>(rng.bounded(6));
        std::string xml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        xml += "<raweb annee=\"2003\">\n";
        xml += "  <accueil>\n    <projet>" + doc_id + "</projet>\n  </accueil>\n";
        xml += "  <composition>\n    <membre>member " + std::to_string(d) +
               "</membre>\n  </composition>\n";
        xml += "  <presentation>\n    <p>" + sentence(c, pres_count) +
               "</p>\n  </presentation>\n";
        xml += "  <fondements>\n    <p>" + sentence(c, fond_count) + "</p>\n";
        for (int m = 0; m < 3; ++m) {
            xml += "    <mot>" + draw(c) + "</mot>\n";
        }
        xml += "  </fondements>\n</raweb>\n";

        const auto path = out_dir / (doc_id + ".xml");
        std::ofstream out(path, std::ios::binary);
        out << xml;
        if (!out) throw std::runtime_error("cannot write " + path.string());
    }

    const auto labels_path = out_dir / "labels.csv";
    std::ofstream labels(labels_path, std::ios::binary);
    labels << "doc_id,class_id\n";
    for (const auto& [doc_id, class_id] : corpus.labels) {
        labels << doc_id << ',' << class_id << '\n';
    }
    if (!labels) throw std::runtime_error("cannot write " + labels_path.string());
    return corpus;
}

}  // namespace xmlclust
