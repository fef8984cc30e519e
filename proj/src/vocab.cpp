#include "xmlclust/vocab.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace xmlclust {

Vocabulary::Vocabulary(std::vector<std::string> sorted_words)
    : words_(std::move(sorted_words)) {
    for (std::size_t j = 0; j < words_.size(); ++j) {
        const auto [it, inserted] = index_.emplace(words_[j], static_cast<int>(j));
        if (!inserted) {
            throw std::invalid_argument("duplicate vocabulary word: " + words_[j]);
        }
    }
    if (!std::is_sorted(words_.begin(), words_.end())) {
        throw std::invalid_argument("vocabulary words must be sorted");
    }
}

int Vocabulary::index_of(std::string_view lemma) const {
    const auto it = index_.find(lemma);
    return it == index_.end() ? -1 : it->second;
}

Vocabulary build_vocabulary(const DocLemmas& doc_lemmas, int min_df) {
    if (min_df < 1) throw std::invalid_argument("min_df must be >= 1");
    std::map<std::string, int> df;
    for (const auto& [doc_id, lemmas] : doc_lemmas) {
        const std::set<std::string> distinct(lemmas.begin(), lemmas.end());
        for (const auto& lemma : distinct) ++df[lemma];
    }
    std::vector<std::string> words;
    for (const auto& [lemma, count] : df) {
        if (count >= min_df) words.push_back(lemma);
    }
    return Vocabulary(std::move(words));  // std::map iterates sorted
}

CountMatrix::CountMatrix(std::vector<std::string> doc_ids, Vocabulary vocab,
                         std::vector<std::vector<Cell>> rows)
    : doc_ids_(std::move(doc_ids)),
      vocab_(std::move(vocab)),
      rows_(std::move(rows)) {
    if (doc_ids_.size() != rows_.size()) {
        throw std::invalid_argument("doc_ids/rows size mismatch");
    }
    const auto p = vocab_.size();
    col_totals_.assign(p, 0);
    row_totals_.assign(rows_.size(), 0);
    for (std::size_t s = 0; s < rows_.size(); ++s) {
        for (const auto& [j, count] : rows_[s]) {
            if (j < 0 || static_cast<std::size_t>(j) >= p || count <= 0) {
                throw std::invalid_argument("bad matrix cell");
            }
            row_totals_[s] += count;
            col_totals_[j] += count;
            total_ += count;
        }
        if (row_totals_[s] == 0) {
            throw std::invalid_argument("all-zero row for document " + doc_ids_[s]);
        }
    }
}

CountMatrix CountMatrix::from_dense(
    std::vector<std::string> doc_ids, std::vector<std::string> words,
    const std::vector<std::vector<std::int64_t>>& counts) {
    std::vector<std::vector<Cell>> rows;
    rows.reserve(counts.size());
    std::vector<std::int64_t> col_check(words.size(), 0);
    for (const auto& dense : counts) {
        if (dense.size() != words.size()) {
            throw std::invalid_argument("dense row width mismatch");
        }
        std::vector<Cell> row;
        for (std::size_t j = 0; j < dense.size(); ++j) {
            if (dense[j] < 0) throw std::invalid_argument("negative count");
            if (dense[j] > 0) {
                row.emplace_back(static_cast<int>(j), dense[j]);
                col_check[j] += dense[j];
            }
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < col_check.size(); ++j) {
        if (col_check[j] == 0) {
            throw std::invalid_argument("all-zero column: " + words[j]);
        }
    }
    return CountMatrix(std::move(doc_ids), Vocabulary(std::move(words)),
                       std::move(rows));
}

std::int64_t CountMatrix::cell(std::size_t s, std::size_t j) const {
    for (const auto& [col, count] : rows_[s]) {
        if (static_cast<std::size_t>(col) == j) return count;
    }
    return 0;
}

std::vector<double> CountMatrix::dense_row(std::size_t s) const {
    std::vector<double> out(vocab_.size(), 0.0);
    for (const auto& [j, count] : rows_[s]) out[j] = static_cast<double>(count);
    return out;
}

std::vector<double> CountMatrix::profile(std::size_t s) const {
    auto out = dense_row(s);
    const auto denom = static_cast<double>(row_totals_[s]);
    for (auto& v : out) v /= denom;
    return out;
}

std::vector<double> CountMatrix::col_mass() const {
    std::vector<double> out(vocab_.size(), 0.0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = static_cast<double>(col_totals_[j]) / static_cast<double>(total_);
    }
    return out;
}

void CountMatrix::dump(std::ostream& out) const {
    out << "doc_id";
    for (const auto& word : vocab_.words()) out << '\t' << word;
    out << '\n';
    for (std::size_t s = 0; s < n_docs(); ++s) {
        out << doc_ids_[s];
        const auto dense = dense_row(s);
        for (const auto v : dense) out << '\t' << static_cast<std::int64_t>(v);
        out << '\n';
    }
}

MatrixBuild build_matrix(const DocLemmas& doc_lemmas, const Vocabulary& vocab) {
    if (vocab.empty()) throw std::invalid_argument("empty vocabulary");

    MatrixBuild result;
    std::vector<std::string> doc_ids;
    std::vector<std::vector<CountMatrix::Cell>> rows;
    for (const auto& [doc_id, lemmas] : doc_lemmas) {
        std::map<int, std::int64_t> counts;
        for (const auto& lemma : lemmas) {
            const int j = vocab.index_of(lemma);
            if (j >= 0) ++counts[j];
        }
        if (counts.empty()) {
            result.dropped_docs.push_back(doc_id);
            continue;
        }
        rows.emplace_back(counts.begin(), counts.end());
        doc_ids.push_back(doc_id);
    }
    result.matrix = CountMatrix(std::move(doc_ids), vocab, std::move(rows));
    return result;
}

StatsRow corpus_stats(std::size_t admitted_docs, std::size_t extracted_tokens,
                      std::size_t selected_tokens, std::size_t selected_types,
                      const Vocabulary& vocab) {
    StatsRow row;
    row.projects = admitted_docs;
    row.extracted_words = extracted_tokens;
    row.selected_words = selected_tokens;
    row.selected_types = selected_types;
    row.vocabulary = vocab.size();
    return row;
}

}  // namespace xmlclust
