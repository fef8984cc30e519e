#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace xmlclust {

// lemma lists per document, keyed by doc_id (sorted, so downstream
// layouts never depend on insertion order)
using DocLemmas = std::map<std::string, std::vector<std::string>>;

class Vocabulary {
  public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> sorted_words);

    const std::vector<std::string>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    // -1 when absent
    int index_of(std::string_view lemma) const;
    const std::string& word(std::size_t j) const { return words_[j]; }

  private:
    std::vector<std::string> words_;
    std::map<std::string, int, std::less<>> index_;
};

// Words whose document frequency (distinct documents containing the
// lemma at least once) reaches min_df, in lexicographic order.
Vocabulary build_vocabulary(const DocLemmas& doc_lemmas, int min_df);

class CountMatrix {
  public:
    using Cell = std::pair<int, std::int64_t>;  // (column, count)

    CountMatrix() = default;
    CountMatrix(std::vector<std::string> doc_ids, Vocabulary vocab,
                std::vector<std::vector<Cell>> rows);

    // Dense test/bench constructor; throws on an all-zero row or column.
    static CountMatrix from_dense(std::vector<std::string> doc_ids,
                                  std::vector<std::string> words,
                                  const std::vector<std::vector<std::int64_t>>& counts);

    std::size_t n_docs() const { return doc_ids_.size(); }
    std::size_t n_words() const { return vocab_.size(); }
    const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    const Vocabulary& vocab() const { return vocab_; }

    const std::vector<Cell>& row(std::size_t s) const { return rows_[s]; }
    std::int64_t row_total(std::size_t s) const { return row_totals_[s]; }
    std::int64_t col_total(std::size_t j) const { return col_totals_[j]; }
    std::int64_t total() const { return total_; }
    std::int64_t cell(std::size_t s, std::size_t j) const;

    std::vector<double> dense_row(std::size_t s) const;
    // row counts normalized to sum 1
    std::vector<double> profile(std::size_t s) const;
    // corpus column masses c_j = col_total(j) / total()
    std::vector<double> col_mass() const;

    // header `doc_id<TAB>w1<TAB>...`, one row per document, LF
    void dump(std::ostream& out) const;

  private:
    std::vector<std::string> doc_ids_;
    Vocabulary vocab_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::int64_t> row_totals_;
    std::vector<std::int64_t> col_totals_;
    std::int64_t total_ = 0;
};

struct MatrixBuild {
    CountMatrix matrix;
    std::vector<std::string> dropped_docs;  // row total would have been 0
};

MatrixBuild build_matrix(const DocLemmas& doc_lemmas, const Vocabulary& vocab);

struct StatsRow {
    std::size_t projects = 0;        // documents admitted to the matrix
    std::size_t extracted_words = 0; // tokens before any filtering
    std::size_t selected_words = 0;  // tokens surviving selection
    std::size_t selected_types = 0;  // distinct selected lemmas
    std::size_t vocabulary = 0;      // |vocab| after the min-df rule
};

StatsRow corpus_stats(std::size_t admitted_docs, std::size_t extracted_tokens,
                      std::size_t selected_tokens, std::size_t selected_types,
                      const Vocabulary& vocab);

}  // namespace xmlclust
