#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "geotime/event.hpp"
#include "geotime/providers.hpp"

namespace geotime {

/// Lowercase, split on non-alphanumerics, drop empties. No stemming,
/// no stop words.
std::vector<std::string> tokenize(std::string_view text);

struct ScoredCandidate {
    std::string id;
    double score = 0.0;

    friend bool operator==(const ScoredCandidate&, const ScoredCandidate&) = default;
};

/// Okapi BM25 over tokenized structured text.
/// IDF = ln((N - df + 0.5) / (df + 0.5) + 1).
class Bm25Index {
public:
    struct Params {
        double k1 = 1.5;
        double b = 0.75;
    };

    static Bm25Index build(const Corpus& corpus, const SegmentSpec& spec, Params params = {});

    /// Top-k by descending score, ties broken by ascending event id.
    /// k may exceed the corpus size. An empty query yields no results.
    std::vector<ScoredCandidate> top_k(const std::vector<std::string>& query_tokens,
                                       std::size_t k,
                                       const std::string& exclude_id = {}) const;

    double score(std::size_t doc, const std::vector<std::string>& query_tokens) const;

    std::size_t doc_count() const { return doc_ids_.size(); }
    double average_doc_length() const { return avg_doc_len_; }
    const Params& params() const { return params_; }

private:
    Params params_;
    std::vector<std::string> doc_ids_;
    std::vector<std::map<std::string, std::uint32_t>> term_counts_;  // per doc
    std::vector<std::uint32_t> doc_lengths_;
    std::map<std::string, std::uint32_t> doc_freq_;
    double avg_doc_len_ = 0.0;
};

/// dot(u,v) / (|u| |v|), clamped to [-1, 1]. Throws DataError on
/// dimension mismatch or zero vectors.
double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v);

/// One embedding per corpus event under a fixed SegmentSpec and provider.
class DenseIndex {
public:
    static DenseIndex build(const Corpus& corpus, const SegmentSpec& spec, Provider& provider);

    const EmbeddingVector& vector_for(const std::string& id) const;  // throws DataError
    std::size_t size() const { return ids_.size(); }
    std::size_t dimension() const { return dimension_; }
    const std::vector<std::string>& ids() const { return ids_; }
    const SegmentSpec& spec() const { return spec_; }

    /// vectors.jsonl ({"digest","dim","values"} records keyed by event id
    /// digest) plus manifest.json (provider, model, segment spec, dim).
    void save(const std::string& dir, const Provider& provider) const;
    static DenseIndex load(const std::string& dir, const Corpus& corpus);

private:
    std::vector<std::string> ids_;
    std::map<std::string, EmbeddingVector> vectors_;
    std::size_t dimension_ = 0;
    SegmentSpec spec_;
};

struct RetrievalResult {
    /// Sorted by (score desc, id asc); the raw semantic rank of
    /// candidates[i] is i + 1.
    std::vector<ScoredCandidate> candidates;
};

/// Stage-1 dense retrieval: cosine between the query's structured-text
/// embedding and every corpus vector, query excluded from its own
/// candidate set, top n_retrieve kept.
RetrievalResult dense_retrieve(const EventRecord& query, const DenseIndex& index,
                               const SegmentSpec& spec, std::size_t n_retrieve,
                               Provider& provider);

}  // namespace geotime
