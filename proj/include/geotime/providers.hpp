#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace geotime {

using EmbeddingVector = std::vector<double>;

struct EntitySpan {
    std::string text;
    std::string category;

    friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

/// Category tags fused with the entities extracted under each tag.
struct CategorySnippet {
    std::vector<std::string> categories;
    std::vector<EntitySpan> entities;  // every category appears in categories

    /// Canonical text, one "Category: <tag>; Entities: <e1>, <e2>." block
    /// per tag in stored tag order. Empty categories render "".
    std::string rendered() const;

    nlohmann::json to_json() const;
    static CategorySnippet from_json(const nlohmann::json& j);

    friend bool operator==(const CategorySnippet&, const CategorySnippet&) = default;
};

struct ProviderConfig {
    enum class Kind { Mock, Http };

    Kind kind = Kind::Mock;
    std::string endpoint;                       // http base URL, e.g. "http://127.0.0.1:8089"
    std::string embed_model = "mock-embed-256";
    std::string chat_model = "mock-chat";
    std::string score_endpoint;                 // optional cross-encoder scoring URL
    std::string api_key_env = "GEOTIME_API_KEY";
    int batch_size = 16;
    int timeout_s = 30;
    int retries = 3;
    int concurrency = 1;
    double backoff_initial_s = 1.0;             // exponential, x2 per retry
    std::string cache_dir;                      // empty disables the on-disk cache

    void validate() const;                      // throws DataError
    std::string kind_name() const;

    nlohmann::json to_json() const;
    static ProviderConfig from_json(const nlohmann::json& j);
};

/// Deterministic 256-dim signed feature-hashing embedder: lowercase,
/// split on non-alphanumerics, token unigrams plus per-token character
/// trigrams, fixed-seed 64-bit hashing into +-1 buckets, L2-normalized.
/// Texts with no features map to the first basis vector.
EmbeddingVector mock_embed(std::string_view text);

inline constexpr std::size_t kMockEmbedDim = 256;

/// SHA-256 hex digest; cache content key.
std::string content_digest(std::string_view content);

/// Manual per-event snippet replacements ("human in the loop").
class EntityOverrides {
public:
    EntityOverrides() = default;
    static EntityOverrides load(const std::string& path);  // JSON {id: snippet}
    static EntityOverrides from_json(const nlohmann::json& j);

    const CategorySnippet* find(const std::string& event_id) const;
    std::size_t size() const { return overrides_.size(); }

private:
    std::map<std::string, CategorySnippet> overrides_;
};

/// Model boundary: embeddings (bi-encoder), pair scoring (cross-encoder
/// or bi-encoder cosine), and category-instructed entity extraction,
/// with a content-addressed on-disk cache in front of every call.
class Provider {
public:
    explicit Provider(ProviderConfig config);
    ~Provider();
    Provider(Provider&&) noexcept;
    Provider& operator=(Provider&&) noexcept;

    /// One vector per input, order preserving. Empty texts are rejected.
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts);
    EmbeddingVector embed(const std::string& text);

    /// Symmetric similarity in [-1, 1].
    double cross_score(const std::string& text_a, const std::string& text_b);

    /// Entities per category tag for one event text. Overrides, when the
    /// caller knows the event id, are applied in snippet_for.
    CategorySnippet extract_entities(const std::string& event_text,
                                     const std::vector<std::string>& category_tags);

    /// extract_entities with override precedence by event id.
    CategorySnippet snippet_for(const std::string& event_id,
                                const std::string& event_text,
                                const std::vector<std::string>& category_tags,
                                const EntityOverrides* overrides);

    const ProviderConfig& config() const;
    /// "mock" or "http"; part of the cache key space.
    std::string id() const;
    /// Which pair-scoring path cross_score uses; recorded in run manifests.
    std::string cross_method() const;
    std::size_t embedding_dimension();

    struct CacheStats {
        std::size_t hits = 0;
        std::size_t misses = 0;
    };
    CacheStats cache_stats() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Prompt sent for category-instructed entity extraction (persona, task,
/// step-by-step instruction, strict-JSON reply demand). Versioned asset,
/// embedded at build time.
std::string_view entity_extraction_prompt();

}  // namespace geotime
