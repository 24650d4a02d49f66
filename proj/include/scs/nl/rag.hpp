#ifndef SCS_NL_RAG_HPP
#define SCS_NL_RAG_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "scs/nl/paired.hpp"
#include "scs/nl/provider.hpp"

namespace scs::nl {

struct IndexedExample {
    PairedQuery pair;
    std::vector<double> vector;  // unit length
};

class RagIndex {
  public:
    RagIndex() = default;
    RagIndex(std::vector<IndexedExample> examples, std::size_t dimension, std::string provider);

    const std::vector<IndexedExample>& examples() const { return examples_; }
    std::size_t dimension() const { return dimension_; }
    const std::string& provider() const { return provider_; }
    bool empty() const { return examples_.empty(); }

    // JSON with vectors as base64 little-endian doubles.
    void save(const std::filesystem::path& path) const;
    static RagIndex load(const std::filesystem::path& path);

  private:
    std::vector<IndexedExample> examples_;
    std::size_t dimension_ = 0;
    std::string provider_;
};

// Throws DimensionMismatch, ProviderError; an empty input list is a
// ProviderError since there is nothing to index.
RagIndex build_index(const std::vector<PairedQuery>& pairs, Embedder& embedder);

struct Retrieved {
    const PairedQuery* pair;
    double similarity;
};

// Top k by cosine similarity, ties by id. Throws EmptyIndex, DimensionMismatch.
std::vector<Retrieved> retrieve(const RagIndex& index, Embedder& embedder, std::string_view nl,
                                std::size_t k);

std::string encode_vector(const std::vector<double>& v);
std::vector<double> decode_vector(std::string_view b64);

}  // namespace scs::nl

#endif  // SCS_NL_RAG_HPP
