#include "scs/nl/rag.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>

#include "scs/error.hpp"

namespace scs::nl {

static_assert(std::endian::native == std::endian::little, "vector encoding assumes a little-endian host");

std::string encode_vector(const std::vector<double>& v) {
    std::string raw(v.size() * sizeof(double), '\0');
    std::memcpy(raw.data(), v.data(), raw.size());
    std::string out(4 * ((raw.size() + 2) / 3), '\0');
    int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                            reinterpret_cast<const unsigned char*>(raw.data()), static_cast<int>(raw.size()));
    out.resize(static_cast<std::size_t>(n));
    return out;
}

std::vector<double> decode_vector(std::string_view b64) {
    if (b64.size() % 4 != 0) throw DimensionMismatch("vector encoding has a truncated block");
    std::string raw(3 * b64.size() / 4, '\0');
    int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(raw.data()),
                            reinterpret_cast<const unsigned char*>(b64.data()), static_cast<int>(b64.size()));
    if (n < 0) throw DimensionMismatch("vector encoding is not base64");
    std::size_t len = static_cast<std::size_t>(n);
    if (!b64.empty() && b64.back() == '=') --len;
    if (b64.size() > 1 && b64[b64.size() - 2] == '=') --len;
    if (len % sizeof(double) != 0) throw DimensionMismatch("vector encoding is not a whole number of doubles");
    std::vector<double> v(len / sizeof(double));
    std::memcpy(v.data(), raw.data(), len);
    return v;
}

RagIndex::RagIndex(std::vector<IndexedExample> examples, std::size_t dimension, std::string provider)
    : examples_(std::move(examples)), dimension_(dimension), provider_(std::move(provider)) {
    for (const auto& e : examples_)
        if (e.vector.size() != dimension_)
            throw DimensionMismatch("example " + e.pair.id + " has dimension " + std::to_string(e.vector.size()) +
                                    ", index has " + std::to_string(dimension_));
}

void RagIndex::save(const std::filesystem::path& path) const {
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& e : examples_) {
        nlohmann::json j = paired_to_json(e.pair);
        j["vector"] = encode_vector(e.vector);
        ex.push_back(std::move(j));
    }
    nlohmann::json doc{{"dimension", dimension_}, {"provider", provider_}, {"examples", ex}};
    std::ofstream out(path);
    if (!out) throw Error("cannot write index " + path.string());
    out << doc.dump(1) << '\n';
}

RagIndex RagIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read index " + path.string());
    try {
        nlohmann::json doc;
        in >> doc;
        std::vector<IndexedExample> ex;
        for (const auto& j : doc.at("examples"))
            ex.push_back({paired_from_json(j), decode_vector(j.at("vector").get<std::string>())});
        return RagIndex(std::move(ex), doc.at("dimension").get<std::size_t>(), doc.value("provider", ""));
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed index " + path.string() + ": " + e.what());
    }
}

RagIndex build_index(const std::vector<PairedQuery>& pairs, Embedder& embedder) {
    if (pairs.empty()) throw ProviderError("no example pairs to index");
    std::vector<IndexedExample> ex;
    ex.reserve(pairs.size());
    std::size_t dim = 0;
    for (const auto& p : pairs) {
        std::vector<double> v = embedder.embed(p.nl);
        if (dim == 0) dim = v.size();
        normalize(v);
        ex.push_back({p, std::move(v)});
    }
    return RagIndex(std::move(ex), dim, embedder.tag());
}

std::vector<Retrieved> retrieve(const RagIndex& index, Embedder& embedder, std::string_view nl, std::size_t k) {
    if (index.empty()) throw EmptyIndex();
    std::vector<double> q = embedder.embed(nl);
    if (q.size() != index.dimension())
        throw DimensionMismatch("query embedding has dimension " + std::to_string(q.size()) + ", index has " +
                                std::to_string(index.dimension()));
    std::vector<Retrieved> all;
    all.reserve(index.examples().size());
    for (const auto& e : index.examples()) all.push_back({&e.pair, cosine(q, e.vector)});
    std::sort(all.begin(), all.end(), [](const Retrieved& a, const Retrieved& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.pair->id < b.pair->id;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

}  // namespace scs::nl
