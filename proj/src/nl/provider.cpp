#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "scs/nl/provider.hpp"

#include <httplib.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "scs/error.hpp"
#include "scs/syntax/corpus.hpp"

namespace scs::nl {

std::size_t estimate_tokens(std::string_view text) { return (text.size() + 3) / 4; }

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

void normalize(std::vector<double>& v) {
    double sq = 0;
    for (double x : v) sq += x * x;
    if (sq == 0) return;
    double inv = 1.0 / std::sqrt(sq);
    for (double& x : v) x *= inv;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vectors of dimension " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<double> HashingEmbedder::embed(std::string_view text) {
    std::vector<double> v(dim_, 0.0);
    for (const auto& tok : word_tokens(text)) {
        std::uint64_t h = 1469598103934665603ull;
        for (char c : tok) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        v[h % dim_] += 1.0;
    }
    return v;
}

std::string HashingEmbedder::tag() const { return "hashing-" + std::to_string(dim_); }

std::string transcript_key(const LlmRequest& req) {
    return syntax::sha256_hex(req.system + "\n" + req.user);
}

namespace {

std::map<std::string, std::string> read_transcript(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ProviderError("cannot read transcript " + path.string());
    nlohmann::json j;
    try {
        in >> j;
        return j.get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError("malformed transcript " + path.string() + ": " + e.what());
    }
}

LlmResponse counted(const LlmRequest& req, std::string text) {
    LlmResponse r;
    r.prompt_tokens = estimate_tokens(req.system) + estimate_tokens(req.user);
    r.completion_tokens = estimate_tokens(text);
    r.text = std::move(text);
    return r;
}

}  // namespace

ReplayProvider::ReplayProvider(const std::filesystem::path& fixture)
    : transcript_(read_transcript(fixture)) {}

LlmResponse ReplayProvider::complete(const LlmRequest& req) {
    auto it = transcript_.find(transcript_key(req));
    if (it == transcript_.end()) throw ProviderError("no recorded completion for request " + transcript_key(req).substr(0, 12));
    return counted(req, it->second);
}

LlmResponse RecordingProvider::complete(const LlmRequest& req) {
    LlmResponse r = inner_->complete(req);
    transcript_[transcript_key(req)] = r.text;
    return r;
}

void RecordingProvider::save(const std::filesystem::path& fixture) const {
    std::map<std::string, std::string> merged;
    if (std::filesystem::exists(fixture)) merged = read_transcript(fixture);
    for (const auto& [k, v] : transcript_) merged[k] = v;
    std::ofstream out(fixture);
    if (!out) throw ProviderError("cannot write transcript " + fixture.string());
    out << nlohmann::json(merged).dump(2) << '\n';
}

EndpointConfig EndpointConfig::from_env() {
    auto get = [](const char* name) {
        const char* v = std::getenv(name);
        return std::string(v ? v : "");
    };
    EndpointConfig c;
    c.endpoint = get("SCS_API_ENDPOINT");
    c.api_key = get("SCS_API_KEY");
    c.model = get("SCS_MODEL");
    c.embed_model = get("SCS_EMBED_MODEL");
    return c;
}

namespace {

struct Url {
    std::string origin;  // scheme://host[:port]
    std::string path;    // without trailing slash
};

Url split_url(const std::string& url) {
    auto scheme = url.find("://");
    if (scheme == std::string::npos) throw ProviderError("endpoint is not a URL: " + url);
    auto slash = url.find('/', scheme + 3);
    Url u{url.substr(0, slash), slash == std::string::npos ? "" : url.substr(slash)};
    while (!u.path.empty() && u.path.back() == '/') u.path.pop_back();
    return u;
}

nlohmann::json post_json(const EndpointConfig& cfg, const std::string& route, const nlohmann::json& body) {
    if (cfg.endpoint.empty()) throw ProviderError("no endpoint configured (SCS_API_ENDPOINT)");
    Url u = split_url(cfg.endpoint);
    httplib::Client client(u.origin);
    client.set_read_timeout(cfg.timeout_seconds, 0);
    httplib::Headers headers;
    if (!cfg.api_key.empty()) headers.emplace("Authorization", "Bearer " + cfg.api_key);
    auto res = client.Post(u.path + route, headers, body.dump(), "application/json");
    if (!res) throw ProviderError("request to " + u.origin + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw ProviderError("endpoint returned HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
    try {
        return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("unreadable endpoint response: ") + e.what());
    }
}

}  // namespace

HttpChatProvider::HttpChatProvider(EndpointConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.model.empty()) throw ProviderError("no model configured (SCS_MODEL)");
}

LlmResponse HttpChatProvider::complete(const LlmRequest& req) {
    nlohmann::json body{{"model", cfg_.model},
                        {"temperature", req.temperature},
                        {"messages",
                         {{{"role", "system"}, {"content", req.system}},
                          {{"role", "user"}, {"content", req.user}}}}};
    nlohmann::json j = post_json(cfg_, "/chat/completions", body);
    try {
        LlmResponse r;
        r.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
        if (j.contains("usage")) {
            r.prompt_tokens = j["usage"].value("prompt_tokens", 0u);
            r.completion_tokens = j["usage"].value("completion_tokens", 0u);
        } else {
            r.prompt_tokens = estimate_tokens(req.system) + estimate_tokens(req.user);
            r.completion_tokens = estimate_tokens(r.text);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("unexpected completion shape: ") + e.what());
    }
}

HttpEmbedder::HttpEmbedder(EndpointConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.embed_model.empty()) throw ProviderError("no embedding model configured (SCS_EMBED_MODEL)");
}

std::vector<double> HttpEmbedder::embed(std::string_view text) {
    nlohmann::json j = post_json(cfg_, "/embeddings", {{"model", cfg_.embed_model}, {"input", text}});
    std::vector<double> v;
    try {
        v = j.at("data").at(0).at("embedding").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("unexpected embedding shape: ") + e.what());
    }
    if (dim_ == 0) dim_ = v.size();
    if (v.size() != dim_) throw DimensionMismatch("embedding dimension changed from " + std::to_string(dim_) + " to " + std::to_string(v.size()));
    return v;
}

}  // namespace scs::nl
