#ifndef SCS_NL_PROVIDER_HPP
#define SCS_NL_PROVIDER_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace scs::nl {

// What a request is for. Real endpoints ignore it; offline providers route on it.
enum class Task { describe, translate, classify, locate };

struct LlmRequest {
    Task task = Task::translate;
    std::string system;
    std::string user;
    double temperature = 0.0;
    std::string request_id;
};

struct LlmResponse {
    std::string text;
    std::size_t prompt_tokens = 0;
    std::size_t completion_tokens = 0;
};

// Rough token count used where no endpoint reports one: four bytes a token.
std::size_t estimate_tokens(std::string_view text);

class ChatProvider {
  public:
    virtual ~ChatProvider() = default;
    // Throws ProviderError.
    virtual LlmResponse complete(const LlmRequest& req) = 0;
    virtual std::string tag() const = 0;
};

class Embedder {
  public:
    virtual ~Embedder() = default;
    // Not normalized. Throws ProviderError.
    virtual std::vector<double> embed(std::string_view text) = 0;
    virtual std::size_t dimension() const = 0;
    virtual std::string tag() const = 0;
};

// Bag of lowercase alphanumeric tokens hashed (FNV-1a) into fixed buckets.
class HashingEmbedder final : public Embedder {
  public:
    explicit HashingEmbedder(std::size_t dim = 256) : dim_(dim) {}
    std::vector<double> embed(std::string_view text) override;
    std::size_t dimension() const override { return dim_; }
    std::string tag() const override;

  private:
    std::size_t dim_;
};

std::vector<std::string> word_tokens(std::string_view text);
void normalize(std::vector<double>& v);
double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Key under which a transcript stores the completion for a request.
std::string transcript_key(const LlmRequest& req);

// Answers from a recorded transcript: {"<sha256 of system + user>": "<completion>"}.
class ReplayProvider final : public ChatProvider {
  public:
    explicit ReplayProvider(const std::filesystem::path& fixture);
    explicit ReplayProvider(std::map<std::string, std::string> transcript)
        : transcript_(std::move(transcript)) {}
    LlmResponse complete(const LlmRequest& req) override;
    std::string tag() const override { return "replay"; }

  private:
    std::map<std::string, std::string> transcript_;
};

// Forwards to another provider and keeps every exchange for saving as a fixture.
class RecordingProvider final : public ChatProvider {
  public:
    explicit RecordingProvider(std::shared_ptr<ChatProvider> inner) : inner_(std::move(inner)) {}
    LlmResponse complete(const LlmRequest& req) override;
    std::string tag() const override { return inner_->tag(); }

    const std::map<std::string, std::string>& transcript() const { return transcript_; }
    // Merges into an existing fixture file if there is one.
    void save(const std::filesystem::path& fixture) const;

  private:
    std::shared_ptr<ChatProvider> inner_;
    std::map<std::string, std::string> transcript_;
};

struct EndpointConfig {
    std::string endpoint;  // base URL, e.g. https://host/v1
    std::string api_key;
    std::string model;
    std::string embed_model;
    int timeout_seconds = 120;

    // SCS_API_ENDPOINT, SCS_API_KEY, SCS_MODEL, SCS_EMBED_MODEL.
    static EndpointConfig from_env();
};

// Chat-completion JSON over HTTP(S): POST <endpoint>/chat/completions.
class HttpChatProvider final : public ChatProvider {
  public:
    explicit HttpChatProvider(EndpointConfig cfg);
    LlmResponse complete(const LlmRequest& req) override;
    std::string tag() const override { return cfg_.model; }

  private:
    EndpointConfig cfg_;
};

// POST <endpoint>/embeddings.
class HttpEmbedder final : public Embedder {
  public:
    explicit HttpEmbedder(EndpointConfig cfg);
    std::vector<double> embed(std::string_view text) override;
    std::size_t dimension() const override { return dim_; }
    std::string tag() const override { return cfg_.embed_model; }

  private:
    EndpointConfig cfg_;
    std::size_t dim_ = 0;
};

}  // namespace scs::nl

#endif  // SCS_NL_PROVIDER_HPP
