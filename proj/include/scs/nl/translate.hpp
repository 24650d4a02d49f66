#ifndef SCS_NL_TRANSLATE_HPP
#define SCS_NL_TRANSLATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scs/error.hpp"
#include "scs/match/query.hpp"
#include "scs/nl/provider.hpp"
#include "scs/nl/rag.hpp"
#include "scs/syntax/constructs.hpp"

namespace scs::nl {

// Asks for a one-sentence English request equivalent to the query.
// Throws ProviderError, ExtractionError.
std::string pair_nl(const match::Query& q, ChatProvider& llm);

struct TranslateOptions {
    std::size_t k = 5;
    bool with_inline_comments = true;
    bool with_api_docs = false;
};

struct RefineRound {
    std::string query_type;     // anchor type of the query fed back
    std::string expected_type;  // what the request asks for
    bool parsed = false;        // whether the answer to the feedback compiled
};

struct TranslationTrace {
    std::vector<std::string> retrieved_ids;
    std::vector<std::string> prompts;
    std::vector<std::string> completions;
    int parse_retries = 0;
    std::vector<RefineRound> rounds;
    bool unresolved = false;
    std::string failure;
    std::size_t prompt_tokens = 0;
    std::size_t completion_tokens = 0;
};

// TranslationFailed carrying what was tried.
class FailedTranslation : public TranslationFailed {
  public:
    FailedTranslation(const std::string& what, TranslationTrace trace)
        : TranslationFailed(what), trace_(std::move(trace)) {}
    const TranslationTrace& trace() const { return trace_; }

  private:
    TranslationTrace trace_;
};

struct Translation {
    std::optional<match::Query> query;  // empty when translation failed
    TranslationTrace trace;
};

// Throws TranslationFailed (after one parse retry), ProviderError, EmptyIndex.
Translation translate(std::string_view nl, const RagIndex& index, Embedder& embedder,
                      ChatProvider& llm, const TranslateOptions& opts = {});

// Throws UnparseableLabel, ProviderError.
syntax::ConstructType expected_target_type(std::string_view nl, ChatProvider& llm,
                                           TranslationTrace* trace = nullptr);

// First taxonomy label named in the text. Throws UnparseableLabel.
syntax::ConstructType parse_construct_label(std::string_view text);

// Re-prompts while the query's anchor type disagrees with the requested type.
// Updates the translation in place; the query stays compilable.
void refine(std::string_view nl, Translation& t, const RagIndex& index, Embedder& embedder,
            ChatProvider& llm, const TranslateOptions& opts, int max_rounds);

// Fenced ```yaml (or bare ```) block contents, the last one in the text.
std::optional<std::string> extract_fenced(std::string_view text);

// Prompt pieces, exposed for offline providers and tests.
inline constexpr std::string_view kFeedbackMarker = "The query targets ";
std::string feedback_text(std::string_view query_type, std::string_view expected_type);
std::string translate_system_prompt(bool with_api_docs);
std::string translate_user_prompt(std::string_view nl, const std::vector<Retrieved>& examples,
                                  bool with_inline_comments);
std::string describe_system_prompt();
std::string describe_user_prompt(const match::Query& q);
std::string classify_system_prompt();
std::string classify_user_prompt(std::string_view nl);

// Direct in-context search: the model reads one numbered file and lists the
// start lines of matching code in a fenced block.
std::string locate_system_prompt();
std::string locate_user_prompt(std::string_view nl, std::string_view path, std::string_view source);
// Line numbers listed in the answer's fenced block (or the whole text).
std::vector<std::uint32_t> parse_line_answer(std::string_view text);

// Last <tag>...</tag> body in the text, trimmed.
std::optional<std::string> tagged(std::string_view text, std::string_view tag);

}  // namespace scs::nl

#endif  // SCS_NL_TRANSLATE_HPP
