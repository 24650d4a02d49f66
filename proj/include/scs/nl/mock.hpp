#ifndef SCS_NL_MOCK_HPP
#define SCS_NL_MOCK_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scs/nl/paired.hpp"
#include "scs/nl/provider.hpp"

namespace scs::nl {

// Offline model stand-in. Answers are functions of the request text and the
// answer key it was built with.
//   template     - English from the rule template; translations copy the
//                  closest example; labels from keywords; no lines located
//   echo-gold    - answers with the key's rule, type, NL and lines
//   fault-inject - echo-gold, except a translation first anchors on the
//                  enclosing context; corrected once given type feedback
//   first-hit    - echo-gold, but locates only the first line per file
//   fail         - every call throws ProviderError
class MockProvider final : public ChatProvider {
  public:
    enum class Mode { template_nl, echo_gold, fault_inject, first_hit, fail };

    explicit MockProvider(Mode mode, const std::vector<PairedQuery>& key = {});

    LlmResponse complete(const LlmRequest& req) override;
    std::string tag() const override;

    // Throws ConfigError.
    static Mode mode_from_name(std::string_view name);

  private:
    std::string describe(const LlmRequest& req) const;
    std::string translate(const LlmRequest& req) const;
    std::string classify(const LlmRequest& req) const;
    std::string locate(const LlmRequest& req) const;

    struct Answer {
        std::string id;
        std::string rule;
        std::string fault_rule;
        std::string type;
        std::vector<Location> gold;
    };
    const Answer* find(std::string_view nl) const;

    Mode mode_;
    std::map<std::string, Answer, std::less<>> by_nl_;
    std::map<std::string, std::string, std::less<>> nl_by_id_;
};

// The rule a model that confuses the target with its context would write:
// the pattern-inside context becomes the anchor. Unchanged when the query
// has no context clause.
match::Query context_anchored(const match::Query& q);

}  // namespace scs::nl

#endif  // SCS_NL_MOCK_HPP
