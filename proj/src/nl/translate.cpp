#include "scs/nl/translate.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scs/error.hpp"
#include "scs/match/matcher.hpp"
#include "scs/nl/describe.hpp"
#include "scs/nl/paired.hpp"

namespace scs::nl {

using syntax::ConstructType;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct WorkedExample {
    std::string_view rule;
    std::string_view reasoning;
    std::string_view nl;
};

// Hand-checked examples shown to the model when it writes English requests.
constexpr WorkedExample kWorkedExamples[] = {
    {"rules:\n  - id: ex-continue\n    languages: [java]\n    message: continue statements\n    patterns:\n"
     "      - pattern: continue;\n",
     "The pattern is a bare continue_statement with no context, so every continue statement matches.",
     "Find all continue statements"},
    {"rules:\n  - id: ex-tostring-loop\n    languages: [java]\n    message: toString appended in a loop\n    patterns:\n"
     "      - pattern: $X += Integer.toString(...);\n      - pattern-inside: for (...) { ... }\n",
     "The anchor is an assignment_expression with the += operator whose right side is a call to "
     "Integer.toString with any arguments. The pattern-inside clause requires a for_statement around it.",
     "Find all cases where value returned by Integer.toString is used by an add operation inside a for loop"},
    {"rules:\n  - id: ex-interrupted\n    languages: [java]\n    message: loops polling interrupted\n    patterns:\n"
     "      - pattern: while (! $VAR1 .interrupted()) { ... }\n",
     "The anchor is a while_statement whose condition negates a call of interrupted() on any object; "
     "the body can be anything.",
     "Find all while loops that keep running until some object's interrupted() method returns true"},
};

constexpr std::string_view kApiDocs = R"(Clause reference:
- pattern: Java code to find. Each match is reported at the root of this fragment.
- pattern-inside: the match must lie strictly inside code matching this fragment. Put `...` where the matched code sits.
- pattern-not: drops matches that also match this fragment at the same place.
- pattern-either: a list of `- pattern:` alternatives; any of them counts.
- $NAME binds one expression, name, literal or type. Repeated names must bind identical code.
- `...` matches any run of statements, arguments or parameters, including none. It also fills a for-loop header.
- Modifiers left out of a declaration pattern match any modifiers.
)";

std::string rule_for_prompt(const match::Query& q, bool with_comments) {
    if (!with_comments) return match::render_rule(q);
    match::Query annotated = q;
    annotate(annotated);
    return match::render_rule(annotated, true);
}

std::string fenced(std::string_view lang, std::string_view body) {
    std::string out = "```";
    out += lang;
    out += '\n';
    out += body;
    if (out.back() != '\n') out += '\n';
    out += "```";
    return out;
}

}  // namespace

std::optional<std::string> tagged(std::string_view text, std::string_view tag) {
    std::string open = "<" + std::string(tag) + ">";
    std::string close = "</" + std::string(tag) + ">";
    auto b = text.rfind(open);
    if (b == std::string_view::npos) return std::nullopt;
    auto e = text.find(close, b);
    if (e == std::string_view::npos) return std::nullopt;
    b += open.size();
    return std::string(trim(text.substr(b, e - b)));
}

std::optional<std::string> extract_fenced(std::string_view text) {
    std::optional<std::string> last;
    std::size_t pos = 0;
    while (true) {
        auto open = text.find("```", pos);
        if (open == std::string_view::npos) break;
        auto body = text.find('\n', open);
        if (body == std::string_view::npos) break;
        ++body;
        auto close = text.find("```", body);
        if (close == std::string_view::npos) break;
        last = std::string(text.substr(body, close - body));
        pos = close + 3;
    }
    return last;
}

std::string describe_system_prompt() {
    std::ostringstream out;
    out << "You turn Semgrep rules for Java into the natural-language request a developer would type to find "
           "the same code. You get the rule and a structured description of its pattern trees. Think about what "
           "the anchor pattern matches and what context the other clauses require, then answer with one "
           "sentence that starts with \"Find all\" inside <nl_query></nl_query> tags.\n\nExamples:\n";
    for (const auto& ex : kWorkedExamples) {
        match::Query q = match::compile_query(ex.rule);
        out << "\n<rule>\n" << ex.rule << "</rule>\n" << describe_query(q) << "Reasoning: " << ex.reasoning
            << "\n<nl_query>" << ex.nl << "</nl_query>\n";
    }
    return out.str();
}

std::string describe_user_prompt(const match::Query& q) {
    return "<rule>\n" + match::render_rule(q) + "</rule>\n" + describe_query(q);
}

std::string pair_nl(const match::Query& q, ChatProvider& llm) {
    LlmRequest req{Task::describe, describe_system_prompt(), describe_user_prompt(q), 0.0, q.id};
    LlmResponse r = llm.complete(req);
    auto answer = tagged(r.text, "nl_query");
    if (!answer || answer->empty()) throw ExtractionError("completion has no <nl_query> answer for " + q.id);
    std::string_view s = *answer;
    s = s.substr(0, s.find('\n'));
    s = trim(s);
    if (!s.empty() && s.back() == '.') s.remove_suffix(1);
    if (s.empty()) throw ExtractionError("empty <nl_query> answer for " + q.id);
    return std::string(s);
}

std::string translate_system_prompt(bool with_api_docs) {
    std::string s =
        "You translate natural-language structural code search requests over Java into Semgrep rules.\n"
        "A rule has one `pattern` clause, the code to report, and optional `pattern-inside` clauses for code "
        "the match must be inside, and `pattern-not` clauses for shapes to exclude.\n"
        "Patterns are Java fragments. `$NAME` (capital letters) stands for one expression; repeated names "
        "must match identical code. `...` stands for any sequence of statements, arguments or parameters.\n"
        "The construct the request asks for must be the root of the `pattern` clause. Enclosing context goes "
        "in `pattern-inside`, with `...` where the matched code sits.\n"
        "Answer with the complete rule in one fenced yaml block following this template:\n" +
        fenced("yaml",
               "rules:\n  - id: <id>\n    languages: [java]\n    message: <message>\n    patterns:\n"
               "      - pattern: <java fragment>\n      - pattern-inside: <java fragment>\n") +
        "\n";
    if (with_api_docs) s += "\n" + std::string(kApiDocs);
    return s;
}

std::string translate_user_prompt(std::string_view nl, const std::vector<Retrieved>& examples,
                                  bool with_inline_comments) {
    std::ostringstream out;
    if (!examples.empty()) {
        out << "Examples:\n";
        for (const auto& ex : examples)
            out << "\n<example>\n<query>\n"
                << ex.pair->nl << "\n</query>\n"
                << fenced("yaml", rule_for_prompt(ex.pair->dsl, with_inline_comments)) << "\n</example>\n";
        out << '\n';
    }
    out << "Translate this request:\n<query>\n" << nl << "\n</query>\n";
    return out.str();
}

std::string feedback_text(std::string_view query_type, std::string_view expected_type) {
    return std::string(kFeedbackMarker) + std::string(query_type) + " but the request asks for " +
           std::string(expected_type) + ".";
}

std::string classify_system_prompt() {
    std::string s =
        "Name the kind of code construct a structural code search request asks to find: the thing each "
        "result is, not its surrounding context. Choose exactly one of:";
    for (auto t : syntax::all_construct_types()) s += " " + std::string(syntax::construct_name(t));
    s += ".\nAnswer as <construct_type>Label</construct_type>.\n";
    return s;
}

std::string classify_user_prompt(std::string_view nl) { return "<query>\n" + std::string(nl) + "\n</query>\n"; }

ConstructType parse_construct_label(std::string_view text) {
    std::string body = tagged(text, "construct_type").value_or(std::string(text));
    std::string squashed;
    for (char c : body)
        if (std::isalnum(static_cast<unsigned char>(c))) squashed.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::optional<ConstructType> best;
    std::size_t best_pos = std::string::npos, best_len = 0;
    for (auto t : syntax::all_construct_types()) {
        std::string name;
        for (char c : syntax::construct_name(t)) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        auto p = squashed.find(name);
        if (p == std::string::npos) continue;
        if (p < best_pos || (p == best_pos && name.size() > best_len)) {
            best = t;
            best_pos = p;
            best_len = name.size();
        }
    }
    if (!best) throw UnparseableLabel("no construct type in answer: " + std::string(trim(body)).substr(0, 80));
    return *best;
}

namespace {

LlmResponse call(ChatProvider& llm, const LlmRequest& req, TranslationTrace* trace) {
    LlmResponse r = llm.complete(req);
    if (trace) {
        trace->prompts.push_back(req.user);
        trace->completions.push_back(r.text);
        trace->prompt_tokens += r.prompt_tokens;
        trace->completion_tokens += r.completion_tokens;
    }
    return r;
}

// Parsed rule or the reason it could not be used.
struct Parsed {
    std::optional<match::Query> query;
    std::string error;
};

Parsed parse_answer(std::string_view completion) {
    auto block = extract_fenced(completion);
    if (!block) return {std::nullopt, "the answer has no fenced rule block"};
    try {
        return {match::compile_query(*block), {}};
    } catch (const Error& e) {
        return {std::nullopt, e.what()};
    }
}

std::string type_label(const match::Query& q) {
    try {
        return std::string(syntax::construct_name(match::anchor_construct_type(q)));
    } catch (const AmbiguousTarget&) {
        return "alternatives of different construct types";
    } catch (const UntypedTarget&) {
        return "no construct type";
    }
}

std::vector<Retrieved> examples_for(std::string_view nl, const RagIndex& index, Embedder& embedder,
                                    const TranslateOptions& opts) {
    if (opts.k == 0) return {};
    return retrieve(index, embedder, nl, opts.k);
}

}  // namespace

syntax::ConstructType expected_target_type(std::string_view nl, ChatProvider& llm, TranslationTrace* trace) {
    LlmRequest req{Task::classify, classify_system_prompt(), classify_user_prompt(nl), 0.0, {}};
    return parse_construct_label(call(llm, req, trace).text);
}

Translation translate(std::string_view nl, const RagIndex& index, Embedder& embedder, ChatProvider& llm,
                      const TranslateOptions& opts) {
    Translation t;
    auto examples = examples_for(nl, index, embedder, opts);
    for (const auto& e : examples) t.trace.retrieved_ids.push_back(e.pair->id);
    LlmRequest req{Task::translate, translate_system_prompt(opts.with_api_docs),
                   translate_user_prompt(nl, examples, opts.with_inline_comments), 0.0, {}};
    LlmResponse first = call(llm, req, &t.trace);
    Parsed p = parse_answer(first.text);
    if (!p.query) {
        ++t.trace.parse_retries;
        req.user += "\nYour previous answer could not be used: " + p.error + "\nPrevious answer:\n" + first.text +
                    "\nAnswer again with a corrected rule.\n";
        p = parse_answer(call(llm, req, &t.trace).text);
    }
    if (!p.query) {
        t.trace.failure = p.error;
        throw FailedTranslation("translation failed after one retry: " + p.error, std::move(t.trace));
    }
    t.query = std::move(p.query);
    return t;
}

void refine(std::string_view nl, Translation& t, const RagIndex& index, Embedder& embedder, ChatProvider& llm,
            const TranslateOptions& opts, int max_rounds) {
    if (!t.query) return;
    ConstructType expected;
    try {
        expected = expected_target_type(nl, llm, &t.trace);
    } catch (const UnparseableLabel&) {
        return;
    }
    auto matches_expected = [&](const match::Query& q) {
        try {
            return match::anchor_construct_type(q) == expected;
        } catch (const Error&) {
            return false;
        }
    };
    if (matches_expected(*t.query)) return;

    std::string expected_label(syntax::construct_name(expected));
    auto examples = examples_for(nl, index, embedder, opts);
    std::string base = translate_user_prompt(nl, examples, opts.with_inline_comments);
    match::Query last = *t.query;
    for (int round = 0; round < max_rounds; ++round) {
        RefineRound rr{type_label(last), expected_label, false};
        std::string user = base + "\nPrevious answer:\n" + fenced("yaml", match::render_rule(last)) + "\n" +
                           feedback_text(rr.query_type, expected_label) +
                           " Rewrite the rule so that the root of the `pattern` clause is a " +
                           construct_phrase(expected, false) + " and any surrounding code moves to `pattern-inside`.\n";
        LlmRequest req{Task::translate, translate_system_prompt(opts.with_api_docs), std::move(user), 0.0, {}};
        Parsed p = parse_answer(call(llm, req, &t.trace).text);
        rr.parsed = p.query.has_value();
        t.trace.rounds.push_back(rr);
        if (!p.query) continue;
        last = std::move(*p.query);
        if (matches_expected(last)) {
            t.query = std::move(last);
            t.trace.unresolved = false;
            return;
        }
    }
    t.query = std::move(last);
    t.trace.unresolved = true;
}

std::string locate_system_prompt() {
    return "You find code in a Java file that matches a structural code search request. List the start line "
           "of every match, one number per line, in a fenced block. Answer with an empty fenced block if "
           "nothing matches.\n";
}

std::string locate_user_prompt(std::string_view nl, std::string_view path, std::string_view source) {
    std::ostringstream out;
    out << "<query>\n" << nl << "\n</query>\n<file path=\"" << path << "\">\n";
    std::size_t line = 1, pos = 0;
    while (pos < source.size()) {
        auto nlpos = source.find('\n', pos);
        if (nlpos == std::string_view::npos) nlpos = source.size();
        out << line++ << "| " << source.substr(pos, nlpos - pos) << '\n';
        pos = nlpos + 1;
    }
    out << "</file>\n";
    return out.str();
}

std::vector<std::uint32_t> parse_line_answer(std::string_view text) {
    std::string body = extract_fenced(text).value_or(std::string(text));
    std::vector<std::uint32_t> lines;
    std::istringstream in(body);
    std::string row;
    while (std::getline(in, row)) {
        std::string_view r = trim(row);
        std::size_t n = 0;
        while (n < r.size() && std::isdigit(static_cast<unsigned char>(r[n]))) ++n;
        if (n == 0 || n > 9) continue;
        lines.push_back(static_cast<std::uint32_t>(std::stoul(std::string(r.substr(0, n)))));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

}  // namespace scs::nl
