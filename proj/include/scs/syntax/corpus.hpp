#ifndef SCS_SYNTAX_CORPUS_HPP
#define SCS_SYNTAX_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scs/syntax/syntax_tree.hpp"

namespace scs::syntax {

struct SourceFile {
    std::string path;  // relative to the corpus root, '/' separated
    std::unique_ptr<SyntaxTree> tree;

    const std::string& text() const { return tree->source(); }
};

struct ExcludedFile {
    std::string path;
    std::string reason;
};

class Corpus {
  public:
    // Accepts a directory (every .java file below it) or a corpus.json manifest.
    static Corpus load(const std::filesystem::path& path);
    static Corpus from_sources(std::vector<std::pair<std::string, std::string>> sources,
                               std::string root = ".");

    const std::string& root() const { return root_; }
    const std::vector<SourceFile>& files() const { return files_; }
    const std::vector<ExcludedFile>& excluded() const { return excluded_; }
    const std::string& sha256() const { return sha256_; }

    // Throws UnknownFile.
    const SourceFile& file(const std::string& path) const;
    const SourceFile* find(const std::string& path) const;

    // Manifest JSON: {"root", "files", "sha256"}.
    std::string manifest_json() const;

  private:
    void add(std::string path, std::string text);
    void finish();

    std::string root_;
    std::vector<SourceFile> files_;
    std::vector<ExcludedFile> excluded_;
    std::string sha256_;
    std::string hash_input_;
};

// Innermost method, constructor or compact constructor containing the line.
// Throws UnknownFile.
std::optional<Span> enclosing_method(const Corpus& corpus, const std::string& file_id,
                                     std::uint32_t line);
std::optional<Span> enclosing_method(const SyntaxTree& tree, std::uint32_t line);

std::string sha256_hex(std::string_view data);

}  // namespace scs::syntax

#endif  // SCS_SYNTAX_CORPUS_HPP
