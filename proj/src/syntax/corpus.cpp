#include "scs/syntax/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scs/error.hpp"
#include "scs/syntax/parser.hpp"

namespace scs::syntax {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Corpus Corpus::load(const fs::path& path) {
    Corpus c;
    std::vector<std::pair<std::string, fs::path>> listing;
    std::string expected_hash;
    if (fs::is_directory(path)) {
        c.root_ = path.string();
        for (const auto& entry : fs::recursive_directory_iterator(path)) {
            if (entry.is_regular_file() && entry.path().extension() == ".java")
                listing.emplace_back(fs::relative(entry.path(), path).generic_string(), entry.path());
        }
    } else if (fs::is_regular_file(path)) {
        nlohmann::json manifest;
        try {
            manifest = nlohmann::json::parse(read_file(path));
        } catch (const nlohmann::json::exception& e) {
            throw CorpusError("bad manifest " + path.string() + ": " + e.what());
        }
        if (!manifest.is_object() || !manifest.contains("root") || !manifest.contains("files"))
            throw CorpusError("manifest needs \"root\" and \"files\": " + path.string());
        fs::path root = manifest["root"].get<std::string>();
        if (root.is_relative()) root = path.parent_path() / root;
        c.root_ = root.lexically_normal().string();
        for (const auto& f : manifest["files"]) {
            auto rel = f.get<std::string>();
            if (fs::path(rel).extension() != ".java") continue;
            listing.emplace_back(rel, root / rel);
        }
        if (manifest.contains("sha256")) expected_hash = manifest["sha256"].get<std::string>();
    } else {
        throw CorpusError("no such corpus: " + path.string());
    }
    std::sort(listing.begin(), listing.end());
    for (auto& [rel, full] : listing) c.add(rel, read_file(full));
    c.finish();
    if (!expected_hash.empty() && expected_hash != c.sha256_)
        throw CorpusError("corpus content does not match the manifest hash");
    return c;
}

Corpus Corpus::from_sources(std::vector<std::pair<std::string, std::string>> sources, std::string root) {
    Corpus c;
    c.root_ = std::move(root);
    std::sort(sources.begin(), sources.end());
    for (auto& [path, text] : sources) c.add(std::move(path), std::move(text));
    c.finish();
    return c;
}

void Corpus::add(std::string path, std::string text) {
    hash_input_ += path;
    hash_input_ += '\n';
    hash_input_ += sha256_hex(text);
    hash_input_ += '\n';
    try {
        auto tree = parse_source(std::move(text), path);
        files_.push_back(SourceFile{std::move(path), std::move(tree)});
    } catch (const ParseError& e) {
        excluded_.push_back(ExcludedFile{std::move(path), e.what()});
    }
}

void Corpus::finish() {
    sha256_ = sha256_hex(hash_input_);
    hash_input_.clear();
}

const SourceFile* Corpus::find(const std::string& path) const {
    auto it = std::lower_bound(files_.begin(), files_.end(), path,
                               [](const SourceFile& f, const std::string& p) { return f.path < p; });
    return it != files_.end() && it->path == path ? &*it : nullptr;
}

const SourceFile& Corpus::file(const std::string& path) const {
    if (const auto* f = find(path)) return *f;
    throw UnknownFile(path);
}

std::string Corpus::manifest_json() const {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& f : files_) files.push_back(f.path);
    for (const auto& f : excluded_) files.push_back(f.path);
    std::vector<std::string> sorted = files.get<std::vector<std::string>>();
    std::sort(sorted.begin(), sorted.end());
    nlohmann::json j{{"root", root_}, {"files", sorted}, {"sha256", sha256_}};
    return j.dump(2);
}

std::optional<Span> enclosing_method(const SyntaxTree& tree, std::uint32_t line) {
    std::optional<NodeId> best;
    for (NodeId id = 0; id < tree.size(); ++id) {
        if (!is_method_like(tree.node(id).kind)) continue;
        if (!tree.span(id).contains_line(line)) continue;
        best = id;  // preorder: later hits are nested deeper
    }
    if (!best) return std::nullopt;
    return tree.span(*best);
}

std::optional<Span> enclosing_method(const Corpus& corpus, const std::string& file_id, std::uint32_t line) {
    return enclosing_method(*corpus.file(file_id).tree, line);
}

}  // namespace scs::syntax
