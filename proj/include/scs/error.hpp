#ifndef SCS_ERROR_HPP
#define SCS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace scs {

// Base class for every error the toolkit raises on purpose. Anything else
// escaping a public function is a bug.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// syntax-core

class ParseError : public Error {
  public:
    ParseError(std::string file_id, std::size_t line, std::size_t col, const std::string& what)
        : Error(file_id + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          file_id_(std::move(file_id)), line_(line), col_(col) {}

    const std::string& file_id() const { return file_id_; }
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

  private:
    std::string file_id_;
    std::size_t line_;
    std::size_t col_;
};

class UnknownFile : public Error {
  public:
    explicit UnknownFile(const std::string& file_id) : Error("unknown file: " + file_id) {}
};

class CorpusError : public Error {
  public:
    using Error::Error;
};

// match-engine

class RuleSyntaxError : public Error {
  public:
    using Error::Error;
};

class PatternParseError : public Error {
  public:
    using Error::Error;
};

class AnchorError : public Error {
  public:
    using Error::Error;
};

class AmbiguousTarget : public Error {
  public:
    using Error::Error;
};

// The anchor pattern's root is a hole or a node outside the construct taxonomy.
class UntypedTarget : public Error {
  public:
    using Error::Error;
};

// query-gen

class EmptyCorpus : public Error {
  public:
    EmptyCorpus() : Error("corpus has no code constructs") {}
};

class NoAncestor : public Error {
  public:
    using Error::Error;
};

class NothingToGeneralize : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

// nl-bridge

class ProviderError : public Error {
  public:
    using Error::Error;
};

class ExtractionError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class EmptyIndex : public Error {
  public:
    EmptyIndex() : Error("retrieval index is empty") {}
};

class TranslationFailed : public Error {
  public:
    using Error::Error;
};

class UnparseableLabel : public Error {
  public:
    using Error::Error;
};

// eval

class BenchmarkError : public Error {
  public:
    using Error::Error;
};

class BudgetRefused : public Error {
  public:
    using Error::Error;
};

}  // namespace scs

#endif  // SCS_ERROR_HPP
