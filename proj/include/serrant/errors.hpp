#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace serrant {

// Root of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed M2, CoNLL-U, lexicon or wordlist text. line is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Record-level validation failure on emission.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t record, const std::string& what)
      : Error("record " + std::to_string(record) + ": " + what), record_(record) {}
  std::size_t record() const noexcept { return record_; }

 private:
  std::size_t record_;
};

class IngestionError : public Error {
 public:
  using Error::Error;
};

// Annotation forms do not line up with the surface tokens.
class AttachError : public Error {
 public:
  AttachError(std::size_t index, const std::string& what)
      : Error("token " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class AnnotationMissingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Failure while processing one sentence of a corpus.
class PipelineError : public Error {
 public:
  PipelineError(std::size_t sentence, const std::string& what)
      : Error("sentence " + std::to_string(sentence) + ": " + what), sentence_(sentence) {}
  std::size_t sentence() const noexcept { return sentence_; }

 private:
  std::size_t sentence_;
};

// Caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace serrant
