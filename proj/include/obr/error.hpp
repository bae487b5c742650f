#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace obr {

enum class ErrorCode {
  kParse,
  kLimitExceeded,
  kInvalidInput,
  kInconsistentInput,
  kInconsistentEvidence,
  kEmptySet,
  kUndeterminedSentence,
  kAlreadyBelieved,
  kNoGoalDerivation,
  kEmptyCandidates,
  kUnknownProperty,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Raised by revise_sequence; wraps the failing step's error.
class StepError : public Error {
 public:
  StepError(std::size_t step, const Error& cause)
      : Error(cause.code(), "step " + std::to_string(step) + ": " + cause.what()),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace obr
