#pragma once

#include <stdexcept>
#include <string>

namespace radardet {

// Error taxonomy shared by the library and the CLI. The CLI maps each
// category to a distinct exit code and prints it as a machine-readable tag.
enum class ErrorCategory {
  kConfig,      // bad configuration values or ranges
  kFormat,      // malformed on-disk data
  kValidation,  // semantically invalid data (NaN fields, orphan ids, ...)
  kArgument,    // bad call arguments (m > N, empty input, ...)
  kContract,    // shape/dimension mismatch between pipeline stages
  kIo,          // filesystem failures
};

const char* error_category_name(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(error_category_name(category)) + ": " + message),
        category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error(ErrorCategory::kConfig, m) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& m) : Error(ErrorCategory::kFormat, m) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& m) : Error(ErrorCategory::kValidation, m) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& m) : Error(ErrorCategory::kArgument, m) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& m) : Error(ErrorCategory::kContract, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorCategory::kIo, m) {}
};

}  // namespace radardet
