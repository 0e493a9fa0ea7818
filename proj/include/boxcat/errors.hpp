#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace boxcat {

// Library errors carry a stable machine-readable code plus an optional
// witness, preformatted as a JSON fragment so the CLI can emit it verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, std::string witness_json = "")
      : std::runtime_error(message),
        code_(std::move(code)),
        witness_(std::move(witness_json)) {}

  const std::string& code() const { return code_; }
  const std::string& witness_json() const { return witness_; }

private:
  std::string code_;
  std::string witness_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message,
                              std::string witness_json = "") {
  throw Error(code, message, std::move(witness_json));
}

}  // namespace boxcat
