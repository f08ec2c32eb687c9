#pragma once

#include <stdexcept>
#include <string>

namespace crowdshield {

// Bad input data: malformed corpus records, missing files, contract
// violations in external payloads. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad invocation (invalid flag values and the like); exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "[warn] ..." on stderr
void warn(const std::string& msg);

}  // namespace crowdshield
