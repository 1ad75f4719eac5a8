#pragma once

#include <stdexcept>
#include <string>

namespace topicsum {

// Single error type for everything the library can reject: bad input files,
// violated preconditions, unknown topics. The message is the contract.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topicsum
