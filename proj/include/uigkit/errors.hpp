#ifndef UIGKIT_ERRORS_HPP
#define UIGKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uigkit {

// Bad invocation: unknown format, k <= 0, empty required argument.
// The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Bad or missing data: unreadable file, malformed header, empty graph
// where one is required. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace uigkit

#endif
