#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace walklab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input data that violates a documented precondition (bad graph, bad
/// weights, unreadable file contents).
class DataError : public Error {
  public:
    using Error::Error;
};

/// Graph construction and generator failures. `kind()` identifies which
/// validation rule rejected the input.
class GraphError : public DataError {
  public:
    enum class Kind {
        self_loop,
        duplicate_edge,
        out_of_range,
        disconnected,
        empty,
        invalid_parameter,
        non_canonical,
    };

    GraphError(Kind kind, const std::string &what) : DataError(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

/// A mathematical invariant that must hold for every valid input failed.
/// Indicates a bug (or numerical breakdown), never a user error.
class InvariantError : public Error {
  public:
    using Error::Error;
};

namespace detail {

template <typename... Args>
std::string concat(Args &&...args) {
    std::ostringstream os;
    os.precision(17);
    (os << ... << args);
    return os.str();
}

} // namespace detail
} // namespace walklab

#define WALKLAB_ENSURE(condition, ...)                                                   \
    do {                                                                                 \
        if (!(condition)) {                                                              \
            throw ::walklab::InvariantError(::walklab::detail::concat(                   \
                "invariant `" #condition "` failed at ", __FILE__, ":", __LINE__, ": ",  \
                __VA_ARGS__));                                                           \
        }                                                                                \
    } while (false)
