#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace walklab {

/// Positive fraction num/den kept in lowest terms. Used for alpha so the
/// size requirement can be compared in integers.
struct Rational {
    std::int64_t num = 2;
    std::int64_t den = 3;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Parses "p/q" (or an integer "p"); throws DataError on malformed input.
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational &, const Rational &) = default;
};

} // namespace walklab
