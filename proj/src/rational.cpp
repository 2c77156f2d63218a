#include "walklab/rational.hpp"

#include <charconv>
#include <numeric>

#include "walklab/errors.hpp"

namespace walklab {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw DataError(detail::concat("malformed rational '", whole, "'"));
    }
    return value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Rational out;
    if (slash == std::string_view::npos) {
        out.num = parse_int(text, text);
        out.den = 1;
    } else {
        out.num = parse_int(text.substr(0, slash), text);
        out.den = parse_int(text.substr(slash + 1), text);
    }
    if (out.den <= 0) {
        throw DataError(detail::concat("rational '", text, "' needs a positive denominator"));
    }
    const std::int64_t g = std::gcd(out.num, out.den);
    if (g > 1) {
        out.num /= g;
        out.den /= g;
    }
    return out;
}

} // namespace walklab
