#include "gwlp/rational.hpp"

#include "gwlp/design.hpp"

#include <charconv>
#include <cstdlib>
#include <fmt/format.h>

namespace gwlp {

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) return fmt::format("{}", value.numerator());
    return fmt::format("{}/{}", value.numerator(), value.denominator());
}

__extension__ using i128 = __int128;

std::string to_decimal(const Rational& value, int digits) {
    // round half away from zero at `digits` places, in integer arithmetic
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = value < 0;
    const Rational mag = negative ? -value : value;
    const i128 num = static_cast<i128>(mag.numerator()) * scale * 2 + mag.denominator();
    const i128 den = static_cast<i128>(mag.denominator()) * 2;
    const auto scaled = static_cast<std::int64_t>(num / den);
    const std::int64_t whole = scaled / scale;
    const std::int64_t frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += fmt::format("{}", whole);
    if (digits > 0) out += fmt::format(".{:0{}}", frac, digits);
    return out;
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
    std::int64_t v = 0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ValidationError(fmt::format("'{}' is not a rational number", whole));
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
        if (den == 0) throw ValidationError(fmt::format("'{}' has a zero denominator", text));
        return Rational(parse_int(std::string_view(text).substr(0, slash), text), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string_view frac = std::string_view(text).substr(dot + 1);
        if (frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw ValidationError(fmt::format("'{}' is not a rational number", text));
        std::string_view ip = std::string_view(text).substr(0, dot);
        const bool negative = !ip.empty() && ip.front() == '-';
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t whole = ip.empty() || ip == "-" || ip == "+" ? 0 : parse_int(ip, text);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac, text);
        Rational r(std::abs(whole) * scale + f, scale);
        return negative ? -r : r;
    }
    return Rational(parse_int(text, text));
}

}  // namespace gwlp
