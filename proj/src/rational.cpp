#include "fairdiv/rational.hpp"

#include <cctype>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }

    std::string_view num_part = rest;
    std::string_view den_part;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        if (!all_digits(den_part))
            throw ParseError("bad rational '" + std::string(text) +
                             "': denominator must be a positive integer");
    }
    if (!all_digits(num_part))
        throw ParseError("bad rational '" + std::string(text) +
                         "': expected \"p\" or \"p/q\" with integer digits");

    BigInt num{std::string(num_part)};
    BigInt den = den_part.empty() ? BigInt(1) : BigInt{std::string(den_part)};
    if (den == 0)
        throw ParseError("bad rational '" + std::string(text) + "': zero denominator");
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

double approx(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace fairdiv
