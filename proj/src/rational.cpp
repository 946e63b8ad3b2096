#include "teslerforge/rational.hpp"

#include <cctype>

namespace teslerforge {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);

    std::size_t num_start = 0;
    if (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) num_start = 1;
    if (!all_digits(num_part, num_start, num_part.size()) ||
        !all_digits(den_part, 0, den_part.size())) {
        throw Error(errc::parse_error, "invalid rational literal: '" + text + "'");
    }

    const Int num(num_part);
    const Int den(den_part);
    if (den == 0) {
        throw Error(errc::parse_error, "zero denominator in rational literal: '" + text + "'");
    }
    // Division canonicalizes; the string constructor of mpq would not.
    return Rat(num) / Rat(den);
}

std::string rat_to_string(const Rat& value) {
    return value.str();
}

bool is_integer(const Rat& value) {
    return denominator(value) == 1;
}

}  // namespace teslerforge
