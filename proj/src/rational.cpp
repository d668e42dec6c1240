#include "fockjordan/rational.hpp"

#include "fockjordan/errors.hpp"

#include <cctype>

namespace fockjordan {

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt to_bigint(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s, true)) {
            throw DomainError("malformed rational '" + std::string(text) + "'");
        }
        return Rational(to_bigint(s));
    }
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d = to_bigint(den);
    if (d == 0) {
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(to_bigint(num), d);
    q.canonicalize();
    return q;
}

} // namespace fockjordan
