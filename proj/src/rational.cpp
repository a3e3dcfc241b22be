#include "lpc/rational.hpp"

#include "lpc/error.hpp"

#include <cctype>

namespace lpc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(1);
    if (slash != std::string_view::npos) {
        d = Integer(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (s.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Vector parse_rational_list(std::string_view text, char sep) {
    Vector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(parse_rational(text.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

}  // namespace lpc
