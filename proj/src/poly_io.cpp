#include "lpc/poly_io.hpp"

#include "lpc/error.hpp"

#include <cctype>
#include <limits>

namespace lpc {

namespace {

std::string var_name(std::size_t v, const std::vector<std::string>& labels) {
    if (v < labels.size()) return labels[v];
    return "x" + std::to_string(v);
}

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars, const std::vector<std::string>& labels)
        : s_(text), n_(nvars), labels_(labels) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > std::numeric_limits<unsigned>::max()) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal numbers are not accepted");
            return Polynomial::constant(n_, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Polynomial::variable(n_, resolve(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::size_t resolve(std::string_view name) {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == name) return i;
        std::string_view digits = name;
        if (!digits.empty() && digits.front() == 'x') {
            digits.remove_prefix(1);
            if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
            bool ok = !digits.empty();
            for (char d : digits) ok = ok && std::isdigit(static_cast<unsigned char>(d));
            if (ok) {
                std::size_t idx = std::stoul(std::string(digits));
                if (idx >= n_) fail("variable index out of range: " + std::string(name));
                return idx;
            }
        }
        fail("unknown variable '" + std::string(name) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t n_;
    const std::vector<std::string>& labels_;
};

}  // namespace

std::string render(const Polynomial& p, const std::vector<std::string>& labels) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string body;
        if (mag != 1 || m.is_one()) body = format_rational(mag);
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty()) body += "*";
            body += var_name(v, labels);
            if (e > 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const std::vector<std::string>& labels) {
    return Parser(text, nvars, labels).parse();
}

}  // namespace lpc
