#include <cctype>

#include "weylstab/cli.hpp"

namespace weylstab::cli {

namespace {

class Parser {
public:
    Parser(std::string_view text, const AlgebraDescriptor& a) : text_(text), alg_(a) {}

    WeylElement parse() {
        WeylElement e = expr();
        skip();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& msg, ErrorCode code = ErrorCode::ParseError) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(code, msg, line, col);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    WeylElement expr() {
        WeylElement acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    WeylElement term() {
        bool negate = accept('-');
        WeylElement acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return negate ? -acc : acc;
    }

    WeylElement factor() {
        WeylElement base = atom();
        if (!accept('^'))
            return base;
        skip();
        std::string k = digits();
        if (k.empty())
            error("expected a natural exponent");
        if (k.size() > 5 || std::stoul(k) > 65535)
            fail(ErrorCode::ResourceExceeded, "exponent " + k + " is too large");
        return base.pow(static_cast<unsigned>(std::stoul(k)));
    }

    WeylElement atom() {
        skip();
        if (pos_ >= text_.size())
            error("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            WeylElement e = expr();
            if (!accept(')'))
                error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string d = digits();
                if (d.empty())
                    error("expected a denominator");
                den = Integer(d);
                if (sgn(den) == 0)
                    error("zero denominator");
            }
            return WeylElement::constant(alg_, Rational(num, den));
        }
        if (c == 'p') {
            ++pos_;
            return WeylElement::constant(alg_, Rational(alg_.prime));
        }
        if (c == 'x' || c == 'X' || c == 'd' || c == 'Y') {
            std::size_t at = pos_;
            ++pos_;
            std::string k = digits();
            if (k.empty())
                error(std::string("expected an index after '") + c + "'");
            unsigned long i = k.size() > 9 ? 0 : std::stoul(k);
            if (i < 1 || i > alg_.d) {
                pos_ = at;
                error("unknown variable " + std::string(1, c) + k + " (d = " + std::to_string(alg_.d) + ")",
                      ErrorCode::UnknownVariable);
            }
            auto idx = static_cast<std::uint32_t>(i);
            return (c == 'x' || c == 'X') ? WeylElement::x(alg_, idx) : WeylElement::eta(alg_, idx);
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const AlgebraDescriptor& alg_;
    std::size_t pos_ = 0;
};

} // namespace

WeylElement parse_expression(std::string_view text, const AlgebraDescriptor& algebra) {
    algebra.validate();
    return Parser(text, algebra).parse();
}

std::pair<std::uint32_t, std::uint32_t> parse_window(std::string_view text) {
    auto dots = text.find("..");
    auto number = [&](std::string_view s) -> std::uint32_t {
        if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError(ErrorCode::ParseError, "bad scan window '" + std::string(text) + "'", 1, 1);
        return static_cast<std::uint32_t>(std::stoul(std::string(s)));
    };
    if (dots == std::string_view::npos)
        throw ParseError(ErrorCode::ParseError, "scan window must look like a..b", 1, 1);
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

} // namespace weylstab::cli
