#include "mvp/parser.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "mvp/errors.hpp"

namespace mvp {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool starts_item(char c) { return is_alpha(c) || is_digit(c) || c == '.'; }

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    Mvp run() {
        skip_ws();
        if (at_end()) fail("empty expression");

        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1.0 : 1.0;
            skip_ws();
        }
        product(sign);

        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') {
                if (c == '*' || c == '^') fail(std::string("misplaced '") + c + "'");
                fail(std::string("illegal character '") + c + "'");
            }
            sign = take() == '-' ? -1.0 : 1.0;
            skip_ws();
            product(sign);
        }
        return std::move(result_);
    }

private:
    void product(double sign) {
        double coeff = sign;
        std::vector<Term::Entry> raw;
        item(coeff, raw);
        while (true) {
            std::size_t save = pos_;
            bool spaced = skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                item(coeff, raw);
            } else if (!at_end() && starts_item(peek())) {
                if (!spaced) fail("expected whitespace or '*' between factors");
                item(coeff, raw);
            } else {
                pos_ = save;
                break;
            }
        }
        Term t;
        try {
            t = Term::from_pairs(std::move(raw));
        } catch (const DomainError& e) {
            fail(e.what());
        }
        result_.accumulate(t, coeff);
    }

    void item(double& coeff, std::vector<Term::Entry>& raw) {
        if (at_end()) fail("dangling operator");
        char c = peek();
        if (is_digit(c) || c == '.') {
            coeff *= number();
        } else if (is_alpha(c)) {
            std::size_t start = pos_;
            while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_')) ++pos_;
            Symbol name(in_.substr(start, pos_ - start));
            Power power = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                power = exponent();
            }
            raw.emplace_back(std::move(name), power);
        } else if (c == '+' || c == '-' || c == '*') {
            fail("dangling operator");
        } else {
            fail(std::string("illegal character '") + c + "'");
        }
    }

    double number() {
        std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && is_digit(peek())) ++pos_;
        }
        std::string_view text = in_.substr(start, pos_ - start);
        if (text == ".") fail("invalid number", start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::fixed);
        if (ec != std::errc() || ptr != text.data() + text.size()) fail("invalid number", start);
        return value;
    }

    Power exponent() {
        std::size_t start = pos_;
        bool negative = !at_end() && peek() == '-';
        if (negative) ++pos_;
        std::size_t digits = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        if (pos_ == digits) fail("invalid exponent", start);
        if (!at_end() && peek() == '.') fail("invalid exponent", start);
        std::string_view text = in_.substr(start, pos_ - start);
        Power value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) fail("invalid exponent", start);
        return value;
    }

    bool skip_ws() {
        std::size_t start = pos_;
        while (!at_end() && is_space(peek())) ++pos_;
        return pos_ != start;
    }

    bool at_end() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }
    char take() { return in_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const { throw ParseError(at, message); }

    std::string_view in_;
    std::size_t pos_ = 0;
    Mvp result_;
};

}  // namespace

Mvp parse(std::string_view input) {
    return Parser(input).run();
}

Mvp parse_or_lift(std::string_view input) {
    return parse(input);
}

Mvp parse_or_lift(double value) {
    return Mvp(value);
}

}  // namespace mvp
