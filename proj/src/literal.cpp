#include "quadcdr/literal.hpp"

#include <cctype>
#include <string>

#include "quadcdr/error.hpp"

namespace quadcdr {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : s_(text) {}

    std::vector<Element> generator_list() {
        std::vector<Element> gens;
        skip_ws();
        bool bracketed = accept('[');
        gens.push_back(expression());
        while (accept(','))
            gens.push_back(expression());
        if (bracketed && !accept(']'))
            fail("expected ']'");
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return gens;
    }

  private:
    Element expression() {
        Element sum{0, 0};
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        for (;;) {
            Element t = term();
            sum = negate ? elem_sub(sum, t) : elem_add(sum, t);
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                return sum;
        }
    }

    // INT | w | INT*w | w*INT
    Element term() {
        skip_ws();
        if (accept('w')) {
            if (accept('*'))
                return {0, integer()};
            return {0, 1};
        }
        Int k = integer();
        if (accept('*')) {
            if (!accept('w'))
                fail("expected 'w' after '*'");
            return {0, k};
        }
        return {k, 0};
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(pos_ == s_.size() ? "unexpected end of input" : "expected an integer or 'w'");
        return Int(std::string(s_.substr(start, pos_ - start)), 10);
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    "at position " + std::to_string(pos_) + ": " + what + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Element> parse_generators(std::string_view text) {
    return Parser(text).generator_list();
}

Ideal parse_ideal_literal(const RingSpec& ring, std::string_view text) {
    auto gens = parse_generators(text);
    auto ideal = from_generators(ring, gens);
    if (!ideal)
        throw Error(ErrorCode::ZeroIdeal, "\"" + std::string(text) + "\" generates the zero ideal");
    return *ideal;
}

}  // namespace quadcdr
