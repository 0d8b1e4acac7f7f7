#include "uqf4/expr.hpp"

#include <cctype>
#include <string>

namespace uqf4 {

int root_by_word(std::string_view w) {
    for (int i = 1; i <= kNumRoots; ++i)
        if (root_entry(i).word == w) return i;
    return 0;
}

namespace {

using Elem = PbwElem<RatFunc2>;

class Parser {
public:
    Parser(std::string_view text, PbwEngine<RatFunc2>& eng) : s_(text), eng_(eng) {}

    Elem parse() {
        Elem v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    PbwEngine<RatFunc2>& eng_;

    [[noreturn]] void fail(const std::string& why) const {
        throw CoeffError("expression: " + why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                         "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Elem scalar(const RatFunc2& c) { return Elem(PbwMono{}, c); }

    static bool is_scalar(const Elem& x) { return x.is_zero() || (x.size() == 1 && x.terms().begin()->first.is_one()); }

    Elem expr() {
        Elem v;
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        v = term();
        if (neg) v *= RatFunc2(-1);
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v += term();
            } else if (c == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    bool starts_factor(char c) {
        return std::isdigit((unsigned char)c) || c == 'r' || c == 's' || c == '(' || c == 'E' || c == '[';
    }

    Elem term() {
        Elem v = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = eng_.multiply(v, power());
            } else if (starts_factor(c)) {
                v = eng_.multiply(v, power());
            } else {
                return v;
            }
        }
    }

    Elem power() {
        Elem base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        int n = integer();
        if (!neg) return eng_.power(base, n);
        if (!is_scalar(base) || base.is_zero()) fail("negative power of a non-scalar");
        return scalar(base.terms().begin()->second.pow(-n));
    }

    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    Elem atom() {
        char c = peek();
        if (std::isdigit((unsigned char)c)) return scalar(RatFunc2(integer()));
        if (c == 'r') {
            ++pos_;
            return scalar(RatFunc2::r());
        }
        if (c == 's') {
            ++pos_;
            return scalar(RatFunc2::s());
        }
        if (c == '(') {
            ++pos_;
            Elem v = expr();
            expect(')');
            return v;
        }
        if (c == 'E') {
            ++pos_;
            expect('{');
            std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
            std::string_view w = s_.substr(start, pos_ - start);
            expect('}');
            int k = root_by_word(w);
            if (!k) fail("unknown root word " + std::string(w));
            return eng_.root_vector(k);
        }
        if (c == '[') {
            ++pos_;
            Elem x = expr();
            expect(',');
            Elem y = expr();
            expect(']');
            if (x.is_zero() || y.is_zero()) return {};
            if (!x.homogeneous() || !y.homogeneous()) fail("bracket of inhomogeneous elements");
            return eng_.bracket(x, y);
        }
        fail("expected a factor");
    }
};

}  // namespace

PbwElem<RatFunc2> evaluate_expression(std::string_view text, PbwEngine<RatFunc2>& eng) {
    return Parser(text, eng).parse();
}

}  // namespace uqf4
