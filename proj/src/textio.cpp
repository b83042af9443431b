#include "drendo/textio.hpp"

#include <cctype>

namespace drendo {

std::string to_string(const Fq& F, FqElt v) {
    if (F.n() == 1 || v < F.p()) return std::to_string(v);
    std::string out;
    for (unsigned i = F.n(); i-- > 0;) {
        unsigned dig = F.digit(v, i);
        if (dig == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(dig);
        } else {
            if (dig != 1) out += std::to_string(dig);
            out += F.label();
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const Fq& F, const APoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int k = a.deg(); k >= 0; --k) {
        FqElt c = a.c[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(F, c);
        bool multi = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out += cs;
        } else {
            if (multi)
                out += "(" + cs + ")";
            else if (cs != "1")
                out += cs;
            out += (k == 1) ? "T" : "T^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

struct Parser {
    const Fq& F;
    std::string s;
    size_t pos = 0;

    explicit Parser(const Fq& F_, std::string_view text) : F(F_) {
        // Normalize U+2212 to '-' and strip whitespace.
        for (size_t i = 0; i < text.size();) {
            unsigned char c = text[i];
            if (c == 0xE2 && i + 2 < text.size() &&
                static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                s += '-';
                i += 3;
            } else if (std::isspace(c)) {
                ++i;
            } else {
                s += static_cast<char>(c);
                ++i;
            }
        }
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        throw invalid_input("parse error at position " + std::to_string(pos) + ": " + why);
    }

    APoly parse() {
        APoly v = expr();
        if (!eof()) fail("trailing input");
        return v;
    }

    APoly expr() {
        APoly acc = peek() == '-' ? APoly() : term();
        while (!eof()) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = add(F, acc, term());
            } else if (c == '-') {
                ++pos;
                acc = sub(F, acc, term());
            } else {
                break;
            }
        }
        return acc;
    }

    APoly term() {
        APoly acc = factor();
        while (!eof()) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = mul(F, acc, factor());
            } else if (c == '(' || c == 'T' || std::isdigit(static_cast<unsigned char>(c)) ||
                       starts_label()) {
                acc = mul(F, acc, factor());  // implicit product
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_label() const {
        return !F.label().empty() && s.compare(pos, F.label().size(), F.label()) == 0;
    }

    APoly factor() {
        APoly b = base();
        if (!eof() && peek() == '^') {
            ++pos;
            unsigned long long e = integer();
            APoly acc = APoly::one();
            for (unsigned long long i = 0; i < e; ++i) acc = mul(F, acc, b);
            return acc;
        }
        return b;
    }

    APoly base() {
        if (eof()) fail("unexpected end");
        char c = peek();
        if (c == '(') {
            ++pos;
            APoly v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return v;
        }
        if (c == 'T') {
            ++pos;
            return APoly::T();
        }
        if (starts_label()) {
            if (F.n() == 1) fail("generator symbol in a prime field");
            pos += F.label().size();
            return APoly::constant(F.gen());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return APoly::constant(F.from_int(static_cast<long long>(integer())));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    unsigned long long integer() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        unsigned long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long long>(s[pos] - '0');
            ++pos;
        }
        return v;
    }
};

}  // namespace

APoly parse_poly(const Fq& F, std::string_view text) {
    Parser p(F, text);
    return p.parse();
}

FqElt parse_fq(const Fq& F, std::string_view text) {
    APoly v = parse_poly(F, text);
    if (v.deg() > 0) throw invalid_input("expected a field constant, got a polynomial in T");
    return v.coeff(0);
}

}  // namespace drendo
