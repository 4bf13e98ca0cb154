#include "lh/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace lh {

namespace {

void appendMonomial(std::ostringstream& out, const Monomial& m) {
    bool first = true;
    for (int i = 1; i <= m.numVars(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'y' << i;
        if (e != 1) out << '^' << e;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LaurentPoly parse() {
        LaurentPoly result;
        skipSpace();
        if (atEnd()) throw ParseError("empty input", pos_);
        bool negative = consumeSign();
        result += parseTerm(negative);
        skipSpace();
        while (!atEnd()) {
            negative = consumeRequiredSign();
            result += parseTerm(negative);
            skipSpace();
        }
        return result;
    }

private:
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skipSpace() {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Optional sign before the first term.
    bool consumeSign() {
        if (!atEnd() && (peek() == '+' || peek() == '-')) {
            const bool neg = peek() == '-';
            ++pos_;
            skipSpace();
            return neg;
        }
        return false;
    }

    bool consumeRequiredSign() {
        if (atEnd() || (peek() != '+' && peek() != '-'))
            throw ParseError("expected '+' or '-'", pos_);
        const bool neg = peek() == '-';
        ++pos_;
        skipSpace();
        return neg;
    }

    LaurentPoly parseTerm(bool negative) {
        Coeff coeff = 1;
        bool sawFactor = false;
        std::vector<int> exps;

        if (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parseUnsignedInteger();
            sawFactor = true;
            skipSpace();
            if (!atEnd() && peek() == '*') {
                ++pos_;
                skipSpace();
                parseVariableFactors(exps);
            }
        } else {
            parseVariableFactors(exps);
            sawFactor = true;
        }

        if (!sawFactor) throw ParseError("expected a term", pos_);
        if (negative) coeff = -coeff;
        return LaurentPoly::term(std::move(coeff), Monomial(std::move(exps)));
    }

    void parseVariableFactors(std::vector<int>& exps) {
        parseVariableFactor(exps);
        skipSpace();
        while (!atEnd() && peek() == '*') {
            ++pos_;
            skipSpace();
            parseVariableFactor(exps);
            skipSpace();
        }
    }

    void parseVariableFactor(std::vector<int>& exps) {
        if (atEnd() || peek() != 'y') throw ParseError("expected variable", pos_);
        ++pos_;
        const long index = parseLong(false);
        if (index < 1) throw ParseError("variable index must be positive", pos_);
        long exponent = 1;
        if (!atEnd() && peek() == '^') {
            ++pos_;
            exponent = parseLong(true);
        }
        if (exps.size() < static_cast<std::size_t>(index)) exps.resize(index, 0);
        exps[static_cast<std::size_t>(index - 1)] += static_cast<int>(exponent);
    }

    Coeff parseUnsignedInteger() {
        const std::size_t start = pos_;
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return Coeff(std::string(text_.substr(start, pos_ - start)));
    }

    long parseLong(bool allowSign) {
        const std::size_t start = pos_;
        if (allowSign && !atEnd() && (peek() == '+' || peek() == '-')) ++pos_;
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            throw ParseError("expected integer", pos_);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string formatPoly(const LaurentPoly& p) {
    if (p.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Coeff mag = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (m.isOne()) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            appendMonomial(out, m);
        }
    }
    return out.str();
}

LaurentPoly parsePoly(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace lh
