#pragma once

// Text input for ideals.
//
//   ideal    := gen (separator gen)*        separator := newline | ";"
//   gen      := ["+"|"-"] term (("+"|"-") term)*
//   term     := coeff ["*"] factor (["*"] factor)* | coeff | factor (["*"] factor)*
//   factor   := var ["^" posint]
//   coeff    := integer | integer "/" posint
//   var      := letter (letter | digit | "_")*
//
// Blanks separate tokens ("x y" is x*y), "#" starts a comment that runs to
// the end of the line, and empty generators are skipped. Variables are
// ordered by declaration when a list is supplied, else by first appearance.

#include "jetlct/polynomial.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jetlct {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, Separator, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        i += k;
        col += k;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (c == '\n') {
            out.push_back({Tok::Separator, "\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
            continue;
        }
        std::size_t start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, start_col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Name, std::string(src.substr(i, j - i)), line, start_col});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case ';': kind = Tok::Separator; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({kind, std::string(1, c), line, start_col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct RawTerm {
    Rational coef;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // (variable slot, power)
};

class Parser {
public:
    Parser(std::string_view src, const std::optional<std::vector<std::string>>& declared)
        : toks_(tokenize(src)), declared_(declared.has_value())
    {
        if (declared) {
            for (const auto& name : *declared) {
                if (slots_.count(name)) {
                    throw ParseError("variable '" + name + "' declared twice", 0, 0);
                }
                slots_[name] = names_.size();
                names_.push_back(name);
            }
        }
    }

    Ideal parse()
    {
        std::vector<std::vector<RawTerm>> gens;
        std::vector<std::pair<std::size_t, std::size_t>> where;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Separator) {
                ++pos_;
                continue;
            }
            where.emplace_back(peek().line, peek().column);
            gens.push_back(parse_sum());
            if (peek().kind != Tok::Separator && peek().kind != Tok::End) {
                fail("expected '+', '-', ';' or end of line");
            }
        }
        if (gens.empty()) {
            throw ParseError("no generators given", 1, 1);
        }
        const std::size_t n = names_.size();
        std::vector<Polynomial> polys;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::vector<Term> terms;
            for (const auto& raw : gens[k]) {
                Exponents e(n, 0);
                for (auto [slot, power] : raw.factors) {
                    e[slot] += power;
                }
                terms.push_back(Term{raw.coef, std::move(e)});
            }
            auto p = Polynomial::from_terms(n, std::move(terms));
            if (p.is_zero()) {
                throw ParseError("generator is the zero polynomial", where[k].first, where[k].second);
            }
            polys.push_back(std::move(p));
        }
        if (n == 0) {
            // Only constants were given; the ambient space still needs a variable.
            throw ParseError("ideal mentions no variables", where.front().first, where.front().second);
        }
        return Ideal(names_, std::move(polys));
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    std::vector<RawTerm> parse_sum()
    {
        std::vector<RawTerm> terms;
        bool negative = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negative = peek().kind == Tok::Minus;
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negative = peek().kind == Tok::Minus;
            ++pos_;
            terms.push_back(parse_term(negative));
        }
        return terms;
    }

    RawTerm parse_term(bool negative)
    {
        RawTerm t{Rational(negative ? -1 : 1), {}};
        bool any = false;
        if (peek().kind == Tok::Number) {
            BigInt num(peek().text);
            ++pos_;
            BigInt den(1);
            if (peek().kind == Tok::Slash) {
                ++pos_;
                if (peek().kind != Tok::Number) {
                    fail("expected a positive integer denominator");
                }
                den = BigInt(peek().text);
                if (den == 0) {
                    fail("zero denominator");
                }
                ++pos_;
            }
            t.coef *= make_rational(num, den);
            any = true;
            if (peek().kind == Tok::Star) {
                ++pos_;
                if (peek().kind != Tok::Name) {
                    fail("expected a variable after '*'");
                }
            }
        }
        while (peek().kind == Tok::Name) {
            t.factors.push_back(parse_factor());
            any = true;
            if (peek().kind == Tok::Star) {
                ++pos_;
                if (peek().kind != Tok::Name) {
                    fail("expected a variable after '*'");
                }
            }
        }
        if (!any) {
            fail(peek().kind == Tok::End || peek().kind == Tok::Separator ? "unexpected end of generator"
                                                                           : "expected a coefficient or a variable");
        }
        return t;
    }

    std::pair<std::size_t, std::uint32_t> parse_factor()
    {
        const Token& name = peek();
        auto it = slots_.find(name.text);
        std::size_t slot;
        if (it == slots_.end()) {
            if (declared_) {
                fail("unknown variable '" + name.text + "'");
            }
            slot = names_.size();
            slots_[name.text] = slot;
            names_.push_back(name.text);
        } else {
            slot = it->second;
        }
        ++pos_;
        std::uint32_t power = 1;
        if (peek().kind == Tok::Caret) {
            ++pos_;
            if (peek().kind != Tok::Number) {
                fail("expected a positive integer exponent");
            }
            unsigned long v = 0;
            try {
                v = std::stoul(peek().text);
            } catch (const std::exception&) {
                fail("exponent too large");
            }
            if (v == 0 || v > UINT32_MAX / 2) {
                fail("exponent must be a positive integer");
            }
            power = static_cast<std::uint32_t>(v);
            ++pos_;
        }
        return {slot, power};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool declared_;
    std::unordered_map<std::string, std::size_t> slots_;
    std::vector<std::string> names_;
};

}  // namespace detail

inline Ideal parse_ideal(std::string_view text, const std::optional<std::vector<std::string>>& declared_vars = std::nullopt)
{
    return detail::Parser(text, declared_vars).parse();
}

}  // namespace jetlct
