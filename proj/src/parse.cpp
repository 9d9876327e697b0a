#include "kulsurf/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "kulsurf/rational.hpp"

namespace kulsurf {

namespace {

/// Largest accepted exponent literal; keeps expansion sizes sane.
constexpr unsigned long kMaxExponent = 1000;

struct Token {
    enum Kind { End, Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Bad };
    Kind kind = End;
    Rat value{0};          // Number only
    bool integral = true;  // Number only: no '/' part
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_blank();
        Token t;
        t.line = line_;
        t.column = col_;
        if (i_ >= s_.size()) {
            t.kind = Token::End;
            t.text = "end of input";
            return t;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number(t);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(t);
        bump();
        t.text = std::string(1, c);
        switch (c) {
            case '+': t.kind = Token::Plus; return t;
            case '-': t.kind = Token::Minus; return t;
            case '*': t.kind = Token::Star; return t;
            case '^': t.kind = Token::Caret; return t;
            case '(': t.kind = Token::LParen; return t;
            case ')': t.kind = Token::RParen; return t;
            default: t.kind = Token::Bad; return t;
        }
    }

  private:
    void bump() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_blank() {
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    std::string digits() {
        std::string out;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            out += s_[i_];
            bump();
        }
        return out;
    }

    Token number(Token t) {
        t.kind = Token::Number;
        const std::string num = digits();
        t.text = num;
        if (i_ < s_.size() && s_[i_] == '/') {
            const int slash_line = line_, slash_col = col_;
            bump();
            const int den_line = line_, den_col = col_;
            const std::string den = digits();
            if (den.empty())
                throw ParseError("expected digits after '/' in a rational literal", slash_line,
                                 slash_col + 1);
            if (Int(den) == 0)
                throw ParseError("zero denominator in a rational literal", den_line, den_col);
            t.value = Rat(Int(num)) / Rat(Int(den));
            t.integral = false;
            t.text = num + "/" + den;
        } else {
            t.value = Rat(Int(num));
            t.integral = true;
        }
        return t;
    }

    Token ident(Token t) {
        t.kind = Token::Ident;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                  s_[i_] == '_')) {
            t.text += s_[i_];
            bump();
        }
        return t;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    MultiPoly run() {
        MultiPoly p = expr();
        if (cur_.kind != Token::End) fail("unexpected '" + cur_.text + "'");
        return p;
    }

  private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, cur_.line, cur_.column);
    }

    MultiPoly expr() {
        MultiPoly p = term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            const bool plus = cur_.kind == Token::Plus;
            advance();
            MultiPoly rhs = term();
            p = plus ? p + rhs : p - rhs;
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (cur_.kind == Token::Star) {
            advance();
            p = p * factor();
        }
        return p;
    }

    MultiPoly factor() {
        if (cur_.kind == Token::Minus) {
            advance();
            return factor().scaled(Rat(-1));
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (cur_.kind != Token::Caret) return base;
        advance();
        unsigned long e = exponent();
        MultiPoly out = MultiPoly::constant(3, 1);
        while (e > 0) {
            if (e & 1UL) out = out * base;
            e >>= 1UL;
            if (e > 0) base = base * base;
        }
        return out;
    }

    // Right-associative chain of nonnegative integer literals, folded in
    // exact integer arithmetic.
    unsigned long exponent() {
        if (cur_.kind != Token::Number || !cur_.integral)
            fail("exponent must be a nonnegative integer");
        const int at_line = cur_.line, at_column = cur_.column;
        Int value = cur_.value.get_num();
        advance();
        if (cur_.kind == Token::Caret) {
            advance();
            const unsigned long up = exponent();
            Int folded(1);
            for (unsigned long i = 0; i < up; ++i) {
                folded *= value;
                if (folded > kMaxExponent)
                    throw ParseError("exponent exceeds 1000", at_line, at_column);
            }
            value = folded;
        }
        if (value > kMaxExponent) throw ParseError("exponent exceeds 1000", at_line, at_column);
        return value.get_ui();
    }

    MultiPoly atom() {
        if (cur_.kind == Token::Number) {
            MultiPoly p = MultiPoly::constant(3, cur_.value);
            advance();
            return p;
        }
        if (cur_.kind == Token::Ident) {
            int var = -1;
            if (cur_.text == "X1") var = 0;
            if (cur_.text == "X2") var = 1;
            if (cur_.text == "X3") var = 2;
            if (var < 0) fail("unknown variable '" + cur_.text + "'");
            advance();
            return MultiPoly::variable(3, var);
        }
        if (cur_.kind == Token::LParen) {
            advance();
            MultiPoly p = expr();
            if (cur_.kind != Token::RParen) fail("expected ')'");
            advance();
            return p;
        }
        if (cur_.kind == Token::End) fail("unexpected end of input");
        fail("unexpected '" + cur_.text + "'");
    }

    Lexer lex_;
    Token cur_;
};

/// Trimmed view of [first, last) with 1-based column of its first character.
std::pair<std::string, int> trimmed_piece(const std::string& text, std::size_t first,
                                          std::size_t last) {
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
    return {text.substr(first, last - first), static_cast<int>(first) + 1};
}

Int parse_integer_piece(const std::string& piece, int column) {
    if (piece.empty()) throw ParseError("expected an integer", 1, column);
    std::size_t start = (piece[0] == '-') ? 1 : 0;
    if (start == piece.size()) throw ParseError("expected digits after '-'", 1, column + 1);
    for (std::size_t i = start; i < piece.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(piece[i])))
            throw ParseError("invalid character '" + std::string(1, piece[i]) + "' in an integer",
                             1, column + static_cast<int>(i));
    return Int(piece);
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

MultiPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

std::string print_polynomial(const MultiPoly& p) {
    if (p.nvars() != 3)
        throw std::invalid_argument("print_polynomial: needs a polynomial in three variables");
    return p.to_string();
}

MultiPoly read_curve_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polynomial(buffer.str());
}

ProjPoint parse_point(const std::string& text) {
    std::array<Int, 3> coords;
    std::size_t piece = 0;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool at_comma = i < text.size() && text[i] == ',';
        if (!at_comma && i < text.size()) continue;
        if (piece >= 3)
            throw ParseError("expected exactly three comma-separated integers", 1,
                             static_cast<int>(i) + 1);
        auto [body, column] = trimmed_piece(text, begin, i);
        coords[piece] = parse_integer_piece(body, column);
        ++piece;
        begin = i + 1;
    }
    if (piece != 3)
        throw ParseError("expected exactly three comma-separated integers", 1,
                         static_cast<int>(text.size()) + 1);
    if (coords[0] == 0 && coords[1] == 0 && coords[2] == 0)
        throw ParseError("the zero triple is not a projective point", 1, 1);
    return ProjPoint(coords[0], coords[1], coords[2]);
}

std::uint64_t parse_seed(const std::string& text) {
    auto [body, column] = trimmed_piece(text, 0, text.size());
    if (body.empty()) throw ParseError("expected a decimal seed", 1, column);
    for (std::size_t i = 0; i < body.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(body[i])))
            throw ParseError("invalid character '" + std::string(1, body[i]) + "' in a seed", 1,
                             column + static_cast<int>(i));
    Int value(body);
    if (value > Int("9223372036854775807"))
        throw ParseError("seed exceeds 2^63 - 1", 1, column);
    return static_cast<std::uint64_t>(value.get_ui());
}

}  // namespace kulsurf
