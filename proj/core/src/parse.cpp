#include "heunfact/parse.hpp"

#include "heunfact/errors.hpp"

#include <algorithm>
#include <cctype>

namespace heunfact {

namespace {

enum class TokenKind { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t position;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < text.size() && is_digit(text[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::Integer, text.substr(start, i - start), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < text.size() && is_ident_char(text[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::Identifier, text.substr(start, i - start), start});
            continue;
        }
        TokenKind kind{};
        switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '/': kind = TokenKind::Slash; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
        tokens.push_back({kind, text.substr(start, 1), start});
        ++i;
    }
    tokens.push_back({TokenKind::End, {}, text.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const SymbolTablePtr& symbols)
        : tokens_(std::move(tokens)), symbols_(symbols) {}

    RationalFunction parse() {
        if (peek().kind == TokenKind::End) {
            throw SyntaxError("empty expression", peek().position);
        }
        RationalFunction value = expression();
        if (peek().kind != TokenKind::End) {
            throw SyntaxError("unexpected '" + std::string(peek().text) + "'", peek().position);
        }
        return value;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    RationalFunction expression() {
        RationalFunction value = term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const bool minus = advance().kind == TokenKind::Minus;
            RationalFunction rhs = term();
            if (minus) {
                value -= rhs;
            } else {
                value += rhs;
            }
        }
        return value;
    }

    RationalFunction term() {
        RationalFunction value = unary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const Token& op = advance();
            RationalFunction rhs = unary();
            if (op.kind == TokenKind::Star) {
                value *= rhs;
            } else {
                if (rhs.is_zero()) {
                    throw DivisionByZero("division by zero at position " + std::to_string(op.position));
                }
                value /= rhs;
            }
        }
        return value;
    }

    RationalFunction unary() {
        if (peek().kind == TokenKind::Minus) {
            advance();
            return -unary();
        }
        if (peek().kind == TokenKind::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (peek().kind == TokenKind::Caret) {
            advance();
            const Token& exp = advance();
            if (exp.kind != TokenKind::Integer) {
                throw SyntaxError("exponent must be a non-negative integer literal", exp.position);
            }
            if (exp.text.size() > 6) {
                throw SyntaxError("exponent too large", exp.position);
            }
            const unsigned e = static_cast<unsigned>(std::stoul(std::string(exp.text)));
            if (peek().kind == TokenKind::Caret) {
                throw SyntaxError("chained '^' needs parentheses", peek().position);
            }
            base = base.pow(e);
        }
        return base;
    }

    RationalFunction primary() {
        const Token& tok = advance();
        switch (tok.kind) {
        case TokenKind::Integer:
            return RationalFunction(symbols_, Rational::from_integer_string(tok.text));
        case TokenKind::Identifier: {
            const auto idx = symbols_->index_of(tok.text);
            if (!idx) {
                throw UnknownSymbol(std::string(tok.text), tok.position);
            }
            return RationalFunction::variable(symbols_, *idx);
        }
        case TokenKind::LParen: {
            RationalFunction inner = expression();
            if (peek().kind != TokenKind::RParen) {
                throw SyntaxError("expected ')'", peek().position);
            }
            advance();
            return inner;
        }
        case TokenKind::End:
            throw SyntaxError("unexpected end of expression", tok.position);
        default:
            throw SyntaxError("unexpected '" + std::string(tok.text) + "'", tok.position);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const SymbolTablePtr& symbols_;
};

} // namespace

RationalFunction parse_coeff(std::string_view text, const SymbolTablePtr& symbols) {
    return Parser(tokenize(text), symbols).parse();
}

std::vector<std::string> collect_identifiers(std::string_view text) {
    std::vector<std::string> names;
    for (const Token& t : tokenize(text)) {
        if (t.kind == TokenKind::Identifier &&
            std::find(names.begin(), names.end(), t.text) == names.end()) {
            names.emplace_back(t.text);
        }
    }
    return names;
}

} // namespace heunfact
