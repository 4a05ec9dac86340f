#include "gabfield/parse.hpp"

#include <cctype>
#include <cstdint>
#include <optional>

namespace gabfield {

namespace {

struct Token {
    enum Kind { Number, Symbol, VarX, VarY, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::uint64_t value = 0;  // for Number
    std::size_t pos = 0;
};

class Lexer {
  public:
    Lexer(std::string_view text, std::string_view symbol) : text_(text), symbol_(symbol) {}

    Token next() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t pos = i_;
        if (i_ >= text_.size()) return {Token::End, 0, pos};
        char c = text_[i_];
        switch (c) {
            case '+': ++i_; return {Token::Plus, 0, pos};
            case '-': ++i_; return {Token::Minus, 0, pos};
            case '*': ++i_; return {Token::Star, 0, pos};
            case '/': ++i_; return {Token::Slash, 0, pos};
            case '^': ++i_; return {Token::Caret, 0, pos};
            case '(': ++i_; return {Token::LParen, 0, pos};
            case ')': ++i_; return {Token::RParen, 0, pos};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                v = v * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
                ++i_;
            }
            return {Token::Number, v, pos};
        }
        // The configured field symbol may be multi-byte (e.g. "β"); check it
        // before single-letter variables.
        if (!symbol_.empty() && text_.substr(i_).starts_with(symbol_)) {
            i_ += symbol_.size();
            return {Token::Symbol, 0, pos};
        }
        if (c == 'x') {
            ++i_;
            return {Token::VarX, 0, pos};
        }
        if (c == 'y') {
            ++i_;
            return {Token::VarY, 0, pos};
        }
        fail(pos, "unexpected character");
    }

    [[noreturn]] static void fail(std::size_t pos, const std::string& what) {
        throw ParseError("parse error at offset " + std::to_string(pos) + ": " + what);
    }

  private:
    std::string_view text_;
    std::string_view symbol_;
    std::size_t i_ = 0;
};

// The evaluator is shared between the K and L grammars through a small
// domain adapter providing the atoms and field operations.
struct RatDomain {
    const FqContext* ctx;
    using Value = RatFunc;
    Value from_int(std::uint64_t v) const {
        return RatFunc::constant(ctx->from_int(static_cast<long long>(v)));
    }
    Value sym_pow(std::uint64_t e, std::size_t pos) const {
        if (ctx->degree() < 2)
            Lexer::fail(pos, "prime field has no generator symbol");
        return RatFunc::constant(ctx->generator().pow(static_cast<long long>(e)));
    }
    Value x_pow(std::uint64_t e) const { return RatFunc::x_power(*ctx, e); }
    [[noreturn]] Value y_pow(std::uint64_t, std::size_t pos) const {
        Lexer::fail(pos, "'y' is not valid in an element of F_q(x)");
    }
    Value inverse(const Value& v, std::size_t pos) const {
        if (v.is_zero()) Lexer::fail(pos, "division by zero");
        return v.inverse();
    }
};

struct LDomain {
    const CyclicExtension* ext;
    using Value = LElement;
    Value from_int(std::uint64_t v) const {
        return ext->from_scalar(RatFunc::constant(ext->base().from_int(static_cast<long long>(v))));
    }
    Value sym_pow(std::uint64_t e, std::size_t pos) const {
        if (ext->base().degree() < 2)
            Lexer::fail(pos, "prime field has no generator symbol");
        return ext->from_scalar(
            RatFunc::constant(ext->base().generator().pow(static_cast<long long>(e))));
    }
    Value x_pow(std::uint64_t e) const {
        return ext->from_scalar(RatFunc::x_power(ext->base(), e));
    }
    Value y_pow(std::uint64_t e, std::size_t pos) const {
        if (e >= ext->degree())
            Lexer::fail(pos, "y-power must be below the extension degree " +
                                 std::to_string(ext->degree()));
        return ext->y_power(static_cast<std::uint32_t>(e));
    }
    Value inverse(const Value& v, std::size_t pos) const {
        if (v.is_zero()) Lexer::fail(pos, "division by zero");
        return v.inverse();
    }
};

template <class Domain>
class Parser {
  public:
    Parser(std::string_view text, std::string_view symbol, Domain dom)
        : lexer_(text, symbol), dom_(dom) {
        advance();
    }

    typename Domain::Value parse() {
        auto v = expr();
        if (tok_.kind != Token::End) Lexer::fail(tok_.pos, "trailing input");
        return v;
    }

  private:
    using Value = typename Domain::Value;

    void advance() { tok_ = lexer_.next(); }

    Value expr() {
        bool negate = false;
        if (tok_.kind == Token::Minus) {
            negate = true;
            advance();
        }
        Value acc = term();
        if (negate) acc = -acc;
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool sub = tok_.kind == Token::Minus;
            advance();
            Value t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Value term() {
        Value acc = factor();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            bool div = tok_.kind == Token::Slash;
            std::size_t pos = tok_.pos;
            advance();
            Value f = factor();
            acc = div ? acc * dom_.inverse(f, pos) : acc * f;
        }
        return acc;
    }

    Value factor() {
        if (tok_.kind == Token::LParen) {
            advance();
            Value v = expr();
            if (tok_.kind != Token::RParen) Lexer::fail(tok_.pos, "expected ')'");
            advance();
            return v;
        }
        Token atom = tok_;
        if (atom.kind != Token::Number && atom.kind != Token::Symbol &&
            atom.kind != Token::VarX && atom.kind != Token::VarY)
            Lexer::fail(atom.pos, "expected a value");
        advance();
        std::uint64_t e = 1;
        if (tok_.kind == Token::Caret) {
            advance();
            if (tok_.kind != Token::Number) Lexer::fail(tok_.pos, "expected an exponent");
            e = tok_.value;
            advance();
        }
        switch (atom.kind) {
            case Token::Symbol: return dom_.sym_pow(e, atom.pos);
            case Token::VarX: return dom_.x_pow(e);
            case Token::VarY: return dom_.y_pow(e, atom.pos);
            default: break;
        }
        // Integer literal with an optional (small) exponent.
        Value base = dom_.from_int(atom.value);
        if (e == 1) return base;
        Value acc = dom_.from_int(1);
        for (std::uint64_t i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    Lexer lexer_;
    Domain dom_;
    Token tok_{Token::End, 0, 0};
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const FqContext& ctx) {
    return Parser<RatDomain>(text, ctx.symbol(), RatDomain{&ctx}).parse();
}

FqElement parse_fq(std::string_view text, const FqContext& ctx) {
    RatFunc v = parse_ratfunc(text, ctx);
    if (!v.is_constant()) throw ParseError("expected a constant field element: " + std::string(text));
    return v.num().is_zero() ? ctx.zero() : v.num().coeffs()[0];
}

LElement parse_lelement(std::string_view text, const CyclicExtension& ext) {
    return Parser<LDomain>(text, ext.base().symbol(), LDomain{&ext}).parse();
}

}  // namespace gabfield
