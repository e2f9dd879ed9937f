#include "spincalc/expr.hpp"

#include <cctype>
#include <map>

#include "spincalc/error.hpp"

namespace spincalc {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Token::Kind::End, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    num += advance();
                out.push_back({Token::Kind::Int, num, line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_'))
                    id += advance();
                out.push_back({Token::Kind::Ident, id, line, col});
                continue;
            }
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Kind::Plus; break;
                case '-': kind = Token::Kind::Minus; break;
                case '*': kind = Token::Kind::Star; break;
                case '/': kind = Token::Kind::Slash; break;
                case '^': kind = Token::Kind::Caret; break;
                case '(': kind = Token::Kind::LParen; break;
                case ')': kind = Token::Kind::RParen; break;
                case ',': kind = Token::Kind::Comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line,
                                     col);
            }
            advance();
            out.push_back({kind, std::string(1, c), line, col});
        }
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::map<std::string, int>& call_arities() {
    static const std::map<std::string, int> arities = {
        {"st", 1}, {"push", 1}, {"deg", 1}, {"virt", 0}};
    return arities;
}

bool known_ident(const std::string& name) {
    static const std::vector<std::string> idents = {
        "d_irr", "d02", "d03", "kps", "Dirr0", "Dirr1",
        "Dirr2", "D02", "D03", "D03_0", "S"};
    for (const auto& id : idents)
        if (id == name) return true;
    return false;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expression();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + ", got \"" + describe(peek()) + "\"",
                             peek().line, peek().col);
        take();
    }

    static std::string describe(const Token& t) {
        return t.kind == Token::Kind::End ? "end of input" : t.text;
    }

    ExprPtr expression() {
        ExprPtr left = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            char op = take().text[0];
            ExprPtr right = term();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Binary;
            node->op = op;
            node->args = {left, right};
            left = node;
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = unary();
        while (true) {
            if (peek().kind == Token::Kind::Star) {
                take();
                ExprPtr right = unary();
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Binary;
                node->op = '*';
                node->args = {left, right};
                left = node;
            } else if (peek().kind == Token::Kind::Slash) {
                throw ParseError("\"/\" is only allowed between integer literals",
                                 peek().line, peek().col);
            } else {
                return left;
            }
        }
    }

    ExprPtr unary() {
        if (peek().kind == Token::Kind::Minus) {
            take();
            ExprPtr child = unary();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Unary;
            node->op = '-';
            node->args = {child};
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (peek().kind != Token::Kind::Caret) return base;
        const Token& caret = take();
        if (peek().kind != Token::Kind::Int)
            throw ParseError("exponent must be a nonnegative integer literal", peek().line,
                             peek().col);
        const Token& e = take();
        long k = std::stol(e.text);
        if (k > 3)
            throw ParseError("exponent above the dimension: " + e.text, caret.line,
                             caret.col);
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Power;
        node->exponent = int(k);
        node->args = {base};
        return node;
    }

    ExprPtr primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            take();
            mpz_class num(t.text);
            if (peek().kind == Token::Kind::Slash) {
                take();
                if (peek().kind != Token::Kind::Int)
                    throw ParseError("\"/\" is only allowed between integer literals",
                                     peek().line, peek().col);
                const Token& d = take();
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Number;
                node->number = Rational(num, mpz_class(d.text));
                return node;
            }
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Number;
            node->number = Rational(num, 1);
            return node;
        }
        if (t.kind == Token::Kind::Ident) {
            take();
            if (peek().kind == Token::Kind::LParen) {
                auto arity = call_arities().find(t.text);
                if (arity == call_arities().end())
                    throw ParseError("unknown function \"" + t.text + "\"", t.line, t.col);
                take();
                std::vector<ExprPtr> args;
                if (peek().kind != Token::Kind::RParen) {
                    args.push_back(expression());
                    while (peek().kind == Token::Kind::Comma) {
                        take();
                        args.push_back(expression());
                    }
                }
                expect(Token::Kind::RParen, "\")\"");
                if (int(args.size()) != arity->second)
                    throw ParseError("\"" + t.text + "\" takes " +
                                         std::to_string(arity->second) + " argument(s), got " +
                                         std::to_string(args.size()),
                                     t.line, t.col);
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Call;
                node->name = t.text;
                node->args = std::move(args);
                return node;
            }
            if (!known_ident(t.text))
                throw ParseError("unknown identifier \"" + t.text + "\"", t.line, t.col);
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Ident;
            node->name = t.text;
            return node;
        }
        if (t.kind == Token::Kind::LParen) {
            take();
            ExprPtr e = expression();
            expect(Token::Kind::RParen, "\")\"");
            return e;
        }
        throw ParseError("expected an expression, got \"" + describe(t) + "\"", t.line,
                         t.col);
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(Lexer(src).run()).run(); }

namespace {

bool needs_parens_in_product(const ExprPtr& e) {
    return e->kind == Expr::Kind::Binary && (e->op == '+' || e->op == '-');
}

}  // namespace

std::string expr_str(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Number:
            return e->number.str();
        case Expr::Kind::Ident:
            return e->name;
        case Expr::Kind::Unary: {
            const ExprPtr& c = e->args[0];
            std::string body = expr_str(c);
            if (needs_parens_in_product(c)) body = "(" + body + ")";
            return "-" + body;
        }
        case Expr::Kind::Binary: {
            std::string left = expr_str(e->args[0]);
            std::string right = expr_str(e->args[1]);
            if (e->op == '*') {
                if (needs_parens_in_product(e->args[0]) ||
                    e->args[0]->kind == Expr::Kind::Unary)
                    left = "(" + left + ")";
                if (needs_parens_in_product(e->args[1]) ||
                    e->args[1]->kind == Expr::Kind::Unary)
                    right = "(" + right + ")";
                return left + " * " + right;
            }
            // keep the left-associative shape on reparse
            const ExprPtr& r = e->args[1];
            if (r->kind == Expr::Kind::Binary && (r->op == '+' || r->op == '-'))
                right = "(" + right + ")";
            if (r->kind == Expr::Kind::Unary) right = "(" + right + ")";
            return left + " " + e->op + " " + right;
        }
        case Expr::Kind::Power: {
            std::string base = expr_str(e->args[0]);
            if (e->args[0]->kind != Expr::Kind::Ident &&
                e->args[0]->kind != Expr::Kind::Number &&
                e->args[0]->kind != Expr::Kind::Call)
                base = "(" + base + ")";
            return base + "^" + std::to_string(e->exponent);
        }
        case Expr::Kind::Call: {
            std::string out = e->name + "(";
            for (size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += ", ";
                out += expr_str(e->args[i]);
            }
            return out + ")";
        }
    }
    throw CalcError("corrupt expression node");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Number:
            return a->number == b->number;
        case Expr::Kind::Ident:
            return a->name == b->name;
        case Expr::Kind::Power:
            if (a->exponent != b->exponent) return false;
            break;
        case Expr::Kind::Binary:
        case Expr::Kind::Unary:
            if (a->op != b->op) return false;
            break;
        case Expr::Kind::Call:
            if (a->name != b->name) return false;
            break;
    }
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!expr_equal(a->args[i], b->args[i])) return false;
    return true;
}

namespace {

std::string value_kind(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return "a number";
    if (std::holds_alternative<M13Class>(v)) return "a downstairs class";
    return "an upstairs class";
}

Value negate(Value v) {
    if (auto* r = std::get_if<Rational>(&v)) return -*r;
    if (auto* m = std::get_if<M13Class>(&v)) return -*m;
    return -std::get<WClass>(v);
}

Value add(const Value& a, const Value& b, char op) {
    // a literal zero is the zero class of either space
    if (auto* r = std::get_if<Rational>(&a); r && r->is_zero() &&
                                             !std::holds_alternative<Rational>(b)) {
        if (std::holds_alternative<M13Class>(b)) return add(M13Class(), b, op);
        return add(WClass(), b, op);
    }
    if (auto* r = std::get_if<Rational>(&b); r && r->is_zero() &&
                                             !std::holds_alternative<Rational>(a)) {
        if (std::holds_alternative<M13Class>(a)) return add(a, M13Class(), op);
        return add(a, WClass(), op);
    }
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
        const auto& x = std::get<Rational>(a);
        const auto& y = std::get<Rational>(b);
        return op == '+' ? x + y : x - y;
    }
    if (std::holds_alternative<M13Class>(a) && std::holds_alternative<M13Class>(b)) {
        const auto& x = std::get<M13Class>(a);
        const auto& y = std::get<M13Class>(b);
        return op == '+' ? x + y : x - y;
    }
    if (std::holds_alternative<WClass>(a) && std::holds_alternative<WClass>(b)) {
        const auto& x = std::get<WClass>(a);
        const auto& y = std::get<WClass>(b);
        return op == '+' ? x + y : x - y;
    }
    throw CalcError("cannot combine " + value_kind(a) + " and " + value_kind(b));
}

Value multiply(const Value& a, const Value& b) {
    if (std::holds_alternative<Rational>(a)) {
        const auto& x = std::get<Rational>(a);
        if (std::holds_alternative<Rational>(b)) return x * std::get<Rational>(b);
        if (std::holds_alternative<M13Class>(b)) return x * std::get<M13Class>(b);
        return x * std::get<WClass>(b);
    }
    if (std::holds_alternative<Rational>(b)) return multiply(b, a);
    if (std::holds_alternative<M13Class>(a) && std::holds_alternative<M13Class>(b))
        return std::get<M13Class>(a) * std::get<M13Class>(b);
    if (std::holds_alternative<WClass>(a) && std::holds_alternative<WClass>(b))
        return std::get<WClass>(a) * std::get<WClass>(b);
    throw CalcError("cannot multiply " + value_kind(a) + " and " + value_kind(b));
}

Value ident_value(const std::string& name) {
    if (name == "d_irr") return M13Class::gen(M13Gen::DIrr);
    if (name == "d02") return M13Class::gen(M13Gen::D02);
    if (name == "d03") return M13Class::gen(M13Gen::D03);
    if (name == "kps") return M13Class::gen(M13Gen::Kps);
    if (name == "Dirr0") return WClass::gen(WGen::DIrr0);
    if (name == "Dirr1") return WClass::gen(WGen::DIrr1);
    if (name == "Dirr2") return WClass::gen(WGen::DIrr2);
    if (name == "D02") return WClass::gen(WGen::D02);
    if (name == "D03") return WClass::gen(WGen::D03);
    if (name == "D03_0") return WClass::gen(WGen::D03_0);
    if (name == "S") return WClass::gen(WGen::S);
    throw CalcError("unknown identifier \"" + name + "\"");
}

}  // namespace

Value eval_expr(const ExprPtr& e, const Fixtures& fx) {
    switch (e->kind) {
        case Expr::Kind::Number:
            return e->number;
        case Expr::Kind::Ident:
            return ident_value(e->name);
        case Expr::Kind::Unary:
            return negate(eval_expr(e->args[0], fx));
        case Expr::Kind::Binary: {
            Value a = eval_expr(e->args[0], fx);
            Value b = eval_expr(e->args[1], fx);
            return e->op == '*' ? multiply(a, b) : add(a, b, e->op);
        }
        case Expr::Kind::Power: {
            Value base = eval_expr(e->args[0], fx);
            unsigned k = unsigned(e->exponent);
            if (auto* r = std::get_if<Rational>(&base)) return r->pow(k);
            if (auto* m = std::get_if<M13Class>(&base)) return m->pow(k);
            return std::get<WClass>(base).pow(k);
        }
        case Expr::Kind::Call: {
            if (e->name == "virt") return virtual_class();
            Value arg = eval_expr(e->args[0], fx);
            if (e->name == "st") {
                if (!std::holds_alternative<M13Class>(arg))
                    throw CalcError("st expects a downstairs boundary class, got " +
                                    value_kind(arg));
                return st_pullback(std::get<M13Class>(arg));
            }
            if (e->name == "push") {
                if (!std::holds_alternative<WClass>(arg))
                    throw CalcError("push expects an upstairs class, got " + value_kind(arg));
                return st_pushforward(reduce_self_intersections(std::get<WClass>(arg)),
                                      fx.strata);
            }
            if (e->name == "deg") {
                if (!std::holds_alternative<M13Class>(arg))
                    throw CalcError("deg expects a downstairs class, got " + value_kind(arg) +
                                    (std::holds_alternative<WClass>(arg) ? " (push first)"
                                                                         : ""));
                return m13_degree(std::get<M13Class>(arg), fx.pairing);
            }
            throw CalcError("unknown function \"" + e->name + "\"");
        }
    }
    throw CalcError("corrupt expression node");
}

std::string value_str(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return r->str();
    if (auto* m = std::get_if<M13Class>(&v)) return m->str();
    return std::get<WClass>(v).str();
}

}  // namespace spincalc
