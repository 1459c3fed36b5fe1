#include "compasp/parser.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace compasp {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Var, Int, LParen, RParen, Comma, Dot, If, Minus, Eq, Neq, Plus, False, LBrace, RBrace, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Var: return "variable";
        case Tok::Int: return "integer";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::If: return "':-'";
        case Tok::Minus: return "'-'";
        case Tok::Eq: return "'='";
        case Tok::Neq: return "'!='";
        case Tok::Plus: return "'+'";
        case Tok::False: return "'#false'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            return t;
        }
        char c = text_[pos_];
        auto is_word = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
        if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_word(text_[pos_])) {
                advance();
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Var : Tok::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            if (pos_ < text_.size() && is_word(text_[pos_])) {
                throw ParseError(t.line, t.column, "malformed integer");
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            t.kind = Tok::Int;
            return t;
        }
        auto single = [&](Tok k) {
            advance();
            t.kind = k;
            return t;
        };
        switch (c) {
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case ',': return single(Tok::Comma);
            case '.': return single(Tok::Dot);
            case '-': return single(Tok::Minus);
            case '=': return single(Tok::Eq);
            case '+': return single(Tok::Plus);
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    return single(Tok::If);
                }
                break;
            case '!':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                    advance();
                    return single(Tok::Neq);
                }
                break;
            case '#':
                if (text_.substr(pos_, 6) == "#false" &&
                    (pos_ + 6 >= text_.size() || !is_word(text_[pos_ + 6]))) {
                    for (int i = 0; i < 5; ++i) {
                        advance();
                    }
                    return single(Tok::False);
                }
                break;
            default: break;
        }
        throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, bool allow_variables) : lexer_(text), allow_variables_(allow_variables) {
        cur_ = lexer_.next();
        peek_ = lexer_.next();
    }

    SchematicProgram program() {
        SchematicProgram sp;
        while (cur_.kind != Tok::End) {
            sp.rules.push_back(rule());
        }
        return sp;
    }

    std::vector<SchematicLiteral> literal_list() {
        std::vector<SchematicLiteral> out;
        bool braced = accept(Tok::LBrace);
        while (cur_.kind != Tok::End && cur_.kind != Tok::RBrace) {
            out.push_back(literal());
            accept(Tok::Comma);
        }
        if (braced) {
            expect(Tok::RBrace);
        }
        expect(Tok::End);
        return out;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(at.line, at.column, msg);
    }

    Token shift() {
        Token t = cur_;
        cur_ = peek_;
        peek_ = lexer_.next();
        return t;
    }

    bool accept(Tok k) {
        if (cur_.kind == k) {
            shift();
            return true;
        }
        return false;
    }

    Token expect(Tok k) {
        if (cur_.kind != k) {
            fail(cur_, std::string("expected ") + describe(k) + ", found " + describe(cur_.kind));
        }
        return shift();
    }

    bool is_not() const { return cur_.kind == Tok::Ident && cur_.text == "not"; }

    SchematicRule rule() {
        SchematicRule r;
        if (accept(Tok::False)) {
            if (accept(Tok::Dot)) {
                return r;
            }
            expect(Tok::If);
            body(r);
            return r;
        }
        if (accept(Tok::If)) {
            body(r);
            return r;
        }
        if (is_not()) {
            fail(cur_, "'not' may not appear in a rule head");
        }
        r.head = literal();
        if (accept(Tok::Dot)) {
            return r;
        }
        expect(Tok::If);
        body(r);
        return r;
    }

    void body(SchematicRule& r) {
        do {
            element(r);
        } while (accept(Tok::Comma));
        expect(Tok::Dot);
    }

    void element(SchematicRule& r) {
        if (cur_.kind == Tok::False) {
            fail(cur_, "#false may not appear in a rule body");
        }
        if (is_not()) {
            shift();
            if (is_not()) {
                fail(cur_, "nested 'not' is not supported");
            }
            if (cur_.kind == Tok::False) {
                fail(cur_, "#false may not appear in a rule body");
            }
            r.neg.push_back(literal());
            return;
        }
        bool starts_term = cur_.kind == Tok::Var || cur_.kind == Tok::Int ||
                           (cur_.kind == Tok::Minus && peek_.kind == Tok::Int) ||
                           (cur_.kind == Tok::Ident && (peek_.kind == Tok::Eq || peek_.kind == Tok::Neq));
        if (starts_term) {
            r.conditions.push_back(condition());
            return;
        }
        r.pos.push_back(literal());
    }

    BuiltinCondition condition() {
        Token at = cur_;
        if (!allow_variables_) {
            fail(at, "built-in conditions require a schematic program");
        }
        BuiltinCondition c;
        c.lhs = term();
        if (accept(Tok::Neq)) {
            c.kind = BuiltinCondition::Kind::NotEqual;
            c.rhs = term();
            return c;
        }
        expect(Tok::Eq);
        c.rhs = term();
        if (accept(Tok::Plus)) {
            Token one = expect(Tok::Int);
            if (one.text != "1") {
                fail(one, "only successor conditions of the form Y = X + 1 are supported");
            }
            c.kind = BuiltinCondition::Kind::Successor;
        } else {
            c.kind = BuiltinCondition::Kind::Equal;
        }
        return c;
    }

    SchematicLiteral literal() {
        SchematicLiteral l;
        l.negated = accept(Tok::Minus);
        if (cur_.kind == Tok::Var) {
            fail(cur_, "predicate names must start with a lowercase letter");
        }
        Token name = expect(Tok::Ident);
        if (name.text == "not") {
            fail(name, "'not' is a keyword");
        }
        l.predicate = name.text;
        if (accept(Tok::LParen)) {
            do {
                l.args.push_back(term());
            } while (accept(Tok::Comma));
            expect(Tok::RParen);
        }
        return l;
    }

    Term term() {
        if (cur_.kind == Tok::Var) {
            if (!allow_variables_) {
                fail(cur_, "variable '" + cur_.text + "' in a ground program");
            }
            return Variable{shift().text};
        }
        if (cur_.kind == Tok::Ident) {
            if (cur_.text == "not") {
                fail(cur_, "'not' is a keyword");
            }
            return Constant{shift().text};
        }
        bool negative = accept(Tok::Minus);
        Token num = expect(Tok::Int);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
        if (ec != std::errc{}) {
            fail(num, "integer out of range");
        }
        return Constant{negative ? -value : value};
    }

    Lexer lexer_;
    Token cur_;
    Token peek_;
    bool allow_variables_;
};

Constant ground_term(const Term& t) {
    if (const auto* c = std::get_if<Constant>(&t)) {
        return *c;
    }
    throw std::invalid_argument("variable '" + std::get<Variable>(t).name + "' in a ground program");
}

Literal ground_literal(const SchematicLiteral& l, Program& p) {
    Atom a{l.predicate, {}};
    a.args.reserve(l.args.size());
    for (const Term& t : l.args) {
        a.args.push_back(ground_term(t));
    }
    return Literal(p.intern(a), l.negated);
}

}  // namespace

SchematicProgram parse_schematic(std::string_view text) { return Parser(text, true).program(); }

Program parse_program(std::string_view text) { return to_ground_program(Parser(text, false).program()); }

Program to_ground_program(const SchematicProgram& sp) {
    Program p;
    for (const SchematicRule& sr : sp.rules) {
        if (!sr.conditions.empty()) {
            throw std::invalid_argument("built-in condition in a ground program: " + sr.str());
        }
        Rule r;
        if (sr.head) {
            r.head = ground_literal(*sr.head, p);
        }
        for (const auto& l : sr.pos) {
            r.pos.push_back(ground_literal(l, p));
        }
        for (const auto& l : sr.neg) {
            r.neg.push_back(ground_literal(l, p));
        }
        p.add_rule(std::move(r));
    }
    return p;
}

Interpretation parse_interpretation(std::string_view text, Program& p) {
    std::vector<Literal> lits;
    for (const SchematicLiteral& l : Parser(text, false).literal_list()) {
        lits.push_back(ground_literal(l, p));
    }
    return Interpretation(std::move(lits));
}

}  // namespace compasp
