#include "alba/parser.hpp"

#include <cctype>
#include <vector>

namespace alba {

namespace {

std::string join_expected(const std::set<std::string>& exp) {
    std::string out;
    for (const auto& e : exp) {
        if (!out.empty()) out += ", ";
        out += e;
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         join_expected(expected) + " but found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
    Ident,
    Nom,
    Svar,
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Box,
    Dia,
    BBox,
    BDia,
    GlobA,
    GlobE,
    At,
    Down,
    All,
    Ex,
    Forall,
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Leq,
    Amp,
    Implies,
    End,
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "propositional variable";
        case Tok::Nom: return "nominal";
        case Tok::Svar: return "state variable";
        case Tok::Top: return "'T'";
        case Tok::Bot: return "'F'";
        case Tok::Not: return "'~'";
        case Tok::And: return "'/\\'";
        case Tok::Or: return "'\\/'";
        case Tok::Imp: return "'->'";
        case Tok::Box: return "'box'";
        case Tok::Dia: return "'dia'";
        case Tok::BBox: return "'bbox'";
        case Tok::BDia: return "'bdia'";
        case Tok::GlobA: return "'A'";
        case Tok::GlobE: return "'E'";
        case Tok::At: return "'@'";
        case Tok::Down: return "'down'";
        case Tok::All: return "'all'";
        case Tok::Ex: return "'ex'";
        case Tok::Forall: return "'forall'";
        case Tok::Dot: return "'.'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Leq: return "'<='";
        case Tok::Amp: return "'&'";
        case Tok::Implies: return "'=>'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto starts = [&](const char* s) { return text.compare(i, std::char_traits<char>::length(s), s) == 0; };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t{Tok::End, "", line, col};
        struct Sym {
            const char* text;
            Tok kind;
        };
        static const Sym syms[] = {{"/\\", Tok::And}, {"\\/", Tok::Or}, {"->", Tok::Imp}, {"<=", Tok::Leq},
                                   {"=>", Tok::Implies}, {"~", Tok::Not}, {"@", Tok::At}, {".", Tok::Dot},
                                   {"(", Tok::LParen}, {")", Tok::RParen}, {"[", Tok::LBracket},
                                   {"]", Tok::RBracket}, {"&", Tok::Amp}};
        bool matched = false;
        for (const auto& s : syms) {
            if (starts(s.text)) {
                t.kind = s.kind;
                t.text = s.text;
                advance(std::char_traits<char>::length(s.text));
                matched = true;
                break;
            }
        }
        if (matched) {
            out.push_back(t);
            continue;
        }
        if (c == '\'' || c == '$') {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            if (j == i + 1 || !ident_start(text[i + 1])) {
                throw ParseError(line, col + 1, {"identifier"},
                                 i + 1 < text.size() ? std::string("'") + text[i + 1] + "'" : "end of input");
            }
            t.kind = c == '\'' ? Tok::Nom : Tok::Svar;
            t.text = text.substr(i + 1, j - i - 1);
            advance(j - i);
            out.push_back(t);
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string word = text.substr(i, j - i);
            static const std::pair<const char*, Tok> keywords[] = {
                {"T", Tok::Top},       {"F", Tok::Bot},     {"box", Tok::Box}, {"dia", Tok::Dia},
                {"bbox", Tok::BBox},   {"bdia", Tok::BDia}, {"A", Tok::GlobA}, {"E", Tok::GlobE},
                {"down", Tok::Down},   {"all", Tok::All},   {"ex", Tok::Ex},   {"forall", Tok::Forall}};
            t.kind = Tok::Ident;
            for (const auto& [kw, kind] : keywords)
                if (word == kw) t.kind = kind;
            t.text = word;
            advance(j - i);
            out.push_back(t);
            continue;
        }
        throw ParseError(line, col, {"formula"}, std::string("'") + c + "'");
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    Formula formula() { return imp(); }

    Inequality inequality() {
        Formula l = formula();
        expect(Tok::Leq);
        Formula r = formula();
        return {l, r};
    }

    std::vector<Mega> mega_list() {
        std::vector<Mega> items{mega_atom()};
        while (accept(Tok::Amp)) items.push_back(mega_atom());
        return items;
    }

    Mega mega() { return mega_conj(mega_list()); }

    Mega mega_atom() {
        if (peek().kind == Tok::Forall) {
            next();
            std::string v = expect(Tok::Svar).text;
            expect(Tok::LBracket);
            Mega body = mega();
            expect(Tok::RBracket);
            return Mega::forall(v, body);
        }
        if (peek().kind == Tok::LParen) {
            std::size_t save = pos_;
            try {
                return Mega::leaf(inequality());
            } catch (const ParseError&) {
                pos_ = save;
            }
            next();
            Mega m = mega();
            expect(Tok::RParen);
            return m;
        }
        return Mega::leaf(inequality());
    }

    bool at(Tok k) const { return peek().kind == k; }
    void finish() { expect(Tok::End); }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, std::move(expected), found);
    }

    const Token& expect(Tok k) {
        if (peek().kind != k) fail({describe(k)});
        return next();
    }

    Formula imp() {
        Formula l = disj();
        if (accept(Tok::Imp)) return mk::imp(l, imp());
        return l;
    }

    Formula disj() {
        Formula l = conj();
        while (accept(Tok::Or)) l = mk::disj(l, conj());
        return l;
    }

    Formula conj() {
        Formula l = unary();
        while (accept(Tok::And)) l = mk::conj(l, unary());
        return l;
    }

    Formula unary() {
        switch (peek().kind) {
            case Tok::Not: next(); return mk::neg(unary());
            case Tok::Box: next(); return mk::box(unary());
            case Tok::Dia: next(); return mk::dia(unary());
            case Tok::BBox: next(); return mk::bbox(unary());
            case Tok::BDia: next(); return mk::bdia(unary());
            case Tok::GlobA: next(); return mk::glob_a(unary());
            case Tok::GlobE: next(); return mk::glob_e(unary());
            case Tok::At: {
                next();
                if (!at(Tok::Nom) && !at(Tok::Svar)) fail({describe(Tok::Nom), describe(Tok::Svar)});
                const bool nominal = at(Tok::Nom);
                std::string index = next().text;
                Formula body = unary();
                return nominal ? mk::at_nom(std::move(index), body) : mk::at_svar(std::move(index), body);
            }
            case Tok::Down:
            case Tok::All:
            case Tok::Ex: {
                Tok kind = next().kind;
                std::string v = expect(Tok::Svar).text;
                expect(Tok::Dot);
                Formula body = imp();
                if (kind == Tok::Down) return mk::down(v, body);
                if (kind == Tok::All) return mk::forall(v, body);
                return mk::exists(v, body);
            }
            default: return primary();
        }
    }

    Formula primary() {
        switch (peek().kind) {
            case Tok::Top: next(); return mk::top();
            case Tok::Bot: next(); return mk::bot();
            case Tok::Ident: return mk::prop(next().text);
            case Tok::Nom: return mk::nom(next().text);
            case Tok::Svar: return mk::svar(next().text);
            case Tok::LParen: {
                next();
                Formula f = imp();
                expect(Tok::RParen);
                return f;
            }
            default:
                fail({"formula"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser p(text);
    Formula f = p.formula();
    p.finish();
    return f;
}

Inequality parse_inequality(const std::string& text) {
    Parser p(text);
    Inequality i = p.inequality();
    p.finish();
    return i;
}

Mega parse_mega(const std::string& text) {
    Parser p(text);
    Mega m = p.mega();
    p.finish();
    return m;
}

namespace {

UQInequality require_uq(const Mega& m) {
    auto uq = as_uq(m);
    if (!uq) throw ParseError(1, 1, {"universally quantified inequality"}, "meta-conjunction");
    return *uq;
}

}  // namespace

Statement parse_statement(const std::string& text) {
    Parser p(text);
    std::vector<Mega> items = p.mega_list();
    if (p.accept(Tok::Implies)) {
        Mega concl = p.mega_atom();
        p.finish();
        QuasiUQInequality q{{}, require_uq(concl)};
        for (const auto& m : items) q.premises.push_back(require_uq(m));
        return q;
    }
    p.finish();
    if (items.size() == 1 && items[0].kind() == Mega::Kind::Leaf) return items[0].ineq();
    return mega_conj(items);
}

std::variant<Formula, Inequality> parse(const std::string& text) {
    Parser p(text);
    Formula l = p.formula();
    if (p.accept(Tok::Leq)) {
        Formula r = p.formula();
        p.finish();
        return Inequality{l, r};
    }
    p.finish();
    return l;
}

}  // namespace alba
