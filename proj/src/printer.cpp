#include "alba/formula.hpp"

#include <sstream>

namespace alba {

namespace {

// Binding strength: implication < disjunction < conjunction < unary.
constexpr int kImp = 0;
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kUnary = 3;

struct Symbols {
    const char* top;
    const char* bot;
    const char* neg;
    const char* conj;
    const char* disj;
    const char* imp;
    const char* box;
    const char* dia;
    const char* bbox;
    const char* bdia;
    const char* glob_a;
    const char* glob_e;
    const char* nom_sigil;
    const char* svar_sigil;
    const char* down;
    const char* all;
    const char* ex;
    const char* dot;
};

constexpr Symbols kAscii{"T", "F", "~", " /\\ ", " \\/ ", " -> ", "box ", "dia ", "bbox ", "bdia ",
                         "A ", "E ", "'", "$", "down ", "all ", "ex ", " . "};
constexpr Symbols kUnicode{"⊤", "⊥", "¬", " ∧ ", " ∨ ", " → ", "□", "◇", "■", "◆",
                           "A", "E", "", "", "↓", "∀", "∃", "."};

class Printer {
public:
    explicit Printer(Notation n) : s_(n == Notation::Ascii ? kAscii : kUnicode) {}

    void print(const Formula& f, int min_prec, bool tail_ok) {
        switch (f.op()) {
            case Op::Prop: out_ << f.name(); return;
            case Op::Nom: out_ << s_.nom_sigil << f.name(); return;
            case Op::Svar: out_ << s_.svar_sigil << f.name(); return;
            case Op::Top: out_ << s_.top; return;
            case Op::Bot: out_ << s_.bot; return;
            case Op::Not: unary(s_.neg, f, tail_ok); return;
            case Op::Box: unary(s_.box, f, tail_ok); return;
            case Op::Dia: unary(s_.dia, f, tail_ok); return;
            case Op::BBox: unary(s_.bbox, f, tail_ok); return;
            case Op::BDia: unary(s_.bdia, f, tail_ok); return;
            case Op::GlobalA: unary(s_.glob_a, f, tail_ok); return;
            case Op::GlobalE: unary(s_.glob_e, f, tail_ok); return;
            case Op::AtNom:
            case Op::AtSvar: {
                out_ << "@" << (f.op() == Op::AtNom ? s_.nom_sigil : s_.svar_sigil) << f.name() << " ";
                print(f.child(0), kUnary, tail_ok);
                return;
            }
            case Op::Down: binder(s_.down, f, tail_ok); return;
            case Op::Forall: binder(s_.all, f, tail_ok); return;
            case Op::Exists: binder(s_.ex, f, tail_ok); return;
            case Op::And: binary(s_.conj, kAnd, false, f, min_prec, tail_ok); return;
            case Op::Or: binary(s_.disj, kOr, false, f, min_prec, tail_ok); return;
            case Op::Imp: binary(s_.imp, kImp, true, f, min_prec, tail_ok); return;
        }
    }

    std::string str() const { return out_.str(); }

private:
    void unary(const char* sym, const Formula& f, bool tail_ok) {
        out_ << sym;
        print(f.child(0), kUnary, tail_ok);
    }

    void binder(const char* sym, const Formula& f, bool tail_ok) {
        if (!tail_ok) out_ << "(";
        out_ << sym << s_.svar_sigil << f.name() << s_.dot;
        print(f.child(0), kImp, true);
        if (!tail_ok) out_ << ")";
    }

    void binary(const char* sym, int prec, bool right_assoc, const Formula& f, int min_prec, bool tail_ok) {
        bool parens = prec < min_prec;
        if (parens) {
            out_ << "(";
            tail_ok = true;
        }
        print(f.child(0), right_assoc ? prec + 1 : prec, false);
        out_ << sym;
        print(f.child(1), right_assoc ? prec : prec + 1, tail_ok);
        if (parens) out_ << ")";
    }

    Symbols s_;
    std::ostringstream out_;
};

std::string mega_string(const Mega& m, Notation n, bool nested) {
    switch (m.kind()) {
        case Mega::Kind::Leaf: return to_string(m.ineq(), n);
        case Mega::Kind::Conj: {
            std::string body = mega_string(m.left(), n, true) + " & " + mega_string(m.right(), n, true);
            return nested ? "(" + body + ")" : body;
        }
        case Mega::Kind::Forall:
            if (n == Notation::Ascii) return "forall $" + m.var() + " [" + mega_string(m.body(), n, false) + "]";
            return "∀" + m.var() + "(" + mega_string(m.body(), n, false) + ")";
    }
    return {};
}

}  // namespace

std::string to_string(const Formula& f, Notation n) {
    Printer p(n);
    p.print(f, kImp, true);
    return p.str();
}

std::string to_string(const Inequality& ineq, Notation n) {
    const char* leq = n == Notation::Ascii ? " <= " : " ≤ ";
    return to_string(ineq.lhs, n) + leq + to_string(ineq.rhs, n);
}

std::string to_string(const Mega& m, Notation n) { return mega_string(m, n, false); }

std::string to_string(const UQInequality& uq, Notation n) { return to_string(to_mega(uq), n); }

namespace {
std::string parenthesise(const std::string& s) { return "(" + s + ")"; }
}  // namespace

std::string to_string(const QuasiInequality& q, Notation n) {
    std::string out;
    const char* amp = " & ";
    const char* arrow = n == Notation::Ascii ? " => " : " ⇒ ";
    for (std::size_t i = 0; i < q.premises.size(); ++i) {
        if (i) out += amp;
        out += parenthesise(to_string(q.premises[i], n));
    }
    if (!q.premises.empty()) out += arrow;
    out += parenthesise(to_string(q.conclusion, n));
    return out;
}

std::string to_string(const QuasiUQInequality& q, Notation n) {
    std::string out;
    const char* arrow = n == Notation::Ascii ? " => " : " ⇒ ";
    for (std::size_t i = 0; i < q.premises.size(); ++i) {
        if (i) out += " & ";
        out += parenthesise(to_string(q.premises[i], n));
    }
    if (!q.premises.empty()) out += arrow;
    out += parenthesise(to_string(q.conclusion, n));
    return out;
}

std::string to_string(const Statement& s, Notation n) {
    return std::visit([n](const auto& v) { return to_string(v, n); }, s);
}

}  // namespace alba
