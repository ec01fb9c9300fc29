#include "focklab/expr.hpp"

#include <cctype>

namespace focklab {

std::string Atom::str() const {
    const std::string i = std::to_string(index);
    switch (kind) {
        case AtomKind::alpha: return "alpha(" + i + ")";
        case AtomKind::a0: return "a0";
        case AtomKind::psi: return "psi(" + m.str() + ")";
        case AtomKind::psis: return "psis(" + m.str() + ")";
        case AtomKind::E: return "E(" + i + ")";
        case AtomKind::F: return "F(" + i + ")";
        case AtomKind::Eq: return "Eq(" + i + ")";
        case AtomKind::Fq: return "Fq(" + i + ")";
        case AtomKind::K: return "K(" + i + ")";
        case AtomKind::d: return "d";
        case AtomKind::s: return "s";
        case AtomKind::s_inv: return "s^-1";
        case AtomKind::Ebar: return "Ebar(" + m.str() + "," + n.str() + ")";
    }
    return "?";
}

bool Atom::needs_level() const {
    switch (kind) {
        case AtomKind::E: case AtomKind::F: case AtomKind::Eq: case AtomKind::Fq: case AtomKind::K: case AtomKind::d:
            return true;
        default:
            return false;
    }
}

bool Atom::needs_q() const { return kind == AtomKind::Eq || kind == AtomKind::Fq || kind == AtomKind::K; }

Expr Expr::make_atom(Atom a) {
    Expr e;
    e.kind = Kind::atom;
    e.atom = a;
    return e;
}

Expr Expr::make_rational(Rational r) {
    Expr e;
    e.kind = Kind::rational;
    e.value = std::move(r);
    return e;
}

Expr Expr::make_qpower(int k) {
    Expr e;
    e.kind = Kind::qpower;
    e.qexp = k;
    return e;
}

Expr Expr::make_sum(std::vector<Expr> terms, std::vector<int> signs) {
    Expr e;
    e.kind = Kind::sum;
    e.children = std::move(terms);
    e.signs = std::move(signs);
    return e;
}

Expr Expr::make_product(std::vector<Expr> factors) {
    Expr e;
    e.kind = Kind::product;
    e.children = std::move(factors);
    return e;
}

Expr Expr::make_bracket(Expr a, Expr b) {
    Expr e;
    e.kind = Kind::bracket;
    e.children = {std::move(a), std::move(b)};
    return e;
}

bool Expr::uses_q() const {
    if (kind == Kind::qpower) return true;
    if (kind == Kind::atom) return atom.needs_q();
    for (const auto& c : children)
        if (c.uses_q()) return true;
    return false;
}

bool Expr::uses_level() const {
    if (kind == Kind::atom) return atom.needs_level();
    for (const auto& c : children)
        if (c.uses_level()) return true;
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr expr() {
        std::vector<Expr> terms;
        std::vector<int> signs;
        int sign = accept('-') ? -1 : 1;
        const bool leading_minus = sign < 0;
        terms.push_back(term());
        signs.push_back(sign);
        while (true) {
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
            terms.push_back(term());
            signs.push_back(sign);
        }
        if (terms.size() == 1 && !leading_minus) return std::move(terms.front());
        return Expr::make_sum(std::move(terms), std::move(signs));
    }

    Expr term() {
        std::vector<Expr> factors;
        factors.push_back(factor());
        while (accept('*')) factors.push_back(factor());
        if (factors.size() == 1) return std::move(factors.front());
        return Expr::make_product(std::move(factors));
    }

    Expr factor() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            Expr a = expr();
            expect(',');
            Expr b = expr();
            expect(']');
            return Expr::make_bracket(std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return named();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    long integer(bool allow_sign) {
        skip();
        const std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail_at("expected an integer", start);
        if (pos_ - digits > 9) fail_at("integer too large", start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Expr rational() {
        const std::size_t start = pos_;
        const long num = integer(false);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const long den = integer(false);
            if (den == 0) fail_at("zero denominator", start);
            return Expr::make_rational(Rational(num, den));
        }
        return Expr::make_rational(Rational(num));
    }

    HalfInt half_integer() {
        skip();
        const std::size_t start = pos_;
        const long num = integer(true);
        if (pos_ >= text_.size() || text_[pos_] != '/') fail_at("malformed half-integer, expected a/2", start);
        ++pos_;
        const std::size_t den_at = pos_;
        const long den = integer(false);
        if (den != 2 || num % 2 == 0) fail_at("malformed half-integer, expected a/2 with a odd", den != 2 ? den_at : start);
        return HalfInt::from_twice(static_cast<int>(num));
    }

    int int_arg(bool allow_sign) {
        expect('(');
        const long v = integer(allow_sign);
        expect(')');
        return static_cast<int>(v);
    }

    Expr named() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        Atom a;
        if (name == "q") {
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                return Expr::make_qpower(static_cast<int>(integer(true)));
            }
            return Expr::make_qpower(1);
        }
        if (name == "alpha") {
            a.kind = AtomKind::alpha;
            const std::size_t at = pos_;
            a.index = int_arg(true);
            if (a.index == 0) fail_at("alpha(0) is written a0", at);
        } else if (name == "a0") {
            a.kind = AtomKind::a0;
        } else if (name == "psi" || name == "psis") {
            a.kind = name == "psi" ? AtomKind::psi : AtomKind::psis;
            expect('(');
            a.m = half_integer();
            expect(')');
        } else if (name == "E" || name == "F" || name == "Eq" || name == "Fq" || name == "K") {
            a.kind = name == "E" ? AtomKind::E
                   : name == "F" ? AtomKind::F
                   : name == "Eq" ? AtomKind::Eq
                   : name == "Fq" ? AtomKind::Fq
                                  : AtomKind::K;
            a.index = int_arg(false);
        } else if (name == "Ebar") {
            a.kind = AtomKind::Ebar;
            expect('(');
            a.m = half_integer();
            expect(',');
            a.n = half_integer();
            expect(')');
        } else if (name == "d") {
            a.kind = AtomKind::d;
        } else if (name == "s") {
            a.kind = AtomKind::s;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                const std::size_t at = pos_;
                ++pos_;
                if (integer(true) != -1) fail_at("only s^-1 is supported", at);
                a.kind = AtomKind::s_inv;
            }
        } else {
            fail_at("unknown atom '" + name + "'", start);
        }
        return Expr::make_atom(a);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool needs_parens(const Expr& child, Expr::Kind parent) {
    if (child.kind == Expr::Kind::sum) return true;
    return parent == Expr::Kind::product && child.kind == Expr::Kind::product;
}

std::string wrap(const Expr& child, Expr::Kind parent) {
    const std::string s = print_expr(child);
    return needs_parens(child, parent) ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::atom: return e.atom.str();
        case Expr::Kind::rational: return e.value.str();
        case Expr::Kind::qpower: return e.qexp == 1 ? "q" : "q^" + std::to_string(e.qexp);
        case Expr::Kind::bracket: return "[" + print_expr(e.children[0]) + ", " + print_expr(e.children[1]) + "]";
        case Expr::Kind::product: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "*" : "") + wrap(e.children[i], e.kind);
            return out;
        }
        case Expr::Kind::sum: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i == 0) out += e.signs[i] < 0 ? "-" : "";
                else out += e.signs[i] < 0 ? " - " : " + ";
                out += wrap(e.children[i], e.kind);
            }
            return out;
        }
    }
    return "";
}

namespace {

QOp lifted(ROp op) {
    return {[op = std::move(op)](const ChargedPartition& cp) { return lift(op(cp)); }, op.name};
}

QOp atom_op(const Atom& a, const EvalOptions& opts) {
    if (a.needs_q() && opts.ring != Ring::q) throw EvalError(a.str() + " needs the q ring");
    int level = 0;
    if (a.needs_level()) {
        if (!opts.level) throw EvalError(a.str() + " needs a level");
        level = *opts.level;
        if (level < 2) throw EvalError("level must be at least 2");
        if (a.kind != AtomKind::d && (a.index < 0 || a.index >= level))
            throw EvalError(a.str() + " is out of range for level " + std::to_string(level));
    }
    switch (a.kind) {
        case AtomKind::alpha: return lifted(alpha(a.index));
        case AtomKind::a0: return lifted(alpha0());
        case AtomKind::psi: return lifted(psi(a.m));
        case AtomKind::psis: return lifted(psi_star(a.m));
        case AtomKind::E: return lifted(chevalley_E_op(a.index, level));
        case AtomKind::F: return lifted(chevalley_F_op(a.index, level));
        case AtomKind::Eq: return eq_op(a.index, level);
        case AtomKind::Fq: return fq_op(a.index, level);
        case AtomKind::K: return kq_op(a.index, level);
        case AtomKind::d: return lifted(d_op(level));
        case AtomKind::s: return lifted(shift(1));
        case AtomKind::s_inv: return lifted(shift(-1));
        case AtomKind::Ebar: return lifted(ebar(a.m, a.n));
    }
    throw EvalError("unknown atom");
}

}  // namespace

QVec eval_expr(const Expr& e, const QVec& v, const EvalOptions& opts) {
    switch (e.kind) {
        case Expr::Kind::atom: return atom_op(e.atom, opts)(v);
        case Expr::Kind::rational: {
            QVec out = v;
            out *= LaurentQ(e.value);
            return out;
        }
        case Expr::Kind::qpower: {
            if (opts.ring != Ring::q) throw EvalError("q scalars need the q ring");
            QVec out = v;
            out *= LaurentQ::monomial(e.qexp);
            return out;
        }
        case Expr::Kind::sum: {
            QVec out;
            for (std::size_t i = 0; i < e.children.size(); ++i)
                out.add(eval_expr(e.children[i], v, opts), LaurentQ(e.signs[i]));
            return out;
        }
        case Expr::Kind::product: {
            QVec w = v;
            for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) w = eval_expr(*it, w, opts);
            return w;
        }
        case Expr::Kind::bracket: {
            QVec ab = eval_expr(e.children[0], eval_expr(e.children[1], v, opts), opts);
            ab -= eval_expr(e.children[1], eval_expr(e.children[0], v, opts), opts);
            return ab;
        }
    }
    return {};
}

QVec eval_expr(const Expr& e, const ChargedPartition& state, const EvalOptions& opts) {
    return eval_expr(e, QVec::basis(state), opts);
}

RVec to_rational(const QVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) {
        if (c.min_degree() != 0 || c.max_degree() != 0) throw EvalError("coefficient " + c.str() + " is not a constant");
        out.add(cp, c.coeff(0));
    }
    return out;
}

}  // namespace focklab
