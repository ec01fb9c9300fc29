#pragma once

// Operator expressions: a small language over the atoms of the library,
// with sums, products (applied right to left), scalars and brackets.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := scalar | atom | '[' expr ',' expr ']' | '(' expr ')'
//   scalar := integer | integer '/' integer | 'q' | 'q^' integer

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "focklab/qfock.hpp"

namespace focklab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class AtomKind { alpha, a0, psi, psis, E, F, Eq, Fq, K, d, s, s_inv, Ebar };

struct Atom {
    AtomKind kind = AtomKind::a0;
    int index = 0;  // alpha, E, F, Eq, Fq, K
    HalfInt m;      // psi, psis, Ebar row
    HalfInt n;      // Ebar column

    std::string str() const;
    bool needs_level() const;
    bool needs_q() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Expr {
    enum class Kind { atom, rational, qpower, sum, product, bracket };

    Kind kind = Kind::rational;
    Atom atom;
    Rational value;                // rational scalar
    int qexp = 0;                  // q^qexp
    std::vector<Expr> children;    // sum, product (left to right as written), bracket
    std::vector<int> signs;        // sum only, +1 or -1 per child

    static Expr make_atom(Atom a);
    static Expr make_rational(Rational r);
    static Expr make_qpower(int k);
    static Expr make_sum(std::vector<Expr> terms, std::vector<int> signs);
    static Expr make_product(std::vector<Expr> factors);
    static Expr make_bracket(Expr a, Expr b);

    bool uses_q() const;
    bool uses_level() const;
    friend bool operator==(const Expr&, const Expr&) = default;
};

Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

enum class Ring { rational, q };

struct EvalOptions {
    std::optional<int> level;
    Ring ring = Ring::rational;
};

// Evaluates the operator on a vector. q atoms and q scalars require the q
// ring; E, F, Eq, Fq, K and d require a level.
QVec eval_expr(const Expr& e, const QVec& v, const EvalOptions& opts);
QVec eval_expr(const Expr& e, const ChargedPartition& state, const EvalOptions& opts);

// Rational ring output; throws EvalError if a coefficient is not constant.
RVec to_rational(const QVec& v);

}  // namespace focklab
