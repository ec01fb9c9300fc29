#pragma once

// gl_{Z+1/2} with its central extension, a_infinity, and the affine algebras
// sl_l^ / gl_l^ acting on F through the Clifford algebra.

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "focklab/boson.hpp"

namespace focklab {

// E-bar_{m,n}: psi_m psi*_n, except -psi*_n psi_n on the diagonal below zero.
RVec act_Ebar(HalfInt m, HalfInt n, const ChargedPartition& cp);
ROp ebar(HalfInt m, HalfInt n);

// Finitely supported matrix over Z+1/2 plus a multiple of c. Keys are doubled
// positions (row, column).
struct FinMat {
    std::map<std::pair<int, int>, Rational> entries;
    Rational central;

    static FinMat unit(HalfInt m, HalfInt n, const Rational& coeff = Rational(1));
    void add(int row_twice, int col_twice, const Rational& c);
    bool is_zero() const { return entries.empty() && central.is_zero(); }
    friend bool operator==(const FinMat&, const FinMat&) = default;
};

// Plain matrix product and commutator, central parts ignored.
FinMat matrix_product(const FinMat& a, const FinMat& b);
FinMat matrix_commutator(const FinMat& a, const FinMat& b);
// Bracket of the central extension: commutator plus the c correction.
FinMat bracket_finite(const FinMat& a, const FinMat& b);
// gl^c -> gl (+) Cc: E-bar_{m,m} with m < 0 goes to E_{m,m} - c.
FinMat trivialize(const FinMat& a);
RVec act_finite(const FinMat& a, const ChargedPartition& cp);

// Element of a_infinity with period `level`:
//   sum over patterns of coeff * sum_{p : residue(p) = r} E-bar_{p, p + delta}
// where residue(p) = (p + 1/2) mod level, plus a finite part and a c part.
class PeriodicBanded {
public:
    using Key = std::pair<int, int>;  // (residue in [0, level), offset delta)

    explicit PeriodicBanded(int level = 1);

    // coeff * sum_k E-bar_{i-1/2+k l, j-1/2+k l+m l}, with i, j in [1, level].
    static PeriodicBanded pattern(int level, int i, int j, int m, const Rational& coeff = Rational(1));
    // coeff * sum over all p of E-bar_{p, p + delta}.
    static PeriodicBanded diagonal(int level, int delta, const Rational& coeff = Rational(1));
    static PeriodicBanded finite_part(int level, const FinMat& f);

    int level() const { return level_; }
    const std::map<Key, Rational>& patterns() const { return patterns_; }
    const FinMat& finite() const { return finite_; }
    Rational central() const { return finite_.central; }

    void add_pattern(int residue, int delta, const Rational& c);
    void add_entry(HalfInt m, HalfInt n, const Rational& c) { finite_.add(m.twice(), n.twice(), c); }
    void add_central(const Rational& c) { finite_.central += c; }

    // Same element written with a period that is a multiple of level().
    PeriodicBanded refined(int new_level) const;
    // Largest |delta| among patterns and finite entries.
    int band() const;
    bool is_zero() const { return patterns_.empty() && finite_.is_zero(); }

    PeriodicBanded& operator+=(const PeriodicBanded& o);
    PeriodicBanded& operator*=(const Rational& s);
    friend PeriodicBanded operator+(PeriodicBanded a, const PeriodicBanded& b) { return a += b; }
    friend PeriodicBanded operator*(const Rational& s, PeriodicBanded a) { return a *= s; }

    // Equal as elements, after bringing both to a common period.
    friend bool operator==(const PeriodicBanded& a, const PeriodicBanded& b);

    std::string str() const;

private:
    int level_;
    std::map<Key, Rational> patterns_;
    FinMat finite_;
};

int residue_of(int twice, int level);

// Levels must agree or one must divide the other; otherwise invalid_argument.
PeriodicBanded bracket_ainfty(const PeriodicBanded& a, const PeriodicBanded& b);
// c acts as 1.
RVec act_banded(const PeriodicBanded& a, const ChargedPartition& cp);
ROp banded_op(const PeriodicBanded& a);

// Loop algebra element sum coeff X_{i,j} t^n + c_coeff c + d_coeff d.
struct AffElt {
    enum class Kind { sl, gl };
    using Key = std::tuple<int, int, int>;  // (i, j, n), i, j in [1, level]

    Kind kind = Kind::gl;
    int level = 1;
    std::map<Key, Rational> loops;
    Rational c;
    Rational d;

    static AffElt basis(Kind kind, int level, int i, int j, int n, const Rational& coeff = Rational(1));
    static AffElt central(Kind kind, int level, const Rational& coeff = Rational(1));
    static AffElt degree(Kind kind, int level, const Rational& coeff = Rational(1));

    void add(int i, int j, int n, const Rational& coeff);
    // Each t^n slice traceless when kind == sl.
    bool valid() const;
    bool is_zero() const { return loops.empty() && c.is_zero() && d.is_zero(); }
    // Multiply the loop part by t^m.
    AffElt times_t(int m) const;

    AffElt& operator+=(const AffElt& o);
    friend AffElt operator+(AffElt a, const AffElt& b) { return a += b; }
    friend AffElt operator*(const Rational& s, AffElt a);
    friend bool operator==(const AffElt&, const AffElt&) = default;
    std::string str() const;
};

// [X t^n, Y t^m] = [X,Y] t^(n+m) + n delta_{n,-m} tr(XY) c, [d, X t^n] = n X t^n.
AffElt bracket_affine(const AffElt& x, const AffElt& y);

// X_{i,j} t^m goes to the pattern (i, j, m); c to c. A d component is rejected.
PeriodicBanded embed_affine(const AffElt& x);

// Chevalley generators as loop elements: E_i = X_{i,i+1}, E_0 = X_{l,1} t,
// F_i = X_{i+1,i}, F_0 = X_{1,l} t^-1.
AffElt chevalley_E_elt(int i, int level);
AffElt chevalley_F_elt(int i, int level);

// Combinatorial form: remove (E) or add (F) one box of color i in every way.
RVec chevalley_E(int i, int level, const ChargedPartition& cp);
RVec chevalley_F(int i, int level, const ChargedPartition& cp);
ROp chevalley_E_op(int i, int level);
ROp chevalley_F_op(int i, int level);

// d counts boxes of color 0.
RVec act_d(int level, const ChargedPartition& cp);
ROp d_op(int level);

// C_j = sum_a X_{a,a+j}, with t X_{a,a+j-l} once the column wraps past l.
AffElt c_element(int j, int level);
// C_{k mod l} t^{floor(k/l)}, which acts as alpha_k.
AffElt alpha_element(int k, int level);
// I t^k.
AffElt identity_loop(int k, int level);

}  // namespace focklab
