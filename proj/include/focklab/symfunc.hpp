#pragma once

// Symmetric functions and the bosonic Fock space B = Q[x_1, x_2, ...; q, q^-1].

#include <map>
#include <string>
#include <vector>

#include "focklab/fockvec.hpp"

namespace focklab {

// Exponent vector with trailing zeros trimmed; index 0 is variable 1.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial with rational coefficients.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) { add(Monomial{}, c); }  // NOLINT(google-explicit-constructor)
    static MultiPoly variable(int index, const Rational& coeff = Rational(1));  // 1-based index

    void add(Monomial m, const Rational& c);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    int num_vars() const;  // highest variable index that appears

    MultiPoly derivative(int index) const;
    MultiPoly permuted(const std::vector<int>& perm) const;  // variable i -> perm[i-1]
    MultiPoly with_zero(int index) const;                     // set x_index = 0
    // Replace x_i by values[i-1]; variables beyond values.size() must not appear.
    MultiPoly substitute(const std::vector<MultiPoly>& values) const;
    // Weighted degree sum_k k * e_k of every term; -1 for the zero polynomial,
    // -2 if the terms are not weighted-homogeneous.
    int weighted_degree() const;

    // Canonical text, terms in decreasing monomial order, variables named
    // `var` followed by their index.
    std::string str(const std::string& var = "x") const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

struct SymPoly {
    int num_vars = 0;
    MultiPoly poly;  // in y_1..y_num_vars
};

// Element of B: charge grade h -> polynomial in x_1, x_2, ...
class BosonPoly {
public:
    BosonPoly() = default;
    static BosonPoly graded(int charge, MultiPoly p);

    void add(int charge, const MultiPoly& p);
    const std::map<int, MultiPoly>& grades() const { return grades_; }
    bool is_zero() const { return grades_.empty(); }
    std::string str() const;

    BosonPoly& operator+=(const BosonPoly& o);
    BosonPoly& operator-=(const BosonPoly& o);
    friend BosonPoly operator+(BosonPoly a, const BosonPoly& b) { return a += b; }
    friend BosonPoly operator-(BosonPoly a, const BosonPoly& b) { return a -= b; }
    friend BosonPoly operator*(const Rational& s, BosonPoly p);
    friend bool operator==(const BosonPoly& a, const BosonPoly& b) { return a.grades_ == b.grades_; }

private:
    std::map<int, MultiPoly> grades_;
};

// Rows of a filling, row r listing t(r,1), t(r,2), ...
using Filling = std::vector<std::vector<int>>;
bool is_column_strict(const Partition& lambda, const Filling& t);

// Sum over column-strict fillings with entries <= n of prod y_{t(b)}.
SymPoly schur(const Partition& lambda, int num_vars);

// Number of column-strict fillings of lambda with content mu.
long kostka(const Partition& lambda, const std::vector<int>& content);

// p_mu in n variables.
MultiPoly power_sum(const Partition& mu, int num_vars);

// Coefficients c_mu with s_lambda = sum_mu c_mu p_mu, found by an exact
// linear solve in |lambda| variables. Results are memoised.
std::map<Partition, Rational> power_sum_expand(const Partition& lambda);

// chi_lambda with p_k -> k x_k substituted into power_sum_expand.
const MultiPoly& char_poly(const Partition& lambda);

BosonPoly sigma(const RVec& v);

// alpha_k on B: d/dx_k for k > 0, multiplication by -k x_{-k} for k < 0.
BosonPoly weyl_on_B(int k, const BosonPoly& p);

}  // namespace focklab
