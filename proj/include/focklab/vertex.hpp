#pragma once

// Generating series psi(z), psi*(z), Gamma_+(z), Gamma_-(z) applied to
// vectors, and the boson-fermion correspondence.
//
// Conventions:
//   psi(z)     = sum_m z^m psi_m
//   psi*(z)    = sum_m z^-m psi*_m
//   Gamma_+(z) = exp sum_{k>0} z^-k alpha_k / k
//   Gamma_-(z) = exp sum_{k>0} z^k alpha_-k / k

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focklab/boson.hpp"

namespace focklab {

// Series in one formal variable. Exponents are stored doubled. Coefficients
// are exact on [lo, hi] and not tracked outside it; `truncated` says whether
// anything nonzero was dropped above hi.
struct FSeries {
    std::map<int, RVec> coeffs;
    int lo = 0;
    int hi = 0;
    bool truncated = false;

    RVec coeff(HalfInt e) const { return coeff_twice(e.twice()); }
    RVec coeff_twice(int twice) const;  // throws out_of_range outside the window
};

enum class GammaSide { plus, minus };

// Homogeneous pieces of Gamma_{+/-}(z)^{+/-1} applied to v: entry n is the
// coefficient of z^-n (plus) or z^n (minus), for n = 0..max_degree.
std::vector<RVec> gamma_pieces(GammaSide side, bool inverse, const RVec& v, int max_degree);

FSeries psi_series(const RVec& v, HalfInt lo, HalfInt hi);
FSeries psi_star_series(const RVec& v, HalfInt lo, HalfInt hi);  // coefficient of z^e is psi*_{-e} v

// Gamma_+ terminates on any fixed vector, so these are exact.
FSeries gamma_plus(const RVec& v);
FSeries gamma_plus_inverse(const RVec& v);
// Gamma_- is cut at z-degree D; `truncated` is set when something was cut.
FSeries gamma_minus(const RVec& v, int degree);
FSeries gamma_minus_inverse(const RVec& v, int degree);

// [z^m] s z^(ch+1/2) Gamma_-(z) Gamma_+(z)^-1 v
RVec fermion_from_bosons(HalfInt m, const RVec& v);
// [z^-m] s^-1 z^(-ch+1/2) Gamma_-(z)^-1 Gamma_+(z) v
RVec fermion_star_from_bosons(HalfInt m, const RVec& v);

// The five exchange relations, with the scalar factors that follow from the
// conventions above:
//   plus_minus      Gamma_+(x) Gamma_-(y) = (1 - y/x)^-1 Gamma_-(y) Gamma_+(x)
//   plus_psi        Gamma_+(x) psi(z)     = (1 - z/x)^-1 psi(z) Gamma_+(x)
//   minus_psi       Gamma_-(x) psi(z)     = (1 - x/z)^-1 psi(z) Gamma_-(x)
//   plus_psi_star   Gamma_+(x) psi*(z)    = (1 - z/x) psi*(z) Gamma_+(x)
//   minus_psi_star  Gamma_-(x) psi*(z)    = (1 - x/z) psi*(z) Gamma_-(x)
// (1-a)^-1 is expanded as 1 + a + a^2 + ...
enum class GammaRelation { plus_minus, plus_psi, minus_psi, plus_psi_star, minus_psi_star };

const std::vector<GammaRelation>& all_gamma_relations();
std::string_view relation_name(GammaRelation r);
std::optional<GammaRelation> parse_relation(std::string_view name);

struct GammaMismatch {
    GammaRelation relation;
    int x_twice;  // exponent of x, doubled
    int z_twice;  // exponent of the second variable, doubled
    RVec lhs;
    RVec rhs;
};

// Compares the coefficients of x^a z^b on both sides for |a| + |b| <= D
// (D + 1/2 when b is a half-integer). Every compared coefficient is a finite
// sum, so both sides are exact. Returns the first mismatch.
std::optional<GammaMismatch> gamma_commutation_check(GammaRelation r, const RVec& v, int degree);

}  // namespace focklab
