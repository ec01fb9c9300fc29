#include "focklab/vertex.hpp"

#include <stdexcept>

namespace focklab {

namespace {

RVec apply_alpha_vec(int k, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) out.add(apply_alpha(k, cp), c);
    return out;
}

RVec apply_psi_vec(HalfInt m, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) out.add(apply_psi(m, cp), c);
    return out;
}

RVec apply_psi_star_vec(HalfInt m, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) out.add(apply_psi_star(m, cp), c);
    return out;
}

RVec shift_vec(int k, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) out.add(ChargedPartition{cp.lambda, cp.charge + k}, c);
    return out;
}

int max_size(const RVec& v) {
    int n = 0;
    for (const auto& [cp, c] : v.terms()) n = std::max(n, cp.lambda.size());
    return n;
}

FSeries from_pieces(const std::vector<RVec>& pieces, int sign, int lo, int hi) {
    FSeries s;
    s.lo = lo;
    s.hi = hi;
    for (std::size_t n = 0; n < pieces.size(); ++n)
        if (!pieces[n].is_zero()) s.coeffs.emplace(sign * 2 * static_cast<int>(n), pieces[n]);
    return s;
}

FSeries minus_series(const RVec& v, int degree, bool inverse) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    FSeries s = from_pieces(gamma_pieces(GammaSide::minus, inverse, v, degree), 1, 0, 2 * degree);
    // alpha_-1 never kills a vector, so the series goes on past any cut.
    s.truncated = !v.is_zero();
    return s;
}

}  // namespace

RVec FSeries::coeff_twice(int twice) const {
    if (twice < lo || twice > hi) throw std::out_of_range("exponent outside the series window");
    auto it = coeffs.find(twice);
    return it == coeffs.end() ? RVec{} : it->second;
}

std::vector<RVec> gamma_pieces(GammaSide side, bool inverse, const RVec& v, int max_degree) {
    // n F_n = sum_{k=1..n} (+/-) alpha_{+/-k} F_{n-k}, from differentiating exp.
    std::vector<RVec> f{v};
    const int dir = side == GammaSide::plus ? 1 : -1;
    for (int n = 1; n <= max_degree; ++n) {
        RVec fn;
        for (int k = 1; k <= n; ++k)
            if (!f[static_cast<std::size_t>(n - k)].is_zero())
                fn.add(apply_alpha_vec(dir * k, f[static_cast<std::size_t>(n - k)]));
        fn *= Rational(inverse ? -1 : 1, n);
        f.push_back(std::move(fn));
    }
    return f;
}

FSeries psi_series(const RVec& v, HalfInt lo, HalfInt hi) {
    FSeries s;
    s.lo = lo.twice();
    s.hi = hi.twice();
    for (int t = s.lo; t <= s.hi; t += 2) {
        RVec c = apply_psi_vec(HalfInt::from_twice(t), v);
        if (!c.is_zero()) s.coeffs.emplace(t, std::move(c));
    }
    return s;
}

FSeries psi_star_series(const RVec& v, HalfInt lo, HalfInt hi) {
    FSeries s;
    s.lo = lo.twice();
    s.hi = hi.twice();
    for (int t = s.lo; t <= s.hi; t += 2) {
        RVec c = apply_psi_star_vec(HalfInt::from_twice(-t), v);
        if (!c.is_zero()) s.coeffs.emplace(t, std::move(c));
    }
    return s;
}

FSeries gamma_plus(const RVec& v) {
    const int n = max_size(v);
    return from_pieces(gamma_pieces(GammaSide::plus, false, v, n), -1, -2 * n, 0);
}

FSeries gamma_plus_inverse(const RVec& v) {
    const int n = max_size(v);
    return from_pieces(gamma_pieces(GammaSide::plus, true, v, n), -1, -2 * n, 0);
}

FSeries gamma_minus(const RVec& v, int degree) { return minus_series(v, degree, false); }
FSeries gamma_minus_inverse(const RVec& v, int degree) { return minus_series(v, degree, true); }

namespace {

// [z^e] Gamma_-(z)^{+/-1} Gamma_+(z)^{-/+1} w for a vector of fixed charge
// and size at most n. Gamma_+ only reaches z^-n, so Gamma_- is needed up to
// degree e + n and the result is exact.
RVec middle_coeff(int e, const RVec& w, int n, bool minus_inverse, bool plus_inverse) {
    RVec out;
    if (e + n < 0) return out;
    const auto plus = gamma_pieces(GammaSide::plus, plus_inverse, w, n);
    for (int a = 0; a <= n; ++a) {
        const RVec& pa = plus[static_cast<std::size_t>(a)];
        if (pa.is_zero() || e + a < 0) continue;
        out.add(gamma_pieces(GammaSide::minus, minus_inverse, pa, e + a).back());
    }
    return out;
}

}  // namespace

RVec fermion_from_bosons(HalfInt m, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) {
        // z^(h+1/2) moves the target exponent to m - h - 1/2.
        const int e = (m.twice() - 2 * cp.charge - 1) / 2;
        RVec piece = middle_coeff(e, RVec::basis(cp), cp.lambda.size(), false, true);
        out.add(shift_vec(1, piece), c);
    }
    return out;
}

RVec fermion_star_from_bosons(HalfInt m, const RVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) {
        const int e = (-m.twice() + 2 * cp.charge - 1) / 2;
        RVec piece = middle_coeff(e, RVec::basis(cp), cp.lambda.size(), true, false);
        out.add(shift_vec(-1, piece), c);
    }
    return out;
}

const std::vector<GammaRelation>& all_gamma_relations() {
    static const std::vector<GammaRelation> all{GammaRelation::plus_minus, GammaRelation::plus_psi,
                                                GammaRelation::minus_psi, GammaRelation::plus_psi_star,
                                                GammaRelation::minus_psi_star};
    return all;
}

std::string_view relation_name(GammaRelation r) {
    switch (r) {
        case GammaRelation::plus_minus: return "gamma+gamma-";
        case GammaRelation::plus_psi: return "gamma+psi";
        case GammaRelation::minus_psi: return "gamma-psi";
        case GammaRelation::plus_psi_star: return "gamma+psi*";
        case GammaRelation::minus_psi_star: return "gamma-psi*";
    }
    return "?";
}

std::optional<GammaRelation> parse_relation(std::string_view name) {
    for (auto r : all_gamma_relations())
        if (relation_name(r) == name) return r;
    return std::nullopt;
}

namespace {

// Memoised pieces for one vector.
class Pieces {
public:
    Pieces(GammaSide side, bool inverse) : side_(side), inverse_(inverse) {}
    const RVec& get(const RVec& v, int n) {
        auto& cached = cache_[v.terms()];
        if (static_cast<int>(cached.size()) <= n) cached = gamma_pieces(side_, inverse_, v, n);
        return cached[static_cast<std::size_t>(n)];
    }

private:
    GammaSide side_;
    bool inverse_;
    std::map<RVec::Terms, std::vector<RVec>> cache_;
};

}  // namespace

std::optional<GammaMismatch> gamma_commutation_check(GammaRelation r, const RVec& v, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    Pieces plus(GammaSide::plus, false), minus(GammaSide::minus, false);
    auto mismatch = [&](int xt, int zt, RVec lhs, RVec rhs) -> std::optional<GammaMismatch> {
        if (lhs == rhs) return std::nullopt;
        return GammaMismatch{r, xt, zt, std::move(lhs), std::move(rhs)};
    };
    auto psi_at = [&](int twice, const RVec& w) { return apply_psi_vec(HalfInt::from_twice(twice), w); };
    auto psis_at = [&](int twice, const RVec& w) { return apply_psi_star_vec(HalfInt::from_twice(twice), w); };

    if (r == GammaRelation::plus_minus) {
        // [x^-a y^b]: P_a G_b v against sum_n G_{b-n} P_{a-n} v.
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) {
                const RVec lhs = plus.get(minus.get(v, b), a);
                RVec rhs;
                for (int n = 0; n <= std::min(a, b); ++n) rhs.add(minus.get(plus.get(v, a - n), b - n));
                if (auto m = mismatch(-2 * a, 2 * b, lhs, rhs)) return m;
            }
        return std::nullopt;
    }

    // Second variable carries half-integer exponents: |a| + |b| <= D + 1/2.
    for (int a = 0; a <= degree; ++a) {
        const int reach = 2 * (degree - a) + 1;
        for (int bt = -reach; bt <= reach; bt += 2) {
            RVec lhs, rhs;
            switch (r) {
                case GammaRelation::plus_psi:
                    // [x^-a z^b]: P_a psi_b v against sum_{n<=a} psi_{b-n} P_{a-n} v.
                    lhs = plus.get(psi_at(bt, v), a);
                    for (int n = 0; n <= a; ++n) rhs.add(psi_at(bt - 2 * n, plus.get(v, a - n)));
                    break;
                case GammaRelation::minus_psi:
                    // [x^a z^b]: G_a psi_b v against sum_{n<=a} psi_{b+n} G_{a-n} v.
                    lhs = minus.get(psi_at(bt, v), a);
                    for (int n = 0; n <= a; ++n) rhs.add(psi_at(bt + 2 * n, minus.get(v, a - n)));
                    break;
                case GammaRelation::plus_psi_star:
                    // [z^b] psi*(z) = psi*_{-b}.
                    lhs = plus.get(psis_at(-bt, v), a);
                    rhs = psis_at(-bt, plus.get(v, a));
                    if (a > 0) rhs -= psis_at(-(bt - 2), plus.get(v, a - 1));
                    break;
                case GammaRelation::minus_psi_star:
                    lhs = minus.get(psis_at(-bt, v), a);
                    rhs = psis_at(-bt, minus.get(v, a));
                    if (a > 0) rhs -= psis_at(-(bt + 2), minus.get(v, a - 1));
                    break;
                case GammaRelation::plus_minus:
                    break;
            }
            const int xt = r == GammaRelation::plus_psi || r == GammaRelation::plus_psi_star ? -2 * a : 2 * a;
            if (auto m = mismatch(xt, bt, lhs, rhs)) return m;
        }
    }
    return std::nullopt;
}

}  // namespace focklab
