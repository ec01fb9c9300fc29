#include "focklab/matalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace focklab {

RVec act_Ebar(HalfInt m, HalfInt n, const ChargedPartition& cp) {
    RVec out;
    if (m == n && m.twice() < 0) {
        const RVec created = apply_psi(n, cp);
        for (const auto& [state, c] : created.terms()) out.add(apply_psi_star(n, state), -c);
    } else {
        const RVec removed = apply_psi_star(n, cp);
        for (const auto& [state, c] : removed.terms()) out.add(apply_psi(m, state), c);
    }
    return out;
}

ROp ebar(HalfInt m, HalfInt n) {
    return {[m, n](const ChargedPartition& cp) { return act_Ebar(m, n, cp); },
            "Ebar(" + m.str() + "," + n.str() + ")"};
}

FinMat FinMat::unit(HalfInt m, HalfInt n, const Rational& coeff) {
    FinMat f;
    f.add(m.twice(), n.twice(), coeff);
    return f;
}

void FinMat::add(int row_twice, int col_twice, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries.try_emplace({row_twice, col_twice}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries.erase(it);
    }
}

FinMat matrix_product(const FinMat& a, const FinMat& b) {
    FinMat out;
    for (const auto& [ka, ca] : a.entries)
        for (const auto& [kb, cb] : b.entries)
            if (ka.second == kb.first) out.add(ka.first, kb.second, ca * cb);
    return out;
}

FinMat matrix_commutator(const FinMat& a, const FinMat& b) {
    FinMat out = matrix_product(a, b);
    for (const auto& [k, c] : matrix_product(b, a).entries) out.add(k.first, k.second, -c);
    return out;
}

namespace {

// sum_{m<0<n} x_mn y_nm - sum_{m>0>n} x_mn y_nm, for a single pair of entries.
Rational central_sign(int m_twice, int n_twice) {
    if (m_twice < 0 && n_twice > 0) return Rational(1);
    if (m_twice > 0 && n_twice < 0) return Rational(-1);
    return Rational(0);
}

}  // namespace

FinMat bracket_finite(const FinMat& a, const FinMat& b) {
    FinMat out = matrix_commutator(a, b);
    for (const auto& [k, c] : a.entries) {
        auto it = b.entries.find({k.second, k.first});
        if (it != b.entries.end()) out.central += central_sign(k.first, k.second) * c * it->second;
    }
    return out;
}

FinMat trivialize(const FinMat& a) {
    FinMat out;
    out.central = a.central;
    for (const auto& [k, c] : a.entries) {
        out.add(k.first, k.second, c);
        if (k.first == k.second && k.first < 0) out.central -= c;
    }
    return out;
}

RVec act_finite(const FinMat& a, const ChargedPartition& cp) {
    RVec out = RVec::basis(cp, a.central);
    for (const auto& [k, c] : a.entries)
        out.add(act_Ebar(HalfInt::from_twice(k.first), HalfInt::from_twice(k.second), cp), c);
    return out;
}

int residue_of(int twice, int level) { return mod_level((twice + 1) / 2, level); }

PeriodicBanded::PeriodicBanded(int level) : level_(level) {
    if (level < 1) throw std::invalid_argument("period must be positive");
}

PeriodicBanded PeriodicBanded::pattern(int level, int i, int j, int m, const Rational& coeff) {
    if (i < 1 || i > level || j < 1 || j > level) throw std::invalid_argument("pattern indices run over 1..level");
    PeriodicBanded p(level);
    p.add_pattern(mod_level(i, level), j - i + m * level, coeff);
    return p;
}

PeriodicBanded PeriodicBanded::diagonal(int level, int delta, const Rational& coeff) {
    PeriodicBanded p(level);
    for (int r = 0; r < level; ++r) p.add_pattern(r, delta, coeff);
    return p;
}

PeriodicBanded PeriodicBanded::finite_part(int level, const FinMat& f) {
    PeriodicBanded p(level);
    p.finite_ = f;
    return p;
}

void PeriodicBanded::add_pattern(int residue, int delta, const Rational& c) {
    if (residue < 0 || residue >= level_) throw std::invalid_argument("residue out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = patterns_.try_emplace({residue, delta}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) patterns_.erase(it);
    }
}

PeriodicBanded PeriodicBanded::refined(int new_level) const {
    if (new_level % level_ != 0) throw std::invalid_argument("refinement needs a multiple of the period");
    PeriodicBanded out(new_level);
    for (const auto& [key, c] : patterns_)
        for (int r = key.first; r < new_level; r += level_) out.add_pattern(r, key.second, c);
    out.finite_ = finite_;
    return out;
}

int PeriodicBanded::band() const {
    int b = 0;
    for (const auto& [key, c] : patterns_) b = std::max(b, std::abs(key.second));
    for (const auto& [key, c] : finite_.entries) b = std::max(b, std::abs(key.second - key.first) / 2);
    return b;
}

PeriodicBanded& PeriodicBanded::operator+=(const PeriodicBanded& o) {
    if (o.level_ != level_) {
        const int common = std::lcm(level_, o.level_);
        *this = refined(common);
        return *this += o.refined(common);
    }
    for (const auto& [key, c] : o.patterns_) add_pattern(key.first, key.second, c);
    for (const auto& [key, c] : o.finite_.entries) finite_.add(key.first, key.second, c);
    finite_.central += o.finite_.central;
    return *this;
}

PeriodicBanded& PeriodicBanded::operator*=(const Rational& s) {
    if (s.is_zero()) {
        *this = PeriodicBanded(level_);
        return *this;
    }
    for (auto& [key, c] : patterns_) c *= s;
    for (auto& [key, c] : finite_.entries) c *= s;
    finite_.central *= s;
    return *this;
}

bool operator==(const PeriodicBanded& a, const PeriodicBanded& b) {
    const int common = std::lcm(a.level_, b.level_);
    const PeriodicBanded x = a.refined(common), y = b.refined(common);
    return x.patterns_ == y.patterns_ && x.finite_ == y.finite_;
}

std::string PeriodicBanded::str() const {
    std::ostringstream os;
    os << "period " << level_ << ":";
    bool any = false;
    for (const auto& [key, c] : patterns_) {
        os << (any ? " + " : " ") << c << "*P(" << key.first << "," << key.second << ")";
        any = true;
    }
    for (const auto& [key, c] : finite_.entries) {
        os << (any ? " + " : " ") << c << "*Ebar(" << HalfInt::from_twice(key.first).str() << ","
           << HalfInt::from_twice(key.second).str() << ")";
        any = true;
    }
    if (!finite_.central.is_zero() || !any) os << (any ? " + " : " ") << finite_.central << "*c";
    return os.str();
}

namespace {

int common_level(const PeriodicBanded& a, const PeriodicBanded& b) {
    const int la = a.level(), lb = b.level();
    if (la % lb == 0) return la;
    if (lb % la == 0) return lb;
    throw std::invalid_argument("periods " + std::to_string(la) + " and " + std::to_string(lb) + " are incompatible");
}

bool in_pattern(int residue, int delta, int level, int m_twice, int n_twice) {
    return residue_of(m_twice, level) == residue && n_twice - m_twice == 2 * delta;
}

}  // namespace

PeriodicBanded bracket_ainfty(const PeriodicBanded& a0, const PeriodicBanded& b0) {
    const int level = common_level(a0, b0);
    const PeriodicBanded a = a0.refined(level), b = b0.refined(level);
    PeriodicBanded out(level);
    Rational central;

    // Pattern times pattern. Entry (p, p+d1) meets (p+d1, p+d1+d2) when the
    // residues line up.
    for (const auto& [ka, ca] : a.patterns())
        for (const auto& [kb, cb] : b.patterns()) {
            const auto [ra, da] = ka;
            const auto [rb, db] = kb;
            if (mod_level(ra + da, level) == rb) out.add_pattern(ra, da + db, ca * cb);
            if (mod_level(rb + db, level) == ra) out.add_pattern(rb, da + db, -ca * cb);
            if (da + db != 0 || mod_level(ra + da, level) != rb) continue;
            // m = p, n = p + da with m, n on opposite sides of zero.
            for (int m = -2 * std::abs(da) + 1; m < 2 * std::abs(da); m += 2) {
                if (residue_of(m, level) != ra) continue;
                central += central_sign(m, m + 2 * da) * ca * cb;
            }
        }

    // Pattern against finite entries.
    for (const auto& [ka, ca] : a.patterns()) {
        const auto [r, d] = ka;
        for (const auto& [kb, cb] : b.finite().entries) {
            const auto [p, q] = kb;
            if (residue_of(p - 2 * d, level) == r) out.add_entry(HalfInt::from_twice(p - 2 * d), HalfInt::from_twice(q), ca * cb);
            if (residue_of(q, level) == r) out.add_entry(HalfInt::from_twice(p), HalfInt::from_twice(q + 2 * d), -ca * cb);
            // x_{q,p} from the pattern, y_{p,q} from the entry.
            if (in_pattern(r, d, level, q, p)) central += central_sign(q, p) * ca * cb;
        }
    }
    for (const auto& [ka, ca] : a.finite().entries) {
        const auto [p, q] = ka;
        for (const auto& [kb, cb] : b.patterns()) {
            const auto [r, d] = kb;
            if (residue_of(q, level) == r) out.add_entry(HalfInt::from_twice(p), HalfInt::from_twice(q + 2 * d), ca * cb);
            if (residue_of(p - 2 * d, level) == r) out.add_entry(HalfInt::from_twice(p - 2 * d), HalfInt::from_twice(q), -ca * cb);
            if (in_pattern(r, d, level, q, p)) central += central_sign(p, q) * ca * cb;
        }
    }

    const FinMat ff = bracket_finite(a.finite(), b.finite());
    for (const auto& [k, c] : ff.entries) out.add_entry(HalfInt::from_twice(k.first), HalfInt::from_twice(k.second), c);
    central += ff.central;
    out.add_central(central);
    return out;
}

RVec act_banded(const PeriodicBanded& a, const ChargedPartition& cp) {
    RVec out = act_finite(a.finite(), cp);
    if (a.patterns().empty()) return out;
    const Maya maya(cp);
    const int lo = maya.lowest() - 2;
    const int hi = std::max(maya.highest_black(), -1) + 2;
    for (const auto& [key, c] : a.patterns()) {
        const auto [r, d] = key;
        // psi*_{p+d} needs a bead at p+d <= hi, psi_p a hole at p >= lo.
        for (int p = lo; p <= hi - 2 * d; p += 2) {
            if (residue_of(p, a.level()) != r) continue;
            out.add(act_Ebar(HalfInt::from_twice(p), HalfInt::from_twice(p + 2 * d), cp), c);
        }
    }
    return out;
}

ROp banded_op(const PeriodicBanded& a) {
    return {[a](const ChargedPartition& cp) { return act_banded(a, cp); }, a.str()};
}

AffElt AffElt::basis(Kind kind, int level, int i, int j, int n, const Rational& coeff) {
    AffElt x;
    x.kind = kind;
    x.level = level;
    x.add(i, j, n, coeff);
    return x;
}

AffElt AffElt::central(Kind kind, int level, const Rational& coeff) {
    AffElt x;
    x.kind = kind;
    x.level = level;
    x.c = coeff;
    return x;
}

AffElt AffElt::degree(Kind kind, int level, const Rational& coeff) {
    AffElt x;
    x.kind = kind;
    x.level = level;
    x.d = coeff;
    return x;
}

void AffElt::add(int i, int j, int n, const Rational& coeff) {
    if (i < 1 || i > level || j < 1 || j > level) throw std::invalid_argument("matrix indices run over 1..level");
    if (coeff.is_zero()) return;
    auto [it, inserted] = loops.try_emplace({i, j, n}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) loops.erase(it);
    }
}

bool AffElt::valid() const {
    if (kind == Kind::gl) return true;
    std::map<int, Rational> trace;
    for (const auto& [key, c] : loops)
        if (std::get<0>(key) == std::get<1>(key)) trace[std::get<2>(key)] += c;
    for (const auto& [n, t] : trace)
        if (!t.is_zero()) return false;
    return true;
}

AffElt AffElt::times_t(int m) const {
    AffElt out = *this;
    out.loops.clear();
    for (const auto& [key, c] : loops) out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key) + m, c);
    return out;
}

AffElt& AffElt::operator+=(const AffElt& o) {
    if (o.level != level || o.kind != kind) throw std::invalid_argument("mismatched affine algebras");
    for (const auto& [key, c] : o.loops) add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    c += o.c;
    d += o.d;
    return *this;
}

AffElt operator*(const Rational& s, AffElt a) {
    if (s.is_zero()) {
        a.loops.clear();
        a.c = a.d = Rational(0);
        return a;
    }
    for (auto& [key, c] : a.loops) c *= s;
    a.c *= s;
    a.d *= s;
    return a;
}

std::string AffElt::str() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [key, coeff] : loops) {
        const auto [i, j, n] = key;
        os << (any ? " + " : "") << coeff << "*X" << i << "," << j << "t^" << n;
        any = true;
    }
    if (!c.is_zero()) os << (any ? " + " : "") << c << "*c", any = true;
    if (!d.is_zero()) os << (any ? " + " : "") << d << "*d", any = true;
    if (!any) os << "0";
    return os.str();
}

AffElt bracket_affine(const AffElt& x, const AffElt& y) {
    if (x.level != y.level || x.kind != y.kind) throw std::invalid_argument("mismatched affine algebras");
    AffElt out;
    out.kind = x.kind;
    out.level = x.level;
    for (const auto& [kx, a] : x.loops) {
        const auto [i, j, n] = kx;
        for (const auto& [ky, b] : y.loops) {
            const auto [k, l, m] = ky;
            if (j == k) out.add(i, l, n + m, a * b);
            if (l == i) out.add(k, j, n + m, -a * b);
            // tr(X_ij X_kl) = delta_jk delta_il
            if (n == -m && j == k && i == l) out.c += Rational(n) * a * b;
        }
        if (!y.d.is_zero()) out.add(i, j, n, -Rational(n) * y.d * a);
    }
    if (!x.d.is_zero())
        for (const auto& [ky, b] : y.loops) out.add(std::get<0>(ky), std::get<1>(ky), std::get<2>(ky), Rational(std::get<2>(ky)) * x.d * b);
    return out;
}

PeriodicBanded embed_affine(const AffElt& x) {
    if (!x.d.is_zero()) throw std::invalid_argument("d has no image in a_infinity; use act_d");
    PeriodicBanded out(x.level);
    for (const auto& [key, c] : x.loops) {
        const auto [i, j, n] = key;
        out += PeriodicBanded::pattern(x.level, i, j, n, c);
    }
    out.add_central(x.c);
    return out;
}

namespace {

void check_generator(int i, int level) {
    if (level < 2) throw std::invalid_argument("level must be at least 2");
    if (i < 0 || i >= level) throw std::invalid_argument("generator index out of range");
}

}  // namespace

AffElt chevalley_E_elt(int i, int level) {
    check_generator(i, level);
    if (i == 0) return AffElt::basis(AffElt::Kind::sl, level, level, 1, 1);
    return AffElt::basis(AffElt::Kind::sl, level, i, i + 1, 0);
}

AffElt chevalley_F_elt(int i, int level) {
    check_generator(i, level);
    if (i == 0) return AffElt::basis(AffElt::Kind::sl, level, 1, level, -1);
    return AffElt::basis(AffElt::Kind::sl, level, i + 1, i, 0);
}

RVec chevalley_E(int i, int level, const ChargedPartition& cp) {
    check_generator(i, level);
    RVec out;
    for (const auto& box : removable_boxes(cp, Color{i}, level))
        out.add({remove_box(cp.lambda, box), cp.charge}, Rational(1));
    return out;
}

RVec chevalley_F(int i, int level, const ChargedPartition& cp) {
    check_generator(i, level);
    RVec out;
    for (const auto& box : addable_boxes(cp, Color{i}, level))
        out.add({add_box(cp.lambda, box), cp.charge}, Rational(1));
    return out;
}

ROp chevalley_E_op(int i, int level) {
    return {[i, level](const ChargedPartition& cp) { return chevalley_E(i, level, cp); }, "E(" + std::to_string(i) + ")"};
}

ROp chevalley_F_op(int i, int level) {
    return {[i, level](const ChargedPartition& cp) { return chevalley_F(i, level, cp); }, "F(" + std::to_string(i) + ")"};
}

RVec act_d(int level, const ChargedPartition& cp) {
    return RVec::basis(cp, Rational(count_colored_boxes(cp, Color{0}, level)));
}

ROp d_op(int level) {
    return {[level](const ChargedPartition& cp) { return act_d(level, cp); }, "d"};
}

AffElt c_element(int j, int level) {
    if (level < 1 || j < 0 || j >= level) throw std::invalid_argument("c_element needs 0 <= j < level");
    AffElt x;
    x.kind = AffElt::Kind::gl;
    x.level = level;
    for (int a = 1; a <= level; ++a) {
        if (a + j <= level) x.add(a, a + j, 0, Rational(1));
        else x.add(a, a + j - level, 1, Rational(1));
    }
    return x;
}

AffElt alpha_element(int k, int level) {
    const int j = mod_level(k, level);
    return c_element(j, level).times_t((k - j) / level);
}

AffElt identity_loop(int k, int level) {
    AffElt x;
    x.kind = AffElt::Kind::gl;
    x.level = level;
    for (int a = 1; a <= level; ++a) x.add(a, a, k, Rational(1));
    return x;
}

}  // namespace focklab
