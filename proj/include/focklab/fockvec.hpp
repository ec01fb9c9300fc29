#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focklab/basis.hpp"
#include "focklab/laurent.hpp"
#include "focklab/rational.hpp"

namespace focklab {

// Finite formal linear combination of basis states |lambda, h>. Zero
// coefficients are never stored, so equality is structural.
template <class R>
class FockVector {
public:
    using Terms = std::map<ChargedPartition, R>;

    FockVector() = default;
    static FockVector basis(const ChargedPartition& cp, R coeff = R(1)) {
        FockVector v;
        v.add(cp, std::move(coeff));
        return v;
    }

    void add(const ChargedPartition& cp, const R& coeff) {
        if (focklab::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(cp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (focklab::is_zero(it->second)) terms_.erase(it);
        }
    }
    void add(const FockVector& other, const R& scale = R(1)) {
        if (focklab::is_zero(scale)) return;
        for (const auto& [cp, c] : other.terms_) add(cp, c * scale);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    R coeff(const ChargedPartition& cp) const {
        auto it = terms_.find(cp);
        return it == terms_.end() ? R(0) : it->second;
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [cp, c] : o.terms_) add(cp, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [cp, c] : o.terms_) add(cp, -c);
        return *this;
    }
    FockVector& operator*=(const R& s) {
        if (focklab::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [cp, c] : terms_) c *= s;
        return *this;
    }
    FockVector operator-() const {
        FockVector r = *this;
        for (auto& [cp, c] : r.terms_) c = -c;
        return r;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const R& s, FockVector v) { return v *= s; }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

using RVec = FockVector<Rational>;
using QVec = FockVector<LaurentQ>;

template <class R>
bool is_zero(const FockVector<R>& v) { return v.is_zero(); }

// Symmetric bilinear form making the basis states orthonormal.
template <class R>
R inner(const FockVector<R>& v, const FockVector<R>& w) {
    R acc(0);
    const auto& small = v.size() <= w.size() ? v : w;
    const auto& large = v.size() <= w.size() ? w : v;
    for (const auto& [cp, c] : small.terms()) {
        auto it = large.terms().find(cp);
        if (it != large.terms().end()) acc += c * it->second;
    }
    return acc;
}

// Canonical display order: decreasing |lambda|, then parts, then charge.
bool canonical_less(const ChargedPartition& a, const ChargedPartition& b);

template <class R>
std::vector<std::pair<ChargedPartition, R>> canonical_terms(const FockVector<R>& v) {
    std::vector<std::pair<ChargedPartition, R>> out(v.terms().begin(), v.terms().end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    return out;
}

std::string to_string(const RVec& v);
std::string to_string(const QVec& v);

QVec lift(const RVec& v);

// A linear operator given by its action on basis states; extended linearly.
template <class R>
struct LinOp {
    std::function<FockVector<R>(const ChargedPartition&)> action;
    std::string name;

    FockVector<R> operator()(const ChargedPartition& cp) const { return action(cp); }
    FockVector<R> operator()(const FockVector<R>& v) const {
        FockVector<R> out;
        for (const auto& [cp, c] : v.terms()) out.add(action(cp), c);
        return out;
    }
};

using ROp = LinOp<Rational>;
using QOp = LinOp<LaurentQ>;

template <class R>
LinOp<R> identity_op() {
    return {[](const ChargedPartition& cp) { return FockVector<R>::basis(cp); }, "1"};
}

template <class R>
LinOp<R> zero_op() {
    return {[](const ChargedPartition&) { return FockVector<R>{}; }, "0"};
}

// (A*B)(v) = A(B(v)).
template <class R>
LinOp<R> compose(LinOp<R> a, LinOp<R> b) {
    std::string name = a.name + "*" + b.name;
    return {[a = std::move(a), b = std::move(b)](const ChargedPartition& cp) { return a(b(cp)); }, std::move(name)};
}

template <class R>
LinOp<R> add_ops(LinOp<R> a, LinOp<R> b) {
    std::string name = a.name + " + " + b.name;
    return {[a = std::move(a), b = std::move(b)](const ChargedPartition& cp) { return a(cp) + b(cp); },
            std::move(name)};
}

template <class R>
LinOp<R> scale_op(R s, LinOp<R> a) {
    std::string name = "(" + a.name + ")";
    return {[s = std::move(s), a = std::move(a)](const ChargedPartition& cp) { return s * a(cp); }, std::move(name)};
}

template <class R>
LinOp<R> commutator(LinOp<R> a, LinOp<R> b) {
    std::string name = "[" + a.name + ", " + b.name + "]";
    return {[a = std::move(a), b = std::move(b)](const ChargedPartition& cp) {
                auto ab = a(b(cp));
                ab -= b(a(cp));
                return ab;
            },
            std::move(name)};
}

template <class R>
LinOp<R> anticommutator(LinOp<R> a, LinOp<R> b) {
    std::string name = "{" + a.name + ", " + b.name + "}";
    return {[a = std::move(a), b = std::move(b)](const ChargedPartition& cp) { return a(b(cp)) + b(a(cp)); },
            std::move(name)};
}

template <class R>
struct OpComparison {
    bool equal = true;
    std::optional<ChargedPartition> counterexample;
    FockVector<R> lhs;
    FockVector<R> rhs;
    explicit operator bool() const { return equal; }
};

template <class R>
OpComparison<R> operators_equal_on(const LinOp<R>& a, const LinOp<R>& b, const std::vector<ChargedPartition>& states) {
    for (const auto& cp : states) {
        auto x = a(cp);
        auto y = b(cp);
        if (!(x == y)) return {false, cp, std::move(x), std::move(y)};
    }
    return {};
}

}  // namespace focklab
