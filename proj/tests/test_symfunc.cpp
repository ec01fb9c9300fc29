#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "focklab/boson.hpp"
#include "focklab/symfunc.hpp"
#include "support.hpp"

using namespace focklab;
using namespace focklab::testing;

namespace doctest {
template <>
struct StringMaker<MultiPoly> {
    static String convert(const MultiPoly& p) { return p.str().c_str(); }
};
template <>
struct StringMaker<BosonPoly> {
    static String convert(const BosonPoly& p) { return p.str().c_str(); }
};
}  // namespace doctest

namespace {

MultiPoly mono(Monomial m, Rational c = Rational(1)) {
    MultiPoly p;
    p.add(std::move(m), c);
    return p;
}

// Murnaghan-Nakayama: chi^lambda(mu) by stripping the ribbon of the first part.
long mn_character(const Partition& lambda, const std::vector<int>& mu, std::size_t from = 0) {
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    long total = 0;
    for (const auto& r : ribbon_removals(lambda, mu[from]))
        total += ((r.rows_spanned - 1) % 2 == 0 ? 1 : -1) * mn_character(r.remainder, mu, from + 1);
    return total;
}

Rational z_mu(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    mpz_class z = 1;
    for (auto [part, m] : mult)
        for (int i = 1; i <= m; ++i) z *= part * i;
    return Rational(mpq_class(z));
}

std::map<Partition, Rational> mn_expand(const Partition& lambda) {
    std::map<Partition, Rational> out;
    for (const auto& mu : partitions_of(lambda.size())) {
        const long chi = mn_character(lambda, mu.parts());
        if (chi != 0) out.emplace(mu, Rational(chi) / z_mu(mu));
    }
    return out;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("schur examples") {
    CHECK(schur(Partition({1}), 2).poly == mono({1}) + mono({0, 1}));
    CHECK(schur(Partition({2}), 2).poly == mono({2}) + mono({1, 1}) + mono({0, 2}));
    CHECK(schur(Partition({1, 1, 1}), 2).poly.is_zero());
    CHECK(schur(Partition{}, 3).poly == MultiPoly(Rational(1)));
    CHECK_THROWS(schur(Partition({1}), 0));

    const Filling tableau{{1, 1, 3, 3}, {3, 3}, {4, 5}, {5}};
    CHECK(is_column_strict(Partition({4, 2, 2, 1}), tableau));
    CHECK_FALSE(is_column_strict(Partition({4, 2, 2, 1}), Filling{{1, 1, 3, 3}, {1, 3}, {4, 5}, {5}}));
    CHECK_FALSE(is_column_strict(Partition({4, 2, 2, 1}), Filling{{1, 3, 1, 3}, {3, 3}, {4, 5}, {5}}));
    CHECK_FALSE(is_column_strict(Partition({2, 1}), Filling{{1, 1}}));
}

TEST_CASE("kostka numbers") {
    CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka(Partition({3, 2}), {2, 2, 1}) == 2);
    CHECK(kostka(Partition({2, 2}), {3, 1}) == 0);
    CHECK(kostka(Partition({4, 2, 2, 1}), {2, 0, 4, 1, 2}) == 1);
    // Number of standard tableaux of (3,2,1) is 16.
    CHECK(kostka(Partition({3, 2, 1}), {1, 1, 1, 1, 1, 1}) == 16);
}

TEST_CASE("schur symmetry and stability") {
    std::mt19937_64 rng(7);
    for (const auto& lambda : partitions_up_to(5)) {
        const int n = std::max<int>(1, static_cast<int>(lambda.length()) + 1);
        const MultiPoly s = schur(lambda, n).poly;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        for (int trial = 0; trial < 4; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(s.permuted(perm) == s);
        }
        CHECK(schur(lambda, n + 1).poly.with_zero(n + 1) == s);
        CHECK(s.is_zero() == (n < static_cast<int>(lambda.length())));
    }
}

TEST_CASE("power sum expansion") {
    CHECK(power_sum_expand(Partition({1})) == std::map<Partition, Rational>{{Partition({1}), Rational(1)}});
    CHECK(power_sum_expand(Partition({2})) ==
          std::map<Partition, Rational>{{Partition({2}), Rational(1, 2)}, {Partition({1, 1}), Rational(1, 2)}});
    CHECK(power_sum_expand(Partition({1, 1})) ==
          std::map<Partition, Rational>{{Partition({2}), Rational(-1, 2)}, {Partition({1, 1}), Rational(1, 2)}});
    for (const auto& lambda : partitions_up_to(8)) CHECK(power_sum_expand(lambda) == mn_expand(lambda));
}

TEST_CASE("character polynomials") {
    CHECK(char_poly(Partition{}) == MultiPoly(Rational(1)));
    CHECK(char_poly(Partition({2})) == mono({2}, Rational(1, 2)) + mono({0, 1}));
    CHECK(char_poly(Partition({1, 1})) == mono({2}, Rational(1, 2)) - mono({0, 1}));
    CHECK(char_poly(Partition({2})).str() == "1/2*x1^2 + x2");
    for (const auto& lambda : partitions_up_to(7)) {
        const MultiPoly& chi = char_poly(lambda);
        CHECK(chi.weighted_degree() == lambda.size());
        const int n = std::max(1, lambda.size());
        // x_k = p_k / k recovers s_lambda.
        std::vector<MultiPoly> values;
        for (int k = 1; k <= n; ++k) values.push_back(MultiPoly(Rational(1, k)) * power_sum(Partition({k}), n));
        CHECK(chi.substitute(values) == schur(lambda, n).poly);
    }
}

TEST_CASE("sigma examples") {
    CHECK(sigma(RVec::basis(cp({}, 3))) == BosonPoly::graded(3, MultiPoly(Rational(1))));
    CHECK(sigma(RVec::basis(cp({2}, 0))) == BosonPoly::graded(0, mono({2}, Rational(1, 2)) + mono({0, 1})));
    CHECK(sigma(RVec::basis(cp({1}, -1))) == BosonPoly::graded(-1, mono({1})));
    CHECK(sigma(RVec::basis(cp({1}, -1))).str() == "q^-1*(x1)");
    CHECK(sigma(apply_alpha(-2, cp({}, 0))) == BosonPoly::graded(0, mono({0, 1}, Rational(2))));
}

TEST_CASE("weyl action on B") {
    CHECK(weyl_on_B(1, BosonPoly::graded(0, mono({2}))) == BosonPoly::graded(0, mono({1}, Rational(2))));
    CHECK(weyl_on_B(-2, BosonPoly::graded(0, MultiPoly(Rational(1)))) ==
          BosonPoly::graded(0, mono({0, 1}, Rational(2))));
    CHECK_THROWS(weyl_on_B(0, BosonPoly{}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        RVec v;
        for (int t = 0; t < 4; ++t) v.add(random_state(rng, 6, 2), random_rational(rng));
        const BosonPoly p = sigma(v);
        for (int k = 1; k <= 3; ++k) {
            const BosonPoly lhs = weyl_on_B(k, weyl_on_B(-k, p)) - weyl_on_B(-k, weyl_on_B(k, p));
            CHECK(lhs == Rational(k) * p);
        }
    }
}

TEST_CASE("sigma intertwines the Heisenberg actions") {
    for (const auto& state : charged_states(6, 2))
        for (int k = -4; k <= 4; ++k) {
            if (k == 0) continue;
            CHECK(sigma(apply_alpha(k, state)) == weyl_on_B(k, sigma(RVec::basis(state))));
        }
}

TEST_CASE("sigma shift is multiplication by q") {
    for (const auto& state : charged_states(4, 2)) {
        const BosonPoly base = sigma(RVec::basis(state));
        BosonPoly shifted;
        for (const auto& [h, p] : base.grades()) shifted.add(h + 1, p);
        CHECK(sigma(shift(1)(state)) == shifted);
    }
}

TEST_CASE("sigma is injective on small sizes") {
    for (int n = 0; n <= 6; ++n) {
        const auto shapes = partitions_of(n);
        std::vector<Monomial> monos;
        for (const auto& mu : shapes) {
            Monomial m;
            for (int part : mu.parts()) {
                if (static_cast<int>(m.size()) < part) m.resize(static_cast<std::size_t>(part), 0);
                ++m[static_cast<std::size_t>(part - 1)];
            }
            monos.push_back(m);
        }
        std::vector<std::vector<Rational>> rows;
        for (const auto& lambda : shapes) {
            std::vector<Rational> row;
            for (const auto& m : monos) row.push_back(char_poly(lambda).coeff(m));
            rows.push_back(row);
        }
        CHECK(rank(rows) == shapes.size());
    }
}
