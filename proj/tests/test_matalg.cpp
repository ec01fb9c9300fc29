#include "doctest.h"

#include "focklab/matalg.hpp"
#include "support.hpp"

using namespace focklab;
using namespace focklab::testing;

namespace doctest {
template <>
struct StringMaker<PeriodicBanded> {
    static String convert(const PeriodicBanded& p) { return p.str().c_str(); }
};
template <>
struct StringMaker<AffElt> {
    static String convert(const AffElt& p) { return p.str().c_str(); }
};
}  // namespace doctest

namespace {

using Kind = AffElt::Kind;

PeriodicBanded unit(int m_twice, int n_twice, int level = 1) {
    return PeriodicBanded::finite_part(level, FinMat::unit(hi(m_twice), hi(n_twice)));
}

PeriodicBanded random_banded(std::mt19937_64& rng, int level) {
    PeriodicBanded a(level);
    std::uniform_int_distribution<int> count(0, 3), residue(0, level - 1), delta(-3, 3), pos(-4, 3);
    for (int i = count(rng); i > 0; --i) a.add_pattern(residue(rng), delta(rng), random_rational(rng));
    for (int i = count(rng); i > 0; --i) a.add_entry(hi(2 * pos(rng) + 1), hi(2 * pos(rng) + 1), random_rational(rng));
    if (count(rng) == 0) a.add_central(random_rational(rng));
    return a;
}

AffElt random_affine(std::mt19937_64& rng, int level) {
    AffElt x;
    x.kind = Kind::gl;
    x.level = level;
    std::uniform_int_distribution<int> idx(1, level), loop(-2, 2), count(1, 3);
    for (int i = count(rng); i > 0; --i) x.add(idx(rng), idx(rng), loop(rng), random_rational(rng));
    if (count(rng) == 1) x.c = random_rational(rng);
    return x;
}

void check_same_action(const ROp& a, const ROp& b, const std::vector<ChargedPartition>& states, const std::string& what) {
    const auto cmp = operators_equal_on(a, b, states);
    CHECK_MESSAGE(cmp.equal, what, " differs on ", cmp.counterexample ? cmp.counterexample->str() : std::string("?"));
}

}  // namespace

TEST_CASE("Ebar action examples") {
    CHECK(act_Ebar(hi(-1), hi(-1), cp({}, 0)).is_zero());
    CHECK(act_Ebar(hi(1), hi(1), cp({}, 1)) == RVec::basis(cp({}, 1)));
    CHECK(act_Ebar(hi(-1), hi(-1), cp({}, -1)) == RVec::basis(cp({}, -1), Rational(-1)));
    // Ebar_{p,p+1} moves the bead at p+1 down, removing the box of content p+1/2-h.
    CHECK(act_Ebar(hi(-1), hi(1), cp({1}, 0)) == RVec::basis(cp({}, 0)));
    CHECK(act_Ebar(hi(1), hi(3), cp({1}, 0)).is_zero());
    CHECK(act_Ebar(hi(1), hi(3), cp({1}, 1)) == RVec::basis(cp({}, 1)));
}

TEST_CASE("a_infinity bracket examples") {
    // m < 0 < n: [E_mn, E_nm] = E_mm - E_nn + c.
    PeriodicBanded expected = unit(-3, -3) + Rational(-1) * unit(5, 5);
    expected.add_central(Rational(1));
    CHECK(bracket_ainfty(unit(-3, 5), unit(5, -3)) == expected);
    PeriodicBanded flipped = unit(5, 5) + Rational(-1) * unit(-3, -3);
    flipped.add_central(Rational(-1));
    CHECK(bracket_ainfty(unit(5, -3), unit(-3, 5)) == flipped);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const PeriodicBanded a = random_banded(rng, 1 + t % 3);
        CHECK(bracket_ainfty(a, a).is_zero());
    }

    PeriodicBanded heis = PeriodicBanded(1);
    heis.add_central(Rational(1));
    CHECK(bracket_ainfty(PeriodicBanded::diagonal(1, 1), PeriodicBanded::diagonal(1, -1)) == heis);
    for (int k = 1; k <= 4; ++k)
        CHECK(bracket_ainfty(PeriodicBanded::diagonal(1, k), PeriodicBanded::diagonal(1, -k)) == Rational(k) * heis);

    CHECK_THROWS_AS(bracket_ainfty(PeriodicBanded(2), PeriodicBanded(3)), std::invalid_argument);
    CHECK_NOTHROW(bracket_ainfty(PeriodicBanded(2), PeriodicBanded(4)));
}

TEST_CASE("periodic elements compare across periods") {
    CHECK(PeriodicBanded::diagonal(1, 3) == PeriodicBanded::diagonal(3, 3));
    CHECK_FALSE(PeriodicBanded::pattern(2, 1, 1, 0) == PeriodicBanded::diagonal(1, 0));
    CHECK(PeriodicBanded::pattern(2, 1, 1, 0) + PeriodicBanded::pattern(2, 2, 2, 0) == PeriodicBanded::diagonal(1, 0));
}

TEST_CASE("a_infinity action respects the bracket") {
    const auto states = charged_states(6, 1);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 24; ++t) {
        const PeriodicBanded a = random_banded(rng, 1 + t % 3);
        const PeriodicBanded b = random_banded(rng, 1 + t % 3 == 2 ? 1 : 1 + t % 3);
        check_same_action(banded_op(bracket_ainfty(a, b)), commutator(banded_op(a), banded_op(b)), states,
                          a.str() + " with " + b.str());
    }
    for (int m = -5; m <= -1; m += 2)
        for (int n = 1; n <= 5; n += 2)
            check_same_action(banded_op(bracket_ainfty(unit(m, n), unit(n, m))),
                              commutator(banded_op(unit(m, n)), banded_op(unit(n, m))), states, "central case");
}

TEST_CASE("matrix product versus Clifford words") {
    // E_{1/2,3/2} E_{5/2,1/2} = 0 as matrices, but the Clifford word is not zero.
    const FinMat e12 = FinMat::unit(hi(1), hi(3)), e31 = FinMat::unit(hi(5), hi(1));
    CHECK(matrix_product(e12, e31).is_zero());
    const ChargedPartition state = cp({}, 2);
    CHECK_FALSE(compose(ebar(hi(1), hi(3)), ebar(hi(5), hi(1)))(state).is_zero());
    // Brackets agree: [E12, E31] = -E32.
    CHECK(bracket_finite(e12, e31) == FinMat::unit(hi(5), hi(3), Rational(-1)));
    check_same_action(commutator(ebar(hi(1), hi(3)), ebar(hi(5), hi(1))), scale_op(Rational(-1), ebar(hi(5), hi(3))),
                      charged_states(5, 3), "[E12,E31]");
}

TEST_CASE("the finite central extension is trivial") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pos(-4, 3), count(1, 4);
    for (int t = 0; t < 200; ++t) {
        FinMat a, b;
        for (int i = count(rng); i > 0; --i) a.add(2 * pos(rng) + 1, 2 * pos(rng) + 1, random_rational(rng));
        for (int i = count(rng); i > 0; --i) b.add(2 * pos(rng) + 1, 2 * pos(rng) + 1, random_rational(rng));
        // Under the change of basis the bracket becomes the plain commutator.
        const FinMat lhs = trivialize(bracket_finite(a, b));
        const FinMat rhs = matrix_commutator(trivialize(a), trivialize(b));
        CHECK(lhs.entries == rhs.entries);
        CHECK(lhs.central == rhs.central);
    }
}

TEST_CASE("affine bracket examples") {
    const AffElt x12 = AffElt::basis(Kind::sl, 2, 1, 2, 1), x21 = AffElt::basis(Kind::sl, 2, 2, 1, -1);
    AffElt expected = AffElt::basis(Kind::sl, 2, 1, 1, 0) + AffElt::basis(Kind::sl, 2, 2, 2, 0, Rational(-1));
    expected.c = Rational(1);
    CHECK(bracket_affine(x12, x21) == expected);
    CHECK(bracket_affine(x12, x21).valid());

    const AffElt x12t3 = AffElt::basis(Kind::sl, 3, 1, 2, 3);
    CHECK(bracket_affine(AffElt::degree(Kind::sl, 3), x12t3) == Rational(3) * x12t3);
    CHECK(bracket_affine(x12t3, AffElt::degree(Kind::sl, 3)) == Rational(-3) * x12t3);
    CHECK(bracket_affine(AffElt::central(Kind::sl, 3), x12t3).is_zero());
    CHECK_FALSE(AffElt::basis(Kind::sl, 2, 1, 1, 0).valid());
    CHECK_THROWS(bracket_affine(x12, x12t3));
    CHECK(bracket_affine(identity_loop(2, 3), identity_loop(-2, 3)) == AffElt::central(Kind::gl, 3, Rational(6)));
}

TEST_CASE("c elements and the embedding") {
    CHECK(c_element(0, 3) == identity_loop(0, 3));
    CHECK(c_element(1, 3) ==
          AffElt::basis(Kind::gl, 3, 1, 2, 0) + AffElt::basis(Kind::gl, 3, 2, 3, 0) + AffElt::basis(Kind::gl, 3, 3, 1, 1));
    CHECK(c_element(2, 3) ==
          AffElt::basis(Kind::gl, 3, 1, 3, 0) + AffElt::basis(Kind::gl, 3, 2, 1, 1) + AffElt::basis(Kind::gl, 3, 3, 2, 1));
    CHECK(embed_affine(c_element(1, 3).times_t(2)) == PeriodicBanded::diagonal(1, 7));
    CHECK(embed_affine(AffElt::basis(Kind::gl, 2, 1, 2, 0)) == PeriodicBanded::pattern(2, 1, 2, 0));
    CHECK(embed_affine(AffElt::basis(Kind::gl, 2, 1, 2, 0)).patterns().begin()->first == std::make_pair(1, 1));
    CHECK_THROWS_AS(embed_affine(AffElt::degree(Kind::gl, 2)), std::invalid_argument);
    check_same_action(banded_op(embed_affine(identity_loop(0, 3))), alpha0(), charged_states(6, 3), "I t^0");
}

TEST_CASE("embedding is a homomorphism") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const int level = 1 + t % 4;
        const AffElt x = random_affine(rng, level), y = random_affine(rng, level);
        CHECK(embed_affine(bracket_affine(x, y)) == bracket_ainfty(embed_affine(x), embed_affine(y)));
    }
}

TEST_CASE("Chevalley generators: combinatorial versus embedded") {
    CHECK(chevalley_F(0, 2, cp({}, 0)) == RVec::basis(cp({1}, 0)));
    CHECK(chevalley_F(1, 2, cp({1}, 0)) == rvec({{cp({2}, 0), 1}, {cp({1, 1}, 0), 1}}));
    for (int level = 2; level <= 4; ++level) {
        const auto states = charged_states(8, 2);
        for (int i = 0; i < level; ++i) {
            for (int h = -2; h <= 2; ++h) CHECK(chevalley_E(i, level, cp({}, h)).is_zero());
            check_same_action(chevalley_E_op(i, level), banded_op(embed_affine(chevalley_E_elt(i, level))), states,
                              "E" + std::to_string(i));
            check_same_action(chevalley_F_op(i, level), banded_op(embed_affine(chevalley_F_elt(i, level))), states,
                              "F" + std::to_string(i));
        }
    }
    CHECK_THROWS(chevalley_E(2, 2, cp({}, 0)));
}

TEST_CASE("C elements act as bosons") {
    for (int level = 2; level <= 3; ++level)
        for (int k = -8; k <= 8; ++k) {
            if (k == 0) continue;
            check_same_action(banded_op(embed_affine(alpha_element(k, level))), alpha(k), charged_states(6, 2),
                              "C for alpha(" + std::to_string(k) + ")");
        }
    // The worked example: l = 3, k = 7 is C_1 t^2.
    CHECK(alpha_element(7, 3) == c_element(1, 3).times_t(2));
    CHECK(alpha_element(-4, 3) == c_element(2, 3).times_t(-2));
}

TEST_CASE("Heisenberg inside the affine algebra") {
    const auto states = charged_states(6, 2);
    for (int level = 2; level <= 3; ++level)
        for (int k = 1; k <= 4; ++k) {
            const ROp plus = banded_op(embed_affine(identity_loop(k, level)));
            const ROp minus = banded_op(embed_affine(identity_loop(-k, level)));
            check_same_action(commutator(plus, minus), scale_op(Rational(k * level), identity_op<Rational>()), states,
                              "[I t^k, I t^-k]");
        }
}

TEST_CASE("d relations") {
    CHECK(act_d(3, cp({}, 4)).is_zero());
    CHECK(act_d(3, cp({4, 3, 3, 1, 1}, -1)) == RVec::basis(cp({4, 3, 3, 1, 1}, -1), Rational(3)));
    CHECK(act_d(2, cp({1}, 0)) == RVec::basis(cp({1}, 0)));
    const auto states = charged_states(8, 2);
    for (int level = 2; level <= 4; ++level) {
        const ROp d = d_op(level);
        // [d, E_0] = -E_0 since E_0 removes a 0-colored box; [d, F_0] = F_0.
        check_same_action(commutator(d, chevalley_E_op(0, level)), scale_op(Rational(-1), chevalley_E_op(0, level)),
                          states, "[d,E0]");
        check_same_action(commutator(d, chevalley_F_op(0, level)), chevalley_F_op(0, level), states, "[d,F0]");
        for (int i = 1; i < level; ++i) {
            check_same_action(commutator(d, chevalley_E_op(i, level)), zero_op<Rational>(), states, "[d,Ei]");
            check_same_action(commutator(d, chevalley_F_op(i, level)), zero_op<Rational>(), states, "[d,Fi]");
        }
    }
}
