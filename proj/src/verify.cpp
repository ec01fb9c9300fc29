#include "focklab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "focklab/matalg.hpp"
#include "focklab/qfock.hpp"
#include "focklab/vertex.hpp"

namespace focklab {

json SuiteReport::to_json() const {
    json f = json::array();
    for (const auto& x : failures)
        f.push_back({{"case", x.key}, {"input", x.input}, {"expected", x.expected}, {"actual", x.actual}});
    return json{{"suite", suite}, {"cases", cases}, {"failures", f}, {"ok", ok()}};
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << suite << ": " << cases << " cases, " << failures.size() << " failures\n";
    for (const auto& x : failures) {
        os << "  FAIL " << x.key << "\n    input:    " << x.input << "\n    expected: " << x.expected
           << "\n    actual:   " << x.actual << "\n";
    }
    return os.str();
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FOCKLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Outcome = std::optional<CaseFailure>;

struct Case {
    std::string key;
    std::function<Outcome()> run;
};

std::string pad(int v) {
    // Keys sort as strings; offsetting keeps negative numbers in order.
    std::string s = std::to_string(v + 1000);
    return std::string(4 - std::min<std::size_t>(4, s.size()), '0') + s;
}

template <class R>
Outcome compare(const std::string& key, const std::string& what, const OpComparison<R>& cmp) {
    if (cmp.equal) return std::nullopt;
    return CaseFailure{key, what + " on " + (cmp.counterexample ? cmp.counterexample->str() : "?"), to_string(cmp.rhs),
                       to_string(cmp.lhs)};
}

Outcome compare_vec(const std::string& key, const std::string& input, const RVec& expected, const RVec& actual) {
    if (expected == actual) return std::nullopt;
    return CaseFailure{key, input, to_string(expected), to_string(actual)};
}

ChargedPartition random_state(std::mt19937_64& rng, int max_size, int max_abs_charge) {
    const int n = std::uniform_int_distribution<int>(0, max_size)(rng);
    std::vector<int> parts;
    int remaining = n, cap = n;
    while (remaining > 0) {
        const int p = std::uniform_int_distribution<int>(1, std::min(remaining, cap))(rng);
        parts.push_back(p);
        remaining -= p;
        cap = p;
    }
    return {Partition(parts), std::uniform_int_distribution<int>(-max_abs_charge, max_abs_charge)(rng)};
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    return Rational(num(rng), den(rng));
}

ROp alpha_any(int k) { return k == 0 ? alpha0() : alpha(k); }

std::vector<Case> bijection_cases(int n) {
    std::vector<Case> cases;
    cases.push_back({"sample", [] {
        const MayaSpec m{HalfInt::from_twice(-11), {HalfInt::from_twice(5), HalfInt::from_twice(1), HalfInt::from_twice(-1),
                                                    HalfInt::from_twice(-7), HalfInt::from_twice(-9)}};
        const ChargedPartition expected{Partition({4, 3, 3, 1, 1}), -1};
        const ChargedPartition got = maya_to_partition(m);
        if (got == expected) return Outcome{};
        return Outcome{CaseFailure{"sample", "sample Maya diagram", expected.str(), got.str()}};
    }});
    constexpr int kBatches = 100, kPerBatch = 100;
    for (int b = 0; b < kBatches; ++b) {
        const std::string key = "random-" + pad(b);
        cases.push_back({key, [n, b, key]() -> Outcome {
            std::mt19937_64 rng(1000003ULL * static_cast<unsigned long long>(b + 1));
            for (int i = 0; i < kPerBatch; ++i) {
                const ChargedPartition cp = random_state(rng, n, 10);
                const ChargedPartition back = maya_to_partition(partition_to_maya(cp));
                if (back != cp) return CaseFailure{key, cp.str(), cp.str(), back.str()};
                // Charge from the wedge indices: blacks above zero minus whites below.
                const auto beads = black_positions(cp, cp.lambda.length() + static_cast<std::size_t>(std::abs(cp.charge)) + 2);
                int charge = 0;
                for (const auto& m : beads)
                    if (m.twice() > 0) ++charge;
                const int bottom = beads.back().twice();
                for (int p = -1; p > bottom; p -= 2)
                    if (std::find(beads.begin(), beads.end(), HalfInt::from_twice(p)) == beads.end()) --charge;
                if (charge != cp.charge) return CaseFailure{key, cp.str(), std::to_string(cp.charge), std::to_string(charge)};
            }
            return std::nullopt;
        }});
    }
    return cases;
}

std::vector<Case> clifford_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int m = -13; m <= 13; m += 2)
        for (int k = -13; k <= 13; k += 2) {
            const std::string key = "m" + pad(m) + "-n" + pad(k);
            cases.push_back({key, [=]() -> Outcome {
                const auto bad = anticommutator_check(HalfInt::from_twice(m), HalfInt::from_twice(k), *states);
                if (!bad) return std::nullopt;
                return CaseFailure{key, bad->relation + " on " + bad->state.str(), to_string(bad->rhs), to_string(bad->lhs)};
            }});
        }
    return cases;
}

std::vector<Case> heisenberg_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int j = -5; j <= 5; ++j)
        for (int k = -5; k <= 5; ++k) {
            const std::string key = "j" + pad(j) + "-k" + pad(k);
            cases.push_back({key, [=] {
                const Rational expected = j == -k ? Rational(j) : Rational(0);
                return compare(key, "[alpha(" + std::to_string(j) + "),alpha(" + std::to_string(k) + ")]",
                               operators_equal_on(commutator(alpha_any(j), alpha_any(k)),
                                                  scale_op(expected, identity_op<Rational>()), *states));
            }});
        }
    return cases;
}

std::vector<Case> bf_bosons_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int k = -6; k <= 6; ++k) {
        if (k == 0) continue;
        const std::string key = "k" + pad(k);
        cases.push_back({key, [=] {
            return compare(key, "alpha(" + std::to_string(k) + ") vs sum psi psi*",
                           operators_equal_on(alpha(k), alpha_clifford(k), *states));
        }});
    }
    return cases;
}

std::vector<Case> bf_fermions_cases(int n) {
    std::vector<Case> cases;
    for (const auto& cp : charged_states(n, 2)) {
        const std::string key = cp.str();
        cases.push_back({key, [cp, key]() -> Outcome {
            const RVec v = RVec::basis(cp);
            for (int t = -9; t <= 9; t += 2) {
                const HalfInt m = HalfInt::from_twice(t);
                if (auto f = compare_vec(key, "psi(" + m.str() + ") on " + key, apply_psi(m, cp), fermion_from_bosons(m, v)))
                    return f;
                if (auto f = compare_vec(key, "psis(" + m.str() + ") on " + key, apply_psi_star(m, cp),
                                         fermion_star_from_bosons(m, v)))
                    return f;
            }
            return std::nullopt;
        }});
    }
    return cases;
}


std::vector<Case> gamma_cases(int degree) {
    std::vector<Case> cases;
    for (auto r : all_gamma_relations())
        for (const auto& cp : gamma_panel()) {
            const std::string key = std::string(relation_name(r)) + "-" + cp.str();
            cases.push_back({key, [=]() -> Outcome {
                const auto bad = gamma_commutation_check(r, RVec::basis(cp), degree);
                if (!bad) return std::nullopt;
                return CaseFailure{key,
                                   "coefficient x^" + std::to_string(bad->x_twice) + "/2 z^" + std::to_string(bad->z_twice) + "/2",
                                   to_string(bad->rhs), to_string(bad->lhs)};
            }});
        }
    return cases;
}

PeriodicBanded random_banded(std::mt19937_64& rng, int level) {
    PeriodicBanded a(level);
    std::uniform_int_distribution<int> count(0, 3), residue(0, level - 1), delta(-3, 3), pos(-4, 3);
    for (int i = count(rng); i > 0; --i) a.add_pattern(residue(rng), delta(rng), random_rational(rng));
    for (int i = count(rng); i > 0; --i)
        a.add_entry(HalfInt::from_twice(2 * pos(rng) + 1), HalfInt::from_twice(2 * pos(rng) + 1), random_rational(rng));
    if (count(rng) == 0) a.add_central(random_rational(rng));
    return a;
}

std::vector<Case> ainfty_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 1));
    std::vector<Case> cases;
    for (int t = 0; t < 32; ++t) {
        const std::string key = "random-" + pad(t);
        cases.push_back({key, [=] {
            std::mt19937_64 rng(7919ULL * static_cast<unsigned long long>(t + 1));
            const int la = 1 + t % 3;
            const int lb = t % 2 == 0 ? la : 1;
            const PeriodicBanded a = random_banded(rng, la), b = random_banded(rng, lb);
            return compare(key, "[" + a.str() + ", " + b.str() + "]",
                           operators_equal_on(banded_op(bracket_ainfty(a, b)), commutator(banded_op(a), banded_op(b)), *states));
        }});
    }
    // The central term: [Ebar_{m,n}, Ebar_{n,m}] with m < 0 < n.
    for (int m = -7; m <= -1; m += 2)
        for (int k = 1; k <= 7; k += 2) {
            const std::string key = "central-m" + pad(m) + "-n" + pad(k);
            cases.push_back({key, [=] {
                const HalfInt hm = HalfInt::from_twice(m), hn = HalfInt::from_twice(k);
                const auto a = PeriodicBanded::finite_part(1, FinMat::unit(hm, hn));
                const auto b = PeriodicBanded::finite_part(1, FinMat::unit(hn, hm));
                return compare(key, "[Ebar(" + hm.str() + "," + hn.str() + "), Ebar(" + hn.str() + "," + hm.str() + ")]",
                               operators_equal_on(banded_op(bracket_ainfty(a, b)), commutator(banded_op(a), banded_op(b)), *states));
            }});
        }
    return cases;
}

std::vector<Case> affine_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int level = 2; level <= 4; ++level)
        for (int i = 0; i < level; ++i) {
            const std::string key = "l" + std::to_string(level) + "-i" + std::to_string(i);
            cases.push_back({key + "-E", [=] {
                return compare(key + "-E", "E(" + std::to_string(i) + ") combinatorial vs embedded",
                               operators_equal_on(chevalley_E_op(i, level), banded_op(embed_affine(chevalley_E_elt(i, level))), *states));
            }});
            cases.push_back({key + "-F", [=] {
                return compare(key + "-F", "F(" + std::to_string(i) + ") combinatorial vs embedded",
                               operators_equal_on(chevalley_F_op(i, level), banded_op(embed_affine(chevalley_F_elt(i, level))), *states));
            }});
        }
    for (int level = 2; level <= 4; ++level)
        for (int k = 1; k <= 4; ++k) {
            const std::string key = "heis-l" + std::to_string(level) + "-k" + std::to_string(k);
            cases.push_back({key, [=] {
                const ROp plus = banded_op(embed_affine(identity_loop(k, level)));
                const ROp minus = banded_op(embed_affine(identity_loop(-k, level)));
                return compare(key, "[I t^k, I t^-k]",
                               operators_equal_on(commutator(plus, minus), scale_op(Rational(k * level), identity_op<Rational>()), *states));
            }});
        }
    return cases;
}

std::vector<Case> gl_alpha_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int level = 2; level <= 3; ++level)
        for (int k = -8; k <= 8; ++k) {
            if (k == 0) continue;
            const std::string key = "l" + std::to_string(level) + "-k" + pad(k);
            cases.push_back({key, [=] {
                return compare(key, "C element for alpha(" + std::to_string(k) + ")",
                               operators_equal_on(banded_op(embed_affine(alpha_element(k, level))), alpha(k), *states));
            }});
        }
    return cases;
}

std::vector<Case> d_relation_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int level = 2; level <= 4; ++level)
        for (int i = 0; i < level; ++i) {
            const std::string key = "l" + std::to_string(level) + "-i" + std::to_string(i);
            cases.push_back({key, [=]() -> Outcome {
                const ROp d = d_op(level);
                const Rational shift_e = i == 0 ? Rational(-1) : Rational(0);
                const Rational shift_f = i == 0 ? Rational(1) : Rational(0);
                if (auto f = compare(key, "[d, E]", operators_equal_on(commutator(d, chevalley_E_op(i, level)),
                                                                       scale_op(shift_e, chevalley_E_op(i, level)), *states)))
                    return f;
                return compare(key, "[d, F]", operators_equal_on(commutator(d, chevalley_F_op(i, level)),
                                                                 scale_op(shift_f, chevalley_F_op(i, level)), *states));
            }});
        }
    return cases;
}

std::vector<Case> mm_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    const LaurentQ denom = LaurentQ::monomial(1) - LaurentQ::monomial(-1);
    for (int level = 2; level <= 4; ++level)
        for (int i = 0; i < level; ++i)
            for (int j = 0; j < level; ++j) {
                const std::string key = "l" + std::to_string(level) + "-i" + std::to_string(i) + "-j" + std::to_string(j);
                cases.push_back({key, [=]() -> Outcome {
                    const QOp lhs = commutator(eq_op(i, level), fq_op(j, level));
                    if (i != j) return compare(key, "[Eq, Fq]", operators_equal_on(lhs, zero_op<LaurentQ>(), *states));
                    // (E F - F E)(q - q^-1) = K - K^-1, with the quotient exact.
                    for (const auto& cp : *states) {
                        const QVec l = lhs(cp);
                        QVec k = apply_Kq(i, level, cp);
                        k -= apply_Kq(i, level, cp, -1);
                        QVec quotient;
                        for (const auto& [s, c] : k.terms()) quotient.add(s, c.divide_exact(denom));
                        if (!(quotient == l))
                            return CaseFailure{key, "[Eq, Fq] on " + cp.str(), to_string(quotient), to_string(l)};
                    }
                    return std::nullopt;
                }});
            }
    return cases;
}

std::vector<Case> mm_q1_cases(int n) {
    auto states = std::make_shared<std::vector<ChargedPartition>>(charged_states(n, 2));
    std::vector<Case> cases;
    for (int level = 2; level <= 4; ++level)
        for (int i = 0; i < level; ++i) {
            const std::string key = "l" + std::to_string(level) + "-i" + std::to_string(i);
            cases.push_back({key, [=]() -> Outcome {
                for (const auto& cp : *states) {
                    if (auto f = compare_vec(key, "Eq at q=1 on " + cp.str(), chevalley_E(i, level, cp),
                                             specialize_q1(apply_Eq(i, level, cp))))
                        return f;
                    if (auto f = compare_vec(key, "Fq at q=1 on " + cp.str(), chevalley_F(i, level, cp),
                                             specialize_q1(apply_Fq(i, level, cp))))
                        return f;
                    if (auto f = compare_vec(key, "K at q=1 on " + cp.str(), RVec::basis(cp),
                                             specialize_q1(apply_Kq(i, level, cp))))
                        return f;
                }
                return std::nullopt;
            }});
        }
    return cases;
}

struct SuiteSpec {
    int default_size;
    std::function<std::vector<Case>(int)> build;
};

const std::map<std::string, SuiteSpec, std::less<>>& registry() {
    static const std::map<std::string, SuiteSpec, std::less<>> suites{
        {"bijection", {30, bijection_cases}},   {"clifford", {8, clifford_cases}},
        {"heisenberg", {8, heisenberg_cases}},  {"bf-bosons", {10, bf_bosons_cases}},
        {"bf-fermions", {6, bf_fermions_cases}}, {"gamma", {6, gamma_cases}},
        {"ainfty", {6, ainfty_cases}},          {"affine", {8, affine_cases}},
        {"gl-alpha", {8, gl_alpha_cases}},      {"d-relations", {8, d_relation_cases}},
        {"mm", {8, mm_cases}},                  {"mm-q1", {8, mm_q1_cases}},
    };
    return suites;
}

}  // namespace

const std::vector<ChargedPartition>& gamma_panel() {
    static const std::vector<ChargedPartition> panel{
        {Partition{}, 0},        {Partition({1}), 0},       {Partition({2}), 1},    {Partition({1, 1}), -1},
        {Partition({2, 1}), 0},  {Partition({3}), 2},       {Partition({1, 1, 1}), -2}, {Partition({2, 2}), 1},
        {Partition({3, 1}), 0},  {Partition({2, 1, 1}), -1}};
    return panel;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bijection", "clifford", "heisenberg", "bf-bosons", "bf-fermions", "gamma",
                                                "ainfty", "affine", "gl-alpha", "d-relations", "mm", "mm-q1"};
    return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts) {
    const auto& reg = registry();
    auto it = reg.find(suite);
    if (it == reg.end()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    // For gamma the bound is the series degree.
    const int bound = opts.max_size.value_or(it->second.default_size);
    const std::vector<Case> cases = it->second.build(bound);

    SuiteReport report;
    report.suite = std::string(suite);
    report.cases = static_cast<long>(cases.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            Outcome out;
            try {
                out = cases[i].run();
            } catch (const std::exception& e) {
                out = CaseFailure{cases[i].key, "exception", "no exception", e.what()};
            }
            if (out) {
                std::lock_guard lock(mu);
                report.failures.push_back(std::move(*out));
            }
        }
    };
    const int n = std::min<int>(worker_count(opts.threads), static_cast<int>(cases.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(report.failures.begin(), report.failures.end(),
              [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
    return report;
}

}  // namespace focklab
