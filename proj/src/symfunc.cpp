#include "focklab/symfunc.hpp"

#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace focklab {

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

MultiPoly MultiPoly::variable(int index, const Rational& coeff) {
    if (index < 1) throw std::invalid_argument("variables are 1-based");
    Monomial m(static_cast<std::size_t>(index), 0);
    m.back() = 1;
    MultiPoly p;
    p.add(std::move(m), coeff);
    return p;
}

void MultiPoly::add(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    trim(m);
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::num_vars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<int>(n);
}

MultiPoly MultiPoly::derivative(int index) const {
    MultiPoly out;
    const auto i = static_cast<std::size_t>(index - 1);
    for (const auto& [m, c] : terms_) {
        if (i >= m.size() || m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        out.add(std::move(d), c * Rational(m[i]));
    }
    return out;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial p(perm.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= perm.size()) throw std::invalid_argument("permutation too short");
            p[static_cast<std::size_t>(perm[i] - 1)] = m[i];
        }
        out.add(std::move(p), c);
    }
    return out;
}

MultiPoly MultiPoly::with_zero(int index) const {
    MultiPoly out;
    const auto i = static_cast<std::size_t>(index - 1);
    for (const auto& [m, c] : terms_)
        if (i >= m.size() || m[i] == 0) out.add(m, c);
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& values) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.size() > values.size()) throw std::invalid_argument("substitution misses a variable");
        MultiPoly term(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term *= values[i];
        out += term;
    }
    return out;
}

int MultiPoly::weighted_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(i + 1) * m[i];
        if (deg == -1) deg = d;
        else if (deg != d) return -2;
    }
    return deg;
}

std::string MultiPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) out += mag.str();
        else if (mag == Rational(1)) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(std::max(m1.size(), m2.size()), 0);
            for (std::size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
            for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
            r.add(std::move(m), c1 * c2);
        }
    terms_ = std::move(r.terms_);
    return *this;
}

BosonPoly BosonPoly::graded(int charge, MultiPoly p) {
    BosonPoly b;
    b.add(charge, p);
    return b;
}

void BosonPoly::add(int charge, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = grades_.try_emplace(charge, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) grades_.erase(it);
    }
}

std::string BosonPoly::str() const {
    if (grades_.empty()) return "0";
    std::string out;
    for (const auto& [h, p] : grades_) {
        if (!out.empty()) out += " + ";
        const std::string qh = h == 0 ? "" : (h == 1 ? "q" : "q^" + std::to_string(h));
        if (qh.empty()) out += "(" + p.str() + ")";
        else if (p == MultiPoly(Rational(1))) out += qh;
        else out += qh + "*(" + p.str() + ")";
    }
    return out;
}

BosonPoly& BosonPoly::operator+=(const BosonPoly& o) {
    for (const auto& [h, p] : o.grades_) add(h, p);
    return *this;
}

BosonPoly& BosonPoly::operator-=(const BosonPoly& o) {
    for (const auto& [h, p] : o.grades_) add(h, -p);
    return *this;
}

BosonPoly operator*(const Rational& s, BosonPoly p) {
    BosonPoly out;
    for (const auto& [h, poly] : p.grades_) out.add(h, MultiPoly(s) * poly);
    return out;
}

bool is_column_strict(const Partition& lambda, const Filling& t) {
    if (t.size() != lambda.length()) return false;
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (static_cast<int>(t[r].size()) != lambda.row(r + 1)) return false;
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (t[r][c] < 1) return false;
            if (c > 0 && t[r][c] < t[r][c - 1]) return false;
            if (r > 0 && t[r][c] <= t[r - 1][c]) return false;
        }
    }
    return true;
}

namespace {

// Fillings are built value by value: the boxes holding entries <= v form a
// partition, and the boxes holding v form a horizontal strip.
template <class Visit>
void horizontal_strips(const Partition& lambda, const std::vector<int>& inner, std::size_t row,
                       std::vector<int>& outer, Visit&& visit) {
    const std::size_t rows = lambda.length();
    if (row == rows) {
        visit();
        return;
    }
    const int lo = inner[row];
    const int hi = std::min(lambda.row(row + 1), row == 0 ? std::numeric_limits<int>::max() : inner[row - 1]);
    for (int x = lo; x <= hi; ++x) {
        outer[row] = x;
        horizontal_strips(lambda, inner, row + 1, outer, visit);
    }
}

void fillings(const Partition& lambda, int value, int max_value, std::vector<int>& shape, Monomial& expo,
              const std::function<void(const Monomial&)>& emit,
              const std::vector<int>* content) {
    const std::size_t rows = lambda.length();
    bool full = true;
    for (std::size_t r = 0; r < rows; ++r) full = full && shape[r] == lambda.row(r + 1);
    if (value > max_value) {
        if (full) emit(expo);
        return;
    }
    std::vector<int> outer(rows);
    const std::vector<int> inner = shape;
    int inner_size = 0;
    for (int x : inner) inner_size += x;
    horizontal_strips(lambda, inner, 0, outer, [&] {
        int added = -inner_size;
        for (int x : outer) added += x;
        if (content && added != (*content)[static_cast<std::size_t>(value - 1)]) return;
        shape = outer;
        expo[static_cast<std::size_t>(value - 1)] = added;
        fillings(lambda, value + 1, max_value, shape, expo, emit, content);
        shape = inner;
    });
}

}  // namespace

SymPoly schur(const Partition& lambda, int num_vars) {
    if (num_vars < 1) throw std::invalid_argument("schur needs at least one variable");
    SymPoly out{num_vars, {}};
    std::vector<int> shape(lambda.length(), 0);
    Monomial expo(static_cast<std::size_t>(num_vars), 0);
    fillings(lambda, 1, num_vars, shape, expo, [&](const Monomial& m) { out.poly.add(m, Rational(1)); }, nullptr);
    return out;
}

long kostka(const Partition& lambda, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) total += c;
    if (total != lambda.size()) return 0;
    if (content.empty()) return 1;
    long count = 0;
    std::vector<int> shape(lambda.length(), 0);
    Monomial expo(content.size(), 0);
    fillings(lambda, 1, static_cast<int>(content.size()), shape, expo, [&](const Monomial&) { ++count; }, &content);
    return count;
}

MultiPoly power_sum(const Partition& mu, int num_vars) {
    MultiPoly out(Rational(1));
    for (int part : mu.parts()) {
        MultiPoly pk;
        for (int i = 1; i <= num_vars; ++i) {
            Monomial m(static_cast<std::size_t>(i), 0);
            m.back() = part;
            pk.add(std::move(m), Rational(1));
        }
        out *= pk;
    }
    return out;
}

namespace {

// [x^target] p_mu: ways to send each part of mu to a variable so that the
// parts landing on variable j sum to target_j.
long power_sum_coeff(const std::vector<int>& parts, std::size_t idx, std::vector<int>& remaining,
                     std::map<std::pair<std::size_t, std::vector<int>>, long>& memo) {
    if (idx == parts.size()) {
        for (int r : remaining)
            if (r != 0) return 0;
        return 1;
    }
    auto key = std::make_pair(idx, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    for (auto& r : remaining) {
        if (r < parts[idx]) continue;
        r -= parts[idx];
        total += power_sum_coeff(parts, idx + 1, remaining, memo);
        r += parts[idx];
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("singular power-sum system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::map<Partition, Rational> power_sum_expand(const Partition& lambda) {
    static std::map<Partition, std::map<Partition, Rational>> cache;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    const int n = lambda.size();
    const auto shapes = partitions_of(n);
    // Both sides are symmetric, so matching the coefficients of x^nu for
    // nu |- n (the monomial symmetric basis) is enough.
    std::vector<std::vector<Rational>> a(shapes.size(), std::vector<Rational>(shapes.size()));
    std::vector<Rational> b(shapes.size());
    for (std::size_t row = 0; row < shapes.size(); ++row) {
        const auto& nu = shapes[row].parts();
        b[row] = Rational(kostka(lambda, nu));
        for (std::size_t col = 0; col < shapes.size(); ++col) {
            std::vector<int> remaining = nu;
            std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
            a[row][col] = Rational(power_sum_coeff(shapes[col].parts(), 0, remaining, memo));
        }
    }
    const auto x = solve_exact(std::move(a), std::move(b));
    std::map<Partition, Rational> out;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (!x[i].is_zero()) out.emplace(shapes[i], x[i]);
    std::lock_guard lock(cache_mutex());
    return cache.emplace(lambda, std::move(out)).first->second;
}

const MultiPoly& char_poly(const Partition& lambda) {
    static std::map<Partition, MultiPoly> cache;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    MultiPoly chi;
    for (const auto& [mu, c] : power_sum_expand(lambda)) {
        MultiPoly term(c);
        for (int part : mu.parts()) term *= MultiPoly::variable(part, Rational(part));
        chi += term;
    }
    std::lock_guard lock(cache_mutex());
    return cache.emplace(lambda, std::move(chi)).first->second;
}

BosonPoly sigma(const RVec& v) {
    BosonPoly out;
    for (const auto& [cp, c] : v.terms()) out.add(cp.charge, MultiPoly(c) * char_poly(cp.lambda));
    return out;
}

BosonPoly weyl_on_B(int k, const BosonPoly& p) {
    if (k == 0) throw std::invalid_argument("alpha(0) has no action on B here");
    BosonPoly out;
    for (const auto& [h, poly] : p.grades()) {
        if (k > 0) out.add(h, poly.derivative(k));
        else out.add(h, MultiPoly::variable(-k, Rational(-k)) * poly);
    }
    return out;
}

}  // namespace focklab
