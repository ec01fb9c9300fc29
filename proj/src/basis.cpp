#include "focklab/basis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace focklab {

HalfInt HalfInt::from_twice(int twice) {
    if (twice % 2 == 0) throw std::invalid_argument("half-integer position needs an odd doubled value, got " + std::to_string(twice));
    return HalfInt(twice);
}

HalfInt HalfInt::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || trim(text.substr(slash + 1)) != "2")
        throw std::invalid_argument("half-integer must be written a/2, got '" + std::string(text) + "'");
    auto num = trim(text.substr(0, slash));
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size())
        throw std::invalid_argument("malformed half-integer '" + std::string(text) + "'");
    if (value % 2 == 0)
        throw std::invalid_argument("half-integer numerator must be odd, got '" + std::string(text) + "'");
    return HalfInt(value);
}

std::string HalfInt::str() const { return std::to_string(twice_) + "/2"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::column(int c) const {
    int n = 0;
    for (int p : parts_) {
        if (p < c) break;
        ++n;
    }
    return n;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    const int width = parts_.empty() ? 0 : parts_.front();
    for (int c = 1; c <= width; ++c) cols.push_back(column(c));
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t r = 1; r <= mu.length(); ++r)
        if (mu.row(r) > row(r)) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string ChargedPartition::str() const { return lambda.str() + ";" + std::to_string(charge); }

ChargedPartition ChargedPartition::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    const auto semi = s.find(';');
    if (semi == std::string::npos || s.empty() || s.front() != '(' || semi == 0 || s[semi - 1] != ')')
        throw std::invalid_argument("state must look like '(4,3,3,1,1);-1', got '" + std::string(text) + "'");
    const std::string body = s.substr(1, semi - 2);
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        const std::string tok = body.substr(pos, comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed partition part '" + tok + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    const std::string ch = s.substr(semi + 1);
    int charge = 0;
    const char* first = ch.data();
    if (!ch.empty() && ch.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, ch.data() + ch.size(), charge);
    if (ch.empty() || ec != std::errc() || ptr != ch.data() + ch.size())
        throw std::invalid_argument("malformed charge '" + ch + "'");
    return {Partition(std::move(parts)), charge};
}

int mod_level(long value, int level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    const long r = value % level;
    return static_cast<int>(r < 0 ? r + level : r);
}

std::vector<HalfInt> black_positions(const ChargedPartition& cp, std::size_t n) {
    std::vector<HalfInt> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const int twice = 2 * (cp.charge - static_cast<int>(i) + cp.lambda.row(i)) + 1;
        out.push_back(HalfInt::from_twice(twice));
    }
    return out;
}

ChargedPartition maya_to_partition(const MayaSpec& maya) {
    const int lo = maya.window_lo.twice();
    std::vector<int> blacks;
    for (HalfInt b : maya.blacks) {
        if (b.twice() < lo) throw std::invalid_argument("Maya window lists a black bead below window_lo");
        blacks.push_back(b.twice());
    }
    std::sort(blacks.begin(), blacks.end(), std::greater<>());
    if (std::adjacent_find(blacks.begin(), blacks.end()) != blacks.end())
        throw std::invalid_argument("Maya window lists a bead twice");

    int charge = 0;
    for (int b : blacks)
        if (b > 0) ++charge;
    // Whites below zero can only sit inside the window.
    for (int p = lo; p < 0; p += 2)
        if (!std::binary_search(blacks.begin(), blacks.end(), p, std::greater<>())) --charge;
    // Implicit blacks between zero and the window start count as positive blacks.
    for (int p = 1; p < lo; p += 2) ++charge;

    std::vector<int> parts;
    auto bead = [&](std::size_t i) {  // i-th black from the top, 0-based
        if (i < blacks.size()) return blacks[i];
        return lo - 2 * static_cast<int>(i - blacks.size() + 1);
    };
    for (std::size_t i = 0;; ++i) {
        const int part = (bead(i) - 2 * charge + 2 * static_cast<int>(i + 1) - 1) / 2;
        if (part == 0) break;
        if (part < 0) throw std::invalid_argument("Maya diagram is not regular");
        parts.push_back(part);
    }
    return {Partition(std::move(parts)), charge};
}

MayaSpec partition_to_maya(const ChargedPartition& cp) {
    const Maya m(cp);
    int lo = -1;
    for (int p = m.lowest(); p < 0; p += 2)
        if (!m.black(p)) { lo = p; break; }
    MayaSpec spec{HalfInt::from_twice(lo), {}};
    for (int p = m.highest_black(); p >= lo; p -= 2)
        if (m.black(p)) spec.blacks.push_back(HalfInt::from_twice(p));
    return spec;
}

std::optional<SortedWedge> normalize_wedge(std::vector<HalfInt> indices) {
    int sign = 1;
    // Insertion sort; each adjacent swap is one transposition.
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            if (indices[j - 1] == indices[j]) return std::nullopt;
            if (indices[j - 1] > indices[j]) break;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i]) return std::nullopt;
    return SortedWedge{sign, std::move(indices)};
}

Color box_color(int charge, BoxCoord box, int level) {
    if (level < 2) throw std::invalid_argument("level must be at least 2");
    return Color{mod_level(static_cast<long>(charge) + box.col - box.row, level)};
}

std::vector<BoxCoord> addable_boxes(const Partition& lambda) {
    std::vector<BoxCoord> out;
    for (std::size_t r = 1; r <= lambda.length() + 1; ++r) {
        const int c = lambda.row(r) + 1;
        if (r == 1 || lambda.row(r - 1) >= c) out.push_back({static_cast<int>(r), c});
    }
    return out;
}

std::vector<BoxCoord> removable_boxes(const Partition& lambda) {
    std::vector<BoxCoord> out;
    for (std::size_t r = 1; r <= lambda.length(); ++r)
        if (lambda.row(r) > lambda.row(r + 1)) out.push_back({static_cast<int>(r), lambda.row(r)});
    return out;
}

std::vector<BoxCoord> addable_boxes(const ChargedPartition& cp, Color color, int level) {
    std::vector<BoxCoord> out;
    for (BoxCoord b : addable_boxes(cp.lambda))
        if (box_color(cp.charge, b, level) == color) out.push_back(b);
    return out;
}

std::vector<BoxCoord> removable_boxes(const ChargedPartition& cp, Color color, int level) {
    std::vector<BoxCoord> out;
    for (BoxCoord b : removable_boxes(cp.lambda))
        if (box_color(cp.charge, b, level) == color) out.push_back(b);
    return out;
}

Partition add_box(const Partition& lambda, BoxCoord box) {
    std::vector<int> parts = lambda.parts();
    const auto r = static_cast<std::size_t>(box.row);
    if (r == parts.size() + 1) parts.push_back(0);
    if (r < 1 || r > parts.size() || parts[r - 1] + 1 != box.col)
        throw std::invalid_argument("box is not addable");
    ++parts[r - 1];
    return Partition(std::move(parts));
}

Partition remove_box(const Partition& lambda, BoxCoord box) {
    std::vector<int> parts = lambda.parts();
    const auto r = static_cast<std::size_t>(box.row);
    if (r < 1 || r > parts.size() || parts[r - 1] != box.col || (r < parts.size() && parts[r] == box.col))
        throw std::invalid_argument("box is not removable");
    --parts[r - 1];
    return Partition(std::move(parts));
}

int count_colored_boxes(const ChargedPartition& cp, Color color, int level) {
    int n = 0;
    for (std::size_t r = 1; r <= cp.lambda.length(); ++r)
        for (int c = 1; c <= cp.lambda.row(r); ++c)
            if (box_color(cp.charge, {static_cast<int>(r), c}, level) == color) ++n;
    return n;
}

std::vector<RibbonRemoval> ribbon_removals(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("ribbon length must be positive");
    // A rim hook of length k corresponds to a cell (r, c) with hook length k;
    // it runs along the rim from the end of row r down to the foot of column c.
    std::vector<RibbonRemoval> out;
    const auto len = static_cast<int>(lambda.length());
    for (int r = 1; r <= len; ++r) {
        const int arm_end = lambda.row(r);
        for (int c = 1; c <= arm_end; ++c) {
            const int foot = lambda.column(c);
            const int hook = (arm_end - c) + (foot - r) + 1;
            if (hook != k) continue;
            std::vector<int> parts = lambda.parts();
            for (int i = r; i < foot; ++i) parts[i - 1] = lambda.row(i + 1) - 1;
            parts[foot - 1] = c - 1;
            out.push_back({Partition(std::move(parts)), foot - r + 1});
        }
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<ChargedPartition> charged_states(int max_size, int max_abs_charge) {
    std::vector<ChargedPartition> out;
    for (const auto& p : partitions_up_to(max_size))
        for (int h = -max_abs_charge; h <= max_abs_charge; ++h) out.push_back({p, h});
    return out;
}

Maya::Maya(const ChargedPartition& cp) {
    const std::size_t n = cp.lambda.length() + 1;
    const auto beads = black_positions(cp, n);
    const int floor_bead = beads.back().twice();
    lo_ = std::min(floor_bead, -1);
    const int hi = std::max(beads.front().twice(), 1);
    bits_.assign(static_cast<std::size_t>((hi - lo_) / 2 + 1), 0);
    for (int p = lo_; p < floor_bead; p += 2) bits_[static_cast<std::size_t>((p - lo_) / 2)] = 1;
    for (HalfInt b : beads) bits_[static_cast<std::size_t>((b.twice() - lo_) / 2)] = 1;
}

bool Maya::black(int twice) const {
    if (twice < lo_) return true;
    const auto idx = static_cast<std::size_t>((twice - lo_) / 2);
    return idx < bits_.size() && bits_[idx];
}

void Maya::ensure(int twice) {
    if (twice < lo_) {
        const auto extra = static_cast<std::size_t>((lo_ - twice) / 2);
        bits_.insert(bits_.begin(), extra, 1);
        lo_ = twice;
    }
    const auto idx = static_cast<std::size_t>((twice - lo_) / 2);
    if (idx >= bits_.size()) bits_.resize(idx + 1, 0);
}

void Maya::set(int twice, bool is_black) {
    ensure(twice);
    bits_[static_cast<std::size_t>((twice - lo_) / 2)] = is_black ? 1 : 0;
}

int Maya::blacks_above(int twice) const {
    int n = 0;
    const int start = std::max(twice + 2, lo_);
    for (int p = start; p < lo_ + 2 * static_cast<int>(bits_.size()); p += 2)
        if (bits_[static_cast<std::size_t>((p - lo_) / 2)]) ++n;
    if (twice + 2 < lo_) n += (lo_ - twice - 2) / 2;
    return n;
}

int Maya::blacks_between(int lo_twice, int hi_twice) const {
    if (lo_twice > hi_twice) std::swap(lo_twice, hi_twice);
    int n = 0;
    for (int p = lo_twice + 2; p < hi_twice; p += 2)
        if (black(p)) ++n;
    return n;
}

int Maya::highest_black() const {
    for (auto i = bits_.size(); i-- > 0;)
        if (bits_[i]) return lo_ + 2 * static_cast<int>(i);
    return lo_ - 2;
}

ChargedPartition Maya::to_charged() const {
    const int top = lo_ + 2 * static_cast<int>(bits_.size());
    int charge = 0;
    for (int p = lo_; p < top; p += 2) {
        const bool b = bits_[static_cast<std::size_t>((p - lo_) / 2)];
        if (p > 0 && b) ++charge;
        if (p < 0 && !b) --charge;
    }
    std::vector<int> parts;
    int i = 1;
    for (int p = top - 2;; p -= 2) {
        if (!black(p)) continue;
        const int part = (p - 2 * charge + 2 * i - 1) / 2;
        if (part <= 0) break;
        parts.push_back(part);
        ++i;
    }
    return {Partition(std::move(parts)), charge};
}

}  // namespace focklab
