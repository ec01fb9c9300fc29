#pragma once

// Charged partitions and their equivalent indexings: Maya diagrams and
// normally ordered semi-infinite wedges. Half-integer positions are stored
// doubled so that every quantity stays an exact integer.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focklab {

// A position in Z + 1/2, stored as the odd integer 2m.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static HalfInt from_twice(int twice);
    // "a/2" with a odd, e.g. "7/2", "-1/2".
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    std::string str() const;

    HalfInt operator+(int k) const { return from_twice(twice_ + 2 * k); }
    HalfInt operator-(int k) const { return from_twice(twice_ - 2 * k); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    explicit constexpr HalfInt(int twice) : twice_(twice) {}
    int twice_ = 1;
};

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; the remaining parts must be positive and
    // weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const;  // |lambda|
    // lambda_r for 1-based r; 0 beyond the last row.
    int row(std::size_t r) const { return r >= 1 && r <= parts_.size() ? parts_[r - 1] : 0; }
    // lambda'_c, the length of column c.
    int column(int c) const;
    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    std::string str() const;  // "(4,3,3,1,1)", "()" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct ChargedPartition {
    Partition lambda;
    int charge = 0;

    std::string str() const;  // "(4,3,3,1,1);-1"
    // Inverse of str(); whitespace is ignored.
    static ChargedPartition parse(std::string_view text);

    friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
    friend auto operator<=>(const ChargedPartition&, const ChargedPartition&) = default;
};

// Finite description of a Maya diagram: every position below window_lo is
// black, positions at or above window_lo are black exactly when listed.
struct MayaSpec {
    HalfInt window_lo;
    std::vector<HalfInt> blacks;
};

struct BoxCoord {
    int row = 1;
    int col = 1;
    int content() const { return col - row; }
    friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

struct Color {
    int residue = 0;
    friend bool operator==(const Color&, const Color&) = default;
};

// Residue of an arbitrary integer in [0, level).
int mod_level(long value, int level);

// First n wedge indices m_i = h - i + lambda_i + 1/2, strictly decreasing.
std::vector<HalfInt> black_positions(const ChargedPartition& cp, std::size_t n);

// Throws std::invalid_argument if a listed black lies below window_lo.
ChargedPartition maya_to_partition(const MayaSpec& maya);

// A MayaSpec whose window starts at the lowest white position below zero
// (or at -1/2 when there is none) and lists every black above it.
MayaSpec partition_to_maya(const ChargedPartition& cp);

struct SortedWedge {
    int sign = 1;
    std::vector<HalfInt> indices;  // strictly decreasing
};

// Sorts wedge indices into decreasing order, tracking the permutation sign.
// A repeated index makes the wedge vanish; that is reported as nullopt.
std::optional<SortedWedge> normalize_wedge(std::vector<HalfInt> indices);

Color box_color(int charge, BoxCoord box, int level);

std::vector<BoxCoord> addable_boxes(const Partition& lambda);
std::vector<BoxCoord> removable_boxes(const Partition& lambda);
// Color-filtered variants, sorted by decreasing content.
std::vector<BoxCoord> addable_boxes(const ChargedPartition& cp, Color color, int level);
std::vector<BoxCoord> removable_boxes(const ChargedPartition& cp, Color color, int level);

Partition add_box(const Partition& lambda, BoxCoord box);
Partition remove_box(const Partition& lambda, BoxCoord box);

// Number of boxes of lambda carrying the given color at charge h.
int count_colored_boxes(const ChargedPartition& cp, Color color, int level);

struct RibbonRemoval {
    Partition remainder;
    int rows_spanned = 0;
    friend bool operator==(const RibbonRemoval&, const RibbonRemoval&) = default;
};

// Every way to strip a connected rim hook of k boxes from lambda, ordered by
// the row in which the hook starts.
std::vector<RibbonRemoval> ribbon_removals(const Partition& lambda, int k);

// Enumeration helpers used by the verification sweeps.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_size);
std::vector<ChargedPartition> charged_states(int max_size, int max_abs_charge);

// Internal bead representation: positions below `lo` are black, positions at
// or above lo + 2*bits.size() are white (all in doubled units).
class Maya {
public:
    explicit Maya(const ChargedPartition& cp);

    bool black(int twice) const;
    void set(int twice, bool is_black);
    // Number of black beads strictly above the position.
    int blacks_above(int twice) const;
    // Number of black beads strictly between the two positions.
    int blacks_between(int lo_twice, int hi_twice) const;
    // Lowest tracked position; everything below is black.
    int lowest() const { return lo_; }
    // Highest black bead.
    int highest_black() const;
    ChargedPartition to_charged() const;

private:
    void ensure(int twice);
    int lo_ = -1;
    std::vector<char> bits_;
};

}  // namespace focklab
