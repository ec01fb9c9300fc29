#pragma once

#include <random>
#include <vector>

#include "focklab/fockvec.hpp"

namespace focklab::testing {

inline ChargedPartition cp(std::initializer_list<int> parts, int charge) { return {Partition(parts), charge}; }
inline HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

inline RVec rvec(std::initializer_list<std::pair<ChargedPartition, long>> terms) {
    RVec v;
    for (const auto& [state, c] : terms) v.add(state, Rational(c));
    return v;
}

// Uniformly random partition of a uniformly random size in [0, max_size].
inline Partition random_partition(std::mt19937_64& rng, int max_size) {
    const int n = std::uniform_int_distribution<int>(0, max_size)(rng);
    std::vector<int> parts;
    int remaining = n;
    int cap = n;
    while (remaining > 0) {
        const int p = std::uniform_int_distribution<int>(1, std::min(remaining, cap))(rng);
        parts.push_back(p);
        remaining -= p;
        cap = p;
    }
    return Partition(parts);
}

inline ChargedPartition random_state(std::mt19937_64& rng, int max_size, int max_abs_charge) {
    return {random_partition(rng, max_size), std::uniform_int_distribution<int>(-max_abs_charge, max_abs_charge)(rng)};
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    return Rational(num(rng), den(rng));
}

}  // namespace focklab::testing

#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<focklab::RVec> {
    static String convert(const focklab::RVec& v) { return focklab::to_string(v).c_str(); }
};
template <>
struct StringMaker<focklab::QVec> {
    static String convert(const focklab::QVec& v) { return focklab::to_string(v).c_str(); }
};
template <>
struct StringMaker<focklab::Rational> {
    static String convert(const focklab::Rational& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<focklab::LaurentQ> {
    static String convert(const focklab::LaurentQ& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<focklab::ChargedPartition> {
    static String convert(const focklab::ChargedPartition& v) { return v.str().c_str(); }
};
}  // namespace doctest
