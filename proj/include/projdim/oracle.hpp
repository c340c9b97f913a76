#pragma once

// Brute-force enumeration over D^n. Slow on purpose; everything fast is
// checked against it.

#include "projdim/arith.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace projdim {

inline constexpr std::size_t kDefaultBruteCap = 10;
// Level measures keep only values, not words, so they can go a bit deeper.
inline constexpr std::size_t kDefaultMeasureCap = 16;

struct CollisionTable {
    std::size_t n = 0;
    int q = 1;
    // key: numerator over q 2^n
    std::map<std::int64_t, std::vector<DWord>> classes;

    std::vector<std::size_t> class_sizes() const;  // in key order
    std::size_t word_count() const;
};

CollisionTable collision_classes(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultBruteCap);

// Class sizes only (same order as collision_classes), without storing words.
std::vector<std::uint64_t> collision_sizes(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultBruteCap);

BigInt overlap_count_exact(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultBruteCap);

double rw_entropy_term(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultBruteCap);

// Level-n approximant of the projected measure: 3^n atoms at the values
// numerator/(q 2^n), returned sorted.
std::vector<std::int64_t> level_atoms(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultMeasureCap);

// Half-open dyadic interval [num/2^k, (num+len)/2^k).
struct DyadicInterval {
    std::int64_t num = 0;
    std::int64_t len = 1;
    unsigned k = 0;
};

// Mass of [lo, hi) under the level-n approximant; lo, hi exact rationals.
double level_mass(const std::vector<std::int64_t>& atoms, const SlopeParam& s, std::size_t n,
                  const Rational& lo, const Rational& hi);

// |mu_n(A) - (1/3) sum_d mu_n(2A - d)| with level-n approximants on both sides.
double selfsim_residual(const SlopeParam& s, const DyadicInterval& a, std::size_t n,
                        std::size_t cap = kDefaultMeasureCap);

}  // namespace projdim
