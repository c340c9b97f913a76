#pragma once

// Hilbert metric on the open 4-simplex and its faces, the normalised action
// x -> Mx/|Mx|, and contraction of B-word products.

#include "projdim/cocycle.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace projdim {

class SimplexPoint {
public:
    // Throws OutOfRange unless entries are >= 0 and sum to 1 within 1e-12.
    explicit SimplexPoint(const std::array<double, 4>& x);
    // Normalises a non-negative, non-zero vector.
    static SimplexPoint normalize(const std::array<double, 4>& v);

    double operator[](int i) const { return x_[i]; }
    const std::array<double, 4>& coords() const { return x_; }
    std::uint8_t zero_mask() const;  // bit i set when x_i == 0
    bool interior() const { return zero_mask() == 0; }

private:
    std::array<double, 4> x_;
};

// log(max ratio / min ratio). Interior pairs use all coordinates. Points on
// single-zero faces E_{3,i}, E_{3,j} use the face form: the coordinates outside
// {i, j} plus the cross ratio x_j / y_i. Anything else is undefined.
std::optional<double> hilbert_distance(const SimplexPoint& x, const SimplexPoint& y);

SimplexPoint normalized_action(const RealMatrix4& m, const SimplexPoint& x);

struct RowProfile {
    int pos = 0;
    int zero = 0;
    std::optional<int> zero_index;
};

template <class T>
RowProfile row_profile(const Mat4<T>& m) {
    RowProfile r;
    for (int i = 0; i < 4; ++i) {
        int nz = 0;
        for (int j = 0; j < 4; ++j)
            if (m(i, j) != T(0)) ++nz;
        if (nz == 4) ++r.pos;
        if (nz == 0) {
            ++r.zero;
            if (!r.zero_index) r.zero_index = i;
        }
    }
    return r;
}

enum class Contractivity { Contractive, NotContractive };

// Non-zero rows all positive and at least two of them.
template <class T>
bool passes_contraction_criterion(const Mat4<T>& m) {
    const auto r = row_profile(m);
    return r.pos >= 2 && r.pos + r.zero == 4;
}

Contractivity classify_word(const BWord& z);

// tanh(Delta/4), Delta the projective diameter of the normalised columns on
// the non-zero rows. Returns 1 when the criterion fails.
double birkhoff_coefficient(const RealMatrix4& m);

// Contractive words of length 3 and the largest coefficient among them.
std::vector<BWord> contractive_words(std::size_t length);
double max_contraction_tau();

// Fraction of contractive length-3 blocks at uniformly random positions of
// random B-sequences of the given length. Deterministic in seed.
double contractive_frequency(std::size_t sample_count, std::size_t length, std::uint64_t seed);

}  // namespace projdim
