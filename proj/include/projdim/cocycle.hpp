#pragma once

// The four 4x4 generators A_a, their products along B-words, the set Z_n of
// words on the line through the origin, and the potential phi.

#include "projdim/arith.hpp"

#include <array>
#include <limits>
#include <vector>

namespace projdim {

template <class T>
struct Mat4 {
    std::array<std::array<T, 4>, 4> a{};

    T& operator()(int i, int j) { return a[i][j]; }
    const T& operator()(int i, int j) const { return a[i][j]; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m.a[i][i] = T(1);
        return m;
    }

    template <class U>
    Mat4<U> cast() const {
        Mat4<U> m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.a[i][j] = static_cast<U>(a[i][j]);
        return m;
    }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                if (x.a[i][k] == T(0)) continue;
                for (int j = 0; j < 4; ++j) m.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        return m;
    }

    friend Mat4 operator+(const Mat4& x, const Mat4& y) {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
        return m;
    }

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

using TransferMatrix4 = Mat4<int>;
using BigMatrix4 = Mat4<BigInt>;
using RealMatrix4 = Mat4<double>;

// Indexed by B; the paper's subscripts have the second coordinate negated.
const TransferMatrix4& a_matrix(BSymbol a);

BigMatrix4 cocycle_product(const BWord& z);
RealMatrix4 cocycle_product_real(const BWord& z);  // entries as doubles, unnormalised

inline constexpr std::size_t kExactWordCap = 24;

struct ExactWordSet {
    std::size_t n = 0;
    std::vector<BWord> words;
};

// Words z in B^n with p X - q Y = 0, X and Y the binary integers read off z.
ExactWordSet enumerate_exact_words(const SlopeParam& s, std::size_t n, std::size_t cap = kExactWordCap);

// Exact test used by ExactWordSet.
bool on_line_through_origin(const SlopeParam& s, const BWord& z);

inline constexpr std::size_t kCocycleCap = 4096;

// Counts exact overlaps N_n from the cocycle. Each z in Z_n is the difference
// word of a pair class; the pair count is e1^T A_z e1, and the mirror word
// (negated difference) contributes the same amount, so
// N_n = 2 * sum_{z in Z_n} e1^T A_z e1 - 3^n.
BigInt count_via_cocycle(const SlopeParam& s, std::size_t n, std::size_t cap = kCocycleCap);

// sum_{z in Z_n} (1,1,1,1) A_z e1, the boundary as printed in the paper. Kept
// for comparison; it disagrees with N_n from n = 3 when p < q.
BigInt cocycle_sum_ones_boundary(const SlopeParam& s, std::size_t n, std::size_t cap = kCocycleCap);

// log[(1 A_{z1..zn} e1) / (1 A_{z2..zn} e1)]
double phi_truncated(const BWord& z);

struct PhiLimit {
    double value = 0.0;
    double lower = 0.0;   // bracket from the image cone at termination
    double upper = 0.0;
    std::size_t length = 0;  // symbols consumed
};

// phi along prefix . cycle^infinity. Stops when z1's ratio functional varies
// by less than tol (in log) across the image cone of A_{z2..zk}.
PhiLimit phi_limit(const BWord& prefix, const BWord& cycle, double tol,
                   std::size_t max_length = 100000);

}  // namespace projdim
