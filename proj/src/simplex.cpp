#include "projdim/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace projdim {

SimplexPoint::SimplexPoint(const std::array<double, 4>& x) : x_(x) {
    double sum = 0.0;
    for (double v : x) {
        if (!(v >= 0.0)) throw Error(ErrorKind::OutOfRange, "simplex coordinates must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorKind::OutOfRange, "simplex coordinates must sum to 1");
}

SimplexPoint SimplexPoint::normalize(const std::array<double, 4>& v) {
    double sum = 0.0;
    for (double c : v) {
        if (!(c >= 0.0)) throw Error(ErrorKind::OutOfRange, "negative coordinate");
        sum += c;
    }
    if (!(sum > 0.0)) throw Error(ErrorKind::ZeroImage, "zero vector has no direction");
    std::array<double, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = v[i] / sum;
    // Keep the sum within 1e-12 after rounding.
    return SimplexPoint(x);
}

std::uint8_t SimplexPoint::zero_mask() const {
    std::uint8_t m = 0;
    for (int i = 0; i < 4; ++i)
        if (x_[i] == 0.0) m |= static_cast<std::uint8_t>(1u << i);
    return m;
}

namespace {

int single_zero(std::uint8_t mask) {
    switch (mask) {
        case 1: return 0;
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default: return -1;
    }
}

}  // namespace

std::optional<double> hilbert_distance(const SimplexPoint& x, const SimplexPoint& y) {
    double lo = INFINITY, hi = 0.0;
    auto take = [&](double r) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    };
    const auto mx = x.zero_mask(), my = y.zero_mask();
    if (mx == 0 && my == 0) {
        for (int k = 0; k < 4; ++k) take(x[k] / y[k]);
        return std::log(hi / lo);
    }
    const int i = single_zero(mx), j = single_zero(my);
    if (i < 0 || j < 0) return std::nullopt;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) take(x[k] / y[k]);
    if (i != j) take(x[j] / y[i]);
    return std::log(hi / lo);
}

SimplexPoint normalized_action(const RealMatrix4& m, const SimplexPoint& x) {
    std::array<double, 4> v{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) v[r] += m(r, c) * x[c];
    double sum = v[0] + v[1] + v[2] + v[3];
    if (!(sum > 0.0)) throw Error(ErrorKind::ZeroImage, "M x = 0");
    return SimplexPoint::normalize(v);
}

Contractivity classify_word(const BWord& z) {
    return passes_contraction_criterion(cocycle_product(z)) ? Contractivity::Contractive
                                                             : Contractivity::NotContractive;
}

double birkhoff_coefficient(const RealMatrix4& m) {
    if (!passes_contraction_criterion(m)) return 1.0;
    std::array<bool, 4> live{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) live[r] = live[r] || m(r, c) != 0.0;
    std::array<std::array<double, 4>, 4> col{};  // normalised columns
    for (int c = 0; c < 4; ++c) {
        double sum = 0.0;
        for (int r = 0; r < 4; ++r) sum += m(r, c);
        for (int r = 0; r < 4; ++r) col[c][r] = m(r, c) / sum;
    }
    double delta = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            double lo = INFINITY, hi = 0.0;
            for (int r = 0; r < 4; ++r) {
                if (!live[r]) continue;
                const double ratio = col[a][r] / col[b][r];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            delta = std::max(delta, std::log(hi / lo));
        }
    return std::tanh(delta / 4.0);
}

std::vector<BWord> contractive_words(std::size_t length) {
    std::vector<BWord> out;
    for (auto& z : all_bwords(length))
        if (classify_word(z) == Contractivity::Contractive) out.push_back(std::move(z));
    return out;
}

double max_contraction_tau() {
    double tau = 0.0;
    for (const auto& z : contractive_words(3)) tau = std::max(tau, birkhoff_coefficient(cocycle_product_real(z)));
    return tau;
}

double contractive_frequency(std::size_t sample_count, std::size_t length, std::uint64_t seed) {
    if (sample_count == 0) throw Error(ErrorKind::EmptySample, "sample_count must be positive");
    if (length < 3) throw Error(ErrorKind::InvalidArgument, "sequences need length >= 3");
    std::array<bool, 64> table{};
    for (const auto& z : contractive_words(3)) table[z[0].index() * 16 + z[1].index() * 4 + z[2].index()] = true;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> symbol(0, 3);
    std::uniform_int_distribution<std::size_t> offset(0, length - 3);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < sample_count; ++s) {
        // Symbols outside the sampled block are independent of it, so only
        // the block itself is drawn.
        (void)offset(rng);
        const int a = symbol(rng), b = symbol(rng), c = symbol(rng);
        hits += table[a * 16 + b * 4 + c];
    }
    return static_cast<double>(hits) / static_cast<double>(sample_count);
}

}  // namespace projdim
