#include "projdim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace projdim {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > 30) throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " beyond 64-bit enumeration");
}

// Values of all 3^n words in lexicographic order (digit 0 most significant).
std::vector<std::int64_t> all_values(const SlopeParam& s, std::size_t n) {
    std::vector<std::int64_t> vals{0};
    const std::int64_t d[3] = {0, s.q(), s.p()};
    for (std::size_t level = 0; level < n; ++level) {
        std::vector<std::int64_t> next;
        next.reserve(vals.size() * 3);
        for (auto v : vals)
            for (auto x : d) next.push_back(2 * v + x);
        vals.swap(next);
    }
    return vals;
}

}  // namespace

std::vector<std::size_t> CollisionTable::class_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(classes.size());
    for (const auto& [k, words] : classes) out.push_back(words.size());
    return out;
}

std::size_t CollisionTable::word_count() const {
    std::size_t total = 0;
    for (const auto& [k, words] : classes) total += words.size();
    return total;
}

CollisionTable collision_classes(const SlopeParam& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    CollisionTable t;
    t.n = n;
    t.q = s.q();
    const auto vals = all_values(s, n);
    for (std::size_t code = 0; code < vals.size(); ++code) {
        DWord w(n);
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            w[i] = kDAlphabet[c % 3];
            c /= 3;
        }
        t.classes[vals[code]].push_back(std::move(w));
    }
    return t;
}

std::vector<std::uint64_t> collision_sizes(const SlopeParam& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    auto vals = all_values(s, n);
    std::sort(vals.begin(), vals.end());
    std::vector<std::uint64_t> sizes;
    for (std::size_t i = 0; i < vals.size();) {
        std::size_t j = i;
        while (j < vals.size() && vals[j] == vals[i]) ++j;
        sizes.push_back(j - i);
        i = j;
    }
    return sizes;
}

BigInt overlap_count_exact(const SlopeParam& s, std::size_t n, std::size_t cap) {
    BigInt total = 0;
    for (auto c : collision_sizes(s, n, cap)) total += BigInt(c) * c;
    return total;
}

double rw_entropy_term(const SlopeParam& s, std::size_t n, std::size_t cap) {
    const auto sizes = collision_sizes(s, n, cap);
    const double total = std::pow(3.0, static_cast<double>(n));
    double acc = 0.0;
    for (auto c : sizes)
        if (c > 1) acc += (static_cast<double>(c) / total) * std::log(static_cast<double>(c));
    return n * kLog3 - acc;
}

std::vector<std::int64_t> level_atoms(const SlopeParam& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    auto vals = all_values(s, n);
    std::sort(vals.begin(), vals.end());
    return vals;
}

namespace {

// Smallest integer >= r.
std::int64_t ceil_rational(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt qt = num / den;
    if (qt * den != num && num > 0) qt += 1;
    return qt.convert_to<std::int64_t>();
}

}  // namespace

double level_mass(const std::vector<std::int64_t>& atoms, const SlopeParam& s, std::size_t n,
                  const Rational& lo, const Rational& hi) {
    // Atom value v/(q 2^n) lies in [lo, hi) iff ceil(lo q 2^n) <= v < ceil(hi q 2^n).
    const Rational scale(BigInt(s.q()) << n);
    const std::int64_t a = ceil_rational(lo * scale);
    const std::int64_t b = ceil_rational(hi * scale);
    auto first = std::lower_bound(atoms.begin(), atoms.end(), a);
    auto last = std::lower_bound(atoms.begin(), atoms.end(), b);
    return static_cast<double>(last - first) / static_cast<double>(atoms.size());
}

double selfsim_residual(const SlopeParam& s, const DyadicInterval& a, std::size_t n, std::size_t cap) {
    const auto atoms = level_atoms(s, n, cap);
    const Rational lo(a.num, BigInt(1) << a.k);
    const Rational hi(a.num + a.len, BigInt(1) << a.k);
    const Rational digits[3] = {Rational(0), Rational(1), Rational(s.p(), s.q())};
    double rhs = 0.0;
    for (const auto& d : digits) rhs += level_mass(atoms, s, n, 2 * lo - d, 2 * hi - d);
    return std::abs(level_mass(atoms, s, n, lo, hi) - rhs / 3.0);
}

}  // namespace projdim
