#pragma once

#include "projdim/common.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace projdim {

class SlopeParam {
public:
    // Validating constructor; see make_slope.
    static SlopeParam make(long long p, long long q);

    int p() const { return p_; }
    int q() const { return q_; }
    double ratio() const { return static_cast<double>(p_) / q_; }
    double angle() const;
    std::string label() const;  // "p/q"

    friend bool operator==(const SlopeParam&, const SlopeParam&) = default;

private:
    SlopeParam(int p, int q) : p_(p), q_(q) {}
    int p_;
    int q_;
};

SlopeParam make_slope(long long p, long long q);

// All co-prime slopes with denominator at most q_max, ordered by (q, p).
std::vector<SlopeParam> slopes_up_to(int q_max);

// Projected digits. Values are 0, 1 and p/q; scaled by q they are 0, q, p.
enum class DSymbol : std::uint8_t { Zero = 0, One = 1, Slope = 2 };
inline constexpr std::array<DSymbol, 3> kDAlphabet{DSymbol::Zero, DSymbol::One, DSymbol::Slope};

int scaled_value(DSymbol d, const SlopeParam& s);
char symbol_char(DSymbol d);  // '0', '1', 's'

using DWord = std::vector<DSymbol>;

// Two-dimensional binary symbol. Index order is (0,0),(1,0),(0,1),(1,1).
struct BSymbol {
    std::uint8_t x = 0;
    std::uint8_t y = 0;
    int index() const { return x + 2 * y; }
    static BSymbol from_index(int i) { return {static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>((i >> 1) & 1)}; }
    friend bool operator==(const BSymbol&, const BSymbol&) = default;
};
inline constexpr std::array<BSymbol, 4> kBAlphabet{BSymbol{0, 0}, BSymbol{1, 0}, BSymbol{0, 1}, BSymbol{1, 1}};

using BWord = std::vector<BSymbol>;

std::string to_string(const DWord& w);
std::string to_string(const BWord& z);  // "00 10 01"
// Parses "00,10,01,11" style lists (commas or spaces between symbols).
BWord parse_bword(const std::string& text);
// All words over B of the given length in lexicographic index order.
std::vector<BWord> all_bwords(std::size_t length);

// numerator / (q * 2^exponent)
struct Dyadic {
    BigInt numerator;
    unsigned exponent = 0;
    int q = 1;
    Rational value() const;
};

Dyadic pi_value(const DWord& w, const SlopeParam& s);

bool line_membership(const Rational& x, const Rational& y, const SlopeParam& s);

struct ScaledRemainder {
    BigInt j;
    bool recoverable(const SlopeParam& s) const { return abs(j) <= s.q() - 1; }
};

ScaledRemainder r_extend(const ScaledRemainder& r, DSymbol x, DSymbol y, const SlopeParam& s);

struct RemainderTrace {
    ScaledRemainder value;
    bool recoverable = true;                 // every prefix satisfied |j| <= q-1
    std::optional<std::size_t> first_escape;  // prefix length where |j| first exceeded q-1
};

RemainderTrace r_word(const DWord& a, const DWord& b, const SlopeParam& s);

struct AlphaBeta {
    long long alpha = 0;
    long long beta = 0;
};

AlphaBeta solve_alpha_beta(long long j, const SlopeParam& s);

struct AlphaBetaWord {
    std::vector<int> alpha;
    std::vector<int> beta;
    // Sum alpha_i 2^(n-i) * p - beta_i 2^(n-i) * q, which equals q * R_n.
    BigInt pair(const SlopeParam& s) const;
};

AlphaBetaWord rtilde_word(const DWord& a, const DWord& b);

}  // namespace projdim
