#include "projdim/arith.hpp"

#include <numeric>
#include <sstream>

namespace projdim {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::ZeroImage: return "ZeroImage";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::DegenerateEigenvector: return "DegenerateEigenvector";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

double log_big(const BigInt& x) {
    if (x <= 0) return -INFINITY;
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 1000) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 60;
    BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + shift * kLog2;
}

SlopeParam SlopeParam::make(long long p, long long q) {
    if (p <= 0 || q <= 0 || p > q)
        throw Error(ErrorKind::OutOfRange, "need 1 <= p <= q, got " + std::to_string(p) + "/" + std::to_string(q));
    if (q > 1'000'000)
        throw Error(ErrorKind::OutOfRange, "denominator too large: " + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::NotCoprime, std::to_string(p) + "/" + std::to_string(q));
    return SlopeParam(static_cast<int>(p), static_cast<int>(q));
}

double SlopeParam::angle() const { return std::atan2(static_cast<double>(p_), static_cast<double>(q_)); }

std::string SlopeParam::label() const { return std::to_string(p_) + "/" + std::to_string(q_); }

SlopeParam make_slope(long long p, long long q) { return SlopeParam::make(p, q); }

std::vector<SlopeParam> slopes_up_to(int q_max) {
    std::vector<SlopeParam> out;
    for (int q = 1; q <= q_max; ++q)
        for (int p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.push_back(make_slope(p, q));
    return out;
}

int scaled_value(DSymbol d, const SlopeParam& s) {
    switch (d) {
        case DSymbol::Zero: return 0;
        case DSymbol::One: return s.q();
        case DSymbol::Slope: return s.p();
    }
    return 0;
}

char symbol_char(DSymbol d) {
    switch (d) {
        case DSymbol::Zero: return '0';
        case DSymbol::One: return '1';
        case DSymbol::Slope: return 's';
    }
    return '?';
}

std::string to_string(const DWord& w) {
    std::string out;
    for (auto d : w) out.push_back(symbol_char(d));
    return out;
}

std::string to_string(const BWord& z) {
    std::string out;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(static_cast<char>('0' + z[i].x));
        out.push_back(static_cast<char>('0' + z[i].y));
    }
    return out;
}

BWord parse_bword(const std::string& text) {
    BWord out;
    std::string digits;
    for (char c : text) {
        if (c == '0' || c == '1') digits.push_back(c);
        else if (c == ',' || c == ' ' || c == '(' || c == ')') continue;
        else throw Error(ErrorKind::InvalidArgument, "bad B-word character in '" + text + "'");
    }
    if (digits.size() % 2)
        throw Error(ErrorKind::InvalidArgument, "B-word needs pairs of bits: '" + text + "'");
    for (std::size_t i = 0; i < digits.size(); i += 2)
        out.push_back({static_cast<std::uint8_t>(digits[i] - '0'), static_cast<std::uint8_t>(digits[i + 1] - '0')});
    return out;
}

std::vector<BWord> all_bwords(std::size_t length) {
    std::vector<BWord> out;
    std::size_t total = std::size_t{1} << (2 * length);
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        BWord z(length);
        std::size_t c = code;
        for (std::size_t i = length; i-- > 0;) {
            z[i] = BSymbol::from_index(static_cast<int>(c & 3));
            c >>= 2;
        }
        out.push_back(std::move(z));
    }
    return out;
}

Rational Dyadic::value() const {
    BigInt den = BigInt(q) << exponent;
    return Rational(numerator, den);
}

Dyadic pi_value(const DWord& w, const SlopeParam& s) {
    // Horner from the last digit: sum d_i 2^(n-i) over denominator q 2^n.
    Dyadic out;
    out.q = s.q();
    out.exponent = static_cast<unsigned>(w.size());
    BigInt acc = 0;
    BigInt scale = 1;
    for (std::size_t i = w.size(); i-- > 0;) {
        acc += scale * scaled_value(w[i], s);
        scale <<= 1;
    }
    out.numerator = acc;
    return out;
}

bool line_membership(const Rational& x, const Rational& y, const SlopeParam& s) {
    Rational t = x * s.p() - y * s.q();
    return denominator(t) == 1;
}

ScaledRemainder r_extend(const ScaledRemainder& r, DSymbol x, DSymbol y, const SlopeParam& s) {
    return {2 * r.j + scaled_value(x, s) - scaled_value(y, s)};
}

RemainderTrace r_word(const DWord& a, const DWord& b, const SlopeParam& s) {
    if (a.size() != b.size())
        throw Error(ErrorKind::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    RemainderTrace t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        t.value = r_extend(t.value, a[i], b[i], s);
        if (t.recoverable && !t.value.recoverable(s)) {
            t.recoverable = false;
            t.first_escape = i + 1;
        }
    }
    return t;
}

AlphaBeta solve_alpha_beta(long long j, const SlopeParam& s) {
    const long long p = s.p(), q = s.q();
    // alpha = j p^{-1} mod q, then raise by q until beta is non-negative.
    long long inv = 0;
    for (long long a = 0; a < q; ++a)
        if ((a * p) % q == 1 % q) { inv = a; break; }
    long long alpha = ((j % q) * inv) % q;
    if (alpha < 0) alpha += q;
    if (alpha * p < j) alpha += ((j - alpha * p) + p * q - 1) / (p * q) * q;
    return {alpha, (alpha * p - j) / q};
}

BigInt AlphaBetaWord::pair(const SlopeParam& s) const {
    BigInt acc = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) acc = 2 * acc + alpha[i] * s.p() - beta[i] * s.q();
    return acc;
}

AlphaBetaWord rtilde_word(const DWord& a, const DWord& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    AlphaBetaWord out;
    out.alpha.reserve(a.size());
    out.beta.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int al = 0, be = 0;
        const DSymbol x = a[i], y = b[i];
        if (x == y) {
        } else if (x == DSymbol::One && y == DSymbol::Zero) {
            be = -1;
        } else if (x == DSymbol::Zero && y == DSymbol::One) {
            be = 1;
        } else if (x == DSymbol::Slope && y == DSymbol::Zero) {
            al = 1;
        } else if (x == DSymbol::Zero && y == DSymbol::Slope) {
            al = -1;
        } else if (x == DSymbol::Slope && y == DSymbol::One) {
            al = 1;
            be = 1;
        } else {  // x = 1, y = p/q
            al = -1;
            be = -1;
        }
        out.alpha.push_back(al);
        out.beta.push_back(be);
    }
    return out;
}

}  // namespace projdim
