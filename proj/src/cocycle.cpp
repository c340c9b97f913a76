#include "projdim/cocycle.hpp"

#include <cmath>

namespace projdim {

namespace {

const std::array<TransferMatrix4, 4> kGenerators = [] {
    std::array<TransferMatrix4, 4> g;
    g[0].a = {{{3, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};  // (0,0)
    g[1].a = {{{1, 0, 1, 0}, {1, 3, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 1}}};  // (1,0)
    g[2].a = {{{1, 1, 0, 0}, {0, 0, 0, 0}, {1, 0, 3, 1}, {0, 1, 0, 1}}};  // (0,-1)
    g[3].a = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 3}}};  // (1,-1)
    return g;
}();

// Row vector times generator, in place.
void row_times(std::array<BigInt, 4>& v, const TransferMatrix4& m) {
    std::array<BigInt, 4> out{};
    for (int k = 0; k < 4; ++k) {
        if (v[k] == 0) continue;
        for (int j = 0; j < 4; ++j)
            if (m(k, j)) out[j] += v[k] * m(k, j);
    }
    v = std::move(out);
}

// Shared DP over the line state m = pX - qY of the prefix. A word ending at
// m = 0 needs every intermediate state in (-p, q).
template <class Init, class Finish>
BigInt line_dp(const SlopeParam& s, std::size_t n, std::size_t cap, Init init, Finish finish) {
    if (n > cap) throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const int p = s.p(), q = s.q();
    const int lo = -p + 1, width = p + q - 1;
    std::vector<std::array<BigInt, 4>> cur(width), next(width);
    std::vector<char> live(width, 0), next_live(width, 0);
    cur[-lo] = init();
    live[-lo] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        for (auto& v : next) v = {};
        std::fill(next_live.begin(), next_live.end(), 0);
        for (int i = 0; i < width; ++i) {
            if (!live[i]) continue;
            const int m = i + lo;
            for (auto b : kBAlphabet) {
                const int t = 2 * m + p * b.x - q * b.y;
                if (t < lo || t >= q) continue;
                auto v = cur[i];
                row_times(v, kGenerators[b.index()]);
                for (int j = 0; j < 4; ++j) next[t - lo][j] += v[j];
                next_live[t - lo] = 1;
            }
        }
        cur.swap(next);
        live.swap(next_live);
    }
    return finish(cur[-lo]);
}

}  // namespace

const TransferMatrix4& a_matrix(BSymbol a) { return kGenerators[a.index()]; }

BigMatrix4 cocycle_product(const BWord& z) {
    BigMatrix4 m = BigMatrix4::identity();
    for (auto b : z) m = m * a_matrix(b).cast<BigInt>();
    return m;
}

RealMatrix4 cocycle_product_real(const BWord& z) {
    RealMatrix4 m = RealMatrix4::identity();
    for (auto b : z) m = m * a_matrix(b).cast<double>();
    return m;
}

bool on_line_through_origin(const SlopeParam& s, const BWord& z) {
    BigInt x = 0, y = 0;
    for (auto b : z) {
        x = 2 * x + b.x;
        y = 2 * y + b.y;
    }
    return s.p() * x == s.q() * y;
}

ExactWordSet enumerate_exact_words(const SlopeParam& s, std::size_t n, std::size_t cap) {
    if (n > cap) throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    ExactWordSet out;
    out.n = n;
    const int p = s.p(), q = s.q();
    BWord word;
    word.reserve(n);
    // Depth-first, children in B order, pruning states outside (-p, q).
    auto rec = [&](auto&& self, int m) -> void {
        if (word.size() == n) {
            if (m == 0) out.words.push_back(word);
            return;
        }
        for (auto b : kBAlphabet) {
            const int t = 2 * m + p * b.x - q * b.y;
            if (t <= -p || t >= q) continue;
            word.push_back(b);
            self(self, t);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

BigInt count_via_cocycle(const SlopeParam& s, std::size_t n, std::size_t cap) {
    const BigInt sum = line_dp(
        s, n, cap, [] { return std::array<BigInt, 4>{1, 0, 0, 0}; },
        [](const std::array<BigInt, 4>& v) { return v[0]; });
    return 2 * sum - boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n));
}

BigInt cocycle_sum_ones_boundary(const SlopeParam& s, std::size_t n, std::size_t cap) {
    return line_dp(
        s, n, cap, [] { return std::array<BigInt, 4>{1, 1, 1, 1}; },
        [](const std::array<BigInt, 4>& v) { return v[0]; });
}

namespace {

BigInt ones_times_first_column(const BWord& z, std::size_t from) {
    // Column vector A_{z_from..} e1, built right to left.
    std::array<BigInt, 4> c{1, 0, 0, 0};
    for (std::size_t i = z.size(); i-- > from;) {
        const auto& m = a_matrix(z[i]);
        std::array<BigInt, 4> out{};
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k)
                if (m(r, k)) out[r] += m(r, k) * c[k];
        c = std::move(out);
    }
    return c[0] + c[1] + c[2] + c[3];
}

}  // namespace

double phi_truncated(const BWord& z) {
    if (z.empty()) throw Error(ErrorKind::InvalidArgument, "phi needs at least one symbol");
    const BigInt den = ones_times_first_column(z, 1);
    if (den == 0) throw Error(ErrorKind::DegenerateDenominator, "tail weight is zero for " + to_string(z));
    return log_big(ones_times_first_column(z, 0)) - log_big(den);
}

PhiLimit phi_limit(const BWord& prefix, const BWord& cycle, double tol, std::size_t max_length) {
    auto symbol = [&](std::size_t i) -> const BSymbol* {
        if (i < prefix.size()) return &prefix[i];
        if (cycle.empty()) return nullptr;
        return &cycle[(i - prefix.size()) % cycle.size()];
    };
    const BSymbol* first = symbol(0);
    if (!first) throw Error(ErrorKind::InvalidArgument, "phi_limit needs a non-empty sequence");
    if (std::isinf(tol) && tol > 0) {
        const double v = phi_truncated(BWord{*first});
        return {v, v, v, 1};
    }
    if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");

    const auto head = a_matrix(*first).cast<double>();
    // Row functional 1 A_{z1}.
    std::array<double, 4> f{};
    for (int k = 0; k < 4; ++k)
        for (int r = 0; r < 4; ++r) f[k] += head(r, k);

    // Rescaled by one common factor: per-column scaling would not commute with
    // the next right multiplication.
    RealMatrix4 p = RealMatrix4::identity();
    for (std::size_t len = 1; len <= max_length; ++len) {
        double lo = INFINITY, hi = -INFINITY, at_e1 = 0.0;
        for (int c = 0; c < 4; ++c) {
            double num = 0.0, den = 0.0;
            for (int r = 0; r < 4; ++r) {
                num += f[r] * p(r, c);
                den += p(r, c);
            }
            if (den == 0.0) {  // dead column: no constraint, but e1 must stay alive
                if (c == 0) throw Error(ErrorKind::DegenerateDenominator, "tail weight is zero");
                continue;
            }
            const double g = std::log(num / den);
            lo = std::min(lo, g);
            hi = std::max(hi, g);
            if (c == 0) at_e1 = g;
        }
        if (hi - lo < tol) return {at_e1, lo, hi, len};
        const BSymbol* next = symbol(len);
        if (!next) break;
        p = p * a_matrix(*next).cast<double>();
        double total = 0.0;
        for (const auto& row : p.a)
            for (double v : row) total += v;
        for (auto& row : p.a)
            for (double& v : row) v /= total;
    }
    throw Error(ErrorKind::NotConverged, "phi_limit did not reach tolerance");
}

}  // namespace projdim
