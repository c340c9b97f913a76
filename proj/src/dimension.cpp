#include "projdim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace projdim {

double EntropyReport::h_rw() const {
    if (H.empty()) throw Error(ErrorKind::InvalidArgument, "empty entropy report");
    const double avg = per_symbol.back();
    if (H.size() == 1) return avg;
    return std::min(avg, H.back() - H[H.size() - 2]);
}

EntropyReport hrw_estimates(const SlopeParam& s, std::size_t n_max, std::size_t cap) {
    if (n_max == 0) throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
    if (n_max > cap)
        throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n_max) + " exceeds cap " + std::to_string(cap));
    EntropyReport r;
    for (std::size_t n = 1; n <= n_max; ++n) {
        r.H.push_back(rw_entropy_term(s, n, cap));
        r.per_symbol.push_back(r.H.back() / n);
        if (n > 1) r.increments.push_back(r.H[n - 1] - r.H[n - 2]);
    }
    return r;
}

JensenCheck jensen_bound(const SlopeParam& s, std::size_t n, std::size_t cap) {
    JensenCheck j;
    j.lhs = rw_entropy_term(s, n, cap);
    j.rhs = n * kLog9 - log_big(count_via_paths(build_overlap_automaton(s), n));
    j.ok = j.lhs >= j.rhs - 1e-9;
    return j;
}

namespace {

// exp(-2 pi i t) for t = num/den, reduced into [0,1) exactly first.
std::complex<double> unit_phase(const BigInt& num, const BigInt& den) {
    BigInt r = num % den;
    if (r < 0) r += den;
    if (r == 0) return {1.0, 0.0};
    // r/den in (0,1); long double keeps a few extra bits through the division.
    const long double t = static_cast<long double>(Rational(r, den).convert_to<long double>());
    const long double ang = -2.0L * std::numbers::pi_v<long double> * t;
    return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

}  // namespace

FourierSample fourier_partial(const SlopeParam& s, const Rational& eta, std::size_t terms) {
    if (terms > kFourierTermCap)
        throw Error(ErrorKind::CapExceeded, "terms=" + std::to_string(terms) + " exceeds " + std::to_string(kFourierTermCap));
    FourierSample out{eta, terms, {1.0, 0.0}};
    const BigInt a = numerator(eta), b = denominator(eta);
    for (std::size_t n = 1; n <= terms; ++n) {
        const BigInt den = b << n;
        const auto f = (std::complex<double>(1.0, 0.0) + unit_phase(a, den) + unit_phase(a * s.p(), den * s.q())) / 3.0;
        out.value *= f;
    }
    return out;
}

FourierNondecay fourier_nondecay(const SlopeParam& s, std::size_t n_max, std::size_t tail_terms) {
    if (n_max > kFourierNondecayCap)
        throw Error(ErrorKind::CapExceeded, "N=" + std::to_string(n_max) + " exceeds " + std::to_string(kFourierNondecayCap));
    FourierNondecay r;
    r.n_max = n_max;
    r.tail_terms = tail_terms;
    const auto base = fourier_partial(s, Rational(s.q()), tail_terms).value;
    r.modulus_at_q = std::abs(base);
    for (std::size_t N = 0; N <= n_max; ++N) {
        const auto v = fourier_partial(s, Rational(BigInt(s.q()) << N), N + tail_terms).value;
        r.max_deviation = std::max(r.max_deviation, std::abs(v - base));
    }
    r.nondecay = r.max_deviation < 1e-9;
    return r;
}

DimensionReport dimension_report(const SlopeParam& s, const DimensionOptions& opt) {
    DimensionReport r{s, {}, {}, 0.0, {}, 0.0, 0.0, 0.0, 0.0, {}, false, false, false};
    r.N = overlap_growth(build_overlap_automaton(s), opt.perron);
    r.P = *spectral_pressure(s, opt.perron).spectral;
    r.pressure_gap = r.P.mid() - r.N.mid();
    r.entropy = hrw_estimates(s, opt.entropy_n);
    r.h_rw = r.entropy.h_rw();
    r.dim_estimate = std::min(1.0, r.h_rw / kLog2);
    r.dim_lower = std::max(0.0, (kLog9 - r.P.upper) / kLog2);
    r.dim_lower_from_N = std::max(0.0, (kLog9 - r.N.upper) / kLog2);
    r.fourier = fourier_nondecay(s, opt.fourier_n);
    r.fourier_nondecay = r.fourier.nondecay;
    r.singular = r.fourier_nondecay && r.fourier.modulus_at_q > 1e-3;
    r.consistent = r.dim_lower <= r.dim_estimate + kEntropyBiasSlack && r.dim_lower < 1.0;
    return r;
}

}  // namespace projdim
