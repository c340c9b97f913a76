#pragma once

#include "projdim/automaton.hpp"
#include "projdim/oracle.hpp"
#include "projdim/subshift.hpp"

#include <complex>
#include <string>
#include <vector>

namespace projdim {

struct EntropyReport {
    std::vector<double> H;           // H[k] = H_{k+1}, nats
    std::vector<double> per_symbol;  // H_n / n
    std::vector<double> increments;  // H_{n+1} - H_n, n = 1..n_max-1
    double lyapunov = kLog2;         // all three maps contract by 1/2

    std::size_t n_max() const { return H.size(); }
    // Smaller of H_n/n and H_n - H_{n-1} at the largest n.
    double h_rw() const;
};

EntropyReport hrw_estimates(const SlopeParam& s, std::size_t n_max, std::size_t cap = kDefaultBruteCap);

struct JensenCheck {
    double lhs = 0.0;  // H_n
    double rhs = 0.0;  // n log 9 - log N_n
    bool ok = false;
};

JensenCheck jensen_bound(const SlopeParam& s, std::size_t n, std::size_t cap = kDefaultBruteCap);

inline constexpr std::size_t kFourierTermCap = 64;

struct FourierSample {
    Rational eta;
    std::size_t terms = 0;
    std::complex<double> value;
};

// prod_{n=1}^{terms} (1 + e(-eta/2^n) + e(-(p/q) eta/2^n)) / 3, e(t) = exp(2 pi i t).
// Phases are reduced mod 1 exactly before any floating point.
FourierSample fourier_partial(const SlopeParam& s, const Rational& eta, std::size_t terms);

struct FourierNondecay {
    bool nondecay = false;
    double modulus_at_q = 0.0;
    double max_deviation = 0.0;  // max_N |mu^(q 2^N) - mu^(q)|
    std::size_t n_max = 0;
    std::size_t tail_terms = 0;
};

inline constexpr std::size_t kFourierNondecayCap = 20;

// Compares mu^(q 2^N) (N + tail terms) with mu^(q) (tail terms) for N <= n_max.
FourierNondecay fourier_nondecay(const SlopeParam& s, std::size_t n_max, std::size_t tail_terms = 40);

struct DimensionOptions {
    std::size_t entropy_n = kDefaultBruteCap;
    std::size_t fourier_n = kFourierNondecayCap;
    PerronOptions perron{};
};

struct DimensionReport {
    SlopeParam slope;
    Enclosure N;
    Enclosure P;
    double pressure_gap = 0.0;  // P.mid - N.mid
    EntropyReport entropy;
    double h_rw = 0.0;
    double dim_estimate = 0.0;     // min(1, h_rw / log 2)
    double dim_lower = 0.0;        // max(0, (log 9 - P.upper) / log 2)
    double dim_lower_from_N = 0.0; // same with N.upper
    FourierNondecay fourier;
    bool fourier_nondecay = false;
    bool singular = false;
    bool consistent = false;  // dim_lower <= dim_estimate + 0.02 and dim_lower < 1
};

inline constexpr double kEntropyBiasSlack = 0.02;

DimensionReport dimension_report(const SlopeParam& s, const DimensionOptions& opt = {});

// JSON text with stable field names (see docs/report.schema.json).
std::string to_json(const DimensionReport& r, int indent = 2);

}  // namespace projdim
