#pragma once

// Binary-digit transfer matrices M_0, M_1 on the shifts j/q, j in (-q, q),
// and the measure they induce on binary cylinders.

#include "projdim/arith.hpp"
#include "projdim/perron.hpp"

#include <string>
#include <vector>

namespace projdim {

using IntMatrix = std::vector<std::vector<int>>;

struct GibbsSystem {
    SlopeParam slope;
    std::vector<int> digits;  // scaled shifts -q+1..q-1
    IntMatrix m0, m1;         // m_i[J][K] = #{d in D : i q + 2J - d = K}
    Eigen::VectorXd R;        // Perron vector of M0 + M1, sums to 1
    Enclosure perron_value;   // should contain 3
    std::vector<int> accessible;  // indices reachable from shift 0

    int size() const { return static_cast<int>(digits.size()); }
    const IntMatrix& m(int bit) const { return bit ? m1 : m0; }
};

using BinaryWord = std::vector<int>;  // entries 0 or 1

GibbsSystem build_gibbs_system(const SlopeParam& s, const PerronOptions& opt = {});

// Exact row vector 1 M_{w_1} ... M_{w_n}.
std::vector<BigInt> cylinder_row(const GibbsSystem& g, const BinaryWord& w);

double mu_bar_mass(const GibbsSystem& g, const BinaryWord& w);

double phi_bar(const GibbsSystem& g, const BinaryWord& w);

struct VariationCheck {
    bool ok = true;
    double max_deviation = 0.0;  // max over truncations k in [m, n] of |phi_n - phi_k|
    double bound = 0.0;          // 2 log(entry sum of M_{w_1})
};

VariationCheck variation_bound_check(const GibbsSystem& g, const BinaryWord& w, std::size_t m);

inline constexpr std::size_t kWeakGibbsCap = 20;

struct WeakGibbsPoint {
    std::size_t n = 0;
    double log_c_over_n = 0.0;
};

// C_n = max over length-n cylinders of max(r, 1/r), r = mu[w] Z_n / max_K (1 M_w)_K,
// Z_n = sum_w max_K (1 M_w)_K. The sup of the Birkhoff sum over the cylinder
// is the largest column sum of 1 M_w.
std::vector<WeakGibbsPoint> weak_gibbs_constants(const GibbsSystem& g, std::size_t n_max);

std::string weak_gibbs_csv(const std::vector<WeakGibbsPoint>& seq);
// word,mass for every binary word of length n.
std::string cylinder_mass_csv(const GibbsSystem& g, std::size_t n);

}  // namespace projdim
