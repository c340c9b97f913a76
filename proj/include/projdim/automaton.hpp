#pragma once

#include "projdim/arith.hpp"
#include "projdim/perron.hpp"

#include <string>
#include <vector>

namespace projdim {

// States are scaled remainders -q+1..q-1; weight(a,b) counts digit pairs
// (x,y) with 2a + q(x-y) = b.
class OverlapAutomaton {
public:
    explicit OverlapAutomaton(const SlopeParam& s);

    const SlopeParam& slope() const { return slope_; }
    int state_count() const { return 2 * slope_.q() - 1; }
    int label(int index) const { return index - (slope_.q() - 1); }
    int index(int label) const { return label + (slope_.q() - 1); }
    bool has_state(int label) const { return label > -slope_.q() && label < slope_.q(); }

    int weight(int a, int b) const;  // by label; 0 outside the state set
    double probability(int a, int b) const { return weight(a, b) / 9.0; }
    Eigen::MatrixXd weight_matrix() const;
    const std::vector<std::vector<int>>& weights() const { return w_; }  // by index

private:
    SlopeParam slope_;
    std::vector<std::vector<int>> w_;
};

OverlapAutomaton build_overlap_automaton(const SlopeParam& s);

bool strong_connectivity(const OverlapAutomaton& a);

// (W^n)[0,0] in exact arithmetic.
BigInt count_via_paths(const OverlapAutomaton& a, std::size_t n);

// Enclosure of log rho(W), in nats.
Enclosure overlap_growth(const OverlapAutomaton& a, const PerronOptions& opt = {});

struct EquivalenceConstants {
    double c_l = 1.0;
    double c_r = 1.0;
};

EquivalenceConstants equivalence_constants(const OverlapAutomaton& a);

// Nodes in ascending label order, edges labelled "w=k".
std::string to_dot(const OverlapAutomaton& a);

}  // namespace projdim
