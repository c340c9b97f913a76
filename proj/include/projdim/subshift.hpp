#pragma once

// Binary expansions of points on the extended line p x - q y in Z, as a
// labelled graph. State m is the tail value p x~ - q y~ of the unread digits.

#include "projdim/cocycle.hpp"
#include "projdim/perron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace projdim {

struct SubshiftEdge {
    int from = 0;  // state labels
    BSymbol label;
    int to = 0;
};

struct SubshiftPresentation {
    SlopeParam slope;
    std::vector<int> states;          // ascending
    std::vector<SubshiftEdge> edges;  // by source, then label index

    int index_of(int state) const;    // -1 when absent
    // Successor of a state under a label, if the edge was retained.
    std::optional<int> step(int state, BSymbol b) const;
};

SubshiftPresentation build_line_subshift(const SlopeParam& s);

// Some start state carries z along retained edges.
bool admissible(const SubshiftPresentation& sp, const BWord& z);

enum class SquareTest { Closed, Open };

// Does the binary square of z meet the extended line? Exact integer test.
bool geometric_cylinder_test(const SlopeParam& s, const BWord& z, SquareTest mode = SquareTest::Closed);

// Closed square meets the line only at a corner.
bool corner_touch(const SlopeParam& s, const BWord& z);

inline constexpr std::size_t kPressureCap = 40;
inline constexpr std::size_t kMaxColumnCap = 14;

struct PressureEstimate {
    std::size_t n = 0;
    double lower = 0.0;                // L_n = (1/n) log sum 1 A_z e1
    double full = 0.0;                 // S_n = (1/n) log sum 1 A_z 1
    std::optional<double> max_column;  // U_n = (1/n) log sum max_k (1 A_z)_k, small n only
    std::optional<Enclosure> spectral;
    BigInt lower_sum;
    BigInt full_sum;
};

// Sums run over admissible words, each counted once (subset construction).
PressureEstimate pressure_partial(const SlopeParam& s, std::size_t n);
// All n = 1..n_max in one pass; max_column filled for n <= kMaxColumnCap when requested.
std::vector<PressureEstimate> pressure_sequence(const SlopeParam& s, std::size_t n_max, bool with_max_column = false);

// Block matrix Theta[(m,i),(m',j)] = sum over edges m -b-> m' of A_b(i,j).
Eigen::MatrixXd tensor_operator(const SubshiftPresentation& sp);

// log rho(Theta) with a Collatz-Wielandt enclosure on each SCC.
PressureEstimate spectral_pressure(const SlopeParam& s, const PerronOptions& opt = {});

struct PressureGap {
    Enclosure N;
    Enclosure P;
    bool ok = false;
};

PressureGap pressure_gap_check(const SlopeParam& s, const PerronOptions& opt = {});

std::string to_dot(const SubshiftPresentation& sp);
std::string pressure_csv(const std::vector<PressureEstimate>& seq);

}  // namespace projdim
