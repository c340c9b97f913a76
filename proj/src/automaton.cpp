#include "projdim/automaton.hpp"

#include <sstream>

namespace projdim {

OverlapAutomaton::OverlapAutomaton(const SlopeParam& s) : slope_(s) {
    const int n = state_count();
    w_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        const int a = label(i);
        for (auto x : kDAlphabet)
            for (auto y : kDAlphabet) {
                const int b = 2 * a + scaled_value(x, s) - scaled_value(y, s);
                if (has_state(b)) ++w_[i][index(b)];
            }
    }
}

int OverlapAutomaton::weight(int a, int b) const {
    if (!has_state(a) || !has_state(b)) return 0;
    return w_[index(a)][index(b)];
}

Eigen::MatrixXd OverlapAutomaton::weight_matrix() const {
    const int n = state_count();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = w_[i][j];
    return m;
}

OverlapAutomaton build_overlap_automaton(const SlopeParam& s) { return OverlapAutomaton(s); }

bool strong_connectivity(const OverlapAutomaton& a) {
    Adjacency adj(a.state_count());
    for (int i = 0; i < a.state_count(); ++i)
        for (int j = 0; j < a.state_count(); ++j)
            if (a.weights()[i][j] > 0) adj[i].push_back(j);
    return strongly_connected_components(adj).size() == 1;
}

BigInt count_via_paths(const OverlapAutomaton& a, std::size_t n) {
    const int k = a.state_count();
    std::vector<BigInt> v(k, 0), next(k);
    v[a.index(0)] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (int i = 0; i < k; ++i) {
            if (v[i] == 0) continue;
            for (int j = 0; j < k; ++j)
                if (a.weights()[i][j]) next[j] += v[i] * a.weights()[i][j];
        }
        v.swap(next);
    }
    return v[a.index(0)];
}

Enclosure overlap_growth(const OverlapAutomaton& a, const PerronOptions& opt) {
    if (!strong_connectivity(a))
        throw Error(ErrorKind::NotIrreducible, "overlap automaton for " + a.slope().label());
    const auto r = perron_irreducible(a.weight_matrix(), opt);
    if (!r.converged) throw Error(ErrorKind::NotConverged, "overlap growth for " + a.slope().label());
    return log_enclosure(r.rho);
}

EquivalenceConstants equivalence_constants(const OverlapAutomaton& a) {
    if (!strong_connectivity(a))
        throw Error(ErrorKind::NotIrreducible, "overlap automaton for " + a.slope().label());
    EquivalenceConstants c;
    const int k = a.state_count();
    const int zero = a.index(0);
    for (int s = 0; s < k; ++s) {
        if (a.weights()[zero][s] == 0) continue;
        int col = 0;
        for (int j = 0; j < k; ++j) col += a.weights()[j][s];
        c.c_l = std::min(c.c_l, static_cast<double>(a.weights()[zero][s]) / col);
    }
    return c;
}

std::string to_dot(const OverlapAutomaton& a) {
    std::ostringstream os;
    os << "digraph overlap_" << a.slope().p() << "_" << a.slope().q() << " {\n";
    for (int i = 0; i < a.state_count(); ++i) os << "  \"" << a.label(i) << "\";\n";
    for (int i = 0; i < a.state_count(); ++i)
        for (int j = 0; j < a.state_count(); ++j)
            if (a.weights()[i][j] > 0)
                os << "  \"" << a.label(i) << "\" -> \"" << a.label(j) << "\" [label=\"w=" << a.weights()[i][j]
                   << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace projdim
