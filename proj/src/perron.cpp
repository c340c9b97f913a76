#include "projdim/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace projdim {

std::vector<std::vector<int>> strongly_connected_components(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    struct Frame { int v; std::size_t next; };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < adj[f.v].size()) {
                int w = adj[f.v][f.next++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const int v = f.v;
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    return comps;
}

Adjacency support_graph(const Eigen::MatrixXd& m) {
    Adjacency adj(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) > 0) adj[i].push_back(static_cast<int>(j));
    return adj;
}

PerronResult perron_irreducible(const Eigen::MatrixXd& m, const PerronOptions& opt) {
    const Eigen::Index n = m.rows();
    PerronResult r;
    if (n == 1) {
        r.rho = {m(0, 0), m(0, 0)};
        r.vector = Eigen::VectorXd::Ones(1);
        r.converged = true;
        return r;
    }
    const Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    // Relative slack covering rounding in Mv.
    const double eps = 64 * std::numeric_limits<double>::epsilon() * n;
    for (std::size_t it = 1; it <= opt.max_iter; ++it) {
        Eigen::VectorXd w = shifted * v;
        v = w / w.maxCoeff();
        if (it % 8 != 0 && it != opt.max_iter) continue;
        const Eigen::VectorXd mv = m * v;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double ratio = mv(i) / v(i);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        lo *= (1 - eps);
        hi *= (1 + eps);
        r.rho = {std::max(lo, 0.0), hi};
        r.iterations = it;
        if (lo > 0 && std::log(hi / lo) <= opt.tol) {
            r.converged = true;
            break;
        }
    }
    r.vector = v;
    return r;
}

Enclosure spectral_radius(const Eigen::MatrixXd& m, const PerronOptions& opt) {
    Enclosure best{0.0, 0.0};
    for (const auto& comp : strongly_connected_components(support_graph(m))) {
        const Eigen::Index k = static_cast<Eigen::Index>(comp.size());
        Eigen::MatrixXd block(k, k);
        for (Eigen::Index a = 0; a < k; ++a)
            for (Eigen::Index b = 0; b < k; ++b) block(a, b) = m(comp[a], comp[b]);
        if (k == 1 && block(0, 0) == 0) continue;
        const auto r = perron_irreducible(block, opt);
        if (!r.converged) throw Error(ErrorKind::NotConverged, "Collatz-Wielandt bounds did not meet tolerance");
        best.lower = std::max(best.lower, r.rho.lower);
        best.upper = std::max(best.upper, r.rho.upper);
    }
    return best;
}

Enclosure log_enclosure(const Enclosure& e) { return {std::log(e.lower), std::log(e.upper)}; }

}  // namespace projdim
