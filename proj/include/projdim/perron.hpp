#pragma once

// Strongly connected components and Collatz-Wielandt bounds for non-negative
// matrices.

#include "projdim/common.hpp"

#include <Eigen/Dense>

#include <vector>

namespace projdim {

using Adjacency = std::vector<std::vector<int>>;

// Tarjan, iterative. Components come out in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(const Adjacency& adj);

Adjacency support_graph(const Eigen::MatrixXd& m);

struct PerronOptions {
    double tol = 1e-9;            // width of log(upper/lower)
    std::size_t max_iter = 100000;
};

struct PerronResult {
    Enclosure rho;            // bounds on the spectral radius
    Eigen::VectorXd vector;   // positive iterate at termination (irreducible case)
    std::size_t iterations = 0;
    bool converged = false;
};

// Requires an irreducible non-negative matrix. Iterates v <- (M+I)v, which is
// primitive, and brackets rho(M) by min/max of (Mv)_i / v_i.
PerronResult perron_irreducible(const Eigen::MatrixXd& m, const PerronOptions& opt = {});

// Any non-negative matrix: the spectral radius is the max over diagonal SCC
// blocks.
Enclosure spectral_radius(const Eigen::MatrixXd& m, const PerronOptions& opt = {});

// Log of an enclosure of a positive quantity.
Enclosure log_enclosure(const Enclosure& e);

}  // namespace projdim
