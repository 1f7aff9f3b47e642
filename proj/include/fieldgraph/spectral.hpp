#pragma once

#include "fieldgraph/graph.hpp"
#include "fieldgraph/graph_algo.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace fieldgraph {

// Weighted combinatorial Laplacian L = D - A of an undirected multigraph;
// loops are ignored entirely (they cancel out of L).  Throws
// std::invalid_argument on directed input.
Eigen::MatrixXd laplacian(const FieldGraph& g);

// All eigenvalues, ascending.  The input must be symmetric (checked up to
// 1e-12 absolute).
std::vector<double> spectrum_of(const Eigen::MatrixXd& m);

// Smallest nonzero Laplacian eigenvalue of a connected graph.  Throws
// DisconnectedError when the graph is not connected.
double lambda1(const FieldGraph& g);

struct EigenfunctionCheck {
    std::uint32_t p = 0;
    std::uint32_t l = 0;
    double eigenvalue = 0;   // 8 sin^2(pi l / p)
    double residual = 0;     // max |(L g - eigenvalue g)(v)|
    bool vanished = false;   // g identically zero up to 1e-12 (never happens)
};

// For f = x^2 + 1 over F_p with p = 3 mod 4 and 1 <= l <= p-1, checks that
//   g(v + i w) = 4 cos(2 pi l v / p) cos(2 pi l w / p)
// satisfies L g = 8 sin^2(pi l / p) g to within 1e-9.  Throws
// std::invalid_argument when p is not 3 mod 4 or l is out of range, and
// std::runtime_error when the residual exceeds the tolerance.
EigenfunctionCheck verify_explicit_eigenfunction(std::uint32_t p, std::uint32_t l);

struct LowerBoundsReport {
    double lambda1 = 0;
    int diameter = 0;
    bool normal = false;
    double bound_general = 0;  // 1 / (p^(k+1) (2k+1))
    double bound_sharper = 0;  // 1 / (p (2k+1) (p^k - 1))
    double bound_diameter = 0; // 2 / (diameter (p^k - 1))
    double bound_normal = 0;   // 4 sin^2(pi / p), only when normal
    bool general_holds = false;
    bool sharper_holds = false;
    bool diameter_holds = false;
    bool normal_holds = false; // true when not applicable
};

// Evaluates the spectral gap of the full undirected graph against the
// proved lower bounds.
LowerBoundsReport check_lower_bounds(const FieldModel& model);

struct ExpanderRow {
    std::uint32_t p = 0;
    std::uint64_t n = 0;
    double lambda1 = 0;
    double envelope = 0; // 8 sin^2(pi / p), an upper bound for lambda1
};

// lambda1 of the f = x^2 + 1 family for the given primes (each must be
// 3 mod 4).  The envelope tends to 0, so the family is not an expander.
std::vector<ExpanderRow> expander_report(const std::vector<std::uint32_t>& primes);

} // namespace fieldgraph
