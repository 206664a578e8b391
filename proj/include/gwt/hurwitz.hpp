#pragma once

#include "gwt/combinatorics.hpp"
#include "gwt/rational.hpp"

#include <utility>
#include <vector>

namespace gwt {

// Disconnected completed-cycle Hurwitz count for a curve target: target
// genus, covering degree, and the ramification orders k_1..k_n.
struct HurwitzSpec {
    int target_genus = 0;
    int degree = 1;
    std::vector<int> orders;
};

// Shifted symmetric power sum p_k(lambda): k! times the z^k coefficient of
//   sum_{i=1}^{len} (e^{z(lambda_i - i + 1/2)} - e^{z(-i + 1/2)}) + 1/(2 sinh(z/2)),
// the regularized value of sum_{i>=1} e^{z(lambda_i - i + 1/2)}. The row index
// starts at i = 1 (shifted-symmetric convention). reg_order is the truncation
// used for the regularizer expansion; any order >= k gives the same exact
// value (defaults to k).
Rational shifted_power_sum(int k, const Partition& lambda, int reg_order = -1);

// sum over partitions of the degree of
//   (dim lambda / d!)^{2 - 2g} * prod_i p_{k_i}(lambda) / k_i.
Rational completed_cycle_hurwitz(const HurwitzSpec& spec);

// Per-partition summands, in the canonical partition order.
std::vector<std::pair<Partition, Rational>> completed_cycle_hurwitz_terms(const HurwitzSpec& spec);

// Brute-force oracle for the genus-zero, all-orders-2 case: the number of
// n-tuples of transpositions in S_d whose product is the identity, divided
// by d!. Guarded: throws resource_guard_error when d > 6 or the tuple space
// exceeds ~10^6.
Rational transposition_factorization_count(int d, int n);

} // namespace gwt
