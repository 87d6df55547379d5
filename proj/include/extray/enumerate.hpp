#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "extray/angle.hpp"

namespace extray {

// All lists returned here are reduced, deduplicated and sorted ascending in
// [0,1); set operations are merge-based on that order.

// {theta : m^a theta = m^b theta} = { j/|m^a - m^b| : 0 <= j < |m^a - m^b| }.
// Requires |m| >= 2 and a > b >= 0. Enumerations are capped at 2^22 elements
// (std::length_error beyond); use equal_iterates_count for the cardinality.
std::vector<Angle> equal_iterates(std::int64_t m, int a, int b);
BigInt equal_iterates_count(std::int64_t m, int a, int b);

// C(n,k) = {theta : 2^(n-1) theta = 2^(k-1) theta, 2^(n-k) theta != theta},
// cardinality 2^(n-1) - 2^(k-1) - 2^(n-k) + 1. Requires n > k > 1.
std::vector<Angle> misiurewicz_angles_quadratic(int n, int k);

// P(n) = {theta : 2^n theta = theta} = { j/(2^n - 1) }. Requires n >= 1.
std::vector<Angle> parabolic_angles_quadratic(int n);

// C*(n,k) = {theta : (-2)^(n-1) theta = (-2)^(k-1) theta,
//            (-2)^(n-k) theta != theta}. Requires n > k > 1. Cardinality
// 2^(n-1) - 2^(k-1) - 2^(n-k) + 1 for n-k even,
// 2^(n-1) + 2^(k-1) - 2^(n-k) - 1 for n-k odd.
std::vector<Angle> misiurewicz_angles_tricorn(int n, int k);

// X(n,k): the base-(-2) kernel of (n-1,k-1) minus the kernel of (n-k,0),
// computed as a sorted-list difference. Coincides with
// misiurewicz_angles_tricorn(n,k); both routes are kept as a cross-check.
std::vector<Angle> tricorn_X_angles(int n, int k);

// A \ B for sorted inputs.
std::vector<Angle> sorted_difference(const std::vector<Angle>& a, const std::vector<Angle>& b);

// Degree-4 pair classes: unordered {alpha, alpha'} with 4 alpha = 4 alpha',
// alpha != alpha', 4^m alpha = 4^n alpha. Requires m > n >= 1, m <= 8.
// Returned with first < second, sorted by first.
std::vector<std::pair<Angle, Angle>> pair_set_d4(int m, int n);

// Exact star discrepancy versus the uniform measure on [0,1); input need not
// be sorted. Rejects empty input. Always in (0, 1].
double star_discrepancy(std::vector<double> xs);
double star_discrepancy(const std::vector<Angle>& angles);

}  // namespace extray
