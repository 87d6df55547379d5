#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "extray/angle.hpp"

namespace extray {

// Finite set of angles sharing one image under theta -> d*theta.
struct PortraitSet {
    std::vector<Angle> angles;  // sorted ascending
    int degree_base = 2;

    bool has_common_image() const;
};

// Ordered (d-1)-tuple of portrait sets.
struct CriticalPortrait {
    std::vector<PortraitSet> sets;
    int degree = 2;
};

enum class PortraitClass { Cb0, Cb, Invalid };
const char* to_string(PortraitClass c);

// True iff b lies in a single connected component of the circle cut by a.
// Rejects non-disjoint inputs (std::invalid_argument).
bool is_unlinked(const std::vector<Angle>& a, const std::vector<Angle>& b);

// Total classification:
//   Cb0 - every set is a pair with equal image, pairwise disjoint + unlinked;
//   Cb  - equal-image sets, disjoint-or-equal, Card(union) = d + N - 1 with
//         N the number of distinct sets, distinct pairs unlinked;
//   Invalid otherwise.
PortraitClass classify_portrait(const CriticalPortrait& p);

struct DegeneratePortrait : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {alpha, alpha + 1/2} with -2*alpha = theta.
PortraitSet tricorn_theta0(const Angle& theta);

// The pair of degree-4 critical portraits over theta: (T0,T1,T2) and
// (T0,T2,T1), where -2*T0 = 4*T1 = 4*T2 = {theta} and {T1,T2} is the unique
// partition of the fourth preimages unlinked with T0. T1 holds the pair with
// the smallest minimum. Throws DegeneratePortrait when the preimages collide
// (theta a multiple of 1/3) and no pairing validates.
std::pair<CriticalPortrait, CriticalPortrait> tricorn_portraits(const Angle& theta);

}  // namespace extray
