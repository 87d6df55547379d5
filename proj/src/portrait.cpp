#include "extray/portrait.hpp"

#include <algorithm>
#include <set>

namespace extray {

const char* to_string(PortraitClass c) {
    switch (c) {
        case PortraitClass::Cb0: return "Cb0";
        case PortraitClass::Cb: return "Cb";
        default: return "invalid";
    }
}

bool PortraitSet::has_common_image() const {
    if (angles.empty()) return false;
    Angle image = angles.front().times(degree_base);
    for (size_t i = 1; i < angles.size(); ++i)
        if (angles[i].times(degree_base) != image) return false;
    return true;
}

bool is_unlinked(const std::vector<Angle>& a, const std::vector<Angle>& b) {
    std::vector<Angle> cuts = a;
    std::sort(cuts.begin(), cuts.end());
    for (const Angle& x : b)
        if (std::binary_search(cuts.begin(), cuts.end(), x))
            throw std::invalid_argument("is_unlinked: sets must be disjoint");
    if (cuts.size() <= 1 || b.empty()) return true;
    // gap index of the complementary arc containing x; the arcs before a_0 and
    // after a_{K-1} wrap into the same component
    auto gap_of = [&cuts](const Angle& x) -> size_t {
        size_t cnt = std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
        return (cnt == 0 || cnt == cuts.size()) ? cuts.size() - 1 : cnt - 1;
    };
    size_t g = gap_of(b.front());
    for (const Angle& x : b)
        if (gap_of(x) != g) return false;
    return true;
}

namespace {

bool sets_equal(const PortraitSet& a, const PortraitSet& b) { return a.angles == b.angles; }

bool sets_disjoint(const PortraitSet& a, const PortraitSet& b) {
    for (const Angle& x : a.angles)
        if (std::binary_search(b.angles.begin(), b.angles.end(), x)) return false;
    return true;
}

bool satisfies_cb(const CriticalPortrait& p) {
    const int d = p.degree;
    if (d < 2 || static_cast<int>(p.sets.size()) != d - 1) return false;
    for (const PortraitSet& s : p.sets) {
        if (s.angles.empty() || s.degree_base != d) return false;
        if (!std::is_sorted(s.angles.begin(), s.angles.end())) return false;
        if (std::adjacent_find(s.angles.begin(), s.angles.end()) != s.angles.end()) return false;
        if (!s.has_common_image()) return false;
    }
    std::vector<const PortraitSet*> distinct;
    for (const PortraitSet& s : p.sets) {
        bool seen = false;
        for (const PortraitSet* t : distinct)
            if (sets_equal(*t, s)) seen = true;
        if (!seen) distinct.push_back(&s);
    }
    for (size_t i = 0; i < p.sets.size(); ++i)
        for (size_t j = i + 1; j < p.sets.size(); ++j)
            if (!sets_equal(p.sets[i], p.sets[j]) && !sets_disjoint(p.sets[i], p.sets[j]))
                return false;
    std::set<std::string> all;
    for (const PortraitSet* s : distinct)
        for (const Angle& x : s->angles) all.insert(x.to_string());
    if (static_cast<int>(all.size()) != d + static_cast<int>(distinct.size()) - 1) return false;
    for (size_t i = 0; i < distinct.size(); ++i)
        for (size_t j = i + 1; j < distinct.size(); ++j)
            if (!is_unlinked(distinct[i]->angles, distinct[j]->angles)) return false;
    return true;
}

bool satisfies_cb0(const CriticalPortrait& p) {
    const int d = p.degree;
    if (d < 2 || static_cast<int>(p.sets.size()) != d - 1) return false;
    for (const PortraitSet& s : p.sets) {
        if (s.angles.size() != 2 || s.degree_base != d) return false;
        if (!(s.angles[0] < s.angles[1])) return false;
        if (!s.has_common_image()) return false;
    }
    for (size_t i = 0; i < p.sets.size(); ++i)
        for (size_t j = i + 1; j < p.sets.size(); ++j) {
            if (!sets_disjoint(p.sets[i], p.sets[j])) return false;
            if (!is_unlinked(p.sets[i].angles, p.sets[j].angles)) return false;
        }
    return true;
}

}  // namespace

PortraitClass classify_portrait(const CriticalPortrait& p) {
    if (satisfies_cb0(p)) return PortraitClass::Cb0;
    if (satisfies_cb(p)) return PortraitClass::Cb;
    return PortraitClass::Invalid;
}

PortraitSet tricorn_theta0(const Angle& theta) {
    // alpha = -theta/2 mod 1, and alpha + 1/2 is the other solution of
    // -2*alpha = theta
    Angle alpha(-theta.num(), theta.den() * BigInt(2));
    Angle alpha2 = alpha.plus(Angle(1, 2));
    PortraitSet s;
    s.degree_base = 4;
    s.angles = {alpha, alpha2};
    std::sort(s.angles.begin(), s.angles.end());
    return s;
}

std::pair<CriticalPortrait, CriticalPortrait> tricorn_portraits(const Angle& theta) {
    PortraitSet t0 = tricorn_theta0(theta);
    // fourth preimages: 4*beta = theta
    std::vector<Angle> betas;
    for (int j = 0; j < 4; ++j)
        betas.push_back(Angle(theta.num() + theta.den() * BigInt(j), theta.den() * BigInt(4)));
    std::sort(betas.begin(), betas.end());

    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<std::pair<PortraitSet, PortraitSet>> valid;
    for (const auto& idx : pairings) {
        PortraitSet a{{betas[idx[0]], betas[idx[1]]}, 4};
        PortraitSet b{{betas[idx[2]], betas[idx[3]]}, 4};
        std::sort(a.angles.begin(), a.angles.end());
        std::sort(b.angles.begin(), b.angles.end());
        CriticalPortrait cand{{t0, a, b}, 4};
        if (classify_portrait(cand) == PortraitClass::Cb0) valid.emplace_back(a, b);
    }
    if (valid.empty())
        throw DegeneratePortrait("tricorn_portraits: no unlinked partition for theta=" +
                                 theta.to_string());
    if (valid.size() > 1)
        throw DegeneratePortrait("tricorn_portraits: partition not unique for theta=" +
                                 theta.to_string());
    PortraitSet t1 = valid[0].first, t2 = valid[0].second;
    if (t2.angles.front() < t1.angles.front()) std::swap(t1, t2);
    CriticalPortrait plus{{t0, t1, t2}, 4};
    CriticalPortrait minus{{t0, t2, t1}, 4};
    return {plus, minus};
}

}  // namespace extray
