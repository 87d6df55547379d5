#include "extray/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extray {

namespace {

constexpr std::int64_t kMaxEnumeration = std::int64_t(1) << 22;

void require_exponents(std::int64_t m, int a, int b) {
    if (m > -2 && m < 2) throw std::domain_error("equal_iterates: |m| >= 2 required");
    if (!(a > b && b >= 0)) throw std::domain_error("equal_iterates: a > b >= 0 required");
}

void require_misiurewicz_nk(int n, int k) {
    if (k <= 1)
        throw std::domain_error(
            "k must be > 1: the set with k = 1 is empty (the critical point is "
            "the only preimage of the critical value)");
    if (n <= k) throw std::domain_error("n > k required");
}

}  // namespace

BigInt equal_iterates_count(std::int64_t m, int a, int b) {
    require_exponents(m, a, b);
    return (BigInt::pow(m, a) - BigInt::pow(m, b)).abs();
}

std::vector<Angle> equal_iterates(std::int64_t m, int a, int b) {
    BigInt count = equal_iterates_count(m, a, b);
    if (!count.fits_int64() || count.to_int64() > kMaxEnumeration)
        throw std::length_error("equal_iterates: kernel too large to enumerate");
    std::int64_t q = count.to_int64();
    std::vector<Angle> out;
    out.reserve(q);
    for (std::int64_t j = 0; j < q; ++j) out.emplace_back(j, q);
    return out;  // ascending by construction
}

std::vector<Angle> sorted_difference(const std::vector<Angle>& a, const std::vector<Angle>& b) {
    std::vector<Angle> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Angle> misiurewicz_angles_quadratic(int n, int k) {
    require_misiurewicz_nk(n, k);
    return sorted_difference(equal_iterates(2, n - 1, k - 1), equal_iterates(2, n - k, 0));
}

std::vector<Angle> parabolic_angles_quadratic(int n) {
    if (n < 1) throw std::domain_error("parabolic_angles_quadratic: n >= 1 required");
    return equal_iterates(2, n, 0);
}

std::vector<Angle> misiurewicz_angles_tricorn(int n, int k) {
    require_misiurewicz_nk(n, k);
    return sorted_difference(equal_iterates(-2, n - 1, k - 1), equal_iterates(-2, n - k, 0));
}

std::vector<Angle> tricorn_X_angles(int n, int k) {
    require_misiurewicz_nk(n, k);
    // the (n-k+1, 1) kernel is exactly {theta : (-2)^(n-k) theta = theta}
    return sorted_difference(equal_iterates(-2, n - 1, k - 1),
                             equal_iterates(-2, (n - k + 1) - 1, 1 - 1));
}

std::vector<std::pair<Angle, Angle>> pair_set_d4(int m, int n) {
    if (!(m > n && n >= 1)) throw std::domain_error("pair_set_d4: m > n >= 1 required");
    if (m > 8) throw std::length_error("pair_set_d4: m <= 8 required");
    std::int64_t q = 1;
    for (int i = 0; i < m; ++i) q *= 4;
    std::int64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= 4;
    q -= qn;  // kernel size 4^m - 4^n
    std::vector<std::pair<Angle, Angle>> out;
    for (std::int64_t j = 0; j < q; ++j) {
        Angle alpha(j, q);
        for (int step = 1; step <= 3; ++step) {
            Angle beta = alpha.plus(Angle(step, 4));
            if (alpha < beta) out.emplace_back(alpha, beta);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first < y.first) return true;
        if (y.first < x.first) return false;
        return x.second < y.second;
    });
    return out;
}

double star_discrepancy(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("star_discrepancy: empty input");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        d = std::max(d, (i + 1) / n - xs[i]);
        d = std::max(d, xs[i] - i / n);
    }
    return d;
}

double star_discrepancy(const std::vector<Angle>& angles) {
    std::vector<double> xs;
    xs.reserve(angles.size());
    for (const Angle& a : angles) xs.push_back(a.to_double());
    return star_discrepancy(std::move(xs));
}

}  // namespace extray
