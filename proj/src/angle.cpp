#include "extray/angle.hpp"

#include <map>
#include <stdexcept>

namespace extray {

Angle::Angle(BigInt num, BigInt den) {
    if (den.sign() == 0) throw std::domain_error("Angle: zero denominator");
    if (den.sign() < 0) {
        den = -den;
        num = -num;
    }
    num = BigInt::mod_floor(num, den);
    BigInt g = BigInt::gcd(num, den);
    if (g != BigInt(1)) {
        num = num / g;
        den = den / g;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Angle Angle::parse(const std::string& s) {
    auto slash = s.find('/');
    auto to_big = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("Angle: empty number");
        size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Angle: bad number");
        BigInt v(0), ten(10);
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("Angle: bad digit");
            v = v * ten + BigInt(t[i] - '0');
        }
        return t[0] == '-' ? -v : v;
    };
    if (slash == std::string::npos) return Angle(to_big(s), BigInt(1));
    return Angle(to_big(s.substr(0, slash)), to_big(s.substr(slash + 1)));
}

Angle Angle::times(std::int64_t m) const { return Angle(num_ * BigInt(m), den_); }

Angle Angle::times_pow(std::int64_t m, unsigned e) const {
    // (m^e mod den) * num mod den, keeping everything reduced mod den
    BigInt base = BigInt::mod_floor(BigInt(m), den_);
    BigInt acc(1);
    while (e) {
        if (e & 1u) acc = BigInt::mod_floor(acc * base, den_);
        base = BigInt::mod_floor(base * base, den_);
        e >>= 1;
    }
    return Angle(acc * num_, den_);
}

Angle Angle::plus(const Angle& o) const {
    return Angle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Angle Angle::negated() const { return Angle(-num_, den_); }

bool Angle::operator<(const Angle& o) const { return num_ * o.den_ < o.num_ * den_; }

std::string Angle::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

OrbitSignature orbit_signature(const Angle& theta, std::int64_t m) {
    if (m > -2 && m < 2) throw std::invalid_argument("orbit_signature: |m| >= 2 required");
    // iterate p -> m*p mod q on the numerator; the denominator never grows
    const BigInt& q = theta.den();
    BigInt mm = BigInt::mod_floor(BigInt(m), q);
    std::map<std::string, std::int64_t> seen;
    BigInt p = theta.num();
    std::int64_t step = 0;
    for (;;) {
        std::string key = p.to_string();
        auto it = seen.find(key);
        if (it != seen.end())
            return OrbitSignature{it->second, step - it->second, m};
        seen.emplace(std::move(key), step);
        p = BigInt::mod_floor(p * mm, q);
        ++step;
    }
}

}  // namespace extray
