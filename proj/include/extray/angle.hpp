#pragma once

#include <cstdint>
#include <string>

#include "extray/bigint.hpp"

namespace extray {

// Exact point of R/Z: num/den in lowest terms with 0 <= num < den.
// The cyclic order is the order inherited from [0,1).
class Angle {
public:
    Angle() : num_(0), den_(1) {}
    Angle(BigInt num, BigInt den);
    Angle(std::int64_t num, std::int64_t den) : Angle(BigInt(num), BigInt(den)) {}

    static Angle parse(const std::string& s);  // "p/q" or "p"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    // m*theta mod 1; total for every integer m (m = -2 drives the tricorn).
    Angle times(std::int64_t m) const;
    // m^e * theta mod 1, computed by modular exponentiation on the numerator.
    Angle times_pow(std::int64_t m, unsigned e) const;
    Angle plus(const Angle& o) const;
    Angle negated() const;  // -theta mod 1

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const;
    bool operator<=(const Angle& o) const { return !(o < *this); }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const;  // "p/q" in lowest terms ("0/1" for zero)

private:
    BigInt num_, den_;
};

// Least (preperiod, period) of theta under theta -> m*theta: preperiod is the
// least l with m^l*theta periodic, period the least p >= 1 with
// m^(l+p)*theta = m^l*theta.
struct OrbitSignature {
    std::int64_t preperiod = 0;
    std::int64_t period = 1;
    std::int64_t multiplier_base = 2;

    bool operator==(const OrbitSignature& o) const {
        return preperiod == o.preperiod && period == o.period &&
               multiplier_base == o.multiplier_base;
    }
};

// requires |m| >= 2; terminates in at most den(theta) steps
OrbitSignature orbit_signature(const Angle& theta, std::int64_t m);

}  // namespace extray
