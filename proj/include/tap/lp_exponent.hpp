#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tap {

/// Exponent of an L_p norm over the normalized torus measure: a real p >= 1,
/// or infinity for the sup norm.
class LpExponent {
public:
    explicit LpExponent(double p) : p_(p) {
        if (std::isnan(p) || p < 1.0)
            throw std::invalid_argument("LpExponent: p must be >= 1");
    }

    static LpExponent one() { return LpExponent(1.0); }
    static LpExponent two() { return LpExponent(2.0); }
    static LpExponent infinity() {
        return LpExponent(std::numeric_limits<double>::infinity());
    }

    bool is_infinity() const { return std::isinf(p_); }
    double value() const { return p_; }

    std::string str() const {
        if (is_infinity()) return "inf";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", p_);
        return buf;
    }

    friend bool operator==(const LpExponent& a, const LpExponent& b) {
        return a.p_ == b.p_ || (a.is_infinity() && b.is_infinity());
    }

private:
    double p_;
};

/// Parses "1", "2", "1.5", "inf" (case-insensitive "inf"/"infinity").
LpExponent parse_lp(const std::string& s);

}  // namespace tap
