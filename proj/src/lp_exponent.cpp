#include "tap/lp_exponent.hpp"

#include <algorithm>
#include <cctype>

namespace tap {

LpExponent parse_lp(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "inf" || t == "infinity" || t == "oo")
        return LpExponent::infinity();
    std::size_t pos = 0;
    double p = 0.0;
    try {
        p = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_lp: cannot parse '" + s + "'");
    }
    if (pos != t.size())
        throw std::invalid_argument("parse_lp: trailing characters in '" + s + "'");
    return LpExponent(p);
}

}  // namespace tap
