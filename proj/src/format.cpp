#include "hyperzeta/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hyperzeta {

std::string format_significant(double v, int digits) {
    if (digits < 1) digits = 1;
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";

    // Let snprintf do the rounding once in scientific form, then read the
    // decimal exponent off the result; this keeps the fixed/scientific
    // decision correct even when rounding crosses a power of ten
    // (0.99999999995 -> 1.000000000).
    char sci[64];
    std::snprintf(sci, sizeof(sci), "%.*e", digits - 1, v);
    const char* epos = std::strchr(sci, 'e');
    int exp10 = std::atoi(epos + 1);

    if (exp10 >= -4 && exp10 < digits) {
        char fixed[64];
        std::snprintf(fixed, sizeof(fixed), "%.*f", digits - 1 - exp10, v);
        return fixed;
    }
    return sci;
}

} // namespace hyperzeta
