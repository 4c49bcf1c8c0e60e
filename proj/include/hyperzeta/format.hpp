#pragma once

#include <string>

namespace hyperzeta {

// Round v to `digits` significant decimal digits (round-half-even, as
// snprintf does) and print it in fixed notation when the exponent allows,
// scientific otherwise. Trailing zeros are kept: the digit count is part of
// the output contract ("2.112083781", "1.047657410", "2.085491e-05").
std::string format_significant(double v, int digits);

} // namespace hyperzeta
