#include "geosep/geom.hpp"

#include <algorithm>

namespace geosep {

std::string to_string(Wide v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Work with negative values so the most negative __int128 is safe.
    Wide t = neg ? v : -v;
    std::string out;
    while (t != 0) {
        const int digit = -static_cast<int>(t % 10);
        out.push_back(static_cast<char>('0' + digit));
        t /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::string ext_to_string(Wide v) {
    if (v <= kWideNegInf) return "-inf";
    if (v >= kWidePosInf) return "inf";
    return to_string(v);
}

std::string ext_to_string(Coord v) {
    if (v == kCoordNegInf) return "-inf";
    if (v == kCoordPosInf) return "inf";
    return std::to_string(v);
}

}  // namespace geosep
