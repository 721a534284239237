#include "mci/cost.hpp"

#include <cmath>
#include <cstdio>

namespace mci {

std::string Cost::to_string() const {
    if (inf_) return "inf";
    if (v_ == std::floor(v_) && std::abs(v_) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v_);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v_);
    return buf;
}

}  // namespace mci
