#include "rlp/interval.hpp"

namespace rlp {

std::string half_str(int64_t v2) {
    if ((v2 & 1) == 0) return std::to_string(v2 / 2);
    return std::to_string(v2) + "/2";
}

std::string Interval::str() const {
    if (empty_) return "[]";
    return "[" + half_str(lo2_) + "," + half_str(hi2_) + "]";
}

}  // namespace rlp
