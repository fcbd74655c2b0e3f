#pragma once

#include <cstdint>
#include <string>

#include "rlp/errors.hpp"

namespace rlp {

// Prints a doubled-unit value: 3 -> "3/2", 4 -> "2".
std::string half_str(int64_t v2);

// Interval of spirality values stored in doubled units: the set it denotes is
// {lo2/2, lo2/2 + 1, ..., hi2/2}. Endpoints always share parity; odd endpoints
// mean the interval holds semi-integers, even endpoints integers. Empty is a
// first-class value so callers can tell "reject here" from arithmetic bugs.
class Interval {
public:
    Interval() = default;

    static Interval empty() { return Interval(); }

    static Interval halves(int64_t lo2, int64_t hi2) {
        require(lo2 <= hi2, "interval endpoints out of order");
        require(((lo2 ^ hi2) & 1) == 0, "interval endpoints disagree on parity");
        Interval r;
        r.empty_ = false;
        r.lo2_ = lo2;
        r.hi2_ = hi2;
        return r;
    }

    static Interval ints(int64_t lo, int64_t hi) { return halves(2 * lo, 2 * hi); }

    static Interval single2(int64_t v2) { return halves(v2, v2); }

    bool is_empty() const { return empty_; }

    int64_t lo2() const {
        require(!empty_, "lo2() on empty interval");
        return lo2_;
    }

    int64_t hi2() const {
        require(!empty_, "hi2() on empty interval");
        return hi2_;
    }

    bool semi_integer() const { return !empty_ && (lo2_ & 1) != 0; }

    bool contains2(int64_t v2) const {
        return !empty_ && v2 >= lo2_ && v2 <= hi2_ && ((v2 ^ lo2_) & 1) == 0;
    }

    // Number of values in the set.
    int64_t count() const { return empty_ ? 0 : (hi2_ - lo2_) / 2 + 1; }

    // Intersection assuming both operands share parity (callers guarantee it;
    // the root condition intersects an integer interval with integer Delta).
    Interval intersect(const Interval& o) const {
        if (empty_ || o.empty_) return empty();
        require(((lo2_ ^ o.lo2_) & 1) == 0, "intersecting intervals of mixed parity");
        int64_t lo = lo2_ > o.lo2_ ? lo2_ : o.lo2_;
        int64_t hi = hi2_ < o.hi2_ ? hi2_ : o.hi2_;
        if (lo > hi) return empty();
        return halves(lo, hi);
    }

    Interval shifted2(int64_t d2) const {
        if (empty_) return empty();
        return halves(lo2_ + d2, hi2_ + d2);
    }

    bool operator==(const Interval& o) const {
        if (empty_ != o.empty_) return false;
        if (empty_) return true;
        return lo2_ == o.lo2_ && hi2_ == o.hi2_;
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    // "[m,M]" with halves rendered like "-3/2"; "[]" when empty.
    std::string str() const;

private:
    bool empty_ = true;
    int64_t lo2_ = 0;
    int64_t hi2_ = 0;
};

}  // namespace rlp
