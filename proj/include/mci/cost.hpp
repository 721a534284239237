#pragma once

#include <cassert>
#include <string>

namespace mci {

// Intervention cost with an explicit infinite sentinel for non-intervenable
// vertices. Addition saturates at infinity and comparison is total, so
// argmin/argmax over costs is deterministic. Not an IEEE special value.
class Cost {
public:
    constexpr Cost() = default;  // zero

    static constexpr Cost finite(double v) {
        assert(v >= 0.0);
        return Cost(v, false);
    }
    static constexpr Cost infinity() { return Cost(0.0, true); }
    static constexpr Cost zero() { return Cost(); }

    constexpr bool is_infinite() const { return inf_; }
    constexpr bool is_zero() const { return !inf_ && v_ == 0.0; }

    // Finite value; must not be called on the infinite sentinel.
    constexpr double value() const {
        assert(!inf_);
        return v_;
    }

    friend constexpr Cost operator+(Cost a, Cost b) {
        if (a.inf_ || b.inf_) return infinity();
        return finite(a.v_ + b.v_);
    }
    Cost& operator+=(Cost o) {
        *this = *this + o;
        return *this;
    }

    friend constexpr bool operator==(Cost a, Cost b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend constexpr bool operator!=(Cost a, Cost b) { return !(a == b); }
    friend constexpr bool operator<(Cost a, Cost b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator>(Cost a, Cost b) { return b < a; }
    friend constexpr bool operator<=(Cost a, Cost b) { return !(b < a); }
    friend constexpr bool operator>=(Cost a, Cost b) { return !(a < b); }

    // "inf", or the numeric value ("3" rather than "3.000000" when integral).
    std::string to_string() const;

private:
    constexpr Cost(double v, bool inf) : v_(v), inf_(inf) {}

    double v_ = 0.0;
    bool inf_ = false;
};

}  // namespace mci
