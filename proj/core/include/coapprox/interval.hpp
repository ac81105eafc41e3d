#pragma once

#include "coapprox/errors.hpp"
#include "coapprox/numeric.hpp"

#include <optional>
#include <utility>

namespace coapprox {

/// Closed interval [lo, hi]. Endpoints are doubles, optionally backed by
/// exact rationals when they are exactly known (eigenvalues of 1x1 / 2x2 /
/// diagonal symmetric parts, LP optima in rational mode).
class Interval {
public:
    Interval() = default;

    static Interval from_double(double lo, double hi) {
        if (!(lo <= hi)) throw Error("interval lo > hi");
        Interval iv;
        iv.lo_ = lo;
        iv.hi_ = hi;
        return iv;
    }

    static Interval from_rational(Rational lo, Rational hi) {
        if (lo > hi) throw Error("interval lo > hi");
        Interval iv;
        iv.lo_ = to_double(lo);
        iv.hi_ = to_double(hi);
        iv.rlo_ = std::move(lo);
        iv.rhi_ = std::move(hi);
        return iv;
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }

    bool exact() const { return rlo_.has_value() && rhi_.has_value(); }
    const Rational& exact_lo() const { return *rlo_; }
    const Rational& exact_hi() const { return *rhi_; }

    /// Exact containment when exact, else containment in [lo-tol, hi+tol].
    bool contains_zero(double tol) const {
        if (exact()) return *rlo_ <= 0 && 0 <= *rhi_;
        return lo_ - tol <= 0 && 0 <= hi_ + tol;
    }

    /// Distance from zero to the interval (0 when inside, ignoring tol).
    double zero_violation() const {
        if (lo_ > 0) return lo_;
        if (hi_ < 0) return -hi_;
        return 0;
    }

    /// [-hi, -lo]; keeps exactness.
    Interval negated() const {
        Interval iv;
        iv.lo_ = -hi_;
        iv.hi_ = -lo_;
        if (exact()) {
            iv.rlo_ = -*rhi_;
            iv.rhi_ = -*rlo_;
        }
        return iv;
    }

private:
    double lo_ = 0, hi_ = 0;
    std::optional<Rational> rlo_, rhi_;
};

}  // namespace coapprox
