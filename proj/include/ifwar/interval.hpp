#pragma once

namespace ifwar {

/// Closed real interval [lo, hi]. A degenerate interval (lo == hi) behaves
/// as a plain real number under every operation.
class IntervalNumber {
public:
    IntervalNumber() = default;
    IntervalNumber(double lo, double hi);

    static IntervalNumber point(double v) { return {v, v}; }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }

    friend bool operator==(const IntervalNumber&, const IntervalNumber&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

IntervalNumber interval_add(IntervalNumber a, IntervalNumber b);
// [a.lo - b.hi, a.hi - b.lo]; note a - a is generally not [0,0].
IntervalNumber interval_sub(IntervalNumber a, IntervalNumber b);
// lambda >= 0; lambda == 0 collapses to [0,0].
IntervalNumber interval_scale(double lambda, IntervalNumber a);
// min/max over the four bound products.
IntervalNumber interval_mul(IntervalNumber a, IntervalNumber b);
// a * [1/b.hi, 1/b.lo]; rejects any b whose span contains zero.
IntervalNumber interval_div(IntervalNumber a, IntervalNumber b);

}  // namespace ifwar
