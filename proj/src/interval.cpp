#include "ifwar/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ifwar {

IntervalNumber::IntervalNumber(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("interval bounds out of order: [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

IntervalNumber interval_add(IntervalNumber a, IntervalNumber b) {
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

IntervalNumber interval_sub(IntervalNumber a, IntervalNumber b) {
    return {a.lo() - b.hi(), a.hi() - b.lo()};
}

IntervalNumber interval_scale(double lambda, IntervalNumber a) {
    if (lambda < 0.0) {
        throw std::invalid_argument("interval_scale requires lambda >= 0");
    }
    return {lambda * a.lo(), lambda * a.hi()};
}

IntervalNumber interval_mul(IntervalNumber a, IntervalNumber b) {
    const double p1 = a.lo() * b.lo();
    const double p2 = a.lo() * b.hi();
    const double p3 = a.hi() * b.lo();
    const double p4 = a.hi() * b.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

IntervalNumber interval_div(IntervalNumber a, IntervalNumber b) {
    if (b.contains(0.0)) {
        throw std::invalid_argument("interval_div: divisor contains zero");
    }
    return interval_mul(a, {1.0 / b.hi(), 1.0 / b.lo()});
}

}  // namespace ifwar
