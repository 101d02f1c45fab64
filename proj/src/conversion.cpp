#include "ifwar/conversion.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifwar {

std::vector<Ifn> intervals_to_ifns(std::span<const IntervalNumber> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("intervals_to_ifns: empty column");
    }
    double max_hi = 0.0;
    for (const auto& r : rows) {
        if (r.lo() < 0.0) {
            throw std::invalid_argument("intervals_to_ifns: negative bound");
        }
        max_hi = std::max(max_hi, r.hi());
    }
    std::vector<Ifn> out;
    out.reserve(rows.size());
    if (max_hi == 0.0) {
        out.assign(rows.size(), Ifn(0.0, 0.0));
        return out;
    }
    for (const auto& r : rows) {
        out.emplace_back(r.lo() / max_hi, 1.0 - r.hi() / max_hi);
    }
    return out;
}

std::vector<Ifn> reals_to_ifns(std::span<const double> values, Polarity polarity,
                               const ConversionParams& params) {
    if (values.empty()) {
        throw std::invalid_argument("reals_to_ifns: empty column");
    }
    if (params.beta < 0.0 || params.beta > 1.0) {
        throw std::invalid_argument("reals_to_ifns: beta outside [0,1]");
    }
    if (params.epsilon_guard < 0.0) {
        throw std::invalid_argument("reals_to_ifns: negative epsilon_guard");
    }
    std::vector<double> shifted;
    shifted.reserve(values.size());
    for (double v : values) {
        if (v < 0.0) {
            throw std::invalid_argument("reals_to_ifns: negative value");
        }
        shifted.push_back(v + params.epsilon_guard);
    }
    const auto [mn_it, mx_it] = std::minmax_element(shifted.begin(), shifted.end());
    const double mn = *mn_it;
    const double mx = *mx_it;

    std::vector<Ifn> out;
    out.reserve(shifted.size());
    const double beta = params.beta;
    for (double a : shifted) {
        double ratio;
        if (polarity == Polarity::Benefit) {
            ratio = (mx == 0.0) ? 1.0 : a / mx;
        } else {
            ratio = (a == 0.0) ? 1.0 : mn / a;
        }
        out.emplace_back(beta * ratio, beta * (1.0 - ratio));
    }
    return out;
}

}  // namespace ifwar
