#include "ifwar/ifn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ifwar {

namespace {

double clamp_unit(double x, const char* what) {
    if (x < -kAlgebraTol || x > 1.0 + kAlgebraTol) {
        throw std::invalid_argument(std::string(what) + " outside [0,1]: " +
                                    std::to_string(x));
    }
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

}  // namespace

Ifn::Ifn(double mu, double nu)
    : mu_(clamp_unit(mu, "mu")), nu_(clamp_unit(nu, "nu")) {
    const double sum = mu_ + nu_;
    if (sum > 1.0 + kAlgebraTol) {
        throw std::invalid_argument("mu + nu exceeds 1: " + std::to_string(sum));
    }
    if (sum > 1.0) nu_ = 1.0 - mu_;  // shave round-off excess
}

bool approx_equal(Ifn a, Ifn b, double tol) {
    return std::abs(a.mu() - b.mu()) <= tol && std::abs(a.nu() - b.nu()) <= tol;
}

Ifn ifn_add(Ifn a, Ifn b) {
    return {a.mu() + b.mu() - a.mu() * b.mu(), a.nu() * b.nu()};
}

Ifn ifn_mul(Ifn a, Ifn b) {
    return {a.mu() * b.mu(), a.nu() + b.nu() - a.nu() * b.nu()};
}

Ifn ifn_scale(double lambda, Ifn a) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ifn_scale requires lambda > 0");
    }
    return {1.0 - std::pow(1.0 - a.mu(), lambda), std::pow(a.nu(), lambda)};
}

Ifn ifn_pow(Ifn a, double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ifn_pow requires lambda > 0");
    }
    return {std::pow(a.mu(), lambda), 1.0 - std::pow(1.0 - a.nu(), lambda)};
}

Ifn ifwa(std::span<const Ifn> values, std::span<const double> weights) {
    if (values.size() != weights.size()) {
        throw std::invalid_argument("ifwa: values/weights length mismatch");
    }
    if (values.empty()) {
        throw std::invalid_argument("ifwa: empty input");
    }
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("ifwa: negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("ifwa: weights must sum to 1, got " +
                                    std::to_string(wsum));
    }
    double prod_mu = 1.0;  // prod (1 - mu_j)^w_j
    double prod_nu = 1.0;  // prod nu_j^w_j
    for (std::size_t j = 0; j < values.size(); ++j) {
        // std::pow(0,0) == 1, which keeps one-hot selection exact.
        prod_mu *= std::pow(1.0 - values[j].mu(), weights[j]);
        prod_nu *= std::pow(values[j].nu(), weights[j]);
    }
    return {1.0 - prod_mu, prod_nu};
}

}  // namespace ifwar
