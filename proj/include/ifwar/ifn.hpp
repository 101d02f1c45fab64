#pragma once

#include <span>
#include <vector>

namespace ifwar {

/// Absolute tolerance for the fuzzy algebra (double round-off only).
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for weight vectors that must sum to 1.
inline constexpr double kWeightSumTol = 1e-9;

/// Intuitionistic fuzzy number: a membership/non-membership pair (mu, nu)
/// with mu, nu in [0,1] and mu + nu <= 1. The hesitation pi() = 1 - mu - nu
/// is always derived, never stored.
///
/// The constructor clamps inputs that violate the constraints by at most
/// kAlgebraTol (conversions produce boundary values exactly) and rejects
/// anything further out.
class Ifn {
public:
    Ifn() = default;
    Ifn(double mu, double nu);

    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double pi() const { return 1.0 - mu_ - nu_; }

    friend bool operator==(const Ifn&, const Ifn&) = default;

private:
    double mu_ = 0.0;
    double nu_ = 0.0;
};

/// True when both components differ by at most tol.
bool approx_equal(Ifn a, Ifn b, double tol = kAlgebraTol);

// Atanassov algebra. All four operations are closed on valid IFNs.
Ifn ifn_add(Ifn a, Ifn b);                 // (mu_a+mu_b-mu_a*mu_b, nu_a*nu_b)
Ifn ifn_mul(Ifn a, Ifn b);                 // (mu_a*mu_b, nu_a+nu_b-nu_a*nu_b)
Ifn ifn_scale(double lambda, Ifn a);       // (1-(1-mu)^l, nu^l), lambda > 0
Ifn ifn_pow(Ifn a, double lambda);         // (mu^l, 1-(1-nu)^l), lambda > 0

/// Intuitionistic fuzzy weighted average:
///   <1 - prod (1-mu_j)^w_j, prod nu_j^w_j>
/// Weights must be nonnegative and sum to 1 within kWeightSumTol.
/// 0^0 is taken as 1 so that one-hot weights select exactly.
Ifn ifwa(std::span<const Ifn> values, std::span<const double> weights);

}  // namespace ifwar
