#pragma once

#include <span>
#include <vector>

#include "ifwar/ifn.hpp"
#include "ifwar/interval.hpp"

namespace ifwar {

/// Whether larger raw values mean greater threat (Benefit) or smaller ones
/// do (Cost). Drives the choice of real->IFN formula.
enum class Polarity { Benefit, Cost };

struct ConversionParams {
    /// Damping factor applied to both components; every converted column
    /// satisfies mu + nu == beta exactly.
    double beta = 0.2;
    /// Offset added to every value before min/max and ratios are taken.
    /// Keeps the cost ratio finite when a column contains zeros.
    double epsilon_guard = 0.001;
};

/// Column-wise conversion of interval scores to IFNs:
///   mu_i = lo_i / max_hi,  nu_i = 1 - hi_i / max_hi.
/// All bounds must be nonnegative. If every upper bound is zero the whole
/// column maps to (0,0).
std::vector<Ifn> intervals_to_ifns(std::span<const IntervalNumber> rows);

/// Column-wise conversion of nonnegative real scores to IFNs. Values are
/// shifted by epsilon_guard first; then
///   Benefit: mu = beta * a/max,   nu = beta * (1 - a/max)
///   Cost:    mu = beta * min/a,   nu = beta * (1 - min/a)
/// A column whose shifted max (Benefit) or shifted value (Cost) is zero can
/// only arise with epsilon_guard == 0 and an all-zero column; the ratio is
/// then taken as 1, matching the all-values-equal limit (beta, 0).
std::vector<Ifn> reals_to_ifns(std::span<const double> values, Polarity polarity,
                               const ConversionParams& params = {});

}  // namespace ifwar
