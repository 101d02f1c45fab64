#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ifwar/ifn.hpp"

namespace ifwar {

/// Targets x attributes grid of IFNs. Row i is one target, column j one
/// attribute.
struct DecisionMatrix {
    std::vector<std::vector<Ifn>> entries;
    std::vector<std::string> attribute_names;

    std::size_t target_count() const { return entries.size(); }
    std::size_t attribute_count() const {
        return entries.empty() ? 0 : entries.front().size();
    }
    std::vector<Ifn> column(std::size_t j) const;
    /// Throws unless the grid is rectangular, nonempty, and the attribute
    /// name list (when present) matches the column count.
    void validate() const;
};

/// How the entropy prefactor is normalized when deriving weights.
///
/// AttributeCount divides by the attribute count n exactly as the source
/// formula prints it, even though the sum runs over the m targets; this is
/// what reproduces the worked tables bit-for-bit, at the price of H values
/// that can exceed 1 (the weight formula's signs then flip, so fuzzier
/// columns can end up with LARGER weight). TargetCount divides by m, which
/// keeps H in [0,1] and preserves the "fuzzier column, smaller weight"
/// reading.
enum class EntropyReading { AttributeCount, TargetCount };

struct AssessDiagnostics {
    int similarity_clamps = 0;  // similarity values clamped into [0,1]
    int weight_clamps = 0;      // negative weights clamped to 0
};

struct ThreatAssessment {
    std::vector<double> weights;    // one per attribute, >= 0, sums to 1
    std::vector<double> s_plus;     // weighted similarity to the ideal
    std::vector<double> s_minus;    // weighted similarity to the anti-ideal
    std::vector<double> closeness;  // s+ / (s+ + s-), one per target
    std::vector<std::size_t> ranking;  // target indices, descending closeness
    AssessDiagnostics diagnostics;
};

/// Intuitionistic fuzzy entropy of one attribute column, normalized by the
/// number of summed terms so that H lies in [0,1]:
///   H = -(1/(m ln 2)) * sum_i [mu ln mu + nu ln nu
///                              - (mu+nu) ln(mu+nu) - (1-mu-nu) ln 2]
/// with every 0*ln 0 term taken as 0. A crisp column of (1,0) has H = 0,
/// a fully hesitant column of (0,0) has H = 1.
double entropy(std::span<const Ifn> column);

/// Entropy weights w_j = (1 - H_j) / (n - sum H_j). A degenerate
/// denominator falls back to uniform weights; negative weights (possible
/// under EntropyReading::AttributeCount for mixed-crispness matrices) are
/// clamped to zero and the vector renormalized, with clamps counted.
std::vector<double> entropy_weights(const DecisionMatrix& matrix,
                                    EntropyReading reading = EntropyReading::AttributeCount,
                                    AssessDiagnostics* diag = nullptr);

/// Component-wise ideal A+ (max mu, min nu per attribute) and anti-ideal
/// A- (min mu, max nu). Neither needs to coincide with an actual row.
std::pair<std::vector<Ifn>, std::vector<Ifn>> ideal_solutions(const DecisionMatrix& matrix);

/// Similarity measure on IFN pairs, symmetric, 1 iff the arguments are
/// equal, and within [0,1] over the whole valid region:
///   s = 1 - |2*dmu - dnu|/3 * (1 - pbar) - |2*dnu - dmu|/3 * pbar
/// where pbar is the mean hesitation.
double ifn_similarity(Ifn a, Ifn b);

/// Full entropy-weight TOPSIS pass: entropy weights, ideal/anti-ideal,
/// weighted similarities S+/S-, closeness p = S+/(S+ + S-), and the ranking
/// (descending closeness, ties broken by lower target index). S+ carries
/// the similarity-to-ideal, so closeness grows toward the ideal solution.
ThreatAssessment assess(const DecisionMatrix& matrix,
                        EntropyReading reading = EntropyReading::AttributeCount);

}  // namespace ifwar
