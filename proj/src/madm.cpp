#include "ifwar/madm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ifwar {

namespace {

double xlnx(double x) { return x <= 0.0 ? 0.0 : x * std::log(x); }

double clamped_similarity(Ifn a, Ifn b, AssessDiagnostics& diag) {
    double s = ifn_similarity(a, b);
    if (s < 0.0 || s > 1.0) {
        ++diag.similarity_clamps;
        s = std::clamp(s, 0.0, 1.0);
    }
    return s;
}

}  // namespace

std::vector<Ifn> DecisionMatrix::column(std::size_t j) const {
    std::vector<Ifn> col;
    col.reserve(entries.size());
    for (const auto& row : entries) col.push_back(row.at(j));
    return col;
}

void DecisionMatrix::validate() const {
    if (entries.empty() || entries.front().empty()) {
        throw std::invalid_argument("DecisionMatrix: need at least 1x1 entries");
    }
    const std::size_t n = entries.front().size();
    for (const auto& row : entries) {
        if (row.size() != n) {
            throw std::invalid_argument("DecisionMatrix: ragged rows");
        }
    }
    if (!attribute_names.empty() && attribute_names.size() != n) {
        throw std::invalid_argument("DecisionMatrix: attribute name count mismatch");
    }
}

double entropy(std::span<const Ifn> column) {
    if (column.empty()) throw std::invalid_argument("entropy: empty column");
    const double ln2 = std::log(2.0);
    double sum = 0.0;
    for (const Ifn& e : column) {
        const double mu = e.mu();
        const double nu = e.nu();
        sum += xlnx(mu) + xlnx(nu) - xlnx(mu + nu) - (1.0 - mu - nu) * ln2;
    }
    return -sum / (static_cast<double>(column.size()) * ln2);
}

std::vector<double> entropy_weights(const DecisionMatrix& matrix,
                                    EntropyReading reading,
                                    AssessDiagnostics* diag) {
    matrix.validate();
    const std::size_t m = matrix.target_count();
    const std::size_t n = matrix.attribute_count();

    std::vector<double> h(n);
    for (std::size_t j = 0; j < n; ++j) {
        h[j] = entropy(matrix.column(j));
        if (reading == EntropyReading::AttributeCount) {
            // Undo the per-term normalization: prefactor 1/(n ln 2) while
            // summing over the m targets.
            h[j] *= static_cast<double>(m) / static_cast<double>(n);
        }
    }

    const double denom = static_cast<double>(n) - std::accumulate(h.begin(), h.end(), 0.0);
    std::vector<double> w(n);
    if (std::abs(denom) < 1e-12) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
        return w;
    }
    for (std::size_t j = 0; j < n; ++j) w[j] = (1.0 - h[j]) / denom;

    double negative = 0.0;
    int clamps = 0;
    for (double& x : w) {
        if (x < 0.0) {
            negative += x;
            x = 0.0;
            ++clamps;
        }
    }
    if (clamps > 0) {
        if (diag) diag->weight_clamps += clamps;
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        if (total <= 0.0) {
            std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
        } else {
            for (double& x : w) x /= total;
        }
    }
    return w;
}

std::pair<std::vector<Ifn>, std::vector<Ifn>> ideal_solutions(const DecisionMatrix& matrix) {
    matrix.validate();
    const std::size_t n = matrix.attribute_count();
    std::vector<Ifn> best;
    std::vector<Ifn> worst;
    best.reserve(n);
    worst.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        double mu_max = 0.0, mu_min = 1.0, nu_max = 0.0, nu_min = 1.0;
        for (const auto& row : matrix.entries) {
            const Ifn& e = row[j];
            mu_max = std::max(mu_max, e.mu());
            mu_min = std::min(mu_min, e.mu());
            nu_max = std::max(nu_max, e.nu());
            nu_min = std::min(nu_min, e.nu());
        }
        best.emplace_back(mu_max, nu_min);
        worst.emplace_back(mu_min, nu_max);
    }
    return {std::move(best), std::move(worst)};
}

double ifn_similarity(Ifn a, Ifn b) {
    const double dmu = a.mu() - b.mu();
    const double dnu = a.nu() - b.nu();
    const double pbar = 0.5 * (a.pi() + b.pi());
    return 1.0 - std::abs(2.0 * dmu - dnu) / 3.0 * (1.0 - pbar) -
           std::abs(2.0 * dnu - dmu) / 3.0 * pbar;
}

ThreatAssessment assess(const DecisionMatrix& matrix, EntropyReading reading) {
    matrix.validate();
    const std::size_t m = matrix.target_count();
    const std::size_t n = matrix.attribute_count();

    ThreatAssessment out;
    out.weights = entropy_weights(matrix, reading, &out.diagnostics);
    auto [best, worst] = ideal_solutions(matrix);

    out.s_plus.resize(m);
    out.s_minus.resize(m);
    out.closeness.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double sp = 0.0, sm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            sp += out.weights[k] * clamped_similarity(best[k], matrix.entries[i][k], out.diagnostics);
            sm += out.weights[k] * clamped_similarity(worst[k], matrix.entries[i][k], out.diagnostics);
        }
        if (sp + sm == 0.0) {
            throw std::runtime_error("assess: degenerate target " + std::to_string(i) +
                                     " has S+ + S- == 0");
        }
        out.s_plus[i] = sp;
        out.s_minus[i] = sm;
        out.closeness[i] = sp / (sp + sm);
    }

    out.ranking.resize(m);
    std::iota(out.ranking.begin(), out.ranking.end(), std::size_t{0});
    std::stable_sort(out.ranking.begin(), out.ranking.end(),
                     [&](std::size_t a, std::size_t b) {
                         return out.closeness[a] > out.closeness[b];
                     });
    return out;
}

}  // namespace ifwar
