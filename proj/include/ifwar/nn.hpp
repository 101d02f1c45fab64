#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace ifwar {

/// Dense feed-forward net with tanh hidden layers and a linear output.
/// All parameters live in one flat vector laid out [W0, b0, W1, b1, ...]
/// with each W row-major (out x in); gradients use the same layout.
class Mlp {
public:
    Mlp() = default;
    explicit Mlp(std::vector<int> sizes);

    /// Orthogonal-style init: Gaussian rows Gram-Schmidt-orthonormalized
    /// against earlier rows, scaled by `hidden_gain` (output layer:
    /// `out_gain`); biases zero.
    static Mlp init(std::vector<int> sizes, std::mt19937_64& rng,
                    double hidden_gain = 1.0, double out_gain = 0.01);

    const std::vector<int>& sizes() const { return sizes_; }
    int input_dim() const { return sizes_.front(); }
    int output_dim() const { return sizes_.back(); }
    std::size_t param_count() const { return params_.size(); }
    std::vector<double>& params() { return params_; }
    const std::vector<double>& params() const { return params_; }

    struct Cache {
        // acts[0] is the input; acts[l+1] holds layer l's output
        // (post-tanh for hidden layers, raw for the last).
        std::vector<std::vector<double>> acts;
    };

    std::vector<double> forward(std::span<const double> x, Cache* cache = nullptr) const;

    /// Accumulates dL/dparams into `grad` (same flat layout) given
    /// dL/d(output). `grad` must already be sized to param_count().
    void backward(const Cache& cache, std::span<const double> dout,
                  std::vector<double>& grad) const;

private:
    std::vector<int> sizes_;
    std::vector<double> params_;
    std::vector<std::size_t> w_off_, b_off_;
    void build_offsets();
};

/// Adam with the usual defaults; state persists across steps.
struct Adam {
    double lr = 3e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    long t = 0;
    std::vector<double> m, v;

    explicit Adam(double lr_ = 3e-4) : lr(lr_) {}
    void step(std::vector<double>& params, const std::vector<double>& grad);
};

}  // namespace ifwar
