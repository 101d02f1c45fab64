#include "ifwar/nn.hpp"

#include <cmath>
#include <stdexcept>

namespace ifwar {

Mlp::Mlp(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw std::invalid_argument("Mlp needs >= 2 layer sizes");
    for (int s : sizes_) {
        if (s < 1) throw std::invalid_argument("Mlp layer sizes must be >= 1");
    }
    build_offsets();
}

void Mlp::build_offsets() {
    std::size_t off = 0;
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        w_off_.push_back(off);
        off += static_cast<std::size_t>(sizes_[l + 1]) * sizes_[l];
        b_off_.push_back(off);
        off += static_cast<std::size_t>(sizes_[l + 1]);
    }
    params_.assign(off, 0.0);
}

Mlp Mlp::init(std::vector<int> sizes, std::mt19937_64& rng, double hidden_gain,
              double out_gain) {
    Mlp net(std::move(sizes));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t layers = net.sizes_.size() - 1;
    for (std::size_t l = 0; l < layers; ++l) {
        const int in = net.sizes_[l];
        const int out = net.sizes_[l + 1];
        const double gain = (l + 1 == layers) ? out_gain : hidden_gain;
        double* w = net.params_.data() + net.w_off_[l];
        for (int r = 0; r < out; ++r) {
            double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) row[c] = gauss(rng);
            // Orthogonalize against the earlier rows (possible only while
            // the row count has not exhausted the input dimension).
            for (int p = 0; p < r && p < in; ++p) {
                const double* prev = w + static_cast<std::size_t>(p) * in;
                double dot = 0.0;
                for (int c = 0; c < in; ++c) dot += row[c] * prev[c];
                for (int c = 0; c < in; ++c) row[c] -= dot * prev[c];
            }
            double norm = 0.0;
            for (int c = 0; c < in; ++c) norm += row[c] * row[c];
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                row[0] = 1.0;
                norm = 1.0;
            }
            for (int c = 0; c < in; ++c) row[c] /= norm;
        }
        for (int r = 0; r < out; ++r) {
            double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) row[c] *= gain;
        }
    }
    return net;
}

std::vector<double> Mlp::forward(std::span<const double> x, Cache* cache) const {
    if (x.size() != static_cast<std::size_t>(sizes_.front())) {
        throw std::invalid_argument("Mlp::forward: bad input size");
    }
    std::vector<double> a(x.begin(), x.end());
    if (cache) {
        cache->acts.clear();
        cache->acts.push_back(a);
    }
    const std::size_t layers = sizes_.size() - 1;
    for (std::size_t l = 0; l < layers; ++l) {
        const int in = sizes_[l];
        const int out = sizes_[l + 1];
        const double* w = params_.data() + w_off_[l];
        const double* b = params_.data() + b_off_[l];
        std::vector<double> z(out);
        for (int r = 0; r < out; ++r) {
            double acc = b[r];
            const double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) acc += row[c] * a[c];
            z[r] = acc;
        }
        if (l + 1 < layers) {
            for (double& v : z) v = std::tanh(v);
        }
        a = std::move(z);
        if (cache) cache->acts.push_back(a);
    }
    return a;
}

void Mlp::backward(const Cache& cache, std::span<const double> dout,
                   std::vector<double>& grad) const {
    if (grad.size() != params_.size()) {
        throw std::invalid_argument("Mlp::backward: grad buffer size mismatch");
    }
    const std::size_t layers = sizes_.size() - 1;
    if (cache.acts.size() != layers + 1) {
        throw std::invalid_argument("Mlp::backward: stale cache");
    }
    std::vector<double> delta(dout.begin(), dout.end());
    for (std::size_t l = layers; l-- > 0;) {
        const int in = sizes_[l];
        const int out = sizes_[l + 1];
        const std::vector<double>& a_in = cache.acts[l];
        const double* w = params_.data() + w_off_[l];
        double* gw = grad.data() + w_off_[l];
        double* gb = grad.data() + b_off_[l];
        for (int r = 0; r < out; ++r) {
            gb[r] += delta[r];
            double* grow = gw + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) grow[c] += delta[r] * a_in[c];
        }
        if (l == 0) break;
        std::vector<double> prev(in, 0.0);
        for (int r = 0; r < out; ++r) {
            const double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) prev[c] += delta[r] * row[c];
        }
        // a_in is the post-tanh activation of layer l-1.
        for (int c = 0; c < in; ++c) prev[c] *= 1.0 - a_in[c] * a_in[c];
        delta = std::move(prev);
    }
}

void Adam::step(std::vector<double>& params, const std::vector<double>& grad) {
    if (m.empty()) {
        m.assign(params.size(), 0.0);
        v.assign(params.size(), 0.0);
    }
    if (grad.size() != params.size() || m.size() != params.size()) {
        throw std::invalid_argument("Adam::step: size mismatch");
    }
    ++t;
    const double c1 = 1.0 - std::pow(beta1, static_cast<double>(t));
    const double c2 = 1.0 - std::pow(beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * grad[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * grad[i] * grad[i];
        params[i] -= lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps);
    }
}

}  // namespace ifwar
