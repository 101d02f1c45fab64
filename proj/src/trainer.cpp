#include "ifwar/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ifwar {

Algo algo_from_string(const std::string& s) {
    if (s == "ppo") return Algo::Ppo;
    if (s == "madm-ppo") return Algo::MadmPpo;
    throw std::invalid_argument("unknown algo: " + s + " (want ppo|madm-ppo)");
}

std::string algo_to_string(Algo a) { return a == Algo::Ppo ? "ppo" : "madm-ppo"; }

PolicyParams make_policy(const Scenario& scenario, Side side, int hidden,
                         std::uint64_t seed) {
    PolicyParams p;
    p.obs_dim = Env::observation_dim(scenario, side);
    p.n_slots = static_cast<int>(scenario.side(side).pieces.size());
    p.n_actions = Env::action_count(scenario, side);
    p.hidden = hidden;
    std::mt19937_64 rng(seed);
    p.actor = Mlp::init({p.obs_dim + p.n_slots, hidden, hidden, p.n_actions}, rng,
                        1.0, 0.01);
    p.critic = Mlp::init({p.obs_dim, hidden, hidden, 1}, rng, 1.0, 1.0);
    return p;
}

// ---------------------------------------------------------------------------
// Checkpoints: "IFWARCP1" magic, dims, then both nets as size-prefixed
// int32 layer lists followed by raw little-endian doubles.
// ---------------------------------------------------------------------------

namespace {

void write_i32(std::ostream& out, std::int32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::int32_t read_i32(std::istream& in) {
    std::int32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

void write_net(std::ostream& out, const Mlp& net) {
    write_i32(out, static_cast<std::int32_t>(net.sizes().size()));
    for (int s : net.sizes()) write_i32(out, s);
    const auto& p = net.params();
    out.write(reinterpret_cast<const char*>(p.data()),
              static_cast<std::streamsize>(p.size() * sizeof(double)));
}

Mlp read_net(std::istream& in) {
    const int n = read_i32(in);
    if (n < 2 || n > 64) throw std::runtime_error("checkpoint: bad layer count");
    std::vector<int> sizes(n);
    for (int& s : sizes) s = read_i32(in);
    Mlp net(sizes);
    in.read(reinterpret_cast<char*>(net.params().data()),
            static_cast<std::streamsize>(net.params().size() * sizeof(double)));
    if (!in) throw std::runtime_error("checkpoint: truncated parameter block");
    return net;
}

constexpr char kCheckpointMagic[8] = {'I', 'F', 'W', 'A', 'R', 'C', 'P', '1'};

double masked_entropy(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

/// Masked softmax over logits; illegal entries get probability 0.
std::vector<double> masked_softmax(const std::vector<double>& logits,
                                   const std::vector<std::uint8_t>& mask) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < logits.size(); ++i) {
        if (mask[i]) mx = std::max(mx, logits[i]);
    }
    if (!std::isfinite(mx)) throw std::runtime_error("masked_softmax: no legal action");
    std::vector<double> p(logits.size(), 0.0);
    double z = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        if (mask[i]) {
            p[i] = std::exp(logits[i] - mx);
            z += p[i];
        }
    }
    for (double& v : p) v /= z;
    return p;
}

std::vector<double> slot_input(const std::vector<double>& obs, int slot, int n_slots) {
    std::vector<double> x = obs;
    x.resize(obs.size() + static_cast<std::size_t>(n_slots), 0.0);
    x[obs.size() + static_cast<std::size_t>(slot)] = 1.0;
    return x;
}

}  // namespace

void save_checkpoint(const std::string& path, const PolicyParams& policy) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
    out.write(kCheckpointMagic, sizeof kCheckpointMagic);
    write_i32(out, policy.obs_dim);
    write_i32(out, policy.n_slots);
    write_i32(out, policy.n_actions);
    write_i32(out, policy.hidden);
    write_net(out, policy.actor);
    write_net(out, policy.critic);
}

PolicyParams load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kCheckpointMagic, sizeof magic) != 0) {
        throw std::runtime_error("not a checkpoint file (bad magic): " + path);
    }
    PolicyParams p;
    p.obs_dim = read_i32(in);
    p.n_slots = read_i32(in);
    p.n_actions = read_i32(in);
    p.hidden = read_i32(in);
    p.actor = read_net(in);
    p.critic = read_net(in);
    return p;
}

// ---------------------------------------------------------------------------
// Collector
// ---------------------------------------------------------------------------

Collector::Collector(Scenario scenario, const TrainConfig& cfg, Algo algo, Side side)
    : env_(std::move(scenario)),
      side_(side),
      algo_(algo),
      reward_(algo == Algo::Ppo ? cfg.reward.without_threat_terms() : cfg.reward),
      refresh_every_(std::max(1, cfg.threat_refresh_every)),
      action_rng_(cfg.seed ^ 0x9e3779b97f4a7c15ULL),
      episode_seed_rng_(cfg.seed) {}

void Collector::reset_episode() {
    // Alternate movement priority so the policy does not overfit to
    // winning simultaneous-arrival ties.
    env_.set_priority(episode_counter_ % 2 == 0 ? Side::Red : Side::Blue);
    env_.reset(episode_seed_rng_());
    episode_return_ = 0.0;
    episode_turns_ = 0;
    cache_ = ThreatCache{};
    cache_.side = side_;
    need_reset_ = false;
    maybe_refresh_cache();
}

void Collector::maybe_refresh_cache() {
    const bool threat_terms =
        reward_.hit_scale != 0.0 || reward_.hit_taken_scale != 0.0;
    if (!threat_terms) return;  // plain shaping never reads the cache
    const long turn = env_.state().turn;
    if (!cache_.closeness.empty() && turn - cache_.refresh_turn < refresh_every_) {
        return;
    }
    if (env_.alive_indices(opposite(side_)).empty()) return;
    cache_ = refresh_threats(env_, side_);
}

std::vector<Transition> Collector::collect(const PolicyParams* policy, int n_steps,
                                           bool sample) {
    std::vector<Transition> out;
    out.reserve(static_cast<std::size_t>(std::max(0, n_steps)));
    while (static_cast<int>(out.size()) < n_steps) {
        if (need_reset_ || env_.state().done) reset_episode();
        maybe_refresh_cache();

        Transition tr;
        tr.obs = env_.observe(side_);

        const std::vector<int> own = env_.alive_indices(side_);
        const int n_slots = policy ? policy->n_slots : env_.roster_size(side_);
        tr.actions.assign(static_cast<std::size_t>(n_slots), -1);
        tr.masks.assign(static_cast<std::size_t>(n_slots), {});

        std::vector<Action> own_actions;
        if (policy) {
            for (const int idx : own) {
                const int slot = side_ == Side::Red
                                     ? idx
                                     : idx - env_.roster_size(Side::Red);
                const auto mask = env_.legal_actions(idx);
                const auto x = slot_input(tr.obs, slot, policy->n_slots);
                const auto logits = policy->actor.forward(x);
                const auto probs = masked_softmax(logits, mask);
                int action;
                if (sample) {
                    double u = std::uniform_real_distribution<double>(0.0, 1.0)(action_rng_);
                    action = static_cast<int>(probs.size()) - 1;
                    for (std::size_t i = 0; i < probs.size(); ++i) {
                        u -= probs[i];
                        if (u <= 0.0) {
                            action = static_cast<int>(i);
                            break;
                        }
                    }
                } else {
                    action = static_cast<int>(
                        std::max_element(probs.begin(), probs.end()) - probs.begin());
                }
                tr.actions[slot] = action;
                tr.masks[slot] = mask;
                tr.logp += std::log(std::max(probs[static_cast<std::size_t>(action)],
                                             1e-300));
                own_actions.push_back(env_.decode_action(idx, action));
            }
        } else {
            own_actions = env_.rule_policy(side_);
        }

        const std::vector<Action> enemy_actions = env_.rule_policy(opposite(side_));
        const EventLog log = side_ == Side::Red ? env_.step(own_actions, enemy_actions)
                                                : env_.step(enemy_actions, own_actions);
        tr.reward = shape(log, cache_, reward_);
        tr.done = env_.state().done;
        tr.next_obs = env_.observe(side_);
        episode_return_ += tr.reward;
        ++episode_turns_;
        ++total_steps_;
        out.push_back(std::move(tr));

        if (env_.state().done) {
            EpisodeStat st;
            st.index = episode_counter_++;
            st.env_steps = total_steps_;
            st.ret = episode_return_;
            st.turns = episode_turns_;
            st.win = env_.state().winner == side_;
            episodes_.push_back(st);
            need_reset_ = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// GAE
// ---------------------------------------------------------------------------

std::vector<double> advantages(const std::vector<Transition>& batch, const Mlp& critic,
                               double gamma, double gae_lambda) {
    std::vector<double> adv(batch.size(), 0.0);
    double carry = 0.0;
    for (std::size_t t = batch.size(); t-- > 0;) {
        const Transition& tr = batch[t];
        const double v = critic.forward(tr.obs)[0];
        const double v_next = tr.done ? 0.0 : critic.forward(tr.next_obs)[0];
        const double delta = tr.reward + gamma * v_next - v;
        carry = tr.done ? delta : delta + gamma * gae_lambda * carry;
        adv[t] = carry;
    }
    return adv;
}

// ---------------------------------------------------------------------------
// PPO update
// ---------------------------------------------------------------------------

namespace {

struct LossAccum {
    double actor_loss = 0.0;
    double value_loss = 0.0;
    double entropy = 0.0;
    double max_ratio = 1.0;
    double min_ratio = 1.0;
};

/// One full-batch pass: accumulates the loss and, when grads are given,
/// dL/dparams for both nets. Loss terms are means over transitions.
LossAccum batch_pass(const PolicyParams& policy, const std::vector<Transition>& batch,
                     const std::vector<double>& adv, const std::vector<double>& targets,
                     const TrainConfig& cfg, std::vector<double>* actor_grad,
                     std::vector<double>* critic_grad) {
    LossAccum acc;
    const double inv_n = 1.0 / static_cast<double>(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Transition& tr = batch[i];
        const double a = adv[i];

        // --- actor ---
        double logp_new = 0.0;
        std::vector<Mlp::Cache> caches(tr.actions.size());
        std::vector<std::vector<double>> probs_per_slot(tr.actions.size());
        for (std::size_t s = 0; s < tr.actions.size(); ++s) {
            if (tr.actions[s] < 0) continue;
            const auto x = slot_input(tr.obs, static_cast<int>(s), policy.n_slots);
            const auto logits = policy.actor.forward(x, actor_grad ? &caches[s] : nullptr);
            probs_per_slot[s] = masked_softmax(logits, tr.masks[s]);
            const double p = probs_per_slot[s][static_cast<std::size_t>(tr.actions[s])];
            logp_new += std::log(std::max(p, 1e-300));
            acc.entropy += masked_entropy(probs_per_slot[s]) * inv_n;
        }
        const double ratio = std::exp(logp_new - tr.logp);
        acc.max_ratio = std::max(acc.max_ratio, ratio);
        acc.min_ratio = std::min(acc.min_ratio, ratio);
        const double clipped = std::clamp(ratio, 1.0 - cfg.clip_ratio, 1.0 + cfg.clip_ratio);
        const double obj = std::min(ratio * a, clipped * a);
        acc.actor_loss -= obj * inv_n;

        if (actor_grad) {
            // d obj / d ratio: the unclipped branch is active exactly when
            // the ratio has not yet left the trust region on the useful side.
            const bool active = (a > 0.0 && ratio < 1.0 + cfg.clip_ratio) ||
                                (a < 0.0 && ratio > 1.0 - cfg.clip_ratio);
            const double dlogp = active ? -a * ratio * inv_n : 0.0;
            for (std::size_t s = 0; s < tr.actions.size(); ++s) {
                if (tr.actions[s] < 0) continue;
                const auto& probs = probs_per_slot[s];
                std::vector<double> dlogits(probs.size(), 0.0);
                // d logp(a) / d logit_k = 1{k==a} - p_k (masked entries have
                // p == 0, so their gradient vanishes).
                for (std::size_t k = 0; k < probs.size(); ++k) {
                    if (!tr.masks[s][k]) continue;
                    const double indicator =
                        (static_cast<int>(k) == tr.actions[s]) ? 1.0 : 0.0;
                    dlogits[k] = dlogp * (indicator - probs[k]);
                }
                if (cfg.ent_coef != 0.0) {
                    const double h = masked_entropy(probs);
                    for (std::size_t k = 0; k < probs.size(); ++k) {
                        if (!tr.masks[s][k] || probs[k] <= 0.0) continue;
                        // d(-ent_coef * H)/d logit_k
                        dlogits[k] +=
                            -cfg.ent_coef * inv_n * probs[k] * (-std::log(probs[k]) - h);
                    }
                }
                policy.actor.backward(caches[s], dlogits, *actor_grad);
            }
        }

        // --- critic ---
        Mlp::Cache vc;
        const double v = policy.critic.forward(tr.obs, critic_grad ? &vc : nullptr)[0];
        const double err = v - targets[i];
        acc.value_loss += 0.5 * err * err * inv_n;
        if (critic_grad) {
            const std::vector<double> dv = {err * inv_n};
            policy.critic.backward(vc, dv, *critic_grad);
        }
    }
    return acc;
}

std::vector<double> normalized(const std::vector<double>& adv, bool enabled) {
    if (!enabled || adv.size() < 2) return adv;
    double mean = 0.0;
    for (double a : adv) mean += a;
    mean /= static_cast<double>(adv.size());
    double var = 0.0;
    for (double a : adv) var += (a - mean) * (a - mean);
    var /= static_cast<double>(adv.size());
    const double sd = std::sqrt(var) + 1e-8;
    std::vector<double> out(adv.size());
    for (std::size_t i = 0; i < adv.size(); ++i) out[i] = (adv[i] - mean) / sd;
    return out;
}

}  // namespace

UpdateStats update(PolicyParams& policy, const std::vector<Transition>& batch,
                   const std::vector<double>& advantage_values, const TrainConfig& cfg,
                   Adam& actor_opt, Adam& critic_opt) {
    if (batch.empty()) return {};
    if (advantage_values.size() != batch.size()) {
        throw std::invalid_argument("update: advantage/batch size mismatch");
    }
    // Value targets against the pre-update critic.
    std::vector<double> targets(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        targets[i] = advantage_values[i] + policy.critic.forward(batch[i].obs)[0];
    }
    const std::vector<double> adv = normalized(advantage_values, cfg.advantage_norm);

    UpdateStats stats;
    for (int e = 0; e < cfg.epochs; ++e) {
        std::vector<double> ga(policy.actor.param_count(), 0.0);
        std::vector<double> gc(policy.critic.param_count(), 0.0);
        const LossAccum acc = batch_pass(policy, batch, adv, targets, cfg, &ga, &gc);
        if (!std::isfinite(acc.actor_loss) || !std::isfinite(acc.value_loss)) {
            throw std::runtime_error(
                "update: non-finite loss (actor=" + std::to_string(acc.actor_loss) +
                ", value=" + std::to_string(acc.value_loss) +
                ", ratio range [" + std::to_string(acc.min_ratio) + ", " +
                std::to_string(acc.max_ratio) + "])");
        }
        actor_opt.step(policy.actor.params(), ga);
        critic_opt.step(policy.critic.params(), gc);
        stats.actor_loss = acc.actor_loss;
        stats.value_loss = acc.value_loss;
        stats.entropy = acc.entropy;
        stats.max_ratio = std::max(stats.max_ratio, acc.max_ratio);
        stats.min_ratio = std::min(stats.min_ratio, acc.min_ratio);
    }
    return stats;
}

GradCheckReport gradient_check(const PolicyParams& policy,
                               const std::vector<Transition>& batch,
                               const TrainConfig& cfg, int max_params, double fd_step,
                               std::uint64_t seed) {
    if (batch.empty()) throw std::invalid_argument("gradient_check: empty batch");
    PolicyParams work = policy;

    const std::vector<double> adv_raw =
        advantages(batch, work.critic, cfg.gamma, cfg.gae_lambda);
    std::vector<double> targets(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        targets[i] = adv_raw[i] + work.critic.forward(batch[i].obs)[0];
    }
    const std::vector<double> adv = normalized(adv_raw, cfg.advantage_norm);

    auto loss_at = [&]() {
        const LossAccum acc = batch_pass(work, batch, adv, targets, cfg, nullptr, nullptr);
        return acc.actor_loss - cfg.ent_coef * acc.entropy + acc.value_loss;
    };

    std::vector<double> ga(work.actor.param_count(), 0.0);
    std::vector<double> gc(work.critic.param_count(), 0.0);
    batch_pass(work, batch, adv, targets, cfg, &ga, &gc);

    const std::size_t na = ga.size();
    const std::size_t total = na + gc.size();
    std::vector<std::size_t> probe(total);
    for (std::size_t i = 0; i < total; ++i) probe[i] = i;
    if (total > static_cast<std::size_t>(max_params)) {
        std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
        for (std::size_t i = total - 1; i > 0; --i) {
            const std::size_t j = rng() % (i + 1);
            std::swap(probe[i], probe[j]);
        }
        probe.resize(static_cast<std::size_t>(max_params));
    }

    GradCheckReport report;
    report.fd_step = fd_step;
    report.params_checked = static_cast<int>(probe.size());
    for (const std::size_t flat : probe) {
        double* slot = flat < na ? &work.actor.params()[flat]
                                 : &work.critic.params()[flat - na];
        const double analytic = flat < na ? ga[flat] : gc[flat - na];
        const double saved = *slot;
        *slot = saved + fd_step;
        const double up = loss_at();
        *slot = saved - fd_step;
        const double down = loss_at();
        *slot = saved;
        const double fd = (up - down) / (2.0 * fd_step);
        const double err =
            std::abs(analytic - fd) / std::max(std::abs(analytic) + std::abs(fd), 1e-3);
        report.max_rel_err = std::max(report.max_rel_err, err);
    }
    return report;
}

TrainResult train(const Scenario& scenario, const TrainConfig& cfg, Algo algo) {
    TrainResult result;
    result.policy = make_policy(scenario, Side::Red, cfg.hidden, cfg.seed);
    Collector collector(scenario, cfg, algo);
    Adam actor_opt(cfg.lr_actor);
    Adam critic_opt(cfg.lr_critic);
    while (collector.total_steps() < cfg.total_steps) {
        const int n = static_cast<int>(
            std::min<long>(cfg.batch_size, cfg.total_steps - collector.total_steps()));
        const auto batch = collector.collect(&result.policy, n, true);
        const auto adv =
            advantages(batch, result.policy.critic, cfg.gamma, cfg.gae_lambda);
        update(result.policy, batch, adv, cfg, actor_opt, critic_opt);
        ++result.updates;
    }
    result.episodes = collector.episodes();
    result.env_steps = collector.total_steps();
    return result;
}

}  // namespace ifwar
