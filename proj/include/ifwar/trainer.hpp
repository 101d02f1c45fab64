#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifwar/env.hpp"
#include "ifwar/nn.hpp"
#include "ifwar/reward.hpp"

namespace ifwar {

enum class Algo { Ppo, MadmPpo };
Algo algo_from_string(const std::string& s);
std::string algo_to_string(Algo a);

struct Transition {
    std::vector<double> obs;
    std::vector<double> next_obs;
    std::vector<int> actions;  // per own piece slot; -1 = dead slot
    std::vector<std::vector<std::uint8_t>> masks;  // legality at decision time
    double logp = 0.0;         // joint log-prob under the acting policy
    double reward = 0.0;       // shaped
    bool done = false;
};

struct TrainConfig {
    double gamma = 0.99;
    double gae_lambda = 0.95;
    double clip_ratio = 0.2;
    int epochs = 4;
    int batch_size = 2048;
    double lr_actor = 3e-4;
    double lr_critic = 1e-3;
    long total_steps = 40000;
    std::uint64_t seed = 1;
    double ent_coef = 0.0;
    int hidden = 64;
    bool advantage_norm = true;  // zero-mean unit-variance per batch
    RewardConfig reward;
    int threat_refresh_every = 1;
};

/// Actor maps observation + piece-slot one-hot to action logits; the
/// critic maps the observation to a scalar value.
struct PolicyParams {
    Mlp actor;
    Mlp critic;
    int obs_dim = 0;
    int n_slots = 0;
    int n_actions = 0;
    int hidden = 0;
};

PolicyParams make_policy(const Scenario& scenario, Side side, int hidden,
                         std::uint64_t seed);

void save_checkpoint(const std::string& path, const PolicyParams& policy);
PolicyParams load_checkpoint(const std::string& path);

struct EpisodeStat {
    long index = 0;
    long env_steps = 0;  // cumulative at episode end
    double ret = 0.0;    // shaped return
    int turns = 0;
    bool win = false;    // the learning side won
};

/// Rollout state: env, shaping config, RNG streams, and the running
/// episode bookkeeping. Episodes auto-reset; seeds derive from cfg.seed.
class Collector {
public:
    Collector(Scenario scenario, const TrainConfig& cfg, Algo algo,
              Side side = Side::Red);

    /// n_steps transitions with shaped rewards. A null policy plays the
    /// deterministic rule policy for the learning side (logp 0). Completed
    /// episodes are appended to episodes().
    std::vector<Transition> collect(const PolicyParams* policy, int n_steps,
                                    bool sample = true);

    const std::vector<EpisodeStat>& episodes() const { return episodes_; }
    const Env& env() const { return env_; }
    long total_steps() const { return total_steps_; }
    Algo algo() const { return algo_; }
    const RewardConfig& reward_config() const { return reward_; }

private:
    void maybe_refresh_cache();
    void reset_episode();

    Env env_;
    Side side_;
    Algo algo_;
    RewardConfig reward_;
    int refresh_every_ = 1;
    std::mt19937_64 action_rng_;
    std::mt19937_64 episode_seed_rng_;
    ThreatCache cache_;
    bool need_reset_ = true;
    double episode_return_ = 0.0;
    int episode_turns_ = 0;
    long episode_counter_ = 0;
    long total_steps_ = 0;
    std::vector<EpisodeStat> episodes_;
};

/// Generalized advantage estimates; (1 - done) gates every bootstrap so a
/// segment never crosses an episode boundary. Truncated segments bootstrap
/// from critic(next_obs).
std::vector<double> advantages(const std::vector<Transition>& batch, const Mlp& critic,
                               double gamma, double gae_lambda);

struct UpdateStats {
    double actor_loss = 0.0;
    double value_loss = 0.0;
    double entropy = 0.0;
    double max_ratio = 1.0;
    double min_ratio = 1.0;
};

/// Clipped-surrogate update over the whole batch for cfg.epochs passes.
/// Old log-probs stay frozen in the transitions. Throws on non-finite loss.
UpdateStats update(PolicyParams& policy, const std::vector<Transition>& batch,
                   const std::vector<double>& advantage_values, const TrainConfig& cfg,
                   Adam& actor_opt, Adam& critic_opt);

struct GradCheckReport {
    double max_rel_err = 0.0;
    int params_checked = 0;
    double fd_step = 1e-5;
};

/// Central finite differences against the analytic gradient on up to
/// `max_params` parameters drawn across actor and critic. Relative error
/// uses |a-b| / max(|a|+|b|, 1e-3).
GradCheckReport gradient_check(const PolicyParams& policy,
                               const std::vector<Transition>& batch,
                               const TrainConfig& cfg, int max_params = 32,
                               double fd_step = 1e-5, std::uint64_t seed = 0);

struct TrainResult {
    PolicyParams policy;
    std::vector<EpisodeStat> episodes;
    long env_steps = 0;
    int updates = 0;
};

/// Full training loop: repeated collect/advantage/update until
/// cfg.total_steps environment steps have been gathered.
TrainResult train(const Scenario& scenario, const TrainConfig& cfg, Algo algo);

}  // namespace ifwar
