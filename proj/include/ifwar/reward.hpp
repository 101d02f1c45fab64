#pragma once

#include <map>

#include "ifwar/env.hpp"
#include "ifwar/madm.hpp"

namespace ifwar {

/// Per-step shaping terms. Defaults follow the additional-reward table the
/// trainer uses; every value is overridable from the training config.
struct RewardConfig {
    double closer_bonus = 0.5;        // a piece ended the turn nearer the control point
    double farther_penalty = -0.3;    // ... or farther from it
    double boundary_penalty = -1.0;   // tried to leave the map
    double step_cost = -0.005;        // flat per-turn cost
    double hit_scale = 5.0;           // x target threat closeness on our hits
    double hit_taken_scale = -5.0;    // x shooter threat closeness on hits we take
    double annihilate = 10.0;         // an enemy piece destroyed
    double final_kill = 20.0;         // the destroying shot won the episode
    double kill_but_lose = -10.0;     // we killed this turn but the enemy won
    double reach_control = 10.0;      // we took the control point
    double opponent_wins = -10.0;     // the enemy won
    /// Whether the per-kill bonus stacks with final_kill on the same shot.
    bool stack_annihilate_with_final_kill = true;

    static RewardConfig zeroed();
    /// Threat-scaled hit terms removed; distance/step/terminal rows kept.
    RewardConfig without_threat_terms() const;
};

/// Threat closeness per enemy piece (global roster index), from the MADM
/// pass over the alive enemies of `side`.
struct ThreatCache {
    Side side = Side::Red;
    std::map<int, double> closeness;
    long refresh_turn = 0;
};

/// Shaped reward for cache.side over one turn's events:
///   - step_cost once per turn;
///   - distance terms per own move event (closer_bonus / farther_penalty),
///     averaged over the side's pieces alive at turn start;
///   - boundary_penalty per own boundary bump;
///   - hit_scale * closeness(target) per own landed hit, hit_taken_scale *
///     closeness(shooter) per hit taken;
///   - annihilate per enemy kill; exactly one terminal row (final_kill,
///     reach_control, kill_but_lose or opponent_wins) when the episode
///     ends, except that a turn-limit win pays nothing. The annihilate
///     bonus for the winning kill stacks with final_kill only when
///     stack_annihilate_with_final_kill is set.
/// Throws when a hit term needs a closeness entry the cache lacks.
double shape(const EventLog& events, const ThreatCache& cache, const RewardConfig& cfg);

/// Builds the 6-attribute decision matrix (distance, speed, attack,
/// visibility, environment, defense) for the alive enemies of `side`,
/// runs the MADM assessment, and caches the closeness values. Reference
/// quantities (distance, relative speed, visibility endpoints) use the
/// nearest alive own piece. Requires at least one alive enemy.
ThreatCache refresh_threats(const Env& env, Side side);

/// The matrix refresh_threats assesses, exposed for reporting and tests.
/// `targets` receives the enemy roster indices in row order when non-null.
DecisionMatrix threat_matrix(const Env& env, Side side, std::vector<int>* targets = nullptr);

}  // namespace ifwar
