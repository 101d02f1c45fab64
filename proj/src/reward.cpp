#include "ifwar/reward.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ifwar/conversion.hpp"
#include "ifwar/threat.hpp"

namespace ifwar {

RewardConfig RewardConfig::zeroed() {
    RewardConfig c;
    c.closer_bonus = c.farther_penalty = c.boundary_penalty = c.step_cost = 0.0;
    c.hit_scale = c.hit_taken_scale = 0.0;
    c.annihilate = c.final_kill = c.kill_but_lose = 0.0;
    c.reach_control = c.opponent_wins = 0.0;
    return c;
}

RewardConfig RewardConfig::without_threat_terms() const {
    RewardConfig c = *this;
    c.hit_scale = 0.0;
    c.hit_taken_scale = 0.0;
    return c;
}

double shape(const EventLog& events, const ThreatCache& cache, const RewardConfig& cfg) {
    const Side side = cache.side;
    const int own_alive = side == Side::Red ? events.alive_red_start : events.alive_blue_start;

    auto closeness_of = [&](int enemy_piece) {
        if (cfg.hit_scale == 0.0 && cfg.hit_taken_scale == 0.0) return 0.0;
        const auto it = cache.closeness.find(enemy_piece);
        if (it == cache.closeness.end()) {
            throw std::runtime_error("shape: no threat cache entry for piece " +
                                     std::to_string(enemy_piece));
        }
        return it->second;
    };

    double reward = cfg.step_cost;

    // Events carry global roster indices; indices below the red roster
    // split belong to Red.
    auto is_own = [&](int piece) {
        return (piece < events.red_roster_size) == (side == Side::Red);
    };

    for (const auto& m : events.moves) {
        if (!is_own(m.piece)) continue;
        if (m.boundary_bump) reward += cfg.boundary_penalty;
        if (m.moved && m.dist_delta != 0 && own_alive > 0) {
            reward += (m.dist_delta < 0 ? cfg.closer_bonus : cfg.farther_penalty) / own_alive;
        }
    }
    for (const auto& s : events.shots) {
        if (!s.hit) continue;
        if (is_own(s.shooter)) {
            reward += cfg.hit_scale * closeness_of(s.target);
        } else {
            reward += cfg.hit_taken_scale * closeness_of(s.shooter);
        }
    }

    int own_kills_this_turn = 0;  // enemy pieces we destroyed
    for (const auto& k : events.kills) {
        if (!is_own(k.piece)) ++own_kills_this_turn;
    }
    reward += cfg.annihilate * own_kills_this_turn;

    if (events.victory) {
        const VictoryEvent& v = *events.victory;
        const bool we_won = v.winner == side;
        if (we_won) {
            if (v.cause == VictoryCause::ControlPoint) {
                reward += cfg.reach_control;
            } else if (v.cause == VictoryCause::Annihilation) {
                reward += cfg.final_kill;
                if (!cfg.stack_annihilate_with_final_kill && v.final_kill_by >= 0 &&
                    own_kills_this_turn > 0) {
                    reward -= cfg.annihilate;  // the winning kill was already paid
                }
            }
            // Turn-limit wins pay nothing extra.
        } else {
            reward += own_kills_this_turn > 0 ? cfg.kill_but_lose : cfg.opponent_wins;
        }
    }
    return reward;
}

namespace {

const PieceState* nearest_own(const Env& env, Side side, Hex to) {
    const PieceState* best = nullptr;
    int best_d = std::numeric_limits<int>::max();
    for (const int i : env.alive_indices(side)) {
        const PieceState& p = env.piece(i);
        const int d = hex_distance(p.pos, to);
        if (d < best_d) {
            best_d = d;
            best = &p;
        }
    }
    return best;
}

}  // namespace

DecisionMatrix threat_matrix(const Env& env, Side side, std::vector<int>* targets) {
    const ThreatConfig& tc = env.scenario().threat;
    const HexMap& map = env.map();
    const double d_max = tc.d_max.value_or(static_cast<double>(map.max_distance()));

    const std::vector<int> enemies = env.alive_indices(opposite(side));
    if (enemies.empty()) throw std::runtime_error("threat_matrix: no alive enemies");
    if (targets) *targets = enemies;

    std::vector<double> dist_col, speed_col, attack_col, env_col, def_col;
    std::vector<IntervalNumber> vis_col;
    for (const int ei : enemies) {
        const PieceState& e = env.piece(ei);
        const PieceState* ref = nearest_own(env, side, e.pos);
        if (!ref) throw std::runtime_error("threat_matrix: no alive own piece");

        DistanceParams dp;
        dp.tau_common = tc.tau_common;
        dp.tau_at = map.enter_cost(e.pos);  // stamina through the target's hex
        dp.dist_to_control = hex_distance(e.pos, map.control_point());
        dp.d_max = d_max;
        dp.d_ij = hex_distance(ref->pos, e.pos);
        dist_col.push_back(distance_threat(dp));

        SpeedParams sp;
        sp.cls = e.speed_class;
        sp.beta_class = e.speed_class == SpeedClass::CompositeArmored ? tc.beta_composite
                        : e.speed_class == SpeedClass::Heavy          ? tc.beta_heavy
                                                                      : tc.beta_light;
        sp.v_rel = e.nominal_speed + ref->nominal_speed;
        sp.v_class_max = std::max(e.nominal_speed, 1.0);
        sp.v_nominal = e.nominal_speed;
        speed_col.push_back(speed_threat(sp, tc.speed_mode));

        attack_col.push_back(attack_threat(e.attack));

        VisibilityParams vp;
        vp.h_i = map.elevation(ref->pos);
        vp.h_j = map.elevation(e.pos);
        double hmax = std::max(vp.h_i, vp.h_j);
        for (const Hex h : hex_line_between(ref->pos, e.pos)) {
            if (map.on_map(h)) hmax = std::max(hmax, map.elevation(h));
        }
        vp.h_max_between = hmax;
        vp.t1 = tc.t1;
        vp.t2 = tc.t2;
        vis_col.push_back(visibility_threat(vp));

        EnvironmentParams ep;
        ep.w1 = tc.env_weights[0];
        ep.w2 = tc.env_weights[1];
        ep.w3 = tc.env_weights[2];
        // Flags scan the two-hex neighborhood of the enemy piece.
        for (int dq = -2; dq <= 2; ++dq) {
            for (int dr = -2; dr <= 2; ++dr) {
                const Hex h{e.pos.q + dq, e.pos.r + dr};
                if (!map.on_map(h) || hex_distance(h, e.pos) > 2) continue;
                if (map.first_class_road(h)) ep.h1 = 1;
                if (map.second_class_road(h)) ep.h2 = 1;
                if (map.urban_residential(h)) ep.r = 1;
            }
        }
        env_col.push_back(environment_threat(ep));

        def_col.push_back(defense_value(e.armor));
    }

    DecisionMatrix m;
    m.attribute_names = {"distance", "speed", "attack", "visibility", "environment", "defense"};
    const auto dist_ifn = reals_to_ifns(dist_col, tc.distance_polarity, tc.conversion);
    const auto speed_ifn = reals_to_ifns(speed_col, tc.speed_polarity, tc.conversion);
    const auto attack_ifn = reals_to_ifns(attack_col, tc.attack_polarity, tc.conversion);
    const auto vis_ifn = intervals_to_ifns(vis_col);
    const auto env_ifn = reals_to_ifns(env_col, tc.environment_polarity, tc.conversion);
    const auto def_ifn = reals_to_ifns(def_col, tc.defense_polarity, tc.conversion);
    for (std::size_t i = 0; i < enemies.size(); ++i) {
        m.entries.push_back({dist_ifn[i], speed_ifn[i], attack_ifn[i], vis_ifn[i],
                             env_ifn[i], def_ifn[i]});
    }
    return m;
}

ThreatCache refresh_threats(const Env& env, Side side) {
    std::vector<int> targets;
    const DecisionMatrix m = threat_matrix(env, side, &targets);
    const ThreatAssessment a = assess(m, env.scenario().threat.entropy_reading);
    ThreatCache cache;
    cache.side = side;
    cache.refresh_turn = env.state().turn;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        cache.closeness[targets[i]] = a.closeness[i];
    }
    return cache;
}

}  // namespace ifwar
