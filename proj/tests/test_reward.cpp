#include <doctest.h>

#include <random>

#include "ifwar/harness.hpp"
#include "ifwar/reward.hpp"
#include "test_util.hpp"

using namespace ifwar;
namespace tu = ifwar::testutil;

namespace {

// Rule-by-rule tally written independently of shape(): every additional-
// reward row is applied on its own pass over the log.
double oracle_shape(const EventLog& ev, const ThreatCache& cache,
                    const RewardConfig& cfg) {
    const bool red = cache.side == Side::Red;
    auto own = [&](int piece) { return (piece < ev.red_roster_size) == red; };
    const int alive = red ? ev.alive_red_start : ev.alive_blue_start;

    double total = 0.0;
    total += cfg.step_cost;

    double closer = 0.0, farther = 0.0;
    for (const auto& m : ev.moves) {
        if (!own(m.piece) || !m.moved) continue;
        if (m.dist_delta < 0) closer += cfg.closer_bonus;
        if (m.dist_delta > 0) farther += cfg.farther_penalty;
    }
    if (alive > 0) total += (closer + farther) / alive;

    for (const auto& m : ev.moves) {
        if (own(m.piece) && m.boundary_bump) total += cfg.boundary_penalty;
    }

    const bool threat_on = cfg.hit_scale != 0.0 || cfg.hit_taken_scale != 0.0;
    for (const auto& s : ev.shots) {
        if (!s.hit || !threat_on) continue;
        if (own(s.shooter)) total += cfg.hit_scale * cache.closeness.at(s.target);
        if (!own(s.shooter)) total += cfg.hit_taken_scale * cache.closeness.at(s.shooter);
    }

    int enemy_kills = 0;
    for (const auto& k : ev.kills) {
        if (!own(k.piece)) ++enemy_kills;
    }
    total += enemy_kills * cfg.annihilate;

    if (ev.victory) {
        const bool we_won = ev.victory->winner == (red ? Side::Red : Side::Blue);
        if (we_won && ev.victory->cause == VictoryCause::ControlPoint) {
            total += cfg.reach_control;
        } else if (we_won && ev.victory->cause == VictoryCause::Annihilation) {
            total += cfg.final_kill;
            if (!cfg.stack_annihilate_with_final_kill && ev.victory->final_kill_by >= 0 &&
                enemy_kills > 0) {
                total -= cfg.annihilate;
            }
        } else if (!we_won) {
            total += enemy_kills > 0 ? cfg.kill_but_lose : cfg.opponent_wins;
        }
    }
    return total;
}

EventLog random_log(std::mt19937_64& rng) {
    EventLog ev;
    ev.turn = static_cast<long>(rng() % 50);
    ev.red_roster_size = 2 + static_cast<int>(rng() % 2);
    const int blue_roster = 2 + static_cast<int>(rng() % 2);
    ev.alive_red_start = 1 + static_cast<int>(rng() % ev.red_roster_size);
    ev.alive_blue_start = 1 + static_cast<int>(rng() % blue_roster);
    const int total_pieces = ev.red_roster_size + blue_roster;

    const int n_moves = static_cast<int>(rng() % 5);
    for (int i = 0; i < n_moves; ++i) {
        MoveEvent m;
        m.piece = static_cast<int>(rng() % total_pieces);
        const unsigned kind = rng() % 4;
        m.moved = kind == 0 || kind == 1;
        m.boundary_bump = kind == 2;
        m.blocked = kind == 3;
        m.dist_delta = m.moved ? static_cast<int>(rng() % 3) - 1 : 0;
        ev.moves.push_back(m);
    }
    const int n_shots = static_cast<int>(rng() % 4);
    for (int i = 0; i < n_shots; ++i) {
        ShotEvent s;
        s.shooter = static_cast<int>(rng() % total_pieces);
        do {
            s.target = static_cast<int>(rng() % total_pieces);
        } while ((s.target < ev.red_roster_size) == (s.shooter < ev.red_roster_size));
        s.hit = rng() % 2 == 0;
        if (!s.hit) s.miss_reason = "no_los";
        ev.shots.push_back(s);
        if (s.hit && rng() % 2 == 0) ev.kills.push_back({s.target, s.shooter});
    }
    if (rng() % 2 == 0) {
        VictoryEvent v;
        v.winner = rng() % 2 ? Side::Red : Side::Blue;
        const unsigned c = rng() % 3;
        v.cause = c == 0   ? VictoryCause::ControlPoint
                  : c == 1 ? VictoryCause::Annihilation
                           : VictoryCause::TurnLimit;
        v.final_kill_by = ev.kills.empty() ? -1 : ev.kills.back().by;
        ev.victory = v;
    }
    return ev;
}

ThreatCache full_cache(const EventLog& ev, Side side, std::mt19937_64& rng) {
    ThreatCache cache;
    cache.side = side;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int total = ev.red_roster_size + 4;
    for (int i = 0; i < total; ++i) {
        const bool enemy = (i < ev.red_roster_size) != (side == Side::Red);
        if (enemy) cache.closeness[i] = unit(rng);
    }
    return cache;
}

}  // namespace

TEST_CASE("shape hand examples") {
    RewardConfig cfg;
    ThreatCache cache;
    cache.side = Side::Red;
    cache.closeness[2] = 0.514688;

    EventLog ev;
    ev.red_roster_size = 2;
    ev.alive_red_start = 1;
    ev.alive_blue_start = 1;
    MoveEvent closer;
    closer.piece = 0;
    closer.moved = true;
    closer.dist_delta = -1;
    ev.moves.push_back(closer);
    CHECK(shape(ev, cache, cfg) == doctest::Approx(0.495).epsilon(1e-12));

    // a hit on the cached enemy adds 5x its closeness
    ev.shots.push_back({0, 2, true, ""});
    CHECK(shape(ev, cache, cfg) ==
          doctest::Approx(0.495 + 5 * 0.514688).epsilon(1e-9));

    // reaching the control point on a closing move
    EventLog win;
    win.red_roster_size = 2;
    win.alive_red_start = 1;
    win.alive_blue_start = 1;
    win.moves.push_back(closer);
    win.victory = VictoryEvent{Side::Red, VictoryCause::ControlPoint, -1};
    CHECK(shape(win, cache, cfg) == doctest::Approx(10.495).epsilon(1e-12));
}

TEST_CASE("shape terminal rows are mutually exclusive") {
    RewardConfig cfg;
    ThreatCache cache;
    cache.side = Side::Red;
    cache.closeness[2] = 0.5;
    cache.closeness[3] = 0.5;

    // enemy wins while we killed this turn: kill_but_lose replaces
    // opponent_wins
    EventLog ev;
    ev.red_roster_size = 2;
    ev.alive_red_start = 2;
    ev.alive_blue_start = 2;
    ev.shots.push_back({0, 2, true, ""});
    ev.kills.push_back({2, 0});
    ev.victory = VictoryEvent{Side::Blue, VictoryCause::ControlPoint, -1};
    const double got = shape(ev, cache, cfg);
    // step + hit + annihilate + kill_but_lose
    CHECK(got == doctest::Approx(-0.005 + 2.5 + 10.0 - 10.0).epsilon(1e-9));

    // annihilation victory stacks final_kill with the per-kill bonus...
    ev.victory = VictoryEvent{Side::Red, VictoryCause::Annihilation, 0};
    CHECK(shape(ev, cache, cfg) ==
          doctest::Approx(-0.005 + 2.5 + 10.0 + 20.0).epsilon(1e-9));

    // ...unless stacking is disabled
    RewardConfig no_stack = cfg;
    no_stack.stack_annihilate_with_final_kill = false;
    CHECK(shape(ev, cache, no_stack) ==
          doctest::Approx(-0.005 + 2.5 + 20.0).epsilon(1e-9));
}

TEST_CASE("shape distance terms average over the side's pieces") {
    RewardConfig cfg;
    ThreatCache cache;
    cache.side = Side::Red;
    EventLog ev;
    ev.red_roster_size = 2;
    ev.alive_red_start = 2;
    ev.alive_blue_start = 1;
    MoveEvent m0;
    m0.piece = 0;
    m0.moved = true;
    m0.dist_delta = -1;
    MoveEvent m1 = m0;
    m1.piece = 1;
    m1.dist_delta = 1;
    ev.moves = {m0, m1};
    CHECK(shape(ev, cache, cfg) ==
          doctest::Approx(-0.005 + (0.5 - 0.3) / 2).epsilon(1e-12));
}

TEST_CASE("shape errors on a missing cache entry") {
    RewardConfig cfg;
    ThreatCache cache;
    cache.side = Side::Red;
    EventLog ev;
    ev.red_roster_size = 1;
    ev.alive_red_start = 1;
    ev.alive_blue_start = 1;
    ev.shots.push_back({0, 1, true, ""});
    CHECK_THROWS_AS(shape(ev, cache, cfg), std::runtime_error);
    // the non-threat configuration never touches the cache
    CHECK(shape(ev, cache, cfg.without_threat_terms()) ==
          doctest::Approx(-0.005).epsilon(1e-12));
}

TEST_CASE("shape equals the rule-by-rule oracle on random logs") {
    std::mt19937_64 rng(2718);
    RewardConfig cfg;
    for (int i = 0; i < 1000; ++i) {
        const EventLog ev = random_log(rng);
        const Side side = rng() % 2 ? Side::Red : Side::Blue;
        const ThreatCache cache = full_cache(ev, side, rng);
        CHECK(shape(ev, cache, cfg) ==
              doctest::Approx(oracle_shape(ev, cache, cfg)).epsilon(1e-12));
        CHECK(shape(ev, cache, RewardConfig::zeroed()) == doctest::Approx(0.0));
    }
}

TEST_CASE("refresh threats matches the snapshot pipeline on equal footing") {
    // Two identical enemies score identical closeness; a single enemy is
    // trivially ranked.
    Scenario s;
    s.map.width = 11;
    s.map.height = 11;
    s.map.control_point = {5, 5};
    PieceSpec red;
    red.id = "R1";
    red.position = {{5, 9}};
    red.stamina = 50;
    red.attack.detection_capabilities = {1.0};
    s.red.pieces = {red};
    PieceSpec b1 = red;
    b1.id = "B1";
    b1.position = {{4, 2}};
    PieceSpec b2 = red;
    b2.id = "B2";
    b2.position = {{6, 2}};
    s.blue.pieces = {b1, b2};
    Env env(s);
    env.reset(0);
    const ThreatCache cache = refresh_threats(env, Side::Red);
    REQUIRE(cache.closeness.size() == 2);
    const double c1 = cache.closeness.at(1);
    const double c2 = cache.closeness.at(2);
    CHECK(c1 == doctest::Approx(c2).epsilon(1e-9));

    Scenario lone = s;
    lone.blue.pieces = {b1};
    Env env2(lone);
    env2.reset(0);
    const ThreatCache single = refresh_threats(env2, Side::Red);
    REQUIRE(single.closeness.size() == 1);
    CHECK(single.closeness.at(1) >= 0.0);
    CHECK(single.closeness.at(1) <= 1.0);
}

TEST_CASE("snapshot threat cache reproduces the worked closeness values") {
    const std::string dir = tu::data_dir();
    const AssessOutput out = run_assess(dir + "/snapshots/t1.json",
                                        dir + "/params/paper.json", "");
    for (std::size_t i = 0; i < tu::kGoldenCloseness.size(); ++i) {
        CHECK(out.assessment.closeness[i] ==
              doctest::Approx(tu::kGoldenCloseness[i]).epsilon(1e-6));
    }
}
