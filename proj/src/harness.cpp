#include "ifwar/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ifwar {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    return out;
}

void write_indicator_csvs(const fs::path& dir, const AssessOutput& a) {
    const auto& snap = a.snapshot;
    const auto& t = a.tables;
    {
        auto out = open_out(dir / "distance.csv");
        out << "target,control_distance,distance,real_value,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << snap.targets[i].control_distance
                << ',' << snap.targets[i].distance << ',' << fmt(t.distance_real[i])
                << ',' << fmt(t.distance_ifn[i].mu()) << ',' << fmt(t.distance_ifn[i].nu())
                << '\n';
        }
    }
    {
        auto out = open_out(dir / "speed.csv");
        out << "target,nominal_speed,relative_speed,real_value,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << snap.targets[i].nominal_speed << ','
                << snap.targets[i].relative_speed << ',' << fmt(t.speed_real[i]) << ','
                << fmt(t.speed_ifn[i].mu()) << ',' << fmt(t.speed_ifn[i].nu()) << '\n';
        }
    }
    {
        auto out = open_out(dir / "attack.csv");
        out << "target,real_value,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << fmt(t.attack_real[i]) << ','
                << fmt(t.attack_ifn[i].mu()) << ',' << fmt(t.attack_ifn[i].nu()) << '\n';
        }
    }
    {
        auto out = open_out(dir / "visibility.csv");
        out << "target,elevation,interval_lo,interval_hi,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << snap.targets[i].elevation << ','
                << fmt(t.visibility_interval[i].lo()) << ','
                << fmt(t.visibility_interval[i].hi()) << ','
                << fmt(t.visibility_ifn[i].mu()) << ',' << fmt(t.visibility_ifn[i].nu())
                << '\n';
        }
    }
    {
        auto out = open_out(dir / "environment.csv");
        out << "target,h1,h2,r,real_value,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << snap.targets[i].env_flags[0] << ','
                << snap.targets[i].env_flags[1] << ',' << snap.targets[i].env_flags[2]
                << ',' << fmt(t.environment_real[i]) << ','
                << fmt(t.environment_ifn[i].mu()) << ','
                << fmt(t.environment_ifn[i].nu()) << '\n';
        }
    }
    {
        auto out = open_out(dir / "defense.csv");
        out << "target,armor,real_value,mu,nu\n";
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << armor_to_string(snap.targets[i].armor)
                << ',' << fmt(t.defense_real[i]) << ',' << fmt(t.defense_ifn[i].mu())
                << ',' << fmt(t.defense_ifn[i].nu()) << '\n';
        }
    }
    {
        auto out = open_out(dir / "matrix.csv");
        out << "target";
        for (const auto& name : t.matrix.attribute_names) {
            out << ',' << name << "_mu," << name << "_nu";
        }
        out << '\n';
        for (std::size_t i = 0; i < t.matrix.entries.size(); ++i) {
            out << snap.targets[i].number;
            for (const Ifn& e : t.matrix.entries[i]) {
                out << ',' << fmt(e.mu()) << ',' << fmt(e.nu());
            }
            out << '\n';
        }
    }
    {
        auto out = open_out(dir / "weights.csv");
        out << "attribute,entropy,weight\n";
        for (std::size_t j = 0; j < t.matrix.attribute_names.size(); ++j) {
            out << t.matrix.attribute_names[j] << ',' << fmt(entropy(t.matrix.column(j)))
                << ',' << fmt(a.assessment.weights[j]) << '\n';
        }
    }
    {
        auto out = open_out(dir / "assessment.csv");
        out << "target,s_plus,s_minus,closeness,rank\n";
        std::vector<int> rank_of(a.assessment.ranking.size());
        for (std::size_t r = 0; r < a.assessment.ranking.size(); ++r) {
            rank_of[a.assessment.ranking[r]] = static_cast<int>(r) + 1;
        }
        for (std::size_t i = 0; i < snap.targets.size(); ++i) {
            out << snap.targets[i].number << ',' << fmt(a.assessment.s_plus[i]) << ','
                << fmt(a.assessment.s_minus[i]) << ',' << fmt(a.assessment.closeness[i])
                << ',' << rank_of[i] << '\n';
        }
    }
    {
        auto out = open_out(dir / "ranking.txt");
        out << a.ranking_string << '\n';
    }
}

}  // namespace

AssessOutput run_assess(const std::string& snapshot_path, const std::string& params_path,
                        const std::string& out_dir) {
    AssessOutput out;
    out.snapshot = load_snapshot(snapshot_path);
    const AssessParams params = load_assess_params(params_path);
    out.tables = build_indicator_tables(out.snapshot, params);
    out.assessment = assess(out.tables.matrix, params.threat.entropy_reading);

    std::ostringstream ranking;
    for (std::size_t r = 0; r < out.assessment.ranking.size(); ++r) {
        if (r) ranking << '>';
        ranking << 'T' << out.snapshot.targets[out.assessment.ranking[r]].number;
    }
    out.ranking_string = ranking.str();

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_indicator_csvs(out_dir, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Training front end
// ---------------------------------------------------------------------------

TrainFileConfig load_train_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open train config: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("train config parse error: ") + e.what());
    }
    if (j.value("version", 1) != 1) {
        throw std::invalid_argument("unsupported train config version");
    }
    TrainFileConfig cfg;
    const fs::path base = fs::path(path).parent_path();
    cfg.scenario_path = (base / j.at("scenario").get<std::string>()).string();
    if (j.contains("train")) {
        const auto& t = j["train"];
        auto& c = cfg.train;
        c.gamma = t.value("gamma", c.gamma);
        c.gae_lambda = t.value("gae_lambda", c.gae_lambda);
        c.clip_ratio = t.value("clip_ratio", c.clip_ratio);
        c.epochs = t.value("epochs", c.epochs);
        c.batch_size = t.value("batch_size", c.batch_size);
        c.lr_actor = t.value("lr_actor", c.lr_actor);
        c.lr_critic = t.value("lr_critic", c.lr_critic);
        c.total_steps = t.value("total_steps", c.total_steps);
        c.seed = t.value("seed", c.seed);
        c.ent_coef = t.value("ent_coef", c.ent_coef);
        c.hidden = t.value("hidden", c.hidden);
        c.advantage_norm = t.value("advantage_norm", c.advantage_norm);
        c.threat_refresh_every = t.value("threat_refresh_every", c.threat_refresh_every);
    }
    if (j.contains("reward")) {
        const auto& r = j["reward"];
        auto& w = cfg.train.reward;
        w.closer_bonus = r.value("closer_bonus", w.closer_bonus);
        w.farther_penalty = r.value("farther_penalty", w.farther_penalty);
        w.boundary_penalty = r.value("boundary_penalty", w.boundary_penalty);
        w.step_cost = r.value("step_cost", w.step_cost);
        w.hit_scale = r.value("hit_scale", w.hit_scale);
        w.hit_taken_scale = r.value("hit_taken_scale", w.hit_taken_scale);
        w.annihilate = r.value("annihilate", w.annihilate);
        w.final_kill = r.value("final_kill", w.final_kill);
        w.kill_but_lose = r.value("kill_but_lose", w.kill_but_lose);
        w.reach_control = r.value("reach_control", w.reach_control);
        w.opponent_wins = r.value("opponent_wins", w.opponent_wins);
        w.stack_annihilate_with_final_kill =
            r.value("stack_annihilate_with_final_kill", w.stack_annihilate_with_final_kill);
    }
    return cfg;
}

void write_curves_csv(const std::string& path, const std::vector<EpisodeStat>& episodes) {
    auto out = open_out(path);
    out << "episode,env_steps,return,turns,win\n";
    for (const auto& e : episodes) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", e.ret);
        out << e.index << ',' << e.env_steps << ',' << buf << ',' << e.turns << ','
            << (e.win ? 1 : 0) << '\n';
    }
}

TrainOutput run_train(const std::string& config_path, Algo algo,
                      std::optional<std::uint64_t> seed_override,
                      std::optional<long> steps_override, const std::string& out_dir) {
    TrainFileConfig file_cfg = load_train_config(config_path);
    if (seed_override) file_cfg.train.seed = *seed_override;
    if (steps_override) file_cfg.train.total_steps = *steps_override;
    const Scenario scenario = load_scenario(file_cfg.scenario_path);

    TrainOutput out;
    out.result = train(scenario, file_cfg.train, algo);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        out.checkpoint_path = (fs::path(out_dir) / "checkpoint.bin").string();
        out.curves_path = (fs::path(out_dir) / "curves.csv").string();
        save_checkpoint(out.checkpoint_path, out.result.policy);
        write_curves_csv(out.curves_path, out.result.episodes);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

using Controller = std::function<std::vector<Action>(Env&, Side)>;

Controller rule_controller() {
    return [](Env& env, Side side) { return env.rule_policy(side); };
}

/// Plays the trained stochastic policy; the shared rng is reseeded per
/// game so evaluation stays reproducible.
Controller policy_controller(PolicyParams policy, std::shared_ptr<std::mt19937_64> rng) {
    return [policy = std::move(policy), rng = std::move(rng)](Env& env, Side side) {
        std::vector<Action> actions;
        const auto obs = env.observe(side);
        for (const int idx : env.alive_indices(side)) {
            const int slot =
                side == Side::Red ? idx : idx - env.roster_size(Side::Red);
            std::vector<double> x = obs;
            x.resize(obs.size() + static_cast<std::size_t>(policy.n_slots), 0.0);
            x[obs.size() + static_cast<std::size_t>(slot)] = 1.0;
            const auto logits = policy.actor.forward(x);
            const auto mask = env.legal_actions(idx);
            double mx = -1e300;
            for (std::size_t k = 0; k < logits.size(); ++k) {
                if (mask[k]) mx = std::max(mx, logits[k]);
            }
            std::vector<double> p(logits.size(), 0.0);
            double z = 0.0;
            for (std::size_t k = 0; k < logits.size(); ++k) {
                if (mask[k]) {
                    p[k] = std::exp(logits[k] - mx);
                    z += p[k];
                }
            }
            double u = std::uniform_real_distribution<double>(0.0, 1.0)(*rng) * z;
            int chosen = 6;  // hold
            for (std::size_t k = 0; k < p.size(); ++k) {
                if (!mask[k]) continue;
                u -= p[k];
                chosen = static_cast<int>(k);
                if (u <= 0.0) break;
            }
            actions.push_back(env.decode_action(idx, chosen));
        }
        return actions;
    };
}

GameResult play_game(Env& env, const Controller& red, const Controller& blue,
                     std::uint64_t seed, Side first_mover, std::ostream* trace) {
    env.set_priority(first_mover);
    env.reset(seed);
    GameResult g;
    g.seed = seed;
    g.first_mover = first_mover;
    const int red_roster = env.roster_size(Side::Red);
    while (!env.state().done) {
        const auto red_actions = red(env, Side::Red);
        const auto blue_actions = blue(env, Side::Blue);
        const EventLog log = env.step(red_actions, blue_actions);
        if (trace) *trace << log.to_json_line() << '\n';
        for (const auto& k : log.kills) {
            // red_kills counts pieces destroyed BY red.
            (k.piece >= red_roster ? g.red_kills : g.blue_kills) += 1;
        }
        if (log.victory) g.cause = log.victory->cause;
    }
    const auto& st = env.state();
    g.winner = *st.winner;
    g.turns = static_cast<int>(st.turn);
    g.red_survivors = static_cast<int>(env.alive_indices(Side::Red).size());
    g.blue_survivors = static_cast<int>(env.alive_indices(Side::Blue).size());
    for (const auto& p : st.pieces) {
        if (p.alive && p.pos == env.map().control_point()) {
            (p.side == Side::Red ? g.red_reached_goal : g.blue_reached_goal) = true;
        }
    }
    return g;
}

}  // namespace

RunReport run_eval(const std::string& red_spec, int games, std::uint64_t seed,
                   const std::string& scenario_path, const std::string& out_dir,
                   const std::string& traces_dir) {
    if (games < 1) throw std::invalid_argument("run_eval: games must be >= 1");
    const Scenario scenario = load_scenario(scenario_path);
    Env env(scenario);

    Controller red;
    auto red_rng = std::make_shared<std::mt19937_64>();
    if (red_spec == "rule") {
        red = rule_controller();
    } else {
        PolicyParams policy = load_checkpoint(red_spec);
        if (policy.obs_dim != Env::observation_dim(scenario, Side::Red) ||
            policy.n_actions != Env::action_count(scenario, Side::Red)) {
            throw std::runtime_error(
                "checkpoint/scenario dimension mismatch: checkpoint expects obs " +
                std::to_string(policy.obs_dim) + ", scenario provides " +
                std::to_string(Env::observation_dim(scenario, Side::Red)));
        }
        red = policy_controller(std::move(policy), red_rng);
    }
    const Controller blue = rule_controller();

    RunReport report;
    if (!traces_dir.empty()) fs::create_directories(traces_dir);
    for (int g = 0; g < games; ++g) {
        const std::uint64_t game_seed = derive_seed(seed, static_cast<std::uint64_t>(g));
        red_rng->seed(derive_seed(game_seed, 1));
        const Side first = (g % 2 == 0) ? Side::Red : Side::Blue;
        std::ofstream trace;
        if (!traces_dir.empty()) {
            char name[32];
            std::snprintf(name, sizeof name, "game_%04d.trace", g);
            trace = open_out(fs::path(traces_dir) / name);
            json header;
            header["trace_version"] = 1;
            header["scenario"] = scenario.name;
            header["seed"] = game_seed;
            header["first_mover"] = side_to_string(first);
            trace << header.dump() << '\n';
        }
        GameResult result =
            play_game(env, red, blue, game_seed, first, trace.is_open() ? &trace : nullptr);
        result.game = g;
        (result.winner == Side::Red ? report.red_wins : report.blue_wins) += 1;
        report.games.push_back(result);
    }
    report.red_rate = static_cast<double>(report.red_wins) / games;

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        {
            auto out = open_out(fs::path(out_dir) / "report.csv");
            out << "game,seed,first_mover,winner,cause,turns,red_kills,blue_kills,"
                   "red_survivors,blue_survivors,red_reached_goal,blue_reached_goal\n";
            auto cause_str = [](VictoryCause c) {
                return c == VictoryCause::ControlPoint ? "control"
                       : c == VictoryCause::Annihilation ? "annihilation"
                                                         : "turn_limit";
            };
            for (const auto& g : report.games) {
                out << g.game << ',' << g.seed << ',' << side_to_string(g.first_mover)
                    << ',' << side_to_string(g.winner) << ',' << cause_str(g.cause)
                    << ',' << g.turns << ',' << g.red_kills << ',' << g.blue_kills
                    << ',' << g.red_survivors << ',' << g.blue_survivors << ','
                    << (g.red_reached_goal ? 1 : 0) << ',' << (g.blue_reached_goal ? 1 : 0)
                    << '\n';
            }
        }
        {
            auto out = open_out(fs::path(out_dir) / "winrate_series.csv");
            out << "game,red_cum_wins,blue_cum_wins,red_rate\n";
            int rw = 0, bw = 0;
            for (const auto& g : report.games) {
                (g.winner == Side::Red ? rw : bw) += 1;
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(rw) / (g.game + 1));
                out << g.game << ',' << rw << ',' << bw << ',' << buf << '\n';
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

std::vector<EventLog> read_trace(const std::string& trace_path) {
    std::ifstream in(trace_path);
    if (!in) throw std::runtime_error("cannot open trace: " + trace_path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file");
    const json header = json::parse(line);
    if (header.value("trace_version", 0) != 1) {
        throw std::runtime_error("trace version mismatch (want 1)");
    }
    std::vector<EventLog> logs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        logs.push_back(EventLog::from_json_line(line));
    }
    return logs;
}

void run_replay(const std::string& trace_path, std::ostream& out) {
    std::ifstream in(trace_path);
    if (!in) throw std::runtime_error("cannot open trace: " + trace_path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file");
    const json header = json::parse(line);
    if (header.value("trace_version", 0) != 1) {
        throw std::runtime_error("trace version mismatch (want 1)");
    }
    out << "trace scenario=" << header.value("scenario", std::string("?"))
        << " seed=" << header.value("seed", 0ULL)
        << " first_mover=" << header.value("first_mover", std::string("?")) << '\n';
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const EventLog log = EventLog::from_json_line(line);
        out << "turn " << log.turn << " (alive red=" << log.alive_red_start
            << " blue=" << log.alive_blue_start << ")\n";
        for (const auto& m : log.moves) {
            const auto [fc, fr] = hex_to_offset(m.from);
            const auto [tc, tr] = hex_to_offset(m.to);
            out << "  piece " << m.piece << " move (" << fc << ',' << fr << ")->(" << tc
                << ',' << tr << ")";
            if (m.boundary_bump) out << " [boundary]";
            if (m.blocked) out << " [blocked]";
            if (m.moved) out << " delta=" << m.dist_delta;
            out << '\n';
        }
        for (const auto& s : log.shots) {
            out << "  piece " << s.shooter << " shoots " << s.target
                << (s.hit ? " HIT" : " miss:" + s.miss_reason) << '\n';
        }
        for (const auto& k : log.kills) {
            out << "  piece " << k.piece << " destroyed by " << k.by << '\n';
        }
        if (log.victory) {
            out << "  victory " << side_to_string(log.victory->winner) << " (";
            switch (log.victory->cause) {
                case VictoryCause::ControlPoint: out << "control point"; break;
                case VictoryCause::Annihilation: out << "annihilation"; break;
                case VictoryCause::TurnLimit: out << "turn limit"; break;
            }
            out << ")\n";
        }
    }
}

}  // namespace ifwar
