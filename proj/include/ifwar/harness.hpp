#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifwar/snapshot.hpp"
#include "ifwar/trainer.hpp"

namespace ifwar {

/// Deterministic per-game seed stream: splitmix64 over master + index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct AssessOutput {
    Snapshot snapshot;
    IndicatorTables tables;
    ThreatAssessment assessment;
    std::string ranking_string;  // e.g. "T6>T7>..."
};

/// Loads a snapshot and params file, runs the six-indicator pipeline and
/// the MADM assessment, and (when out_dir is nonempty) writes one CSV per
/// indicator plus matrix.csv, weights.csv, assessment.csv and ranking.txt.
AssessOutput run_assess(const std::string& snapshot_path, const std::string& params_path,
                        const std::string& out_dir);

struct TrainFileConfig {
    TrainConfig train;
    std::string scenario_path;  // resolved relative to the config file
};

TrainFileConfig load_train_config(const std::string& path);

struct TrainOutput {
    TrainResult result;
    std::string checkpoint_path;
    std::string curves_path;
};

/// Trains per the config file (CLI overrides applied on top) and writes
/// checkpoint.bin plus curves.csv under out_dir.
TrainOutput run_train(const std::string& config_path, Algo algo,
                      std::optional<std::uint64_t> seed_override,
                      std::optional<long> steps_override, const std::string& out_dir);

struct GameResult {
    int game = 0;
    std::uint64_t seed = 0;
    Side first_mover = Side::Red;
    Side winner = Side::Red;
    VictoryCause cause = VictoryCause::ControlPoint;
    int turns = 0;
    int red_kills = 0;
    int blue_kills = 0;
    int red_survivors = 0;
    int blue_survivors = 0;
    bool red_reached_goal = false;
    bool blue_reached_goal = false;
};

struct RunReport {
    std::vector<GameResult> games;
    int red_wins = 0;
    int blue_wins = 0;
    double red_rate = 0.0;
};

/// Plays `games` games of red_spec ("rule" or a checkpoint path) against
/// the rule policy. Per-game seeds derive from the master seed; the
/// movement-priority side alternates with game parity. Writes report.csv
/// and winrate_series.csv under out_dir (when nonempty) and one trace file
/// per game under traces_dir (when nonempty).
RunReport run_eval(const std::string& red_spec, int games, std::uint64_t seed,
                   const std::string& scenario_path, const std::string& out_dir,
                   const std::string& traces_dir = "");

/// Renders a trace file as turn-by-turn text. Throws on a version mismatch.
void run_replay(const std::string& trace_path, std::ostream& out);

/// Parses the event logs back out of a trace file (header skipped).
std::vector<EventLog> read_trace(const std::string& trace_path);

void write_curves_csv(const std::string& path, const std::vector<EpisodeStat>& episodes);

}  // namespace ifwar
