#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ifwar/harness.hpp"
#include "test_util.hpp"

using namespace ifwar;
namespace tu = ifwar::testutil;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("ifwar_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("assess writes the golden ranking and byte-stable tables") {
    const std::string snap = tu::data_dir() + "/snapshots/t1.json";
    const std::string params = tu::data_dir() + "/params/paper.json";
    const fs::path out1 = fresh_dir("assess1");
    const fs::path out2 = fresh_dir("assess2");

    const AssessOutput a = run_assess(snap, params, out1.string());
    CHECK(a.ranking_string == tu::kGoldenRanking);
    CHECK(slurp(out1 / "ranking.txt") == tu::kGoldenRanking + "\n");
    for (const char* name :
         {"distance.csv", "speed.csv", "attack.csv", "visibility.csv",
          "environment.csv", "defense.csv", "matrix.csv", "weights.csv",
          "assessment.csv", "ranking.txt"}) {
        CHECK(fs::exists(out1 / name));
    }

    run_assess(snap, params, out2.string());
    for (const char* name : {"matrix.csv", "assessment.csv", "weights.csv"}) {
        CHECK(slurp(out1 / name) == slurp(out2 / name));
    }
    fs::remove_all(out1);
    fs::remove_all(out2);
}

TEST_CASE("assess on degenerate snapshots") {
    const fs::path dir = fresh_dir("assess_degenerate");
    const std::string params = tu::data_dir() + "/params/paper.json";

    const char* single = R"({"version":1,"label":"t1","targets":[
        {"number":1,"distance":30,"control_distance":10,"armor":"light",
         "nominal_speed":150,"relative_speed":350}]})";
    std::ofstream(dir / "single.json") << single;
    const AssessOutput one = run_assess((dir / "single.json").string(), params, "");
    CHECK(one.assessment.closeness.size() == 1);
    CHECK(one.ranking_string == "T1");

    const char* same = R"({"version":1,"label":"t1","targets":[
        {"number":1,"distance":30,"control_distance":10,"armor":"light",
         "nominal_speed":150,"relative_speed":350},
        {"number":2,"distance":30,"control_distance":10,"armor":"light",
         "nominal_speed":150,"relative_speed":350}]})";
    std::ofstream(dir / "same.json") << same;
    const AssessOutput two = run_assess((dir / "same.json").string(), params, "");
    CHECK(two.assessment.closeness[0] ==
          doctest::Approx(two.assessment.closeness[1]).epsilon(1e-12));
    CHECK(two.ranking_string == "T1>T2");
    fs::remove_all(dir);
}

TEST_CASE("snapshot schema violations carry row diagnostics") {
    const fs::path dir = fresh_dir("assess_bad");
    const char* bad = R"({"version":1,"label":"t1","targets":[
        {"number":1,"distance":30,"control_distance":10,"armor":"light",
         "nominal_speed":150,"relative_speed":350},
        {"number":2,"distance":30,"control_distance":10,"armor":"mithril",
         "nominal_speed":150,"relative_speed":350}]})";
    std::ofstream(dir / "bad.json") << bad;
    try {
        load_snapshot((dir / "bad.json").string());
        FAIL("expected a schema error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 1") != std::string::npos);
        CHECK(msg.find("mithril") != std::string::npos);
    }
    CHECK_THROWS(load_snapshot("/nonexistent.json"));
    CHECK_THROWS_AS(snapshot_from_json_text("{\"version\":9,\"targets\":[]}"),
                    std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("zero-step training yields the seed-initialized policy") {
    const fs::path out = fresh_dir("train0");
    const TrainOutput t = run_train(tu::data_dir() + "/configs/desk.json",
                                    Algo::MadmPpo, 123, 0L, out.string());
    const Scenario scenario = load_scenario(tu::data_dir() + "/scenarios/desk2v2.json");
    const PolicyParams fresh = make_policy(scenario, Side::Red, 64, 123);
    CHECK(t.result.policy.actor.params() == fresh.actor.params());
    CHECK(t.result.policy.critic.params() == fresh.critic.params());
    CHECK(t.result.episodes.empty());
    const PolicyParams reloaded = load_checkpoint(t.checkpoint_path);
    CHECK(reloaded.actor.params() == fresh.actor.params());
    fs::remove_all(out);
}

TEST_CASE("same seed twice gives identical curves and checkpoints") {
    const fs::path o1 = fresh_dir("train_rep1");
    const fs::path o2 = fresh_dir("train_rep2");
    run_train(tu::data_dir() + "/configs/desk.json", Algo::Ppo, 9, 3000L, o1.string());
    run_train(tu::data_dir() + "/configs/desk.json", Algo::Ppo, 9, 3000L, o2.string());
    CHECK(slurp(o1 / "curves.csv") == slurp(o2 / "curves.csv"));
    CHECK(slurp(o1 / "checkpoint.bin") == slurp(o2 / "checkpoint.bin"));
    fs::remove_all(o1);
    fs::remove_all(o2);
}

TEST_CASE("eval accounts every game to exactly one side") {
    const std::string scenario = tu::data_dir() + "/scenarios/desk2v2.json";
    const RunReport one = run_eval("rule", 1, 5, scenario, "");
    CHECK(one.games.size() == 1);
    CHECK(one.red_wins + one.blue_wins == 1);

    const RunReport many = run_eval("rule", 40, 5, scenario, "");
    CHECK(many.red_wins + many.blue_wins == 40);
    CHECK_THROWS_AS(run_eval("rule", 0, 5, scenario, ""), std::invalid_argument);
    CHECK_THROWS_AS(run_eval("/missing/ckpt.bin", 1, 5, scenario, ""),
                    std::runtime_error);
}

TEST_CASE("checkpoint/scenario dimension mismatch is reported") {
    const fs::path dir = fresh_dir("dim_mismatch");
    Scenario small = load_scenario(tu::data_dir() + "/scenarios/desk2v2.json");
    small.blue.pieces.pop_back();  // different enemy roster, different dims
    const PolicyParams wrong = make_policy(small, Side::Red, 8, 1);
    save_checkpoint((dir / "ckpt.bin").string(), wrong);
    try {
        run_eval((dir / "ckpt.bin").string(), 1, 1,
                 tu::data_dir() + "/scenarios/desk2v2.json", "");
        FAIL("expected a dimension mismatch");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("dimension mismatch") != std::string::npos);
    }
    fs::remove_all(dir);
}

TEST_CASE("trace round trip reconstructs identical event logs") {
    const fs::path dir = fresh_dir("trace_rt");
    const Scenario scenario = load_scenario(tu::data_dir() + "/scenarios/desk2v2.json");
    Env env(scenario);
    env.reset(11);
    std::vector<EventLog> original;
    {
        std::ofstream trace(dir / "game.trace");
        trace << R"({"first_mover":"red","scenario":"desk-2v2","seed":11,"trace_version":1})"
              << '\n';
        while (!env.state().done) {
            const EventLog log =
                env.step(env.rule_policy(Side::Red), env.rule_policy(Side::Blue));
            trace << log.to_json_line() << '\n';
            original.push_back(log);
        }
    }
    const std::vector<EventLog> parsed = read_trace((dir / "game.trace").string());
    REQUIRE(parsed.size() == original.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == original[i]);

    std::ostringstream rendered;
    run_replay((dir / "game.trace").string(), rendered);
    CHECK(rendered.str().find("turn 0") != std::string::npos);
    CHECK(rendered.str().find("victory") != std::string::npos);

    // header-only trace renders the header and nothing else
    std::ofstream(dir / "empty.trace")
        << R"({"first_mover":"red","scenario":"x","seed":0,"trace_version":1})" << '\n';
    std::ostringstream header_only;
    run_replay((dir / "empty.trace").string(), header_only);
    CHECK(header_only.str().find("trace scenario=x") != std::string::npos);
    CHECK(header_only.str().find("turn") == std::string::npos);

    // version mismatch is rejected
    std::ofstream(dir / "v2.trace") << R"({"trace_version":2})" << '\n';
    CHECK_THROWS_AS(run_replay((dir / "v2.trace").string(), rendered),
                    std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("eval trace files are byte-stable across reruns") {
    const fs::path d1 = fresh_dir("eval_tr1");
    const fs::path d2 = fresh_dir("eval_tr2");
    const std::string scenario = tu::data_dir() + "/scenarios/desk2v2.json";
    run_eval("rule", 3, 17, scenario, (d1 / "out").string(), (d1 / "tr").string());
    run_eval("rule", 3, 17, scenario, (d2 / "out").string(), (d2 / "tr").string());
    for (int g = 0; g < 3; ++g) {
        char name[32];
        std::snprintf(name, sizeof name, "game_%04d.trace", g);
        CHECK(slurp(d1 / "tr" / name) == slurp(d2 / "tr" / name));
    }
    CHECK(slurp(d1 / "out" / "report.csv") == slurp(d2 / "out" / "report.csv"));
    CHECK(slurp(d1 / "out" / "winrate_series.csv") ==
          slurp(d2 / "out" / "winrate_series.csv"));
    fs::remove_all(d1);
    fs::remove_all(d2);
}
