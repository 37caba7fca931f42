#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "mapforge/bijection.hpp"
#include "mapforge/experiments.hpp"
#include "mapforge/io.hpp"
#include "mapforge/tree.hpp"

using namespace mapforge;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("mapforge_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

ExperimentConfig scaling_config(const fs::path& out) {
    ExperimentConfig c;
    c.experiment = "scaling";
    c.variant = "tree-height";
    c.grid = {64, 128, 256, 512};
    c.reps = 8;
    c.seed = 17;
    c.out_dir = out.string();
    return c;
}

int run_cli(const std::string& args) {
    const char* cli = std::getenv("MAPFORGE_CLI");
    REQUIRE(cli != nullptr);
    const int status = std::system((std::string(cli) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config hash ignores threads and tracks parameters") {
    ExperimentConfig a = scaling_config("x");
    ExperimentConfig b = a;
    b.threads = 4;
    CHECK(config_hash(a) == config_hash(b));
    b.seed = 18;
    CHECK(config_hash(a) != config_hash(b));
    CHECK(hex64(config_hash(a)).size() == 16);
    CHECK(hex64(255) == "00000000000000ff");
}

TEST_CASE("replicates do not depend on thread count") {
    const ReplicateFn<double> fn = [](int, Rng& rng) {
        return static_cast<double>(height(sample_plane_tree(300, rng)));
    };
    const auto serial = run_replicates_serial(40, 5, fn);
    const auto parallel = run_replicates_parallel(40, 5, 3, fn);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(*serial[i] == *parallel[i]);
}

TEST_CASE("parallel replicate errors propagate") {
    const ReplicateFn<int> fn = [](int i, Rng&) -> int {
        if (i == 3) throw Error(ErrorCode::InvalidArgument, "boom");
        return i;
    };
    CHECK_THROWS_AS(run_replicates_parallel(8, 1, 2, fn), Error);
}

TEST_CASE("scaling output is byte-identical across runs and thread counts") {
    const auto d1 = scratch("scale1"), d2 = scratch("scale2");
    auto c1 = scaling_config(d1);
    auto c2 = scaling_config(d2);
    c2.threads = 2;
    cmd_scaling(c1);
    cmd_scaling(c2);
    for (const char* f : {"scaling_tree-height.csv", "scaling_tree-height_summary.csv", "scaling_tree-height_fit.csv"})
        CHECK(read_file((d1 / f).string()) == read_file((d2 / f).string()));
    CHECK(fs::exists(d1 / "scaling.manifest.json"));
}

TEST_CASE("scaling grid validation") {
    auto c = scaling_config(scratch("grid"));
    c.grid = {64, 128, 256};
    CHECK_THROWS_AS(cmd_scaling(c), Error);
    c.grid = {64, 128, 300, 512};
    CHECK_THROWS_AS(cmd_scaling(c), Error);
    c.grid = {64, 128, 256, 512};
    c.reps = 1;
    CHECK_THROWS_AS(cmd_scaling(c), Error);
}

TEST_CASE("statistics helpers") {
    CHECK(mean({1, 2, 3}) == doctest::Approx(2));
    CHECK(quantile({4, 1, 3, 2}, 0.5) == doctest::Approx(2.5));
    const auto fit = fit_line({0, 1, 2}, {1, 3, 5});
    CHECK(fit.slope == doctest::Approx(2));
    CHECK(fit.intercept == doctest::Approx(1));
    CHECK(total_variation({0.5, 0.5}, {1.0}) == doctest::Approx(0.5));
    const auto tail = summarize_tail({1, 1, 2, 2, 3, 10}, 100);
    CHECK(tail.k.front() <= 1);
    CHECK(tail.fraction_above_n02 == doctest::Approx(2.0 / 6));
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorCode::ValidationFailed) == 2);
    CHECK(exit_code_for(ErrorCode::BudgetExceeded) == 3);
    CHECK(exit_code_for(ErrorCode::MalformedInput) == 1);
}

TEST_CASE("budget") {
    CHECK_FALSE(Budget(-1).expired());
    const Budget tiny(1e-9);
    volatile double s = 0;
    for (int i = 0; i < 100000; ++i) s = s + i;
    CHECK(tiny.expired());
}

TEST_CASE("a corrupted map is caught by validation") {
    Rng rng = make_rng(21, 0);
    auto s = run_pipeline(sample_labelled_tree(30, rng));
    auto clean = validate_sample(s, "bijection");
    for (const auto& c : clean)
        if (c.name == "distance-identity") CHECK(c.ok);
    // shift one label so the distance identity must break
    s.tree.labels[s.tree.shape.num_vertices() - 1] += 5;
    bool caught = false;
    for (const auto& c : validate_sample(s, "bijection"))
        if (c.name == "distance-identity") caught = !c.ok;
    CHECK(caught);
    CHECK_THROWS_AS(validate_sample(s, "nonsense"), Error);
}

TEST_CASE("validate writes counterexamples and fails with code 2") {
    const auto d = scratch("validate");
    ExperimentConfig c;
    c.experiment = "validate";
    c.variant = "bijection";
    c.grid = {2};
    c.exhaustive = true;
    c.out_dir = d.string();
    try {
        cmd_validate(c);
        FAIL("expected validation failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationFailed);
    }
    CHECK(fs::exists(d / "counterexample_0.json"));
}

TEST_CASE("command line tool") {
    const auto d = scratch("cli");
    CHECK(run_cli("sample --kind map --n 20 --seed 3 --out " + d.string()) == 0);
    CHECK(run_cli("series --system labelled-trees --order 12 --out " + d.string()) == 0);
    CHECK(run_cli("scaling --family tree-height --grid 64,128,256,512 --reps 4 --out " + d.string()) == 0);
    CHECK(run_cli("scaling --family tree-height --grid 64,128 --reps 4 --out " + d.string()) == 1);
    CHECK(run_cli("validate --pipeline bijection --n 2 --exhaustive --out " + d.string()) == 2);
    CHECK(run_cli("validate --pipeline all --n 200 --reps 5 --out " + d.string()) == 0);
    CHECK(run_cli("frobnicate") != 0);
}
