#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cae/cli.hpp"
#include "cae/csv.hpp"
#include "cae/model_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cae");
    std::ostringstream out, err;
    const int code = cae::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("cae_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream(path) << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"fit"}).code == 2);
    CHECK(run({"gen", "--output", "x.csv"}).code == 2);  // --seed is required
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen, fit, label, eval end to end") {
    TempDir dir;
    const auto data = dir / "data.csv";
    auto r = run({"gen", "--seed", "5", "--output", data, "--points-per-component", "300"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("points") == 1980);

    // Same seed, same bytes.
    const auto again = dir / "again.csv";
    REQUIRE(run({"gen", "--seed", "5", "-o", again, "--points-per-component", "300"}).code == 0);
    CHECK(read_file(data) == read_file(again));

    const auto model = dir / "model.json";
    r = run({"fit", "--input", data, "--labeled", "--output", model});
    REQUIRE(r.code == 0);
    const json summary = json::parse(r.out);
    CHECK(summary.at("clusters").get<int>() >= 1);
    CHECK_FALSE(summary.at("lambda").is_null());
    CHECK(summary.at("presented_count") == 1980);

    const auto labels = dir / "labels.csv";
    REQUIRE(run({"label", "-m", model, "-i", data, "--labeled", "-o", labels}).code == 0);
    const auto labeled = cae::read_csv_file(labels, {false, true});
    CHECK(labeled.rows() == 1980);
    CHECK(labeled.cols == 3);  // features, truth, cluster

    r = run({"eval", "-m", model, "-i", data});
    REQUIRE(r.code == 0);
    const json ev = json::parse(r.out);
    CHECK(ev.at("nmi").get<double>() > 0.5);
    CHECK(ev.at("nmi").get<double>() <= 1.0);
    CHECK(ev.at("ari").get<double>() <= 1.0);
    CHECK(ev.at("n_points") == 1800);
    CHECK(ev.at("n_nodes") == summary.at("nodes"));

    r = run({"eval", "-m", model, "-i", data, "--include-noise"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("n_points") == 1980);
}

TEST_CASE("labels are constant within each blob of a converged toy run") {
    TempDir dir;
    const auto data = dir / "toy.csv";
    REQUIRE(run({"gen", "--seed", "1", "-o", data, "--noise", "0", "--component",
                 "blob:0.2,0.2,0.005,1000", "--component", "blob:0.8,0.8,0.005,1000"})
                .code == 0);
    const auto model = dir / "toy.json";
    REQUIRE(run({"fit", "-i", data, "--labeled", "-o", model}).code == 0);
    const auto out = dir / "toy_labels.csv";
    REQUIRE(run({"label", "-m", model, "-i", data, "--labeled", "-o", out}).code == 0);
    const auto t = cae::read_csv_file(out, {false, true});  // truth moves into the features
    std::map<std::int64_t, std::set<std::int64_t>> clusters_per_class;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        clusters_per_class[static_cast<std::int64_t>(t.values[r * 3 + 2])].insert(t.labels[r]);
    }
    REQUIRE(clusters_per_class.size() == 2);
    CHECK(clusters_per_class[0].size() == 1);
    CHECK(clusters_per_class[1].size() == 1);
    CHECK(*clusters_per_class[0].begin() != *clusters_per_class[1].begin());

    const auto r = run({"eval", "-m", model, "-i", data});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("nmi").get<double>() == doctest::Approx(1.0));
    CHECK(json::parse(r.out).at("ari").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("a point equal to a node weight gets that node's component") {
    TempDir dir;
    const auto data = dir / "d.csv";
    REQUIRE(run({"gen", "--seed", "2", "-o", data, "--points-per-component", "200"}).code == 0);
    const auto model = dir / "m.json";
    REQUIRE(run({"fit", "-i", data, "--labeled", "-o", model}).code == 0);
    const auto m = cae::load_model(model);
    const auto comps = m.state.net.connected_components();
    std::ostringstream rows;
    for (std::size_t i = 0; i < m.state.net.size(); ++i) {
        const auto w = m.state.net.weights().subspan(2 * i, 2);
        cae::write_csv_row(rows, w.data(), 2, {});
    }
    const auto in = dir / "nodes.csv";
    write_file(in, rows.str());
    const auto out = dir / "nodes_labeled.csv";
    REQUIRE(run({"label", "-m", model, "-i", in, "-o", out}).code == 0);
    const auto t = cae::read_csv_file(out, {false, true});
    REQUIRE(t.rows() == m.state.net.size());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        CHECK(t.labels[i] == static_cast<std::int64_t>(comps.at(m.state.net.ids()[i])));
    }
}

TEST_CASE("data errors exit 2") {
    TempDir dir;
    const auto empty = dir / "empty.csv";
    write_file(empty, "");
    const auto model = dir / "m.json";
    CHECK(run({"fit", "-i", empty, "-o", model}).code == 2);

    const auto ragged = dir / "ragged.csv";
    write_file(ragged, "0.1,0.2\n0.3\n");
    CHECK(run({"fit", "-i", ragged, "-o", model}).code == 2);

    const auto text = dir / "text.csv";
    write_file(text, "0.1,abc\n");
    CHECK(run({"fit", "-i", text, "-o", model}).code == 2);

    const auto good = dir / "good.csv";
    write_file(good, "0.1,0.2\n0.1,0.2\n0.9,0.9\n0.9,0.9\n0.1,0.2\n");
    REQUIRE(run({"fit", "-i", good, "-o", model}).code == 0);

    const auto wide = dir / "wide.csv";
    write_file(wide, "0.1,0.2,0.3\n");
    CHECK(run({"fit", "-i", wide, "--resume", model, "-o", dir / "m2.json"}).code == 2);
    CHECK(run({"label", "-m", model, "-i", wide, "-o", dir / "l.csv"}).code == 2);

    // No truth column.
    CHECK(run({"eval", "-m", model, "-i", good}).code == 2);

    const auto broken = dir / "broken.json";
    write_file(broken, "{\"format\": \"cae-model\"}");
    CHECK(run({"eval", "-m", broken, "-i", good}).code == 2);
    CHECK(run({"fit", "-i", good, "--resume", dir / "missing.json", "-o", model}).code == 2);
    CHECK(run({"gen", "--seed", "1", "-o", dir / "g.csv", "--noise", "1.5"}).code == 2);
    CHECK(run({"gen", "--seed", "1", "-o", dir / "g.csv", "--order", "sideways"}).code == 2);
    CHECK(run({"gen", "--seed", "1", "-o", dir / "g.csv", "--component", "blob:1"}).code == 2);
}

TEST_CASE("label of an empty input is an empty output") {
    TempDir dir;
    const auto good = dir / "good.csv";
    write_file(good, "0.1,0.2\n0.1,0.2\n0.9,0.9\n");
    const auto model = dir / "m.json";
    REQUIRE(run({"fit", "-i", good, "-o", model}).code == 0);
    const auto empty = dir / "empty.csv";
    write_file(empty, "");
    const auto out = dir / "out.csv";
    CHECK(run({"label", "-m", model, "-i", empty, "-o", out}).code == 0);
    CHECK(fs::exists(out));
    CHECK(read_file(out).empty());
}

TEST_CASE("resume continues learning on a new class") {
    TempDir dir;
    const auto first = dir / "first.csv";
    const auto second = dir / "second.csv";
    REQUIRE(run({"gen", "--seed", "3", "-o", first, "--noise", "0", "--component",
                 "blob:0.2,0.2,0.005,1000", "--component", "blob:0.8,0.8,0.005,1000"})
                .code == 0);
    REQUIRE(run({"gen", "--seed", "4", "-o", second, "--noise", "0", "--component",
                 "blob:0.2,0.8,0.005,1000"})
                .code == 0);
    const auto m1 = dir / "m1.json";
    const auto m2 = dir / "m2.json";
    const auto r1 = run({"fit", "-i", first, "--labeled", "-o", m1});
    REQUIRE(r1.code == 0);
    const auto r2 = run({"fit", "-i", second, "--labeled", "--resume", m1, "-o", m2});
    REQUIRE(r2.code == 0);
    CHECK(json::parse(r2.out).at("nodes").get<int>() > json::parse(r1.out).at("nodes").get<int>());
    CHECK(json::parse(r2.out).at("presented_count") == 3000);

    // The earlier classes are still separated as well as before.
    const auto e1 = run({"eval", "-m", m1, "-i", first});
    const auto e2 = run({"eval", "-m", m2, "-i", first});
    REQUIRE(e1.code == 0);
    REQUIRE(e2.code == 0);
    CHECK(json::parse(e1.out).at("nmi").get<double>() == doctest::Approx(1.0));
    CHECK(json::parse(e2.out).at("nmi").get<double>() == doctest::Approx(1.0));

    // The new class lands in clusters of its own.
    const auto old_labels = dir / "old.csv";
    const auto new_labels = dir / "new.csv";
    REQUIRE(run({"label", "-m", m2, "-i", first, "--labeled", "-o", old_labels}).code == 0);
    REQUIRE(run({"label", "-m", m2, "-i", second, "--labeled", "-o", new_labels}).code == 0);
    const auto a = cae::read_csv_file(old_labels, {false, true});
    const auto b = cae::read_csv_file(new_labels, {false, true});
    const std::set<std::int64_t> old_ids(a.labels.begin(), a.labels.end());
    for (auto id : b.labels) CHECK(old_ids.count(id) == 0);
}

TEST_CASE("minmax scaling is stored and reused") {
    TempDir dir;
    const auto data = dir / "wide.csv";
    write_file(data, "10,200\n10,200\n30,400\n30,400\n10,200\n");
    const auto model = dir / "m.json";
    REQUIRE(run({"fit", "-i", data, "--minmax", "-o", model}).code == 0);
    const auto m = cae::load_model(model);
    REQUIRE(m.scaling.has_value());
    CHECK(m.scaling->lo == std::vector<double>{10.0, 200.0});
    for (double v : m.state.net.weights()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    const auto plain = dir / "plain.json";
    REQUIRE(run({"fit", "-i", data, "-o", plain}).code == 0);
    CHECK(run({"fit", "-i", data, "--resume", plain, "--minmax", "-o", dir / "x.json"}).code == 2);
}
