#include "cae/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cae/csv.hpp"
#include "cae/datagen.hpp"
#include "cae/learner.hpp"
#include "cae/metrics.hpp"
#include "cae/model_io.hpp"

namespace cae::cli {

namespace {

using nlohmann::json;

/// Input or data problem that maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitArgs {
    std::string input;
    std::string resume;
    std::string output;
    bool header = false;
    bool labeled = false;
    bool minmax = false;
};

struct LabelArgs {
    std::string model;
    std::string input;
    std::string output;
    bool header = false;
    bool labeled = false;
};

struct EvalArgs {
    std::string model;
    std::string input;
    bool header = false;
    bool include_noise = false;
};

struct GenArgs {
    std::uint64_t seed = 0;
    std::string output;
    std::size_t points = 1500;
    double noise = 0.1;
    std::string order = "stationary";
    std::vector<std::string> components;
};

json summary(const LearnerState& s) {
    return json{{"nodes", s.net.size()},
                {"edges", s.net.edge_count()},
                {"clusters", s.net.component_count()},
                {"lambda", s.lambda ? json(*s.lambda) : json(nullptr)},
                {"v_threshold", s.v_threshold ? json(*s.v_threshold) : json(nullptr)},
                {"presented_count", s.presented_count}};
}

void require_dimension(const CsvTable& table, const LearnerState& state) {
    if (table.cols != state.dimension) {
        throw UsageError("input has " + std::to_string(table.cols) +
                         " feature columns but the model expects " +
                         std::to_string(state.dimension));
    }
}

std::vector<double> scaled_copy(const CsvTable& table, const ModelFile& model) {
    std::vector<double> values = table.values;
    if (model.scaling) model.scaling->apply(values);
    return values;
}

int cmd_fit(const FitArgs& a, std::ostream& out) {
    const CsvTable table = read_csv_file(a.input, {a.header, a.labeled});
    if (table.rows() == 0) {
        throw UsageError("'" + a.input + "' contains no data rows");
    }

    ModelFile model;
    if (!a.resume.empty()) {
        model = load_model(a.resume);
        require_dimension(table, model.state);
        if (a.minmax && !model.scaling) {
            throw UsageError("--minmax given but the resumed model was trained without scaling");
        }
    } else {
        model.state = LearnerState(table.cols);
        if (a.minmax) model.scaling = MinMaxScaling::fit(table.values, table.cols);
    }

    const std::vector<double> values = scaled_copy(table, model);
    train(model.state, values);
    save_model(a.output, model);
    out << summary(model.state).dump() << '\n';
    return kExitOk;
}

int cmd_label(const LabelArgs& a, std::ostream&) {
    const ModelFile model = load_model(a.model);
    const CsvTable table = read_csv_file(a.input, {a.header, a.labeled});
    std::ofstream dest(a.output);
    if (!dest) throw UsageError("cannot write '" + a.output + "'");
    if (table.rows() == 0) return kExitOk;

    require_dimension(table, model.state);
    if (model.state.net.empty()) throw UsageError("model has no nodes to label against");
    const std::vector<NodeId> clusters = label_points(model.state, scaled_copy(table, model));
    for (std::size_t r = 0; r < table.rows(); ++r) {
        std::vector<std::int64_t> extra;
        if (a.labeled) extra.push_back(table.labels[r]);
        extra.push_back(static_cast<std::int64_t>(clusters[r]));
        write_csv_row(dest, table.values.data() + r * table.cols, table.cols, extra);
    }
    return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const ModelFile model = load_model(a.model);
    const CsvTable raw = read_csv_file(a.input, {a.header, false});
    if (raw.rows() == 0) throw UsageError("'" + a.input + "' contains no data rows");
    if (raw.cols == model.state.dimension) {
        throw UsageError("input has no truth column (expected " +
                         std::to_string(model.state.dimension) + " features plus a label)");
    }
    const CsvTable table = read_csv_file(a.input, {a.header, true});
    require_dimension(table, model.state);
    if (model.state.net.empty()) throw UsageError("model has no nodes to evaluate");

    const std::vector<NodeId> clusters = label_points(model.state, scaled_copy(table, model));
    ClusterLabeling predicted;
    ClusterLabeling truth;
    for (std::size_t r = 0; r < table.rows(); ++r) {
        if (!a.include_noise && table.labels[r] == kNoiseLabel) continue;
        predicted.push_back(static_cast<std::int64_t>(clusters[r]));
        truth.push_back(table.labels[r]);
    }
    if (predicted.size() < 2) {
        throw UsageError("need at least two evaluated points");
    }
    json result{{"nmi", nmi(predicted, truth)},
                {"ari", ari(predicted, truth)},
                {"n_nodes", model.state.net.size()},
                {"n_clusters", model.state.net.component_count()},
                {"n_points", predicted.size()}};
    out << result.dump() << '\n';
    return kExitOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    PresentationOrder order;
    if (a.order == "stationary") {
        order = PresentationOrder::kStationary;
    } else if (a.order == "nonstationary") {
        order = PresentationOrder::kNonStationary;
    } else {
        throw UsageError("--order must be 'stationary' or 'nonstationary'");
    }
    StreamSpec spec = default_stream_spec(a.points, a.noise, a.seed, order);
    if (!a.components.empty()) {
        spec.components.clear();
        for (const auto& c : a.components) spec.components.push_back(parse_component(c));
    }
    const LabeledData data = generate(spec);

    std::ofstream dest(a.output);
    if (!dest) throw UsageError("cannot write '" + a.output + "'");
    for (std::size_t r = 0; r < data.size(); ++r) {
        write_csv_row(dest, data.values.data() + r * data.dim, data.dim, {data.labels[r]});
    }
    out << json{{"points", data.size()}, {"components", spec.components.size()}}.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parameter-free ART topological clustering", "cae"};
    app.require_subcommand(1);

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Train (or resume training) on a CSV stream");
    fit_cmd->add_option("-i,--input", fit.input, "Input CSV")->required();
    fit_cmd->add_option("-r,--resume", fit.resume, "Model to continue training");
    fit_cmd->add_option("-o,--output", fit.output, "Model output path")->required();
    fit_cmd->add_flag("--header", fit.header, "Skip the first line");
    fit_cmd->add_flag("--labeled", fit.labeled, "Last column is a label (ignored)");
    fit_cmd->add_flag("--minmax", fit.minmax, "Rescale features to [0,1] (stored in the model)");

    LabelArgs label;
    auto* label_cmd = app.add_subcommand("label", "Append a cluster column to each row");
    label_cmd->add_option("-m,--model", label.model, "Model path")->required();
    label_cmd->add_option("-i,--input", label.input, "Input CSV")->required();
    label_cmd->add_option("-o,--output", label.output, "Output CSV")->required();
    label_cmd->add_flag("--header", label.header, "Skip the first line");
    label_cmd->add_flag("--labeled", label.labeled, "Input carries a trailing truth column");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Score a model against labelled data");
    eval_cmd->add_option("-m,--model", eval.model, "Model path")->required();
    eval_cmd->add_option("-i,--input", eval.input, "CSV with a trailing truth column")->required();
    eval_cmd->add_flag("--header", eval.header, "Skip the first line");
    eval_cmd->add_flag("--include-noise", eval.include_noise,
                       "Score noise points (label -1) as their own class");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic 2-D stream");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Output CSV")->required();
    gen_cmd->add_option("--points-per-component", gen.points, "Points per default component")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--noise", gen.noise, "Uniform noise per component point, in [0,1)");
    gen_cmd->add_option("--order", gen.order, "stationary | nonstationary");
    gen_cmd->add_option("--component", gen.components,
                        "blob:cx,cy,std,n | ring:cx,cy,r,width,n | rect:cx,cy,hw,hh,n "
                        "(repeatable; replaces the default six blobs)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*fit_cmd) return cmd_fit(fit, out);
        if (*label_cmd) return cmd_label(label, out);
        if (*eval_cmd) return cmd_eval(eval, out);
        if (*gen_cmd) return cmd_gen(gen, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CsvError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ModelFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cae::cli
