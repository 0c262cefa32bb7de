#include "cae/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cae {

using nlohmann::json;

MinMaxScaling MinMaxScaling::fit(std::span<const double> rows, std::size_t dim) {
    if (dim == 0 || rows.empty() || rows.size() % dim != 0) {
        throw std::invalid_argument("min-max scaling needs a non-empty n x d matrix");
    }
    MinMaxScaling s;
    s.lo.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(dim));
    s.hi = s.lo;
    for (std::size_t off = dim; off < rows.size(); off += dim) {
        for (std::size_t j = 0; j < dim; ++j) {
            s.lo[j] = std::min(s.lo[j], rows[off + j]);
            s.hi[j] = std::max(s.hi[j], rows[off + j]);
        }
    }
    return s;
}

void MinMaxScaling::apply(std::span<double> rows) const {
    const std::size_t dim = lo.size();
    if (dim == 0 || rows.size() % dim != 0) {
        throw std::invalid_argument("min-max scaling: dimension mismatch");
    }
    for (std::size_t off = 0; off < rows.size(); off += dim) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double span = hi[j] - lo[j];
            rows[off + j] = span > 0.0 ? (rows[off + j] - lo[j]) / span : 0.0;
        }
    }
}

json model_to_json(const ModelFile& model) {
    const LearnerState& s = model.state;
    json doc;
    doc["format"] = "cae-model";
    doc["format_version"] = kModelFormatVersion;
    doc["dimension"] = s.dimension;
    doc["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
    doc["v_threshold"] = s.v_threshold ? json(*s.v_threshold) : json(nullptr);
    doc["presented_count"] = s.presented_count;
    doc["next_id"] = s.net.next_id();

    json nodes = json::array();
    const auto ids = s.net.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto w = s.net.weight(ids[i]);
        nodes.push_back({{"id", ids[i]},
                         {"weight", std::vector<double>(w.begin(), w.end())},
                         {"win_count", s.net.win_counts()[i]},
                         {"sigma", s.net.sigmas()[i]}});
    }
    doc["nodes"] = std::move(nodes);

    json edges = json::array();
    for (const Edge& e : s.net.edges()) edges.push_back(json::array({e.a, e.b, e.age}));
    doc["edges"] = std::move(edges);

    doc["active"] = {{"capacity", s.active.capacity()},
                     {"ids", std::vector<NodeId>(s.active.entries().begin(),
                                                 s.active.entries().end())}};
    doc["deleted_edges"] = {{"count", s.deleted.count}, {"mean_age", s.deleted.mean_age}};
    if (model.scaling) {
        doc["input_scaling"] = {{"min", model.scaling->lo}, {"max", model.scaling->hi}};
    }
    return doc;
}

namespace {

template <typename T>
T field(const json& obj, const char* key) {
    if (!obj.contains(key)) {
        throw ModelFormatError(std::string("model is missing '") + key + "'");
    }
    return obj.at(key).get<T>();
}

}  // namespace

ModelFile model_from_json(const json& doc) {
    try {
        if (!doc.is_object() || doc.value("format", std::string{}) != "cae-model") {
            throw ModelFormatError("not a cae model document");
        }
        const int version = field<int>(doc, "format_version");
        if (version != kModelFormatVersion) {
            throw ModelFormatError("unsupported model format version " + std::to_string(version));
        }

        const auto dim = field<std::size_t>(doc, "dimension");
        if (dim == 0) throw ModelFormatError("model dimension must be positive");

        std::vector<NodeRecord> nodes;
        for (const auto& n : doc.at("nodes")) {
            nodes.push_back(NodeRecord{field<NodeId>(n, "id"), field<Vector>(n, "weight"),
                                       field<std::uint64_t>(n, "win_count"),
                                       field<double>(n, "sigma")});
        }
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw ModelFormatError("malformed edge entry");
            NodeId a = e[0].get<NodeId>();
            NodeId b = e[1].get<NodeId>();
            if (a > b) std::swap(a, b);
            edges.push_back(Edge{a, b, e[2].get<EdgeAge>()});
        }

        ModelFile model;
        LearnerState& s = model.state;
        s.dimension = dim;
        s.net = TopoNetwork::restore(dim, field<NodeId>(doc, "next_id"), std::move(nodes), edges);
        if (!doc.at("lambda").is_null()) {
            s.lambda = doc.at("lambda").get<std::size_t>();
            if (*s.lambda == 0) throw ModelFormatError("lambda must be positive");
        }
        if (!doc.at("v_threshold").is_null()) {
            s.v_threshold = doc.at("v_threshold").get<double>();
            if (!s.lambda) throw ModelFormatError("v_threshold present without lambda");
        }
        s.presented_count = field<std::uint64_t>(doc, "presented_count");

        const json& active = doc.at("active");
        s.active = ActiveNodeSet(field<std::size_t>(active, "capacity"));
        for (NodeId id : field<std::vector<NodeId>>(active, "ids")) {
            if (!s.net.contains(id)) throw ModelFormatError("active set references a dead node");
            if (s.active.contains(id)) throw ModelFormatError("duplicate active node id");
            s.active.touch(id);
        }
        if (s.active.size() != active.at("ids").size()) {
            throw ModelFormatError("active set exceeds its capacity");
        }

        const json& del = doc.at("deleted_edges");
        s.deleted.count = field<std::uint64_t>(del, "count");
        s.deleted.mean_age = field<double>(del, "mean_age");

        if (doc.contains("input_scaling")) {
            MinMaxScaling scaling{field<std::vector<double>>(doc.at("input_scaling"), "min"),
                                  field<std::vector<double>>(doc.at("input_scaling"), "max")};
            if (scaling.lo.size() != dim || scaling.hi.size() != dim) {
                throw ModelFormatError("input scaling dimension mismatch");
            }
            model.scaling = std::move(scaling);
        }
        return model;
    } catch (const json::exception& e) {
        throw ModelFormatError(std::string("malformed model: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ModelFormatError(std::string("invalid model: ") + e.what());
    }
}

std::string serialize_model(const ModelFile& model) { return model_to_json(model).dump(1) + "\n"; }

ModelFile deserialize_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ModelFormatError(std::string("model is not valid JSON: ") + e.what());
    }
    return model_from_json(doc);
}

void save_model(const std::string& path, const ModelFile& model) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model to '" + path + "'");
    out << serialize_model(model);
    if (!out) throw std::runtime_error("failed writing model to '" + path + "'");
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelFormatError("cannot open model '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize_model(buf.str());
}

}  // namespace cae
