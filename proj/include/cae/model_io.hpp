#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cae/learner.hpp"

namespace cae {

inline constexpr int kModelFormatVersion = 1;

class ModelFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-column min-max rescaling to [0, 1]; constant columns map to 0.
struct MinMaxScaling {
    std::vector<double> lo;
    std::vector<double> hi;

    static MinMaxScaling fit(std::span<const double> rows, std::size_t dim);
    void apply(std::span<double> rows) const;

    friend bool operator==(const MinMaxScaling&, const MinMaxScaling&) = default;
};

struct ModelFile {
    LearnerState state;
    std::optional<MinMaxScaling> scaling;

    friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

nlohmann::json model_to_json(const ModelFile& model);
ModelFile model_from_json(const nlohmann::json& doc);

std::string serialize_model(const ModelFile& model);
ModelFile deserialize_model(const std::string& text);

void save_model(const std::string& path, const ModelFile& model);
ModelFile load_model(const std::string& path);

}  // namespace cae
