#include "cae/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string_view>

namespace cae {

namespace {

void validate(const StreamSpec& spec) {
    if (!(spec.noise_fraction >= 0.0 && spec.noise_fraction < 1.0)) {
        throw std::invalid_argument("noise fraction must lie in [0, 1)");
    }
    if (spec.components.empty()) {
        throw std::invalid_argument("stream needs at least one component");
    }
    for (const auto& c : spec.components) {
        if (c.points == 0) throw std::invalid_argument("component with zero points");
        for (double v : c.center) {
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite component center");
        }
        switch (c.shape) {
            case ComponentShape::kGaussianBlob:
                if (!(c.extent[0] > 0.0)) throw std::invalid_argument("blob std must be > 0");
                break;
            case ComponentShape::kRing:
                if (!(c.extent[0] > 0.0) || !(c.extent[1] >= 0.0)) {
                    throw std::invalid_argument("ring needs radius > 0 and width >= 0");
                }
                break;
            case ComponentShape::kRectangle:
                if (!(c.extent[0] > 0.0) || !(c.extent[1] > 0.0)) {
                    throw std::invalid_argument("rectangle half-extents must be > 0");
                }
                break;
        }
    }
}

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

std::array<double, 2> sample_component(const ComponentSpec& c, std::mt19937_64& rng) {
    switch (c.shape) {
        case ComponentShape::kGaussianBlob: {
            std::normal_distribution<double> g(0.0, c.extent[0]);
            const double dx = g(rng);
            const double dy = g(rng);
            return {c.center[0] + dx, c.center[1] + dy};
        }
        case ComponentShape::kRing: {
            std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
            std::uniform_real_distribution<double> offset(-0.5, 0.5);
            const double a = angle(rng);
            const double r = c.extent[0] + c.extent[1] * offset(rng);
            return {c.center[0] + r * std::cos(a), c.center[1] + r * std::sin(a)};
        }
        case ComponentShape::kRectangle: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            const double dx = c.extent[0] * u(rng);
            const double dy = c.extent[1] * u(rng);
            return {c.center[0] + dx, c.center[1] + dy};
        }
    }
    return c.center;
}

struct Sample {
    std::array<double, 2> xy;
    std::int64_t label;
};

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in component spec");
    }
    return value;
}

}  // namespace

StreamSpec default_stream_spec(std::size_t points_per_component, double noise_fraction,
                               std::uint64_t seed, PresentationOrder order) {
    StreamSpec spec;
    spec.noise_fraction = noise_fraction;
    spec.seed = seed;
    spec.order = order;
    for (double cy : {0.35, 0.65}) {
        for (double cx : {0.2, 0.5, 0.8}) {
            spec.components.push_back(ComponentSpec{ComponentShape::kGaussianBlob,
                                                    {cx, cy},
                                                    {0.05, 0.0},
                                                    points_per_component});
        }
    }
    return spec;
}

std::size_t noise_count(std::size_t component_points, double noise_fraction) {
    return static_cast<std::size_t>(
        std::llround(noise_fraction * static_cast<double>(component_points)));
}

LabeledData generate(const StreamSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::vector<Sample>> segments;
    segments.reserve(spec.components.size());
    for (std::size_t k = 0; k < spec.components.size(); ++k) {
        const auto& c = spec.components[k];
        std::vector<Sample> seg;
        seg.reserve(c.points + noise_count(c.points, spec.noise_fraction));
        for (std::size_t i = 0; i < c.points; ++i) {
            const auto p = sample_component(c, rng);
            seg.push_back(Sample{{clip01(p[0]), clip01(p[1])}, static_cast<std::int64_t>(k)});
        }
        const std::size_t noise = noise_count(c.points, spec.noise_fraction);
        for (std::size_t i = 0; i < noise; ++i) {
            const double x = unit(rng);
            const double y = unit(rng);
            seg.push_back(Sample{{x, y}, kNoiseLabel});
        }
        segments.push_back(std::move(seg));
    }

    std::vector<Sample> all;
    if (spec.order == PresentationOrder::kStationary) {
        for (auto& seg : segments) all.insert(all.end(), seg.begin(), seg.end());
        std::shuffle(all.begin(), all.end(), rng);
    } else {
        for (auto& seg : segments) {
            std::shuffle(seg.begin(), seg.end(), rng);
            all.insert(all.end(), seg.begin(), seg.end());
        }
    }

    LabeledData out;
    out.dim = 2;
    out.values.reserve(all.size() * 2);
    out.labels.reserve(all.size());
    for (const auto& s : all) {
        out.values.push_back(s.xy[0]);
        out.values.push_back(s.xy[1]);
        out.labels.push_back(s.label);
    }
    return out;
}

ComponentSpec parse_component(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("component spec needs 'shape:params', got '" + text + "'");
    }
    const std::string shape = text.substr(0, colon);
    std::vector<double> nums;
    std::string_view rest(text);
    rest.remove_prefix(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        nums.push_back(parse_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }

    ComponentSpec c;
    std::size_t expected = 0;
    if (shape == "blob") {
        c.shape = ComponentShape::kGaussianBlob;
        expected = 4;
    } else if (shape == "ring") {
        c.shape = ComponentShape::kRing;
        expected = 5;
    } else if (shape == "rect") {
        c.shape = ComponentShape::kRectangle;
        expected = 5;
    } else {
        throw std::invalid_argument("unknown component shape '" + shape + "'");
    }
    if (nums.size() != expected) {
        throw std::invalid_argument("component '" + shape + "' expects " +
                                    std::to_string(expected) + " numbers");
    }
    c.center = {nums[0], nums[1]};
    c.extent = {nums[2], expected == 5 ? nums[3] : 0.0};
    const double count = nums[expected - 1];
    if (!(count >= 1.0) || count != std::floor(count)) {
        throw std::invalid_argument("component point count must be a positive integer");
    }
    c.points = static_cast<std::size_t>(count);
    return c;
}

}  // namespace cae
