#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cae {

/// Truth label carried by uniform background noise points.
inline constexpr std::int64_t kNoiseLabel = -1;

enum class ComponentShape { kGaussianBlob, kRing, kRectangle };
enum class PresentationOrder { kStationary, kNonStationary };

/// One 2-D component distribution.
///  - blob:      isotropic Gaussian at `center`, std `extent[0]`
///  - ring:      radius `extent[0]`, radial thickness `extent[1]`
///  - rectangle: uniform over center +- (extent[0], extent[1])
struct ComponentSpec {
    ComponentShape shape = ComponentShape::kGaussianBlob;
    std::array<double, 2> center{0.5, 0.5};
    std::array<double, 2> extent{0.05, 0.0};
    std::size_t points = 0;
};

struct StreamSpec {
    std::vector<ComponentSpec> components;
    double noise_fraction = 0.0;
    PresentationOrder order = PresentationOrder::kStationary;
    std::uint64_t seed = 0;
};

/// Points in presentation order, row-major with `dim` columns, plus truth.
struct LabeledData {
    std::size_t dim = 0;
    std::vector<double> values;
    std::vector<std::int64_t> labels;

    std::size_t size() const noexcept { return labels.size(); }
};

/// Six isotropic blobs (std 0.05) on a 3 x 2 grid with 0.3 spacing.
StreamSpec default_stream_spec(std::size_t points_per_component = 1500,
                               double noise_fraction = 0.1, std::uint64_t seed = 0,
                               PresentationOrder order = PresentationOrder::kStationary);

/// Noise points attached to a component of the given size.
std::size_t noise_count(std::size_t component_points, double noise_fraction);

/// Samples the stream. Coordinates are clipped to [0, 1]; component k is
/// labelled k and its share of noise kNoiseLabel. Stationary order is one
/// global shuffle; non-stationary order concatenates per-component segments
/// (component points plus that component's noise, shuffled within segment).
LabeledData generate(const StreamSpec& spec);

/// Parses "blob:cx,cy,std,n", "ring:cx,cy,radius,width,n" or
/// "rect:cx,cy,half_w,half_h,n".
ComponentSpec parse_component(const std::string& text);

}  // namespace cae
