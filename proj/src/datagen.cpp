#include "projdecomp/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "projdecomp/baselines.hpp"
#include "projdecomp/errors.hpp"
#include "projdecomp/random.hpp"

namespace projdecomp {

std::string_view to_string(AngleLayout layout) {
    switch (layout) {
    case AngleLayout::random_phase: return "random_phase";
    case AngleLayout::seeded_uniform: return "seeded_uniform";
    case AngleLayout::even: return "even";
    }
    return "unknown";
}

std::optional<AngleLayout> parse_angle_layout(std::string_view name) {
    for (AngleLayout a : {AngleLayout::random_phase, AngleLayout::seeded_uniform, AngleLayout::even}) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

void GridSpec::validate() const {
    if (grid_rows == 0 || grid_cols == 0 || points_per_circle == 0) {
        throw DomainError("grid spec counts must be at least 1");
    }
    if (!(circle_radius > 0.0)) {
        throw DomainError("grid spec circle radius must be positive");
    }
}

std::string GridSpec::describe() const {
    std::ostringstream out;
    out.precision(17);
    out << "grid=" << grid_rows << "x" << grid_cols << " points_per_circle=" << points_per_circle
        << " circle_radius=" << circle_radius
        << " angles=" << to_string(angles) << " seed=" << seed
        << " rng=mt19937_64";
    return out.str();
}

GridSpec radial_defaults() {
    GridSpec spec;
    spec.grid_rows = 5;
    spec.grid_cols = 7;
    return spec;
}

namespace {

/// Appends one circle of points around (cx, cy).
class CirclePainter {
public:
    explicit CirclePainter(const GridSpec& spec) : spec_(spec), rng_(spec.seed) {}

    void paint(double cx, double cy, std::vector<double>& out) {
        constexpr double turn = 2.0 * std::numbers::pi;
        const double step = turn / static_cast<double>(spec_.points_per_circle);
        const double phase = spec_.angles == AngleLayout::random_phase ? rng_.uniform(0.0, step) : 0.0;
        for (std::size_t k = 0; k < spec_.points_per_circle; ++k) {
            const double theta = spec_.angles == AngleLayout::seeded_uniform
                                     ? rng_.uniform(0.0, turn)
                                     : phase + step * static_cast<double>(k);
            out.push_back(cx + spec_.circle_radius * std::cos(theta));
            out.push_back(cy + spec_.circle_radius * std::sin(theta));
        }
    }

private:
    const GridSpec& spec_;
    Rng rng_;
};

} // namespace

Matrix rect_grid_circles(const GridSpec& spec) {
    spec.validate();
    std::vector<double> out;
    out.reserve(2 * spec.grid_rows * spec.grid_cols * spec.points_per_circle);
    CirclePainter painter(spec);
    for (std::size_t r = 0; r < spec.grid_rows; ++r) {
        for (std::size_t c = 0; c < spec.grid_cols; ++c) {
            painter.paint(spec.origin_x + static_cast<double>(c) * spec.spacing,
                          spec.origin_y + static_cast<double>(r) * spec.spacing, out);
        }
    }
    const Index rows = out.size() / 2;
    return Matrix::dense(rows, 2, std::move(out));
}

Matrix radial_grid_circles(const GridSpec& spec) {
    spec.validate();
    if (!(spec.x_to_y_extent > 0.0)) {
        throw DomainError("extent ratio must be positive");
    }
    std::vector<double> out;
    out.reserve(2 * spec.grid_rows * spec.grid_cols * spec.points_per_circle);
    CirclePainter painter(spec);
    const double ray_step =
        spec.grid_cols > 1 ? (spec.sector_end - spec.sector_begin) / static_cast<double>(spec.grid_cols - 1) : 0.0;
    for (std::size_t r = 0; r < spec.grid_rows; ++r) {
        const double radius = spec.ring_start + static_cast<double>(r) * spec.ring_step;
        for (std::size_t c = 0; c < spec.grid_cols; ++c) {
            const double angle = spec.sector_begin + static_cast<double>(c) * ray_step;
            painter.paint(radius * std::cos(angle), radius * std::sin(angle), out);
        }
    }

    double x_lo = out[0], x_hi = out[0], y_lo = out[1], y_hi = out[1];
    for (std::size_t k = 0; k < out.size(); k += 2) {
        x_lo = std::min(x_lo, out[k]);
        x_hi = std::max(x_hi, out[k]);
        y_lo = std::min(y_lo, out[k + 1]);
        y_hi = std::max(y_hi, out[k + 1]);
    }
    if (!(x_lo > 0.0 && y_lo > 0.0)) {
        throw DomainError("radial layout leaves the positive quadrant; shrink the sector or circle radius");
    }
    const double y_extent = y_hi - y_lo;
    const double x_extent = x_hi - x_lo;
    const double stretch = y_extent > 0.0 && x_extent > 0.0 ? spec.x_to_y_extent * y_extent / x_extent : 1.0;
    for (std::size_t k = 0; k < out.size(); k += 2) {
        out[k] *= stretch;
    }
    const Index rows = out.size() / 2;
    return Matrix::dense(rows, 2, std::move(out));
}

Matrix mixed_sign_dataset(std::uint64_t seed) {
    GridSpec spec;
    spec.seed = seed;
    return z_transform(rect_grid_circles(spec)).matrix;
}

} // namespace projdecomp
