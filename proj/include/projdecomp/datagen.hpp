#ifndef PROJDECOMP_DATAGEN_HPP
#define PROJDECOMP_DATAGEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

/// Placement of points around each circle.
enum class AngleLayout {
    /// Evenly spaced points, each circle rotated by its own uniform random
    /// phase from Rng(seed).
    random_phase,
    /// Independent uniform angles from Rng(seed).
    seeded_uniform,
    /// k·2π/points_per_circle, starting at 0.
    even,
};

std::string_view to_string(AngleLayout layout);
std::optional<AngleLayout> parse_angle_layout(std::string_view name);

/// Synthetic point clouds: small circles of points around grid intersections.
///
/// Rectangular layout: intersections at (origin_x + c·spacing,
/// origin_y + r·spacing) for r < grid_rows, c < grid_cols.
///
/// Radial layout: grid_rows rings at ring_start + r·ring_step crossed with
/// grid_cols rays spread evenly over [sector_begin, sector_end] radians.
/// After the circles are placed the x coordinates are stretched so that the
/// x-extent is x_to_y_extent times the y-extent.
///
/// The geometry defaults (integer grid 1..7, radius 0.25, 5 rings × 7 rays
/// in 15°..75°) keep the circles disjoint and the radial cloud strictly
/// positive.
struct GridSpec {
    std::size_t grid_rows = 7;
    std::size_t grid_cols = 7;
    std::size_t points_per_circle = 60;
    double circle_radius = 0.25;
    AngleLayout angles = AngleLayout::random_phase;
    std::uint64_t seed = 1;

    double origin_x = 1.0;
    double origin_y = 1.0;
    double spacing = 1.0;

    double ring_start = 2.0;
    double ring_step = 1.0;
    double sector_begin = 0.2617993877991494;  // 15°
    double sector_end = 1.3089969389957472;    // 75°
    double x_to_y_extent = 3.0;

    /// Throws DomainError when a count is zero or the radius is not positive.
    void validate() const;
    /// One-line key=value summary for file headers.
    std::string describe() const;
};

/// Default-layout dataset for the radial figure: 5 rings × 7 rays.
GridSpec radial_defaults();

/// (grid_rows·grid_cols·points_per_circle) × 2, grouped by circle in
/// row-major grid order.
Matrix rect_grid_circles(const GridSpec& spec = {});

/// Strictly positive radial-grid cloud with the configured extent ratio.
Matrix radial_grid_circles(const GridSpec& spec = radial_defaults());

/// z_transform of the default rectangular dataset (seed as given).
Matrix mixed_sign_dataset(std::uint64_t seed = 1);

} // namespace projdecomp

#endif
