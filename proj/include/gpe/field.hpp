#pragma once

#include <complex>
#include <vector>

#include "gpe/grid.hpp"

namespace gpe {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

/// Which sample set a WaveField stores on a given SpaceGrid.
///
/// InteriorDirichlet: values at j = 1..M-1 (size M-1), u = 0 at both ends.
/// Periodic:          values at j = 0..M-1 (size M), x_M identified with x_0.
enum class GridTag { InteriorDirichlet, Periodic };

/// Complex wave-function samples at one time level.
struct WaveField {
    GridTag tag = GridTag::InteriorDirichlet;
    ComplexVec values;

    std::size_t size() const { return values.size(); }
};

/// Expected sample count for a tag on a grid.
std::size_t field_size(GridTag tag, const SpaceGrid& grid);

/// x-coordinate of stored sample i under the field's tag.
double sample_point(const WaveField& f, const SpaceGrid& grid, std::size_t i);

/// Entrywise |u_j|^2 = Re(u)^2 + Im(u)^2.
std::vector<double> abs_squared(const WaveField& f);

/// dx * sum_j |u_j|^2 over the stored samples. With Dirichlet zeros at the
/// ends this is the trapezoid rule; on the periodic grid it is the periodic
/// trapezoid rule.
double discrete_l2_sq(const WaveField& f, double dx);

/// dx-weighted l2 distance between two same-shape fields (plain norm, no square).
double discrete_l2_dist(const WaveField& a, const WaveField& b, double dx);

/// true iff every entry is finite.
bool all_finite(const WaveField& f);

/// Interior <-> periodic conversions on the same grid. The periodic boundary
/// sample (j = 0) carries the Dirichlet zero.
WaveField to_periodic(const WaveField& f, const SpaceGrid& grid);
WaveField to_interior(const WaveField& f, const SpaceGrid& grid);

/// Fields recorded at selected time levels of one run.
struct FieldSeries {
    std::vector<double> times;
    std::vector<WaveField> fields;
};

}  // namespace gpe
