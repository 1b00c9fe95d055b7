#pragma once

#include "sizefn/filtered_graph.hpp"

#include <limits>

namespace sizefn {

/// Number of connected components of the sublevel set at v that contain at
/// least one vertex of value <= u. Defined on u < v.
unsigned size_function_value(const FilteredGraph& g, double u, double v);

/// The size function tabulated on the critical grid. Entry (i, j) with
/// i <= j is the value at (c_i, c_j); the diagonal is the right-continuous
/// extension (the component count at c_i). Everything the function does on
/// the whole half-plane is recoverable from this table because it is
/// piecewise constant on the half-open cells of the grid.
class SizeFunctionGrid {
public:
    explicit SizeFunctionGrid(const FilteredGraph& g);

    const std::vector<double>& criticals() const { return criticals_; }
    std::size_t size() const { return criticals_.size(); }
    unsigned at(std::size_t i, std::size_t j) const;

    /// Index of the grid cell containing t: largest k with c_k <= t, or -1
    /// below all critical values.
    int cell_of(double t) const;
    /// Cell just below t (differs from cell_of exactly when t is critical).
    int cell_below(double t) const;

    /// Value on the cell pair (iu <= iv); iu == iv is the diagonal and
    /// iu == -1 gives 0.
    unsigned value_on_cells(int iu, int iv) const;
    /// Exact evaluation anywhere on u < v.
    unsigned value_at(double u, double v) const;

    /// Four-corner multiplicity, evaluated as the exact limit of the
    /// alternating sum over the adjacent grid cells.
    long multiplicity_at(double u, double v) const;
    /// Multiplicity of the cornerpoint at infinity with abscissa k.
    long multiplicity_at_infinity(double k) const;

    std::string to_csv() const;

private:
    std::vector<double> criticals_;
    std::vector<unsigned> table_;  // row-major m x m, valid for i <= j

    unsigned& cell(std::size_t i, std::size_t j) { return table_[i * criticals_.size() + j]; }
};

long multiplicity(const FilteredGraph& g, double u, double v);
long multiplicity_at_infinity(const FilteredGraph& g, double k);

struct Cornerpoint {
    double u = 0.0;
    double v = 0.0;  // +infinity for cornerpoints at infinity
    unsigned multiplicity = 0;

    bool at_infinity() const { return v == std::numeric_limits<double>::infinity(); }
    bool operator==(const Cornerpoint&) const = default;
};

/// Proper cornerpoints plus cornerpoints at infinity, each with positive
/// multiplicity, sorted by (u, v).
struct CornerpointSet {
    std::vector<Cornerpoint> proper;
    std::vector<Cornerpoint> at_infinity;

    std::size_t support_size() const { return proper.size() + at_infinity.size(); }
    bool operator==(const CornerpointSet&) const = default;
};

CornerpointSet cornerpoints(const FilteredGraph& g);

/// Representation-theorem sum: total multiplicity of cornerpoints with
/// abscissa <= u and ordinate > v. Requires u < v.
unsigned reconstruct(const CornerpointSet& cs, double u, double v);

/// Hausdorff distance between supports, multiplicities ignored. L-infinity
/// on proper points, |du| between points at infinity, and the maximum of
/// the two one-class distances overall. A class present on one side only
/// yields +infinity.
double hausdorff_distance(const CornerpointSet& a, const CornerpointSet& b);

struct CommonCornerpoints {
    std::size_t count = 0;
    double percentage = 0.0;  // relative to the support of the first set
};

/// Maximum one-to-one matching between supports within L-infinity distance
/// tol; points at infinity only match points at infinity.
CommonCornerpoints common_cornerpoints(const CornerpointSet& a, const CornerpointSet& b,
                                       double tol);

std::string cornerpoints_to_json(const CornerpointSet& cs);
CornerpointSet cornerpoints_from_json(const std::string& json);

}  // namespace sizefn
