#pragma once

// Decomposition fixtures shared by the unit and acceptance suites.

#include "sizefn/mayer_vietoris.hpp"

namespace fixtures {

using sizefn::Decomposition;
using sizefn::FilteredGraph;

// Circle split into two arcs meeting in the bottom and top points; the two
// intersection components give parallel nerve edges, so ker alpha_v = 1
// once both are present.
inline Decomposition two_arc_cycle() {
    FilteredGraph x({{0, 0.0}, {1, 1.0}, {2, 2.0}, {3, 3.0}, {4, 4.0}, {5, 3.0}, {6, 2.0}, {7, 1.0}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    return Decomposition(std::move(x), {0, 1, 2, 3, 4}, {4, 5, 6, 7, 0});
}

// Both kernel ranks are 1 at (0, 2) while alpha restricted to persistent
// classes fails to be injective: two low intersection vertices share their
// A- and B-components, and a third intersection vertex born later has a
// vanishing relative column on both sides.
inline Decomposition equal_kernels_fixture() {
    FilteredGraph x({{0, 0.0},   // p, in A and B
                     {1, 0.0},   // A-only connector p--q
                     {2, 0.0},   // q, in A and B
                     {3, 2.0},   // B-only connector q--c
                     {4, 2.0},   // c, in A and B
                     {5, 0.0},   // A-only anchor of c
                     {6, 0.0}},  // B-only connector p--q
                    {{0, 1}, {1, 2}, {5, 4}, {0, 6}, {6, 2}, {2, 3}, {3, 4}});
    return Decomposition(std::move(x), {0, 1, 2, 4, 5}, {0, 2, 3, 4, 6});
}

// Single high intersection vertex between two low sides: the relative
// kernel is 1 at (0, 2) while the absolute kernel vanishes.
inline Decomposition wedge_fixture() {
    FilteredGraph x({{0, 0.0}, {1, 2.0}, {2, 0.0}}, {{0, 1}, {1, 2}});
    return Decomposition(std::move(x), {0, 1}, {1, 2});
}

// Disjoint union of the two-arc cycle (with a pendant vertex raising the
// top of the grid) and the wedge: the basic relation under- and overshoots
// in different regions of the critical grid.
inline Decomposition two_region_fixture() {
    FilteredGraph x({{0, 0.0}, {1, 1.0}, {2, 2.0}, {3, 3.0}, {4, 4.0}, {5, 3.0}, {6, 2.0},
                     {7, 1.0}, {8, 5.0}, {9, 0.0}, {10, 2.0}, {11, 0.0}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {2, 8},
                     {9, 10}, {10, 11}});
    return Decomposition(std::move(x), {0, 1, 2, 3, 4, 8, 9, 10}, {0, 4, 5, 6, 7, 10, 11});
}

// A decomposition whose intersection carries the minimum of both sides:
// the basic relation holds on the whole half-plane.
inline Decomposition valley_fixture() {
    FilteredGraph x({{0, 2.0}, {1, 1.0}, {2, 0.0}, {3, 1.0}, {4, 2.0}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    return Decomposition(std::move(x), {0, 1, 2}, {2, 3, 4});
}

}  // namespace fixtures
