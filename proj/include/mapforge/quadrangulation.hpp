#pragma once

#include <vector>

#include "mapforge/rotation_map.hpp"
#include "mapforge/tree.hpp"

namespace mapforge {

/// Rooted quadrangulation with its canonical 2-coloring (root vertex black)
/// and an optional pointed vertex (-1 when absent).
struct Quadrangulation {
    RotationMap map;
    std::vector<Color> colors;
    int pointed = -1;

    /// Checks all faces have degree 4 and derives the coloring.
    static Quadrangulation from_map(RotationMap m, int pointed = -1);

    int num_faces() const { return map.num_faces(); }
    int num_black() const;
    int num_white() const;
};

}  // namespace mapforge
