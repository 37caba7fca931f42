#pragma once

#include <string>
#include <vector>

#include "mapforge/quadrangulation.hpp"
#include "mapforge/tree.hpp"

namespace mapforge {

struct Closure {
    Quadrangulation quad;          // pointed at the added vertex
    std::vector<int> tree_to_quad; // tree vertex -> quadrangulation vertex
    Color pointed_color = Color::Black;
    int orientation = 0;           // which way the root arc points
};

/// Corner-arc closure of a labelled tree with n >= 1 edges. orientation 0
/// roots at the arc leaving the root corner, 1 at its reverse.
Closure cvs_closure(const LabelledTree& t, int orientation = 0);

/// Map on the black vertices, one edge per face (its black diagonal).
RotationMap quad_to_map(const Quadrangulation& q);

/// Inverse of quad_to_map: a white vertex per face, joined to its corners.
Quadrangulation map_to_quad(const RotationMap& m);

struct PipelineSample {
    LabelledTree tree;
    Closure closure;
    RotationMap map;
};

PipelineSample run_pipeline(const LabelledTree& t, int orientation = 0);

struct InequalityCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Distance identity, L+1 <= D(Q) <= 2L+2, D(Q)/2 <= D(M) <= D(Q)*maxdeg(M).
std::vector<InequalityCheck> validate_distance_inequalities(const PipelineSample& s);

}  // namespace mapforge
