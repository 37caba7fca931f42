#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mapforge/rng.hpp"

namespace mapforge {

/// Rooted plane tree. Vertices are numbered in preorder (root = 0); the
/// shape is the balanced word where 1 descends into a new child and 0 returns.
class PlaneTree {
public:
    PlaneTree();

    static PlaneTree from_word(std::vector<char> word);

    int num_edges() const { return static_cast<int>(parent_.size()) - 1; }
    int num_vertices() const { return static_cast<int>(parent_.size()); }

    int parent(int v) const { return parent_[v]; }
    int depth(int v) const { return depth_[v]; }
    std::span<const int> children(int v) const {
        return {child_.data() + child_offset_[v], child_.data() + child_offset_[v + 1]};
    }
    const std::vector<char>& word() const { return word_; }
    std::string word_string() const;

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.word_ == b.word_; }

private:
    std::vector<char> word_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<int> child_offset_;
    std::vector<int> child_;
};

/// Plane tree with absolute vertex labels; root label 0, edge steps in {-1,0,1}.
struct LabelledTree {
    PlaneTree shape;
    std::vector<int> labels;

    LabelledTree() : labels{0} {}
    LabelledTree(PlaneTree s, std::vector<int> l);

    int num_edges() const { return shape.num_edges(); }
    friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

enum class Color : std::uint8_t { Black, White };

struct BicoloredLabelledTree {
    LabelledTree tree;
    std::vector<Color> colors;
};

PlaneTree sample_plane_tree(int n, Rng& rng);
LabelledTree sample_labelled_tree(int n, Rng& rng);

/// All Catalan(n) shapes, in lexicographic order of their words (1 before 0).
std::vector<PlaneTree> enumerate_plane_trees(int n);
/// All Catalan(n)*3^n labelled trees; TooLarge for n > 8.
std::vector<LabelledTree> enumerate_labelled_trees(int n);

int height(const PlaneTree& t);
int tree_diameter(const PlaneTree& t);

struct LabelExtremes {
    int min = 0;
    int max = 0;
};
LabelExtremes label_extremes(const LabelledTree& t);
int label_span(const LabelledTree& t);

/// Odd labels get the opposite color of the root.
BicoloredLabelledTree bicolor(const LabelledTree& t, Color root_color);
/// Per-vertex count of bicolored edges on the root path.
std::vector<int> bicolored_depths(const BicoloredLabelledTree& t);
/// Per-vertex count of white->black edges (parent white, child black) on the root path.
std::vector<int> white_black_depths(const BicoloredLabelledTree& t);
int white_black_height(const BicoloredLabelledTree& t);

/// Word line "(()())" then a line of space-separated labels.
std::string tree_to_text(const LabelledTree& t);
LabelledTree tree_from_text(const std::string& text);

std::uint64_t catalan(int n);

}  // namespace mapforge
