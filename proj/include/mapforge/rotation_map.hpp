#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mapforge {

/// A rooted combinatorial map on the sphere stored as a rotation system.
///
/// Half-edges are 0..n_half-1 and paired by alpha(h) = h ^ 1. sigma(h) is the
/// next half-edge counterclockwise around the vertex of h. Faces are the
/// orbits of phi = sigma o alpha. Half-edge 0 is always the oriented root;
/// the outer face is the face orbit of 0. Vertex and face ids are assigned
/// in order of their smallest half-edge, so the root vertex and the outer
/// face both have id 0.
///
/// The map with zero half-edges is the single-vertex map (V=1, F=1).
class RotationMap {
public:
    RotationMap();

    /// Validates sigma and derives orbits. If root != 0 the half-edges are
    /// relabelled so that the given root becomes half-edge 0.
    static RotationMap build(std::vector<int> sigma, int root = 0);

    int num_half_edges() const { return static_cast<int>(sigma_.size()); }
    int num_edges() const { return num_half_edges() / 2; }
    int num_vertices() const { return num_vertices_; }
    int num_faces() const { return num_faces_; }

    int sigma(int h) const { return sigma_[h]; }
    int sigma_inv(int h) const { return sigma_inv_[h]; }
    static int alpha(int h) { return h ^ 1; }
    int phi(int h) const { return sigma_[h ^ 1]; }
    int phi_inv(int h) const { return sigma_inv_[h] ^ 1; }

    /// Tail vertex of half-edge h.
    int vertex_of(int h) const { return vertex_of_[h]; }
    int face_of(int h) const { return face_of_[h]; }
    int head_of(int h) const { return vertex_of_[h ^ 1]; }

    std::span<const int> sigma_array() const { return sigma_; }
    std::span<const int> vertex_degrees() const { return vertex_degree_; }
    std::span<const int> face_degrees() const { return face_degree_; }
    /// One half-edge per vertex (the smallest); empty for the vertex map.
    std::span<const int> vertex_representatives() const { return vertex_rep_; }
    std::span<const int> face_representatives() const { return face_rep_; }

    int root_vertex() const { return 0; }
    int outer_face() const { return 0; }
    bool is_vertex_map() const { return sigma_.empty(); }
    bool is_loop(int h) const { return vertex_of_[h] == vertex_of_[h ^ 1]; }

    /// Isomorphism-invariant code of the map rooted at `root` (relabelled sigma).
    std::vector<int> canonical_code(int root = 0) const;
    /// The relabelling behind canonical_code: new id of half-edge h.
    std::vector<int> canonical_labels(int root = 0) const;

    /// Same map with half-edges renamed: new id of old h is perm[h].
    /// perm must map pairs {2k,2k+1} onto pairs and send the root to 0.
    RotationMap relabel(std::span<const int> perm) const;

    /// Map with faces and vertices exchanged; root half-edge kept.
    RotationMap dual() const;

    /// Restriction to a set of edges (given by one half-edge flag per
    /// half-edge, both halves must agree). The new root is new_root (an old id).
    /// old_to_new receives the renaming (-1 for dropped half-edges).
    RotationMap submap(const std::vector<char>& keep, int new_root,
                       std::vector<int>* old_to_new = nullptr) const;

    friend bool operator==(const RotationMap& a, const RotationMap& b) {
        return a.sigma_ == b.sigma_;
    }

private:
    void derive();

    std::vector<int> sigma_;
    std::vector<int> sigma_inv_;
    std::vector<int> vertex_of_;
    std::vector<int> face_of_;
    std::vector<int> vertex_degree_;
    std::vector<int> face_degree_;
    std::vector<int> vertex_rep_;
    std::vector<int> face_rep_;
    int num_vertices_ = 1;
    int num_faces_ = 1;
};

/// Maximum face degree Delta(M); an isthmus contributes twice.
int max_face_degree(const RotationMap& m);

/// Degree of the outer face (face to the left of the root).
int root_face_degree(const RotationMap& m);

}  // namespace mapforge
