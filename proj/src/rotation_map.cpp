#include "mapforge/rotation_map.hpp"

#include <algorithm>
#include <numeric>

#include "mapforge/error.hpp"

namespace mapforge {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::OddHalfEdgeCount: return "OddHalfEdgeCount";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotQuadrangulation: return "NotQuadrangulation";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::TooFewEdges: return "TooFewEdges";
        case ErrorCode::InvalidRoot: return "InvalidRoot";
        case ErrorCode::ValuationError: return "ValuationError";
        case ErrorCode::ZeroDivision: return "ZeroDivision";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InversionError: return "InversionError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::MissingTable: return "MissingTable";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::Io: return "Io";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

RotationMap::RotationMap() { derive(); }

RotationMap RotationMap::build(std::vector<int> sigma, int root) {
    const int n = static_cast<int>(sigma.size());
    if (n % 2 != 0)
        throw Error(ErrorCode::OddHalfEdgeCount, "sigma has " + std::to_string(n) + " entries");
    std::vector<char> hit(n, 0);
    for (int h = 0; h < n; ++h) {
        const int s = sigma[h];
        if (s < 0 || s >= n || hit[s])
            throw Error(ErrorCode::NotAPermutation, "sigma[" + std::to_string(h) + "]=" + std::to_string(s));
        hit[s] = 1;
    }
    if (n > 0 && (root < 0 || root >= n))
        throw Error(ErrorCode::InvalidRoot, "root " + std::to_string(root) + " out of range");

    // Connectivity under <sigma, alpha>.
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int h = stack.back();
            stack.pop_back();
            for (int g : {sigma[h], h ^ 1}) {
                if (!seen[g]) {
                    seen[g] = 1;
                    ++count;
                    stack.push_back(g);
                }
            }
        }
        if (count != n) throw Error(ErrorCode::Disconnected, "half-edges do not form one orbit");
    }

    RotationMap m;
    m.sigma_ = std::move(sigma);
    m.derive();
    if (m.num_vertices() - m.num_edges() + m.num_faces() != 2)
        throw Error(ErrorCode::InvalidArgument, "rotation system is not planar (Euler characteristic != 2)");

    if (n > 0 && root != 0) {
        // Swap the root's edge with edge 0, orienting so that root -> 0.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        const int re = root / 2;
        if (re != 0) {
            perm[2 * re] = 0;
            perm[2 * re + 1] = 1;
            perm[0] = 2 * re;
            perm[1] = 2 * re + 1;
        }
        if (root % 2 == 1) std::swap(perm[2 * re], perm[2 * re + 1]);
        return m.relabel(perm);
    }
    return m;
}

void RotationMap::derive() {
    const int n = num_half_edges();
    sigma_inv_.assign(n, 0);
    for (int h = 0; h < n; ++h) sigma_inv_[sigma_[h]] = h;

    vertex_of_.assign(n, -1);
    face_of_.assign(n, -1);
    vertex_degree_.clear();
    face_degree_.clear();
    vertex_rep_.clear();
    face_rep_.clear();
    if (n == 0) {
        num_vertices_ = 1;
        num_faces_ = 1;
        vertex_degree_.push_back(0);
        face_degree_.push_back(0);
        return;
    }
    for (int h = 0; h < n; ++h) {
        if (vertex_of_[h] < 0) {
            const int id = static_cast<int>(vertex_degree_.size());
            int deg = 0;
            for (int g = h; vertex_of_[g] < 0; g = sigma_[g]) {
                vertex_of_[g] = id;
                ++deg;
            }
            vertex_degree_.push_back(deg);
            vertex_rep_.push_back(h);
        }
        if (face_of_[h] < 0) {
            const int id = static_cast<int>(face_degree_.size());
            int deg = 0;
            for (int g = h; face_of_[g] < 0; g = sigma_[g ^ 1]) {
                face_of_[g] = id;
                ++deg;
            }
            face_degree_.push_back(deg);
            face_rep_.push_back(h);
        }
    }
    num_vertices_ = static_cast<int>(vertex_degree_.size());
    num_faces_ = static_cast<int>(face_degree_.size());
}

std::vector<int> RotationMap::canonical_code(int root) const {
    const auto label = canonical_labels(root);
    std::vector<int> code(label.size());
    for (std::size_t h = 0; h < label.size(); ++h) code[label[h]] = label[sigma_[h]];
    return code;
}

std::vector<int> RotationMap::canonical_labels(int root) const {
    const int n = num_half_edges();
    if (n == 0) return {};
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root] = 0;
    label[root ^ 1] = 1;
    order.push_back(root);
    order.push_back(root ^ 1);
    int next = 2;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int g = sigma_[order[k]];
        if (label[g] < 0) {
            label[g] = next;
            label[g ^ 1] = next + 1;
            next += 2;
            order.push_back(g);
            order.push_back(g ^ 1);
        }
    }
    return label;
}

RotationMap RotationMap::relabel(std::span<const int> perm) const {
    const int n = num_half_edges();
    std::vector<int> s(n);
    for (int h = 0; h < n; ++h) s[perm[h]] = perm[sigma_[h]];
    RotationMap m;
    m.sigma_ = std::move(s);
    m.derive();
    return m;
}

RotationMap RotationMap::dual() const {
    // Dual rotation: sigma* = phi. alpha stays the same pairing.
    const int n = num_half_edges();
    RotationMap m;
    m.sigma_.resize(n);
    for (int h = 0; h < n; ++h) m.sigma_[h] = phi(h);
    m.derive();
    return m;
}

RotationMap RotationMap::submap(const std::vector<char>& keep, int new_root,
                                std::vector<int>* old_to_new) const {
    const int n = num_half_edges();
    std::vector<int> rename(n, -1);
    if (new_root >= 0) {
        if (!keep[new_root]) throw Error(ErrorCode::InvalidRoot, "submap root not kept");
        rename[new_root] = 0;
        rename[new_root ^ 1] = 1;
    }
    int next = new_root >= 0 ? 2 : 0;
    for (int h = 0; h < n; h += 2) {
        if (keep[h] != keep[h + 1])
            throw Error(ErrorCode::InvalidArgument, "submap must keep whole edges");
        if (keep[h] && rename[h] < 0) {
            rename[h] = next++;
            rename[h + 1] = next++;
        }
    }
    std::vector<int> s(next);
    for (int h = 0; h < n; ++h) {
        if (!keep[h]) continue;
        int g = sigma_[h];
        while (!keep[g]) g = sigma_[g];
        s[rename[h]] = rename[g];
    }
    if (old_to_new) *old_to_new = rename;
    return RotationMap::build(std::move(s), 0);
}

int max_face_degree(const RotationMap& m) {
    const auto d = m.face_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int root_face_degree(const RotationMap& m) { return m.face_degrees()[0]; }

}  // namespace mapforge
