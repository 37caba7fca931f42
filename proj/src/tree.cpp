#include "mapforge/tree.hpp"

#include <algorithm>
#include <sstream>

#include "mapforge/error.hpp"

namespace mapforge {

PlaneTree::PlaneTree() : parent_{-1}, depth_{0}, child_offset_{0, 0} {}

PlaneTree PlaneTree::from_word(std::vector<char> word) {
    PlaneTree t;
    t.word_ = std::move(word);
    const int n = static_cast<int>(t.word_.size()) / 2;
    if (static_cast<int>(t.word_.size()) != 2 * n)
        throw Error(ErrorCode::InvalidArgument, "tree word has odd length");
    t.parent_.assign(1, -1);
    t.depth_.assign(1, 0);
    t.parent_.reserve(n + 1);
    t.depth_.reserve(n + 1);
    int cur = 0;
    for (std::size_t i = 0; i < t.word_.size(); ++i) {
        if (t.word_[i]) {
            const int v = static_cast<int>(t.parent_.size());
            t.parent_.push_back(cur);
            t.depth_.push_back(t.depth_[cur] + 1);
            cur = v;
        } else {
            if (cur == 0) throw Error(ErrorCode::InvalidArgument, "tree word is not balanced");
            cur = t.parent_[cur];
        }
    }
    if (cur != 0) throw Error(ErrorCode::InvalidArgument, "tree word is not balanced");
    const int nv = n + 1;
    t.child_offset_.assign(nv + 1, 0);
    for (int v = 1; v < nv; ++v) ++t.child_offset_[t.parent_[v] + 1];
    for (int v = 0; v < nv; ++v) t.child_offset_[v + 1] += t.child_offset_[v];
    t.child_.resize(n);
    std::vector<int> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
    // Preorder ids make children appear in left-to-right order.
    for (int v = 1; v < nv; ++v) t.child_[fill[t.parent_[v]]++] = v;
    return t;
}

std::string PlaneTree::word_string() const {
    std::string s;
    s.reserve(word_.size());
    for (char c : word_) s.push_back(c ? '(' : ')');
    return s;
}

LabelledTree::LabelledTree(PlaneTree s, std::vector<int> l) : shape(std::move(s)), labels(std::move(l)) {
    if (static_cast<int>(labels.size()) != shape.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "label count does not match vertex count");
    if (labels[0] != 0) throw Error(ErrorCode::InvalidArgument, "root label must be 0");
    for (int v = 1; v < shape.num_vertices(); ++v) {
        const int d = labels[v] - labels[shape.parent(v)];
        if (d < -1 || d > 1) throw Error(ErrorCode::InvalidArgument, "label step outside {-1,0,1}");
    }
}

PlaneTree sample_plane_tree(int n, Rng& rng) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative edge count");
    if (n == 0) return PlaneTree{};
    // n up-steps and n+1 down-steps; the rotation starting just after the
    // first minimum of the prefix sums is a Lukasiewicz path ending at -1.
    std::vector<char> steps(2 * n + 1, 0);
    std::fill(steps.begin(), steps.begin() + n, 1);
    std::shuffle(steps.begin(), steps.end(), rng);
    int sum = 0, best = 1, arg = 0;
    for (int i = 0; i < 2 * n + 1; ++i) {
        sum += steps[i] ? 1 : -1;
        if (sum < best) {
            best = sum;
            arg = i;
        }
    }
    std::vector<char> word(2 * n);
    for (int i = 0; i < 2 * n; ++i) word[i] = steps[(arg + 1 + i) % (2 * n + 1)];
    return PlaneTree::from_word(std::move(word));
}

LabelledTree sample_labelled_tree(int n, Rng& rng) {
    PlaneTree shape = sample_plane_tree(n, rng);
    std::vector<int> labels(shape.num_vertices(), 0);
    std::uniform_int_distribution<int> step(-1, 1);
    for (int v = 1; v < shape.num_vertices(); ++v) labels[v] = labels[shape.parent(v)] + step(rng);
    return LabelledTree(std::move(shape), std::move(labels));
}

std::vector<PlaneTree> enumerate_plane_trees(int n) {
    std::vector<PlaneTree> out;
    std::vector<char> word;
    auto rec = [&](auto& self, int ups, int depth) -> void {
        if (static_cast<int>(word.size()) == 2 * n) {
            out.push_back(PlaneTree::from_word(word));
            return;
        }
        if (ups < n) {
            word.push_back(1);
            self(self, ups + 1, depth + 1);
            word.pop_back();
        }
        if (depth > 0) {
            word.push_back(0);
            self(self, ups, depth - 1);
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<LabelledTree> enumerate_labelled_trees(int n) {
    if (n > 8) throw Error(ErrorCode::TooLarge, "labelled tree enumeration is capped at 8 edges");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative edge count");
    std::vector<LabelledTree> out;
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;
    for (const auto& shape : enumerate_plane_trees(n)) {
        for (int c = 0; c < combos; ++c) {
            std::vector<int> labels(n + 1, 0);
            int code = c;
            for (int v = 1; v <= n; ++v) {
                labels[v] = labels[shape.parent(v)] + code % 3 - 1;
                code /= 3;
            }
            out.emplace_back(shape, std::move(labels));
        }
    }
    return out;
}

int height(const PlaneTree& t) {
    int h = 0;
    for (int v = 0; v < t.num_vertices(); ++v) h = std::max(h, t.depth(v));
    return h;
}

int tree_diameter(const PlaneTree& t) {
    // Longest path through each vertex from the two deepest child subtrees.
    const int nv = t.num_vertices();
    std::vector<int> down(nv, 0);
    int best = 0;
    for (int v = nv - 1; v >= 0; --v) {
        int a = 0, b = 0;
        for (int c : t.children(v)) {
            const int d = down[c] + 1;
            if (d > a) {
                b = a;
                a = d;
            } else if (d > b) {
                b = d;
            }
        }
        down[v] = a;
        best = std::max(best, a + b);
    }
    return best;
}

LabelExtremes label_extremes(const LabelledTree& t) {
    auto [lo, hi] = std::minmax_element(t.labels.begin(), t.labels.end());
    return {*lo, *hi};
}

int label_span(const LabelledTree& t) {
    const auto e = label_extremes(t);
    return e.max - e.min;
}

BicoloredLabelledTree bicolor(const LabelledTree& t, Color root_color) {
    const Color other = root_color == Color::Black ? Color::White : Color::Black;
    BicoloredLabelledTree b{t, {}};
    b.colors.resize(t.labels.size());
    for (std::size_t v = 0; v < t.labels.size(); ++v)
        b.colors[v] = (t.labels[v] % 2 == 0) ? root_color : other;
    return b;
}

std::vector<int> bicolored_depths(const BicoloredLabelledTree& t) {
    const auto& s = t.tree.shape;
    std::vector<int> d(s.num_vertices(), 0);
    for (int v = 1; v < s.num_vertices(); ++v)
        d[v] = d[s.parent(v)] + (t.colors[v] != t.colors[s.parent(v)] ? 1 : 0);
    return d;
}

std::vector<int> white_black_depths(const BicoloredLabelledTree& t) {
    const auto& s = t.tree.shape;
    std::vector<int> d(s.num_vertices(), 0);
    for (int v = 1; v < s.num_vertices(); ++v) {
        const int p = s.parent(v);
        d[v] = d[p] + (t.colors[p] == Color::White && t.colors[v] == Color::Black ? 1 : 0);
    }
    return d;
}

int white_black_height(const BicoloredLabelledTree& t) {
    const auto d = white_black_depths(t);
    return *std::max_element(d.begin(), d.end());
}

std::string tree_to_text(const LabelledTree& t) {
    std::string out = t.shape.word_string();
    out += '\n';
    for (std::size_t v = 0; v < t.labels.size(); ++v) {
        if (v) out += ' ';
        out += std::to_string(t.labels[v]);
    }
    out += '\n';
    return out;
}

LabelledTree tree_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string word_line, label_line;
    if (!std::getline(in, word_line)) throw MalformedInput(1, "missing tree word");
    std::vector<char> word;
    for (std::size_t i = 0; i < word_line.size(); ++i) {
        const char c = word_line[i];
        if (c == '(') word.push_back(1);
        else if (c == ')') word.push_back(0);
        else if (c != '\r' && c != ' ') throw MalformedInput(i, "unexpected character in tree word");
    }
    std::getline(in, label_line);
    std::istringstream ls(label_line);
    std::vector<int> labels;
    for (int x; ls >> x;) labels.push_back(x);
    try {
        return LabelledTree(PlaneTree::from_word(std::move(word)), std::move(labels));
    } catch (const Error& e) {
        throw MalformedInput(2, e.what());
    }
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace mapforge
