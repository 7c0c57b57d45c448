#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entringer/lrcode.hpp"
#include "entringer/permutation.hpp"

namespace entringer::bintree {

using lrcode::EncodingSequence;

/// Rooted tree on a finite set of positive integers: the root is the
/// minimum, every non-root vertex has a parent smaller than itself, and no
/// vertex has more than two children. Children are unordered (left/right
/// in a drawing is just layout). Equality and ordering go through the
/// sorted (child,parent) edge list.
class IncreasingBinaryTree {
  public:
    IncreasingBinaryTree() = default;

    static IncreasingBinaryTree single(int v) {
        IncreasingBinaryTree t;
        if (v < 1) throw std::invalid_argument("tree: vertices must be positive");
        t.vertices_.insert(v);
        return t;
    }

    /// Builds from (child,parent) pairs. A lone vertex has no edges, so the
    /// root may be passed explicitly for that case.
    static IncreasingBinaryTree from_edges(const std::vector<std::pair<int, int>>& edges,
                                           std::optional<int> lone_vertex = std::nullopt) {
        IncreasingBinaryTree t;
        if (edges.empty()) {
            if (!lone_vertex) throw std::invalid_argument("tree: empty edge list needs a vertex");
            return single(*lone_vertex);
        }
        for (auto [c, p] : edges) {
            t.vertices_.insert(c);
            t.vertices_.insert(p);
        }
        for (auto [c, p] : edges) {
            if (t.parent_.count(c)) throw std::invalid_argument("tree: vertex has two parents");
            t.parent_[c] = p;
        }
        t.check_invariants();
        return t;
    }

    bool empty() const { return vertices_.empty(); }
    int size() const { return static_cast<int>(vertices_.size()); }
    int root() const {
        if (empty()) throw std::domain_error("tree: empty");
        return *vertices_.begin();
    }
    const std::set<int>& vertices() const { return vertices_; }

    std::optional<int> parent(int v) const {
        auto it = parent_.find(v);
        if (it == parent_.end()) return std::nullopt;
        return it->second;
    }

    /// Children of v, ascending.
    std::vector<int> children(int v) const {
        std::vector<int> out;
        for (const auto& [c, p] : parent_)
            if (p == v) out.push_back(c);
        return out;
    }

    bool is_leaf(int v) const { return children(v).empty(); }

    /// Sorted (child,parent) list; the canonical form.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out(parent_.begin(), parent_.end());
        return out;  // std::map iterates sorted by child
    }

    friend bool operator==(const IncreasingBinaryTree& a, const IncreasingBinaryTree& b) {
        return a.vertices_ == b.vertices_ && a.parent_ == b.parent_;
    }
    friend bool operator<(const IncreasingBinaryTree& a, const IncreasingBinaryTree& b) {
        auto ea = a.edges(), eb = b.edges();
        if (ea != eb) return ea < eb;
        return a.vertices_ < b.vertices_;
    }

    // -- mutators used by the bijection algorithms ---------------------------

    void add_vertex(int v) { vertices_.insert(v); }

    void attach(int parent, int child) {
        assert(vertices_.count(parent));
        vertices_.insert(child);
        assert(!parent_.count(child));
        assert(parent < child);
        assert(children(parent).size() < 2);
        parent_[child] = parent;
    }

    void detach(int child) {
        auto it = parent_.find(child);
        assert(it != parent_.end());
        parent_.erase(it);
    }

    void erase_vertex(int v) {
        assert(is_leaf(v) && !parent_.count(v));
        vertices_.erase(v);
    }

    /// Exchanges the positions of labels a and b, keeping the shape.
    void swap_labels(int a, int b) {
        assert(vertices_.count(a) && vertices_.count(b));
        std::map<int, int> np;
        auto rename = [&](int v) { return v == a ? b : v == b ? a : v; };
        for (const auto& [c, p] : parent_) np[rename(c)] = rename(p);
        parent_ = std::move(np);
    }

    void check_invariants() const {
        if (empty()) return;
        const int r = root();
        if (r < 1) throw std::invalid_argument("tree: vertices must be positive");
        for (int v : vertices_) {
            auto p = parent(v);
            if (v == r) {
                if (p) throw std::invalid_argument("tree: root has a parent");
                continue;
            }
            if (!p) throw std::invalid_argument("tree: disconnected vertex " + std::to_string(v));
            if (*p >= v) throw std::invalid_argument("tree: parent not smaller than child");
            if (!vertices_.count(*p)) throw std::invalid_argument("tree: dangling parent");
            if (children(v).size() > 2)
                throw std::invalid_argument("tree: vertex with more than two children");
        }
        if (children(r).size() > 2)
            throw std::invalid_argument("tree: vertex with more than two children");
        // connectivity: walk each parent chain up to the root
        for (int v : vertices_) {
            int cur = v;
            int steps = 0;
            while (cur != r) {
                auto p = parent(cur);
                if (!p || ++steps > size())
                    throw std::invalid_argument("tree: broken parent chain");
                cur = *p;
            }
        }
    }

  private:
    std::set<int> vertices_;
    std::map<int, int> parent_;  // child -> parent
};

/// Root, then smallest child at every step, down to a leaf.
inline std::vector<int> minimal_path(const IncreasingBinaryTree& t) {
    if (t.empty()) throw std::domain_error("minimal_path: empty tree");
    std::vector<int> path{t.root()};
    for (;;) {
        std::vector<int> kids = t.children(path.back());
        if (kids.empty()) return path;
        path.push_back(kids.front());
    }
}

/// The statistic of BT(n,k): the leaf ending the minimal path.
inline int leaf_stat(const IncreasingBinaryTree& t) { return minimal_path(t).back(); }

enum class Statistic { leaf, parent_of_n };

/// All binary increasing trees on [n], optionally filtered by statistic
/// value k, sorted by canonical edge list. For parent_of_n the statistic of
/// a tree is k where the parent of n is k-1.
inline std::vector<IncreasingBinaryTree> enumerate(int n,
                                                   Statistic stat = Statistic::leaf,
                                                   std::optional<int> k = std::nullopt) {
    if (n < 1) throw std::domain_error("bintree::enumerate: n must be >= 1");
    if (stat == Statistic::parent_of_n && n < 2)
        throw std::domain_error("bintree::enumerate: parent_of_n needs n >= 2");
    if (k && (*k < 1 || *k > n)) throw std::domain_error("bintree::enumerate: k outside 1..n");

    std::vector<IncreasingBinaryTree> all{IncreasingBinaryTree::single(1)};
    for (int v = 2; v <= n; ++v) {
        std::vector<IncreasingBinaryTree> next;
        for (const auto& t : all)
            for (int u : t.vertices()) {
                if (t.children(u).size() >= 2) continue;
                IncreasingBinaryTree bigger = t;
                bigger.attach(u, v);
                next.push_back(std::move(bigger));
            }
        all = std::move(next);
    }
    if (k) {
        std::vector<IncreasingBinaryTree> filtered;
        for (auto& t : all) {
            const int value = stat == Statistic::leaf ? leaf_stat(t) : *t.parent(n) + 1;
            if (value == *k) filtered.push_back(std::move(t));
        }
        all = std::move(filtered);
    }
    std::sort(all.begin(), all.end());
    return all;
}

/// phi: builds the tree by consuming the encoding sequence right to left,
/// keeping the running invariant Leaf(T_m) = j_m.
///
///   (j,i)*  graft i and j onto the minimal path: either i becomes the new
///           root (i < a_1), or i splices into the unique gap a_q < i <
///           a_{q+1}; j hangs under i either way.
///   (j,i)   i and j non-siblings: exchange the two labels.
///   (j,i)   siblings under m1: re-hang j below i, handing j's smaller
///           subtree to m1 and its larger one to i.
inline IncreasingBinaryTree phi(const EncodingSequence& seq) {
    if (lrcode::ValidationResult v = lrcode::validate(seq); !v)
        throw std::domain_error(std::string("phi: invalid sequence, clause ") +
                                lrcode::clause_name(v.clause) + ": " + v.message);

    const auto& e = seq.entries;
    const lrcode::Domino& last = e.back();
    IncreasingBinaryTree t = IncreasingBinaryTree::single(last.j);
    if (!last.is_singleton()) {
        t = IncreasingBinaryTree::single(last.i);
        t.attach(last.i, last.j);
    }

    for (auto it = e.rbegin() + 1; it != e.rend(); ++it) {
        const int j = it->j, i = it->i;
        if (it->starred) {
            const std::vector<int> path = minimal_path(t);
            if (i < path.front()) {
                // i becomes the new root, over j and the old root
                IncreasingBinaryTree rebuilt = IncreasingBinaryTree::single(i);
                rebuilt.attach(i, j);
                rebuilt.attach(i, path.front());
                for (auto [c, p] : t.edges()) rebuilt.attach(p, c);
                t = std::move(rebuilt);
            } else {
                std::size_t q = path.size();
                for (std::size_t m = 0; m + 1 < path.size(); ++m)
                    if (path[m] < i && i < path[m + 1]) {
                        q = m;
                        break;
                    }
                if (q == path.size())
                    throw std::logic_error("phi: no insertion gap on the minimal path for " +
                                           std::to_string(i) + " (validator escape)");
                t.detach(path[q + 1]);
                t.add_vertex(i);
                t.attach(path[q], i);
                t.attach(i, path[q + 1]);
                t.attach(i, j);
            }
        } else {
            const auto pi = t.parent(i), pj = t.parent(j);
            const bool siblings = pi && pj && *pi == *pj;
            if (!siblings) {
                t.swap_labels(i, j);
            } else {
                const int m1 = *pi;
                const std::vector<int> kids = t.children(j);  // ascending: min(A) < min(B)
                t.detach(j);
                for (int kid : kids) t.detach(kid);
                t.attach(i, j);
                if (!kids.empty()) t.attach(m1, kids[0]);
                if (kids.size() == 2) t.attach(i, kids[1]);
            }
        }
        assert(leaf_stat(t) == j);  // property (3.1)
    }
    return t;
}

namespace detail {

/// Predecessor of v in the tree's support.
inline std::optional<int> support_pred(const IncreasingBinaryTree& t, int v) {
    auto it = t.vertices().find(v);
    if (it == t.vertices().begin()) return std::nullopt;
    return *std::prev(it);
}

}  // namespace detail

/// phi^{-1}: peels the tree leaf-first, emitting one domino per step.
/// With a_k the minimal-path leaf and a_{k-1} its support predecessor:
///
///   (a1) a_{k-1} is the parent, has another child m, and m is smaller
///        than any sibling s of a_{k-1}: emit (a_k,a_{k-1})*, delete both
///        vertices and lift m to a_{k-1}'s parent.
///   (a2) a_{k-1} is the parent otherwise: emit (a_k,a_{k-1}) and re-hang
///        a_k above a_{k-1} (undoes the sibling surgery of phi).
///   (b)  a_{k-1} is not the parent: emit (a_k,a_{k-1}) and swap labels.
///
/// Trees of size one or two close with the starred terminal domino.
inline EncodingSequence phi_inverse(const IncreasingBinaryTree& tree) {
    if (tree.empty()) throw std::domain_error("phi_inverse: empty tree");
    tree.check_invariants();

    IncreasingBinaryTree t = tree;
    EncodingSequence out{*tree.vertices().rbegin(), {}};

    for (;;) {
        if (t.size() == 1) {
            out.entries.push_back({t.root(), t.root(), true});
            break;
        }
        if (t.size() == 2) {
            const int child = t.children(t.root()).front();
            out.entries.push_back({child, t.root(), true});
            break;
        }
        const std::vector<int> path = minimal_path(t);
        const int leaf = path.back();
        const auto pred = detail::support_pred(t, leaf);
        assert(pred);  // leaf > root, so a predecessor exists
        const int p = *pred;

        if (t.parent(leaf) == p) {
            // 0 means absent throughout (vertices are positive)
            std::vector<int> p_kids = t.children(p);
            std::erase(p_kids, leaf);
            const int m = p_kids.empty() ? 0 : p_kids.front();
            const auto grand = t.parent(p);
            int s = 0;
            if (grand) {
                std::vector<int> g_kids = t.children(*grand);
                std::erase(g_kids, p);
                if (!g_kids.empty()) s = g_kids.front();
            }
            if (m != 0 && (s == 0 || m < s)) {
                // (a1): remove both, reconnect m upward
                out.entries.push_back({leaf, p, true});
                t.detach(leaf);
                t.erase_vertex(leaf);
                t.detach(m);
                if (t.parent(p)) t.detach(p);
                t.erase_vertex(p);
                if (grand) t.attach(*grand, m);
                // otherwise p was the root and m's subtree is the remainder
            } else {
                // (a2): leaf moves up beside p; s and m become its children
                assert(grand);  // a 3+ vertex tree cannot reach here rootless
                out.entries.push_back({leaf, p, false});
                t.detach(leaf);
                if (m) t.detach(m);
                if (s) t.detach(s);
                t.attach(*grand, leaf);
                if (s) t.attach(leaf, s);
                if (m) t.attach(leaf, m);
            }
        } else {
            // (b)
            out.entries.push_back({leaf, p, false});
            t.swap_labels(p, leaf);
        }
    }
    return out;
}

/// Psi = phi o psi, the main bijection DU(n,k) -> BT(n,k).
inline IncreasingBinaryTree psi_total(const perm::Permutation& p) {
    IncreasingBinaryTree t = phi(lrcode::encode(p));
    assert(leaf_stat(t) == p.word().front());
    return t;
}

/// The edge (k-1,k) of a tree with minimal-path leaf k is removable when
/// k-1 is the parent of k, k-1 has another child m, and m is smaller than
/// the sibling of k-1 when one exists. Removable trees are exactly those
/// whose first phi^{-1} step is a starred deletion, which also makes the
/// two-vertex tree removable (deleting its edge ends the recursion).
inline bool is_removable(const IncreasingBinaryTree& t, int k) {
    if (k < 2) throw std::domain_error("is_removable: k must be >= 2");
    if (leaf_stat(t) != k) throw std::domain_error("is_removable: leaf statistic is not k");
    const auto p = t.parent(k);
    if (!p || *p != k - 1) return false;
    if (t.size() == 2) return true;
    std::vector<int> kids = t.children(k - 1);
    std::erase(kids, k);
    if (kids.empty()) return false;
    const int m = kids.front();
    const auto grand = t.parent(k - 1);
    if (!grand) return true;
    std::vector<int> g_kids = t.children(*grand);
    std::erase(g_kids, k - 1);
    return g_kids.empty() || m < g_kids.front();
}

}  // namespace entringer::bintree
