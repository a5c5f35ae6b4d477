#pragma once

#include <utility>
#include <vector>

#include "zs/element_set.hpp"
#include "zs/zerosum.hpp"

namespace zs {

struct TreeLimits {
    std::size_t node_budget = std::size_t(1) << 20;
};

// A labeled binary tree over a set D: every non-leaf node's label is the sum
// of its two children's labels, and along every root-to-leaf branch the
// off-branch child labels are pairwise distinct (which caps branch length at
// |D|+1 and makes every such tree finite). Nodes are identified by creation
// index; the root is node 0. Construction is structure-only; `audit`-style
// invariant checks live with the callers that need them.
class DTree {
public:
    struct Node {
        int parent = -1;
        int child[2] = {-1, -1};
        int label = 0;  // index into set().elems()
        int depth = 0;
    };

    DTree(ElementSet set, int root_label_index);

    const ElementSet& set() const { return set_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    static constexpr int root() { return 0; }

    bool is_leaf(int v) const { return nodes_[v].child[0] < 0; }
    int parent(int v) const { return nodes_[v].parent; }
    int depth(int v) const { return nodes_[v].depth; }
    int label_index(int v) const { return nodes_[v].label; }
    const GroupElement& label(int v) const { return set_[nodes_[v].label]; }
    int sibling(int v) const;

    // Attach two children to a leaf; returns their ids (left, right).
    std::pair<int, int> expand(int node, int left_label_index, int right_label_index);

    std::vector<int> leaves() const;  // ascending node id

    // Deepest common ancestor.
    int meet(int x, int y) const;
    // True iff a lies on the branch from the root to v (a == v included).
    bool is_ancestor(int a, int v) const;

    // For each proper ancestor t of v (root first): (t, label index of the
    // child of t that is not on the branch to v).
    std::vector<std::pair<int, int>> branch_off_labels(int v) const;

private:
    ElementSet set_;
    std::vector<Node> nodes_;
};

// Per-leaf record of the chosen one-level extension: the two virtual child
// labels, the node the leaf regresses to, and whether both labels matched
// branch off-labels (the two-match class) or exactly one did.
struct LeafExtension {
    int leaf = -1;
    int primary_label = -1;    // matches the off-branch label at f_node
    int secondary_label = -1;  // absent from off-branch labels strictly between f_node and leaf
    int f_node = -1;           // strictly above the leaf
    bool both_matched = false;
};

struct RegressiveData {
    std::vector<LeafExtension> leaf_ext;  // ascending leaf id
    const LeafExtension& for_leaf(int leaf) const;
    // leaf id -> f node, -1 elsewhere; sized by tree node count.
    std::vector<int> as_leaf_map(std::size_t node_count) const;
};

// Two non-empty subsets of D whose sums cancel.
struct Certificate {
    ElementSet A;
    ElementSet B;
};

// Grows the unique breadth-first maximal tree: each leaf is expanded with the
// first decomposition pair whose labels both avoid the branch's off-labels;
// leaves where every pair is blocked stay leaves.
DTree build_maximal_tree(const ElementSet& D, const GroupElement& root_label,
                         const TreeLimits& limits = {});

// Chooses a one-level extension for every leaf of a maximal tree and derives
// the regressive map. Errors if some leaf's chosen pair matches no branch
// off-label (the tree was not maximal).
RegressiveData derive_regressive(const DTree& T);

// Two distinct leaves x, y with f(x) = f(y) = meet(x, y), found by descending
// into a subtree whose leaf images stay inside it, else taking one leaf from
// each subtree mapping to the current root.
std::pair<int, int> regressive_collision(const DTree& T, const std::vector<int>& leaf_to_f);
std::pair<int, int> regressive_collision(const DTree& T, const RegressiveData& R);

// Reads the certificate off the two colliding branches and re-verifies the
// telescoping identity and the zero sum exactly before returning.
Certificate extract_certificate(const DTree& T, const RegressiveData& R, int x, int y);

// The composed pipeline with the canonical root (least element of D).
Certificate certify(const ElementSet& D, const TreeLimits& limits = {});

bool verify_certificate(const ElementSet& D, const Certificate& c);

}  // namespace zs
