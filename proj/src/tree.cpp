#include "zs/tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace zs {

DTree::DTree(ElementSet set, int root_label_index) : set_(std::move(set)) {
    if (root_label_index < 0 || root_label_index >= (int)set_.size())
        throw DomainError("bad_root", "root label must be an element of the set");
    Node root;
    root.label = root_label_index;
    nodes_.push_back(root);
}

int DTree::sibling(int v) const {
    int p = nodes_[v].parent;
    assert(p >= 0);
    return nodes_[p].child[0] == v ? nodes_[p].child[1] : nodes_[p].child[0];
}

std::pair<int, int> DTree::expand(int node, int left_label_index, int right_label_index) {
    if (!is_leaf(node)) throw DomainError("not_a_leaf", "only leaves can be expanded");
    int base = (int)nodes_.size();
    for (int side = 0; side < 2; ++side) {
        Node c;
        c.parent = node;
        c.label = side == 0 ? left_label_index : right_label_index;
        c.depth = nodes_[node].depth + 1;
        nodes_.push_back(c);
        nodes_[node].child[side] = base + side;
    }
    return {base, base + 1};
}

std::vector<int> DTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < (int)nodes_.size(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

int DTree::meet(int x, int y) const {
    while (x != y) {
        if (nodes_[x].depth >= nodes_[y].depth) x = nodes_[x].parent;
        else y = nodes_[y].parent;
    }
    return x;
}

bool DTree::is_ancestor(int a, int v) const {
    while (v >= 0 && nodes_[v].depth > nodes_[a].depth) v = nodes_[v].parent;
    return v == a;
}

std::vector<std::pair<int, int>> DTree::branch_off_labels(int v) const {
    std::vector<std::pair<int, int>> out;
    int u = v;
    while (nodes_[u].parent >= 0) {
        int t = nodes_[u].parent;
        out.emplace_back(t, nodes_[sibling(u)].label);
        u = t;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

DTree build_maximal_tree(const ElementSet& D, const GroupElement& root_label,
                         const TreeLimits& limits) {
    if (!is_decomposable(D))
        throw DomainError("not_decomposable", "a maximal tree needs a decomposable set");
    if (D.size() > 64)
        throw SizeGuardError("tree construction caps |D| at 64");
    int root_index = D.index_of(canonical_element(D.ctx(), root_label));
    if (root_index < 0) throw DomainError("bad_root", "root label must be an element of the set");

    auto table = decomposition_table(D);
    DTree T(D, root_index);

    // off_labels[v]: bitmask of off-branch label indices along the branch to v.
    std::vector<std::uint64_t> off_labels{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        std::uint64_t blocked = off_labels[x];
        for (auto [a, b] : table.rows[T.label_index(x)]) {
            if (blocked >> a & 1 || blocked >> b & 1) continue;
            if (T.size() + 2 > limits.node_budget)
                throw SizeGuardError("tree node budget exceeded (" +
                                     std::to_string(limits.node_budget) + " nodes)");
            auto [l, r] = T.expand(x, a, b);
            off_labels.resize(T.size());
            off_labels[l] = blocked | (std::uint64_t(1) << b);
            off_labels[r] = blocked | (std::uint64_t(1) << a);
            queue.push_back(l);
            queue.push_back(r);
            break;
        }
    }
    return T;
}

const LeafExtension& RegressiveData::for_leaf(int leaf) const {
    for (const auto& e : leaf_ext)
        if (e.leaf == leaf) return e;
    throw DomainError("not_a_leaf", "node " + std::to_string(leaf) + " carries no extension");
}

std::vector<int> RegressiveData::as_leaf_map(std::size_t node_count) const {
    std::vector<int> f(node_count, -1);
    for (const auto& e : leaf_ext) f[e.leaf] = e.f_node;
    return f;
}

RegressiveData derive_regressive(const DTree& T) {
    const ElementSet& D = T.set();
    auto table = decomposition_table(D);

    RegressiveData R;
    for (int x : T.leaves()) {
        if (table.rows[T.label_index(x)].empty())
            throw InternalCheckError("leaf label admits no decomposition; set not decomposable");
        auto [a, b] = table.rows[T.label_index(x)][0];

        // deepest branch position carrying each virtual label, if any
        int pos_a = -1, pos_b = -1;
        for (auto [t, lbl] : T.branch_off_labels(x)) {
            if (lbl == a) pos_a = t;
            if (lbl == b) pos_b = t;
        }
        if (pos_a < 0 && pos_b < 0)
            throw InternalCheckError(
                "leaf admits an expansion pair avoiding all branch off-labels; tree not maximal");

        LeafExtension ext;
        ext.leaf = x;
        if (pos_a >= 0 && pos_b >= 0) {
            ext.both_matched = true;
            if (T.depth(pos_a) == T.depth(pos_b)) {
                // off-labels along a branch are distinct, so equal depth forces a == b
                assert(a == b);
                ext.f_node = pos_a;
                ext.primary_label = a;
                ext.secondary_label = b;
            } else if (T.depth(pos_a) > T.depth(pos_b)) {
                ext.f_node = pos_a;
                ext.primary_label = a;
                ext.secondary_label = b;
            } else {
                ext.f_node = pos_b;
                ext.primary_label = b;
                ext.secondary_label = a;
            }
        } else {
            ext.both_matched = false;
            ext.f_node = pos_a >= 0 ? pos_a : pos_b;
            ext.primary_label = pos_a >= 0 ? a : b;
            ext.secondary_label = pos_a >= 0 ? b : a;
        }
        R.leaf_ext.push_back(ext);
    }
    return R;
}

std::pair<int, int> regressive_collision(const DTree& T, const std::vector<int>& leaf_to_f) {
    if (T.is_leaf(DTree::root()))
        throw DomainError("height_one", "no regressive function exists on a single-node tree");
    int n = (int)T.size();
    for (int v = 0; v < n; ++v) {
        if (!T.is_leaf(v)) continue;
        int f = leaf_to_f.at(v);
        if (f < 0 || f == v || !T.is_ancestor(f, v))
            throw DomainError("not_regressive", "f must map every leaf strictly below itself");
    }

    // Children have larger ids than their parent, so reverse id order is a
    // bottom-up sweep. A subtree keeps its leaf images inside itself iff the
    // minimum image depth over its leaves reaches the subtree root's depth.
    std::vector<int> min_img_depth(n);
    for (int v = n - 1; v >= 0; --v) {
        if (T.is_leaf(v)) min_img_depth[v] = T.depth(leaf_to_f[v]);
        else
            min_img_depth[v] = std::min(min_img_depth[T.nodes()[v].child[0]],
                                        min_img_depth[T.nodes()[v].child[1]]);
    }

    int r = DTree::root();
    while (true) {
        int c0 = T.nodes()[r].child[0], c1 = T.nodes()[r].child[1];
        if (min_img_depth[c0] >= T.depth(c0)) {
            r = c0;
            continue;
        }
        if (min_img_depth[c1] >= T.depth(c1)) {
            r = c1;
            continue;
        }
        // both subtrees leak; every leaked image is exactly r (one level up)
        int picked[2] = {-1, -1};
        for (int side = 0; side < 2; ++side) {
            int c = side == 0 ? c0 : c1;
            std::vector<int> stack{c};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (T.is_leaf(v)) {
                    if (leaf_to_f[v] == r && (picked[side] < 0 || v < picked[side]))
                        picked[side] = v;
                } else {
                    stack.push_back(T.nodes()[v].child[0]);
                    stack.push_back(T.nodes()[v].child[1]);
                }
            }
            if (picked[side] < 0)
                throw InternalCheckError("no leaf regresses to the subtree root");
        }
        return {picked[0], picked[1]};
    }
}

std::pair<int, int> regressive_collision(const DTree& T, const RegressiveData& R) {
    return regressive_collision(T, R.as_leaf_map(T.size()));
}

namespace {

// Nodes strictly between w and the leaf x on x's branch, leaf side first,
// plus the child of w on that branch.
struct BranchSegment {
    std::vector<int> off_nodes;  // off-branch children of nodes in (w, x)
    int child_of_w = -1;         // branch node directly above w... the child on x's side
};

BranchSegment segment(const DTree& T, int w, int x) {
    BranchSegment seg;
    int u = x;
    while (T.parent(u) != w) {
        int t = T.parent(u);
        if (t < 0) throw DomainError("not_a_collision", "meet node is not an ancestor");
        seg.off_nodes.push_back(T.nodes()[t].child[0] == u ? T.nodes()[t].child[1]
                                                           : T.nodes()[t].child[0]);
        u = t;
    }
    seg.child_of_w = u;
    return seg;
}

}  // namespace

Certificate extract_certificate(const DTree& T, const RegressiveData& R, int x, int y) {
    if (x == y || !T.is_leaf(x) || !T.is_leaf(y))
        throw DomainError("not_a_collision", "need two distinct leaves");
    const auto& ext_x = R.for_leaf(x);
    const auto& ext_y = R.for_leaf(y);
    int w = T.meet(x, y);
    if (ext_x.f_node != w || ext_y.f_node != w)
        throw DomainError("not_a_collision", "both leaves must regress to their meet");

    const ElementSet& D = T.set();
    const GroupContext& ctx = D.ctx();
    auto seg_x = segment(T, w, x);
    auto seg_y = segment(T, w, y);

    // each branch's matched virtual label is the off-branch child of w,
    // i.e. the child of w on the other leaf's side
    if (ext_x.primary_label != T.label_index(seg_y.child_of_w) ||
        ext_y.primary_label != T.label_index(seg_x.child_of_w))
        throw InternalCheckError("matched virtual labels disagree with the meet's children");

    const auto collect = [&](const BranchSegment& seg, int secondary) {
        std::vector<GroupElement> labels;
        labels.reserve(seg.off_nodes.size() + 1);
        for (int t : seg.off_nodes) labels.push_back(T.label(t));
        labels.push_back(D[secondary]);
        return ElementSet(ctx, std::move(labels));
    };
    ElementSet A = collect(seg_x, ext_x.secondary_label);
    ElementSet B = collect(seg_y, ext_y.secondary_label);
    if (A.size() != seg_x.off_nodes.size() + 1 || B.size() != seg_y.off_nodes.size() + 1)
        throw InternalCheckError("certificate labels collide; off-branch injectivity violated");

    // telescoping down the branch: label(child of w) = sum of the leaf's two
    // virtual labels plus the off-branch labels in between
    const auto telescope = [&](const BranchSegment& seg, const LeafExtension& ext) {
        GroupElement acc =
            element_add(ctx, D[ext.primary_label], D[ext.secondary_label]);
        for (int t : seg.off_nodes) acc = element_add(ctx, acc, T.label(t));
        return acc == T.label(seg.child_of_w);
    };
    if (!telescope(seg_x, ext_x) || !telescope(seg_y, ext_y))
        throw InternalCheckError("telescoping identity failed");

    if (!is_identity(ctx, element_add(ctx, set_sum(A), set_sum(B))))
        throw InternalCheckError("certificate sums do not cancel");
    return {std::move(A), std::move(B)};
}

Certificate certify(const ElementSet& D, const TreeLimits& limits) {
    if (!is_decomposable(D))
        throw DomainError("not_decomposable", "certify requires a decomposable set");
    DTree T = build_maximal_tree(D, D[0], limits);
    RegressiveData R = derive_regressive(T);
    auto [x, y] = regressive_collision(T, R);
    Certificate c = extract_certificate(T, R, x, y);
    if (!verify_certificate(D, c)) throw InternalCheckError("certificate failed verification");
    return c;
}

bool verify_certificate(const ElementSet& D, const Certificate& c) {
    if (c.A.empty() || c.B.empty()) return false;
    if (!(c.A.ctx() == D.ctx()) || !(c.B.ctx() == D.ctx())) return false;
    if (!D.contains_all(c.A) || !D.contains_all(c.B)) return false;
    return is_identity(D.ctx(), element_add(D.ctx(), set_sum(c.A), set_sum(c.B)));
}

}  // namespace zs
