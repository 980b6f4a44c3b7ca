#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rgcalc
{

// Labeled rooted tree on [n] stored as a parent array. parent(root) is 0.
// A planted tree additionally owns the auxiliary vertex 0 whose only child
// is the root, so (0, root) counts as an edge.
class RootedTree
{
public:
    // parents[v - 1] is the parent of v, 0 for the root. Throws InvalidTree
    // unless the links form a tree on [n].
    RootedTree(std::vector<int> parents, bool planted);

    // The planted tree 0 - 1.
    static RootedTree planted_edge();

    // The tree with the single vertex 1 (not planted).
    static RootedTree single_vertex();

    int size() const noexcept { return static_cast<int>(parent_.size()) - 1; }
    int root() const noexcept { return root_; }
    bool planted() const noexcept { return planted_; }
    int parent(int v) const;
    const std::vector<int> &parents() const noexcept { return parent_; }

    bool is_vertex(int v) const noexcept { return v >= 1 && v <= size(); }
    // (i, j) with j a child of i; (0, root) only if planted.
    bool is_edge(int i, int j) const noexcept;

    std::vector<int> children(int v) const;
    int degree(int v) const;

    // beta(v): the smallest label in the subtree rooted at v; index 0 unused.
    std::vector<int> subtree_minima() const;

    bool is_improper(int i, int j) const;

    // "root:r;parents:[...]" listing the parents of all non-root vertices in
    // increasing label order.
    std::string to_string() const;
    static RootedTree parse(std::string_view text, bool planted = false);

    friend bool operator==(const RootedTree &, const RootedTree &) = default;
    friend auto operator<=>(const RootedTree &a, const RootedTree &b)
    {
        if (auto c = a.planted_ <=> b.planted_; c != 0) {
            return c;
        }
        return a.parent_ <=> b.parent_;
    }

private:
    RootedTree() = default;

    std::vector<int> parent_; // index 0 unused
    int root_ = 1;
    bool planted_ = false;
};

struct TreeStats
{
    int improper_count = 0;
    std::vector<int> degrees;     // child count per vertex, index 0 unused
    std::vector<int> beta;        // subtree minima, index 0 unused
};

TreeStats tree_stats(const RootedTree &t);

// Number of improper edges via subtree minima in one pass.
int improper_count(const RootedTree &t);

} // namespace rgcalc
