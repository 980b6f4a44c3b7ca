#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <rgcalc/rooted_tree.hpp>
#include <rgcalc/uni_poly.hpp>

namespace rgcalc
{

// Enumeration bound: 8^7 (about 2.1M) trees is the largest default workload.
inline constexpr int default_tree_bound = 8;

using TreeVisitor = std::function<void(const RootedTree &)>;

// Histogram indexed by the number of improper edges.
using Histogram = std::vector<std::int64_t>;

// Every rooted tree on [n] exactly once (n^(n-1) trees), decoded from Prufer
// sequences with each choice of root. Trees are not planted.
void enumerate_rooted(int n, const TreeVisitor &visit, int bound = default_tree_bound);

// Every tree on [n] rooted at 1 (n^(n-2) trees).
void enumerate_rooted_at_one(int n, const TreeVisitor &visit, int bound = default_tree_bound);

std::vector<RootedTree> all_rooted(int n, int bound = default_tree_bound);

// R(n, k) for k = 0..n-1.
Histogram count_R(int n, int bound = default_tree_bound);

// T(n, k) for k = 0..n-1, over trees on [n+1] rooted at 1.
Histogram count_T(int n, int bound = default_tree_bound);

// Rooted trees on [n] with k improper edges in which vertex 1 is a leaf.
Histogram count_R_leaf_one(int n, int bound = default_tree_bound);

enum class QForm
{
    rooted_at_one, // sum over trees on [n+1] rooted at 1 of x^(deg 1 - 1)
    rooted_any,    // sum over rooted trees on [n] of (x+1)^(deg 1)
};

UniPoly q_poly_bruteforce(int n, int k, QForm form, int bound = default_tree_bound);

// All k = 0..n-1 in one enumeration pass.
std::vector<UniPoly> q_polys_bruteforce(int n, QForm form, int bound = default_tree_bound);

// ---- insertion algorithm ----

enum class InsertionKind
{
    z, // new leaf under `parent`
    v, // spliced into edge (parent, child)
    u, // restructured at improper edge (parent, child)
};

struct Insertion
{
    InsertionKind kind;
    int parent;
    int child; // unused (0) for z

    friend bool operator==(const Insertion &, const Insertion &) = default;
    std::string to_string() const;
};

// New maximal label as a leaf child of i. i = 0 is rejected (InvalidVertex).
RootedTree z_insert(const RootedTree &t, int i);

// New maximal label spliced between i and its child j. The new lower edge is
// improper. InvalidEdge if (i, j) is not an edge.
RootedTree v_insert(const RootedTree &t, int i, int j);

// (i, j) must be improper (NotImproperEdge otherwise). With i's children
// ranked by subtree minimum, j_1 < ... < j = j_d < ... < j_l, the new vertex
// takes i's place, adopts j_1..j_d and i; i keeps j_{d+1}..j_l.
RootedTree u_insert(const RootedTree &t, int i, int j);

RootedTree apply_insertion(const RootedTree &t, const Insertion &ins);

// All legal insertions of the next label, z first, then v, then u.
std::vector<Insertion> legal_insertions(const RootedTree &t);

enum class InsertionSeed
{
    planted_edge,  // generates all rooted trees on [n]
    single_vertex, // generates all trees on [n] rooted at 1
};

void generate_via_insertion(int n, InsertionSeed seed, const TreeVisitor &visit, int bound = default_tree_bound);

// Removes the maximal label by inverting the insertion that created it.
// Requires n >= 2; throws InvalidTree for trees no insertion can produce.
std::pair<RootedTree, Insertion> delete_max(const RootedTree &t);

// ---- degree-constrained counts over trees on [n] rooted at 1 ----

struct BijectionTable
{
    int n = 0;
    // left[k][r]  = #{T : k improper edges, deg(2) > 0, deg(1) = r}
    // right[k][r] = #{T : k+1 improper edges, deg(n) > 0, deg(1) = r}
    std::vector<std::vector<std::int64_t>> left;
    std::vector<std::vector<std::int64_t>> right;

    bool balanced() const { return left == right; }
};

BijectionTable bijection_counts(int n, int bound = default_tree_bound);

} // namespace rgcalc
