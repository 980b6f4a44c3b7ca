#include <rgcalc/trees.hpp>

#include <algorithm>
#include <stdexcept>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

namespace
{

void check_bound(int n, int bound, const char *what)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
    if (n > bound) {
        throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration bound "
                            + std::to_string(bound));
    }
}

// Decodes a Prufer sequence over [n] (length n-2) into an edge list, then
// orients it away from `root`. Returns parents[v-1].
std::vector<int> decode_prufer(const std::vector<int> &seq, int n, int root)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    };
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int s : seq) {
        ++degree[static_cast<std::size_t>(s)];
    }
    for (int s : seq) {
        int leaf = 1;
        while (degree[static_cast<std::size_t>(leaf)] != 1) {
            ++leaf;
        }
        link(leaf, s);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(s)];
    }
    int a = 0;
    for (int v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (a == 0) {
                a = v;
            } else {
                link(a, v);
                break;
            }
        }
    }
    std::vector<int> parents(static_cast<std::size_t>(n), -1);
    parents[static_cast<std::size_t>(root) - 1] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (parents[static_cast<std::size_t>(w) - 1] == -1) {
                parents[static_cast<std::size_t>(w) - 1] = v;
                stack.push_back(w);
            }
        }
    }
    return parents;
}

// Calls f(seq) for every sequence in [n]^(n-2).
template <typename F>
void for_each_prufer(int n, F &&f)
{
    const std::size_t len = n >= 2 ? static_cast<std::size_t>(n) - 2 : 0;
    std::vector<int> seq(len, 1);
    while (true) {
        f(seq);
        std::size_t pos = 0;
        while (pos < len && seq[pos] == n) {
            seq[pos] = 1;
            ++pos;
        }
        if (pos == len) {
            return;
        }
        ++seq[pos];
    }
}

void rooted_trees(int n, bool only_root_one, const TreeVisitor &visit)
{
    if (n == 1) {
        visit(RootedTree::single_vertex());
        return;
    }
    for_each_prufer(n, [&](const std::vector<int> &seq) {
        const int last_root = only_root_one ? 1 : n;
        for (int root = 1; root <= last_root; ++root) {
            visit(RootedTree(decode_prufer(seq, n, root), false));
        }
    });
}

RootedTree with_parents(const RootedTree &t, std::vector<int> parents)
{
    return RootedTree(std::move(parents), t.planted());
}

std::vector<int> parent_list(const RootedTree &t)
{
    return {t.parents().begin() + 1, t.parents().end()};
}

} // namespace

void enumerate_rooted(int n, const TreeVisitor &visit, int bound)
{
    check_bound(n, bound, "enumerate_rooted");
    rooted_trees(n, false, visit);
}

void enumerate_rooted_at_one(int n, const TreeVisitor &visit, int bound)
{
    check_bound(n, bound, "enumerate_rooted_at_one");
    rooted_trees(n, true, visit);
}

std::vector<RootedTree> all_rooted(int n, int bound)
{
    std::vector<RootedTree> out;
    enumerate_rooted(n, [&](const RootedTree &t) { out.push_back(t); }, bound);
    return out;
}

Histogram count_R(int n, int bound)
{
    check_bound(n, bound, "count_R");
    Histogram h(static_cast<std::size_t>(n), 0);
    rooted_trees(n, false, [&](const RootedTree &t) { ++h[static_cast<std::size_t>(improper_count(t))]; });
    return h;
}

Histogram count_T(int n, int bound)
{
    check_bound(n, bound, "count_T");
    Histogram h(static_cast<std::size_t>(n), 0);
    rooted_trees(n + 1, true, [&](const RootedTree &t) { ++h[static_cast<std::size_t>(improper_count(t))]; });
    return h;
}

Histogram count_R_leaf_one(int n, int bound)
{
    check_bound(n, bound, "count_R_leaf_one");
    Histogram h(static_cast<std::size_t>(n), 0);
    rooted_trees(n, false, [&](const RootedTree &t) {
        if (t.degree(1) == 0) {
            ++h[static_cast<std::size_t>(improper_count(t))];
        }
    });
    return h;
}

std::vector<UniPoly> q_polys_bruteforce(int n, QForm form, int bound)
{
    check_bound(n, bound, "q_poly_bruteforce");
    // by_degree[k][d] = number of trees with k improper edges and deg(1) = d
    std::vector<std::vector<std::int64_t>> by_degree(static_cast<std::size_t>(n),
                                                     std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    auto tally = [&](const RootedTree &t) {
        const auto s = tree_stats(t);
        ++by_degree[static_cast<std::size_t>(s.improper_count)][static_cast<std::size_t>(s.degrees[1])];
    };
    if (form == QForm::rooted_at_one) {
        rooted_trees(n + 1, true, tally);
    } else {
        rooted_trees(n, false, tally);
    }
    const UniPoly x_plus_1 = UniPoly::x() + UniPoly(1);
    std::vector<UniPoly> out;
    for (const auto &row : by_degree) {
        UniPoly p;
        UniPoly power(1);
        for (std::size_t d = 0; d < row.size(); ++d) {
            if (form == QForm::rooted_at_one) {
                // x^(d-1); d >= 1 always holds since the root has a child.
                if (d >= 1 && row[d] != 0) {
                    std::vector<Rational> c(d, Rational(0));
                    c[d - 1] = Rational(static_cast<long>(row[d]));
                    p += UniPoly(std::move(c));
                }
            } else {
                if (row[d] != 0) {
                    p += Rational(static_cast<long>(row[d])) * power;
                }
                power = power * x_plus_1;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

UniPoly q_poly_bruteforce(int n, int k, QForm form, int bound)
{
    if (k < 0 || k >= n) {
        return {};
    }
    return q_polys_bruteforce(n, form, bound)[static_cast<std::size_t>(k)];
}

std::string Insertion::to_string() const
{
    switch (kind) {
        case InsertionKind::z:
            return "z@" + std::to_string(parent);
        case InsertionKind::v:
            return "v@(" + std::to_string(parent) + "," + std::to_string(child) + ")";
        case InsertionKind::u:
            return "u@(" + std::to_string(parent) + "," + std::to_string(child) + ")";
    }
    return {};
}

RootedTree z_insert(const RootedTree &t, int i)
{
    if (!t.is_vertex(i)) {
        throw InvalidVertex("z-insertion needs a vertex of the tree, got " + std::to_string(i));
    }
    auto parents = parent_list(t);
    parents.push_back(i);
    return with_parents(t, std::move(parents));
}

RootedTree v_insert(const RootedTree &t, int i, int j)
{
    if (!t.is_edge(i, j)) {
        throw InvalidEdge("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
    const int m = t.size() + 1;
    auto parents = parent_list(t);
    parents.push_back(i);
    parents[static_cast<std::size_t>(j) - 1] = m;
    return with_parents(t, std::move(parents));
}

RootedTree u_insert(const RootedTree &t, int i, int j)
{
    if (!t.is_edge(i, j)) {
        throw InvalidEdge("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
    const auto beta = t.subtree_minima();
    if (i == 0 || beta[static_cast<std::size_t>(j)] >= i) {
        throw NotImproperEdge("(" + std::to_string(i) + "," + std::to_string(j) + ") is proper");
    }
    const int m = t.size() + 1;
    auto parents = parent_list(t);
    for (int c : t.children(i)) {
        if (beta[static_cast<std::size_t>(c)] <= beta[static_cast<std::size_t>(j)]) {
            parents[static_cast<std::size_t>(c) - 1] = m;
        }
    }
    parents.push_back(t.parent(i));
    parents[static_cast<std::size_t>(i) - 1] = m;
    return with_parents(t, std::move(parents));
}

RootedTree apply_insertion(const RootedTree &t, const Insertion &ins)
{
    switch (ins.kind) {
        case InsertionKind::z:
            return z_insert(t, ins.parent);
        case InsertionKind::v:
            return v_insert(t, ins.parent, ins.child);
        case InsertionKind::u:
            return u_insert(t, ins.parent, ins.child);
    }
    throw std::invalid_argument("bad insertion kind");
}

std::vector<Insertion> legal_insertions(const RootedTree &t)
{
    std::vector<Insertion> out;
    const int n = t.size();
    for (int v = 1; v <= n; ++v) {
        out.push_back({InsertionKind::z, v, 0});
    }
    for (int v = 1; v <= n; ++v) {
        const int p = t.parent(v);
        if (p != 0 || t.planted()) {
            out.push_back({InsertionKind::v, p, v});
        }
    }
    const auto beta = t.subtree_minima();
    for (int v = 1; v <= n; ++v) {
        const int p = t.parent(v);
        if (p != 0 && beta[static_cast<std::size_t>(v)] < p) {
            out.push_back({InsertionKind::u, p, v});
        }
    }
    return out;
}

namespace
{

void grow(const RootedTree &t, int n, const TreeVisitor &visit)
{
    if (t.size() == n) {
        visit(t);
        return;
    }
    for (const auto &ins : legal_insertions(t)) {
        grow(apply_insertion(t, ins), n, visit);
    }
}

} // namespace

void generate_via_insertion(int n, InsertionSeed seed, const TreeVisitor &visit, int bound)
{
    check_bound(n, bound, "generate_via_insertion");
    grow(seed == InsertionSeed::planted_edge ? RootedTree::planted_edge() : RootedTree::single_vertex(), n, visit);
}

std::pair<RootedTree, Insertion> delete_max(const RootedTree &t)
{
    const int m = t.size();
    if (m < 2) {
        throw InvalidTree("delete_max needs at least two vertices");
    }
    const int p = t.parent(m);
    auto kids = t.children(m);
    auto parents = parent_list(t);
    parents.pop_back();
    if (kids.empty()) {
        return {with_parents(t, std::move(parents)), Insertion{InsertionKind::z, p, 0}};
    }
    if (kids.size() == 1) {
        if (p == 0 && !t.planted()) {
            throw InvalidTree("the root " + std::to_string(m) + " of an unplanted tree has no incoming edge");
        }
        const int j = kids.front();
        parents[static_cast<std::size_t>(j) - 1] = p;
        return {with_parents(t, std::move(parents)), Insertion{InsertionKind::v, p, j}};
    }
    const auto beta = t.subtree_minima();
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return beta[static_cast<std::size_t>(a)] < beta[static_cast<std::size_t>(b)];
    });
    const int i = kids.back();
    kids.pop_back();
    for (int c : kids) {
        parents[static_cast<std::size_t>(c) - 1] = i;
    }
    parents[static_cast<std::size_t>(i) - 1] = p;
    return {with_parents(t, std::move(parents)), Insertion{InsertionKind::u, i, kids.back()}};
}

BijectionTable bijection_counts(int n, int bound)
{
    check_bound(n, bound, "bijection_counts");
    if (n < 2) {
        throw std::invalid_argument("bijection_counts: n must be at least 2");
    }
    BijectionTable table;
    table.n = n;
    const auto rows = static_cast<std::size_t>(n - 1); // k = 0..n-2
    const auto cols = static_cast<std::size_t>(n);     // r = 0..n-1
    table.left.assign(rows, std::vector<std::int64_t>(cols, 0));
    table.right.assign(rows, std::vector<std::int64_t>(cols, 0));
    rooted_trees(n, true, [&](const RootedTree &t) {
        const auto s = tree_stats(t);
        const auto k = static_cast<std::size_t>(s.improper_count);
        const auto r = static_cast<std::size_t>(s.degrees[1]);
        if (n >= 2 && s.degrees[2] > 0) {
            ++table.left[k][r];
        }
        if (k >= 1 && s.degrees[static_cast<std::size_t>(n)] > 0) {
            ++table.right[k - 1][r];
        }
    });
    return table;
}

} // namespace rgcalc
