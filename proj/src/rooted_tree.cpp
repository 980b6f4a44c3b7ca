#include <rgcalc/rooted_tree.hpp>

#include <algorithm>
#include <charconv>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

RootedTree::RootedTree(std::vector<int> parents, bool planted) : planted_(planted)
{
    const int n = static_cast<int>(parents.size());
    if (n < 1) {
        throw InvalidTree("a tree needs at least one vertex");
    }
    parent_.assign(1, -1);
    parent_.insert(parent_.end(), parents.begin(), parents.end());
    int roots = 0;
    for (int v = 1; v <= n; ++v) {
        const int p = parent_[static_cast<std::size_t>(v)];
        if (p < 0 || p > n || p == v) {
            throw InvalidTree("vertex " + std::to_string(v) + " has invalid parent " + std::to_string(p));
        }
        if (p == 0) {
            root_ = v;
            ++roots;
        }
    }
    if (roots != 1) {
        throw InvalidTree("expected exactly one root, found " + std::to_string(roots));
    }
    // Every vertex must reach the root within n steps.
    for (int v = 1; v <= n; ++v) {
        int cur = v;
        int steps = 0;
        while (cur != root_) {
            cur = parent_[static_cast<std::size_t>(cur)];
            if (++steps > n) {
                throw InvalidTree("parent links contain a cycle");
            }
        }
    }
}

RootedTree RootedTree::planted_edge()
{
    return RootedTree({0}, true);
}

RootedTree RootedTree::single_vertex()
{
    return RootedTree({0}, false);
}

int RootedTree::parent(int v) const
{
    if (!is_vertex(v)) {
        throw InvalidVertex("no vertex " + std::to_string(v));
    }
    return parent_[static_cast<std::size_t>(v)];
}

bool RootedTree::is_edge(int i, int j) const noexcept
{
    if (!is_vertex(j)) {
        return false;
    }
    if (i == 0) {
        return planted_ && j == root_;
    }
    return is_vertex(i) && parent_[static_cast<std::size_t>(j)] == i;
}

std::vector<int> RootedTree::children(int v) const
{
    std::vector<int> out;
    if (v == 0) {
        if (planted_) {
            out.push_back(root_);
        }
        return out;
    }
    for (int w = 1; w <= size(); ++w) {
        if (parent_[static_cast<std::size_t>(w)] == v && w != root_) {
            out.push_back(w);
        }
    }
    return out;
}

int RootedTree::degree(int v) const
{
    if (v == 0) {
        return planted_ ? 1 : 0;
    }
    int d = 0;
    for (int w = 1; w <= size(); ++w) {
        if (w != root_ && parent_[static_cast<std::size_t>(w)] == v) {
            ++d;
        }
    }
    return d;
}

std::vector<int> RootedTree::subtree_minima() const
{
    const int n = size();
    std::vector<int> beta(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        beta[static_cast<std::size_t>(v)] = v;
    }
    // Increasing labels: the first label to reach an ancestor is its minimum.
    std::vector<char> settled(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        for (int a = parent_[static_cast<std::size_t>(v)]; a != 0 && !settled[static_cast<std::size_t>(a)];
             a = parent_[static_cast<std::size_t>(a)]) {
            if (beta[static_cast<std::size_t>(a)] > v) {
                beta[static_cast<std::size_t>(a)] = v;
            }
        }
        settled[static_cast<std::size_t>(v)] = 1;
    }
    return beta;
}

bool RootedTree::is_improper(int i, int j) const
{
    if (!is_edge(i, j)) {
        throw InvalidEdge("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
    return subtree_minima()[static_cast<std::size_t>(j)] < i;
}

std::string RootedTree::to_string() const
{
    std::string s = "root:" + std::to_string(root_) + ";parents:[";
    bool first = true;
    for (int v = 1; v <= size(); ++v) {
        if (v == root_) {
            continue;
        }
        if (!first) {
            s += ',';
        }
        first = false;
        s += std::to_string(parent_[static_cast<std::size_t>(v)]);
    }
    return s + "]";
}

RootedTree RootedTree::parse(std::string_view text, bool planted)
{
    auto fail = [&] { return InvalidTree("malformed tree '" + std::string(text) + "'"); };
    constexpr std::string_view root_tag = "root:";
    constexpr std::string_view parents_tag = ";parents:[";
    if (text.substr(0, root_tag.size()) != root_tag || text.empty() || text.back() != ']') {
        throw fail();
    }
    const auto tag = text.find(parents_tag);
    if (tag == std::string_view::npos) {
        throw fail();
    }
    auto parse_int = [&](std::string_view s) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw fail();
        }
        return value;
    };
    const int root = parse_int(text.substr(root_tag.size(), tag - root_tag.size()));
    std::string_view list = text.substr(tag + parents_tag.size());
    list.remove_suffix(1);
    std::vector<int> others;
    while (!list.empty()) {
        const auto comma = list.find(',');
        others.push_back(parse_int(list.substr(0, comma)));
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    const int n = static_cast<int>(others.size()) + 1;
    if (root < 1 || root > n) {
        throw fail();
    }
    std::vector<int> parents;
    parents.reserve(static_cast<std::size_t>(n));
    auto it = others.begin();
    for (int v = 1; v <= n; ++v) {
        parents.push_back(v == root ? 0 : *it++);
    }
    if (parents[static_cast<std::size_t>(root) - 1] != 0 || std::count(parents.begin(), parents.end(), 0) != 1) {
        throw fail();
    }
    return RootedTree(std::move(parents), planted);
}

TreeStats tree_stats(const RootedTree &t)
{
    TreeStats s;
    const int n = t.size();
    s.beta = t.subtree_minima();
    s.degrees.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int p = t.parent(v);
        if (p == 0) {
            continue;
        }
        ++s.degrees[static_cast<std::size_t>(p)];
        if (s.beta[static_cast<std::size_t>(v)] < p) {
            ++s.improper_count;
        }
    }
    return s;
}

int improper_count(const RootedTree &t)
{
    const auto beta = t.subtree_minima();
    int count = 0;
    for (int v = 1; v <= t.size(); ++v) {
        const int p = t.parent(v);
        if (p != 0 && beta[static_cast<std::size_t>(v)] < p) {
            ++count;
        }
    }
    return count;
}

} // namespace rgcalc
