#include "qsdd/forest.hpp"

#include <algorithm>
#include <map>

namespace qsdd {

namespace {

void strip_trailing_trivial(std::vector<TreeNode>& trees) {
    while (!trees.empty() && trees.back().is_leaf()) trees.pop_back();
}

int count_leaves(const TreeNode& t) {
    if (t.is_leaf()) return 1;
    int s = 0;
    for (auto& ch : t.children) s += count_leaves(ch);
    return s;
}

int total_leaves(const std::vector<TreeNode>& trees) {
    int s = 0;
    for (auto& t : trees) s += count_leaves(t);
    return s;
}

// Replaces the target-th leaf (1-based within this subtree walk) by a
// node with m+1 leaf children; `remaining` counts down to the target.
bool blossom_at_leaf(TreeNode& t, int& remaining, int m) {
    if (t.is_leaf()) {
        if (--remaining == 0) {
            t.children.assign(m + 1, TreeNode{});
            return true;
        }
        return false;
    }
    for (auto& ch : t.children)
        if (blossom_at_leaf(ch, remaining, m)) return true;
    return false;
}

void collect_flags(const TreeNode& t, int first_leaf, std::map<int, int>& counts) {
    if (t.is_leaf()) return;
    counts[first_leaf] += 1;  // the flag of this node is its leftmost leaf
    int at = first_leaf;
    for (auto& ch : t.children) {
        collect_flags(ch, at, counts);
        at += count_leaves(ch);
    }
}

Code code_from_trees(const std::vector<TreeNode>& trees) {
    std::map<int, int> counts;
    int at = 1;
    for (auto& t : trees) {
        collect_flags(t, at, counts);
        at += count_leaves(t);
    }
    Code c;
    for (auto& [i, k] : counts) code_set(c, i, k);
    canonicalize(c);
    return c;
}

void check_arity(const TreeNode& t, int m) {
    if (t.is_leaf()) return;
    if ((int)t.children.size() != m + 1)
        throw std::invalid_argument("tree node must have exactly m+1 children");
    for (auto& ch : t.children) check_arity(ch, m);
}

int analyze_tree(const TreeNode& t, int first_leaf, int parent, int slot, ForestShape& shape) {
    // Returns the number of leaves below t; records internal nodes in
    // prefix order.
    if (t.is_leaf()) return 1;
    int id = (int)shape.nodes.size();
    shape.nodes.emplace_back();
    int at = first_leaf;
    bool terminal = true;
    std::vector<int> child_node, child_leaf;
    for (int s = 0; s < (int)t.children.size(); ++s) {
        const TreeNode& ch = t.children[s];
        if (ch.is_leaf()) {
            child_node.push_back(-1);
            child_leaf.push_back(at);
            at += 1;
        } else {
            terminal = false;
            int cid = (int)shape.nodes.size();
            analyze_tree(ch, at, id, s, shape);
            child_node.push_back(cid);
            child_leaf.push_back(-1);
            at += count_leaves(ch);
        }
    }
    ForestShape::Node& node = shape.nodes[id];
    node.flag = first_leaf;
    node.rightmost = at - 1;
    node.parent = parent;
    node.slot = slot;
    node.terminal = terminal;
    node.child_node = std::move(child_node);
    node.child_leaf = std::move(child_leaf);
    return at - first_leaf;
}

} // namespace

IndexedForest IndexedForest::from_trees(std::vector<TreeNode> trees, MParam m) {
    strip_trailing_trivial(trees);
    for (auto& t : trees) check_arity(t, m.value());
    IndexedForest F(m);
    F.code_ = code_from_trees(trees);
    F.trees_ = std::move(trees);
    return F;
}

IndexedForest IndexedForest::from_code(const Code& c, MParam m) {
    for (int e : c)
        if (e < 0) throw std::invalid_argument("code entries must be nonnegative");
    // F = 1^{c_1} . 2^{c_2} ... built by successive blossoms.
    std::vector<TreeNode> trees;
    int mm = m.value();
    for (int i = 1; i <= (int)c.size(); ++i) {
        for (int rep = 0; rep < code_at(c, i); ++rep) {
            int covered = total_leaves(trees);
            while (covered < i) {
                trees.emplace_back();
                ++covered;
            }
            int remaining = i;
            for (auto& t : trees)
                if (blossom_at_leaf(t, remaining, mm)) break;
        }
    }
    IndexedForest F(m);
    F.trees_ = std::move(trees);
    strip_trailing_trivial(F.trees_);
    F.code_ = canonical(c);
    return F;
}

IndexedForest IndexedForest::generator(int i, MParam m) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    Code c(i, 0);
    c[i - 1] = 1;
    return from_code(c, m);
}

std::set<int> IndexedForest::support() const {
    std::set<int> s;
    int at = 1;
    for (auto& t : trees_) {
        int k = count_leaves(t);
        if (!t.is_leaf())
            for (int l = at; l < at + k; ++l) s.insert(l);
        at += k;
    }
    return s;
}

ForestShape analyze(const IndexedForest& F) {
    ForestShape shape;
    shape.m = F.m().value();
    int at = 1;
    for (auto& t : F.trees()) at += analyze_tree(t, at, -1, 0, shape);
    shape.leaf_count = at - 1;
    return shape;
}

std::set<int> terminal_flags(const IndexedForest& F) {
    std::set<int> s;
    for (auto& node : analyze(F).nodes)
        if (node.terminal) s.insert(node.flag);
    return s;
}

std::set<int> terminal_flags_from_code(const Code& c, MParam m) {
    std::set<int> s;
    for (int i = 1; i <= (int)c.size(); ++i) {
        if (code_at(c, i) == 0) continue;
        bool zeros = true;
        for (int j = i + 1; j <= i + m.value(); ++j)
            if (code_at(c, j) != 0) { zeros = false; break; }
        if (zeros) s.insert(i);
    }
    return s;
}

IndexedForest blossom(const IndexedForest& F, int i) {
    if (i < 1) throw std::invalid_argument("blossom position must be >= 1");
    Code c = F.code();
    if ((int)c.size() < i) c.resize(i, 0);
    c[i - 1] += 1;
    c.insert(c.begin() + i, F.m().value(), 0);
    canonicalize(c);
    return IndexedForest::from_code(c, F.m());
}

IndexedForest trim_forest(const IndexedForest& F, int i) {
    auto flags = terminal_flags_from_code(F.code(), F.m());
    if (!flags.count(i))
        throw std::invalid_argument("cannot trim at " + std::to_string(i) +
                                    ": not a terminal flag");
    Code c = F.code();
    c[i - 1] -= 1;
    int cut = std::min<int>(F.m().value(), (int)c.size() - i);
    if (cut > 0) c.erase(c.begin() + i, c.begin() + i + cut);
    canonicalize(c);
    return IndexedForest::from_code(c, F.m());
}

IndexedForest monoid_product(const IndexedForest& F, const IndexedForest& G) {
    if (!(F.m() == G.m())) throw std::invalid_argument("mismatched m");
    std::vector<TreeNode> f = F.trees();
    const std::vector<TreeNode>& g = G.trees();
    while (total_leaves(f) < (int)g.size()) f.emplace_back();

    int next_leaf = 0;  // counts leaves of F left to right
    auto graft = [&](auto&& self, TreeNode& t) -> void {
        if (t.is_leaf()) {
            int k = next_leaf++;
            if (k < (int)g.size()) t = g[k];
            return;
        }
        for (auto& ch : t.children) self(self, ch);
    };
    for (auto& t : f) graft(graft, t);
    return IndexedForest::from_trees(std::move(f), F.m());
}

TrimWord canonical_word(const IndexedForest& F) {
    TrimWord w;
    const Code& c = F.code();
    for (int i = 1; i <= (int)c.size(); ++i)
        for (int rep = 0; rep < code_at(c, i); ++rep) w.push_back(i);
    return w;
}

std::optional<IndexedForest> divide(const IndexedForest& F, const IndexedForest& G) {
    if (!(F.m() == G.m())) throw std::invalid_argument("mismatched m");
    TrimWord w = canonical_word(G);
    IndexedForest H = F;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!terminal_flags_from_code(H.code(), H.m()).count(*it)) return std::nullopt;
        H = trim_forest(H, *it);
    }
    return H;
}

Code thompson_normal_form(const TrimWord& word, MParam m) {
    for (int l : word)
        if (l < 1) throw std::invalid_argument("word letters must be >= 1");
    std::vector<long> v(word.begin(), word.end());
    Code c;
    size_t done = 0;
    while (done < v.size()) {
        // Move the leftmost minimum of v[done..] to the front of the
        // range with the defining rewrite i.j -> j.(i+m) for i > j.
        size_t p = done;
        for (size_t q = done + 1; q < v.size(); ++q)
            if (v[q] < v[p]) p = q;
        for (size_t q = p; q > done; --q) {
            long i = v[q - 1], j = v[q];
            v[q - 1] = j;
            v[q] = i + m.value();
        }
        long letter = v[done++];
        if (letter > 1000000) throw std::invalid_argument("word normal form out of range");
        code_set(c, (int)letter, code_at(c, (int)letter) + 1);
    }
    canonicalize(c);
    return c;
}

std::vector<TrimWord> trim_sequences(const IndexedForest& F) {
    if (F.empty()) return {TrimWord{}};
    std::vector<TrimWord> out;
    for (int i : terminal_flags_from_code(F.code(), F.m())) {
        for (TrimWord w : trim_sequences(trim_forest(F, i))) {
            w.push_back(i);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_fully_supported(const IndexedForest& F, int n) {
    for (auto& node : analyze(F).nodes)
        if (node.rightmost > n) return false;
    return true;
}

bool is_left_terminal(const IndexedForest& F, int n) {
    for (auto& node : analyze(F).nodes)
        if (node.flag > n) return false;
    return true;
}

bool is_right_terminal(const IndexedForest& F, int n) {
    for (auto& node : analyze(F).nodes)
        if (node.rightmost <= n) return false;
    return true;
}

bool is_zigzag(const IndexedForest& F, int n) {
    int lo = n - F.m().value() + 1;
    for (auto& node : analyze(F).nodes)
        if (node.terminal && (node.flag < lo || node.flag > n)) return false;
    return true;
}

std::vector<IndexedForest> enumerate_class(ForestClass cls, int n, MParam m, long max_size) {
    if (n < 0 || max_size < 0) throw std::invalid_argument("bad enumeration bounds");
    long cap = max_size;
    if (cls == ForestClass::FullySupported && m.value() >= 1)
        cap = std::min<long>(cap, n == 0 ? 0 : (n - 1) / m.value());
    // Support window large enough to contain every class member of the
    // requested size (RightTerminal is truncated to this window).
    int window = cls == ForestClass::FullySupported
                     ? n
                     : n + m.value() * (int)std::min<long>(cap, 1000);

    auto pred = [&](const IndexedForest& F) {
        switch (cls) {
            case ForestClass::FullySupported: return is_fully_supported(F, n);
            case ForestClass::LeftTerminal: return is_left_terminal(F, n);
            case ForestClass::RightTerminal: return is_right_terminal(F, n);
            case ForestClass::Zigzag: return is_zigzag(F, n);
        }
        return false;
    };

    std::vector<IndexedForest> result;
    std::set<Code> level{Code{}};
    for (long sz = 0;; ++sz) {
        for (auto& c : level) {
            IndexedForest F = IndexedForest::from_code(c, m);
            if (pred(F)) result.push_back(std::move(F));
        }
        if (sz == cap || level.empty()) break;
        std::set<Code> next;
        for (auto& c : level) {
            IndexedForest F = IndexedForest::from_code(c, m);
            for (int i = 1; i + m.value() <= window + m.value(); ++i) {
                IndexedForest B = blossom(F, i);
                if (is_fully_supported(B, window)) next.insert(B.code());
            }
        }
        level = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Int raney_count(int n, MParam m) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    int q = n / m.value(), r = n % m.value();
    Int num = Int(r + 1) * binomial(n + q, q);
    if (num % (n + 1) != 0) throw std::logic_error("Raney count is not integral");
    return num / (n + 1);
}

SupportFactorization support_factorization(const IndexedForest& F, int n) {
    if (!is_left_terminal(F, n))
        throw std::invalid_argument("support_factorization needs F in LTer_n");

    std::vector<TreeNode> frontier;  // becomes the supported part H
    // Rebuilds the top part, contracting every maximal subtree whose
    // leaves lie in [n] to a leaf and recording it on the frontier.
    auto contract = [&](auto&& self, const TreeNode& t, int first_leaf) -> TreeNode {
        if (t.is_leaf()) {
            frontier.emplace_back();
            return TreeNode{};
        }
        if (first_leaf + count_leaves(t) - 1 <= n) {
            frontier.push_back(t);
            return TreeNode{};
        }
        TreeNode top;
        int at = first_leaf;
        for (auto& ch : t.children) {
            top.children.push_back(self(self, ch, at));
            at += count_leaves(ch);
        }
        return top;
    };

    std::vector<TreeNode> top_trees;
    int at = 1;
    for (auto& t : F.trees()) {
        top_trees.push_back(contract(contract, t, at));
        at += count_leaves(t);
    }
    IndexedForest H = IndexedForest::from_trees(std::move(frontier), F.m());
    IndexedForest top = IndexedForest::from_trees(std::move(top_trees), F.m());
    IndexedForest G = *shift_leaves(top, F.m().value() * H.size());
    return {std::move(G), std::move(H)};
}

std::optional<IndexedForest> support_composition(const IndexedForest& G,
                                                 const IndexedForest& H, int n) {
    if (!is_zigzag(G, n))
        throw std::invalid_argument("support_composition needs G in Zigzag_n");
    if (!is_fully_supported(H, n))
        throw std::invalid_argument("support_composition needs H in Supp_n");
    if (G.empty()) return H;
    long shift = (long)G.m().value() * H.size();
    if (G.min_support() <= shift) return std::nullopt;
    return monoid_product(*shift_leaves(G, -shift), H);
}

IndexedForest mirror(const IndexedForest& F, int n) {
    if (F.m().value() != 1) throw std::invalid_argument("mirror is defined for m = 1");
    if (!is_fully_supported(F, n))
        throw std::invalid_argument("mirror needs F in Supp_n");
    std::vector<TreeNode> trees = F.trees();
    while (total_leaves(trees) < n) trees.emplace_back();
    std::reverse(trees.begin(), trees.end());
    auto flip = [&](auto&& self, TreeNode& t) -> void {
        std::reverse(t.children.begin(), t.children.end());
        for (auto& ch : t.children) self(self, ch);
    };
    for (auto& t : trees) flip(flip, t);
    return IndexedForest::from_trees(std::move(trees), F.m());
}

std::optional<IndexedForest> shift_leaves(const IndexedForest& F, long k) {
    Code c = F.code();
    if (k >= 0) {
        c.insert(c.begin(), k, 0);
    } else {
        long left = -k;
        if (F.min_support() <= left && !F.empty()) return std::nullopt;
        if ((long)c.size() < left) c.clear();
        else c.erase(c.begin(), c.begin() + left);
    }
    return IndexedForest::from_code(c, F.m());
}

} // namespace qsdd
