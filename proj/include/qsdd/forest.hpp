#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qsdd/code.hpp"
#include "qsdd/ops.hpp"

namespace qsdd {

/// Plane (m+1)-ary tree; a node with no children is a leaf.
struct TreeNode {
    std::vector<TreeNode> children;
    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// An m-indexed forest: an infinite sequence of (m+1)-ary plane trees,
/// all but finitely many trivial, with leaves labeled 1,2,... from left
/// to right.  The canonical identity of a forest is its code: entry c_i
/// counts internal nodes whose leftmost descendant leaf (the "flag") is
/// i.  Tree structure is materialized from the code on construction.
class IndexedForest {
public:
    explicit IndexedForest(MParam m) : m_(m) {}

    static IndexedForest from_code(const Code& c, MParam m);
    static IndexedForest from_trees(std::vector<TreeNode> trees, MParam m);

    /// The one-node forest with its internal node at leaf i.
    static IndexedForest generator(int i, MParam m);

    MParam m() const { return m_; }
    const Code& code() const { return code_; }

    /// Stored trees; trailing trivial trees are implicit and stripped.
    const std::vector<TreeNode>& trees() const { return trees_; }

    long size() const { return code_weight(code_); }
    bool empty() const { return code_.empty(); }

    /// Leaves of nontrivial trees.
    std::set<int> support() const;
    int min_support() const { return code_min_support(code_); }

    friend bool operator==(const IndexedForest& a, const IndexedForest& b) {
        return a.m_ == b.m_ && a.code_ == b.code_;
    }
    friend bool operator<(const IndexedForest& a, const IndexedForest& b) {
        return size_revlex_less(a.code_, b.code_);
    }

private:
    MParam m_;
    Code code_;
    std::vector<TreeNode> trees_;
};

/// Flattened view of a forest used by the structure algorithms;
/// internal nodes appear in prefix order (trees left to right, parent
/// before children).
struct ForestShape {
    struct Node {
        int flag = 0;       // leftmost descendant leaf
        int rightmost = 0;  // rightmost descendant leaf
        int parent = -1;    // node id, -1 for roots
        int slot = 0;       // position among the parent's children
        bool terminal = false;
        std::vector<int> child_node;  // node id per slot, -1 when a leaf
        std::vector<int> child_leaf;  // leaf label per slot, -1 when internal
    };
    int m = 1;
    std::vector<Node> nodes;
    int leaf_count = 0;  // leaves covered by the stored trees
};

ForestShape analyze(const IndexedForest& F);

inline Code code_of_forest(const IndexedForest& F) { return F.code(); }
inline IndexedForest forest_of_code(const Code& c, MParam m) {
    return IndexedForest::from_code(c, m);
}

/// Flags of terminal nodes (every child a leaf); the descent set
/// analogue.  Computed from the tree structure.
std::set<int> terminal_flags(const IndexedForest& F);

/// Same set read off the code: c_i > 0 and c_{i+1} = ... = c_{i+m} = 0.
std::set<int> terminal_flags_from_code(const Code& c, MParam m);

/// F . i : the i-th leaf becomes an internal node with m+1 leaf children.
IndexedForest blossom(const IndexedForest& F, int i);

/// F / i for i in terminal_flags(F); rejects other i.
IndexedForest trim_forest(const IndexedForest& F, int i);

/// Grafts the i-th root of G onto the i-th leaf of F.  Associative,
/// with the empty forest as identity.
IndexedForest monoid_product(const IndexedForest& F, const IndexedForest& G);

/// F/G with (F/G).G = F, when G right-divides F.
std::optional<IndexedForest> divide(const IndexedForest& F, const IndexedForest& G);

using TrimWord = std::vector<int>;

/// Normal form of a word under the rewriting i.j -> j.(i+m) for i > j,
/// returned as the code of the forest the word multiplies out to.
Code thompson_normal_form(const TrimWord& word, MParam m);

/// All words (i_1,...,i_k) with F = i_1 ... i_k ; lexicographically sorted.
std::vector<TrimWord> trim_sequences(const IndexedForest& F);

/// One canonical word for F: 1^{c_1} 2^{c_2} ...
TrimWord canonical_word(const IndexedForest& F);

// Class predicates, evaluated on tree structure.
bool is_fully_supported(const IndexedForest& F, int n);  // all rightmost leaves <= n
bool is_left_terminal(const IndexedForest& F, int n);    // all flags <= n
bool is_right_terminal(const IndexedForest& F, int n);   // no node supported on [n]
bool is_zigzag(const IndexedForest& F, int n);           // terminal flags within {n-m+1..n}

enum class ForestClass { FullySupported, LeftTerminal, RightTerminal, Zigzag };

/// Complete duplicate-free list of the class members with size at most
/// max_size, in increasing (size, revlex) order, generated by recursive
/// blossoming from the empty forest.  FullySupported and (since flags
/// and size bound the support) LeftTerminal and Zigzag listings are
/// complete; RightTerminal is inherently infinite and is restricted to
/// forests supported on [n + m*max_size].
std::vector<IndexedForest> enumerate_class(ForestClass cls, int n, MParam m, long max_size);

/// Number of forests supported on [n]: Catalan for m = 1, Raney in general.
Int raney_count(int n, MParam m);

struct SupportFactorization {
    IndexedForest zigzag;     // in Zigzag_n, already shifted right by m*|supported|
    IndexedForest supported;  // in Supp_n
};

/// Splits F in LTer_n into the subforest of internal nodes supported on
/// [n] and the complementary zigzag part.
SupportFactorization support_factorization(const IndexedForest& F, int n);

/// Inverse of support_factorization: grafts H under the left-shifted G.
/// Empty result when G is nonempty and min support of G <= m*|H|.
std::optional<IndexedForest> support_composition(const IndexedForest& G,
                                                 const IndexedForest& H, int n);

/// Vertical reflection of F in Supp_n across {1,...,n}; an involution.
/// Only defined for m = 1.
IndexedForest mirror(const IndexedForest& F, int n);

/// Shift leaves right by k (k >= 0) or left by -k; the left shift
/// exists only when min support exceeds -k.
std::optional<IndexedForest> shift_leaves(const IndexedForest& F, long k);

} // namespace qsdd
