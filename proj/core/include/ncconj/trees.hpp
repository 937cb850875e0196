#pragma once

#include "ncconj/combinat.hpp"
#include "ncconj/qfield.hpp"

#include <vector>

namespace ncconj {

/// Reduced plane tree: every internal vertex has >= 2 children.
/// A default-constructed tree is the bare leaf.
class SchroederTree {
public:
    SchroederTree() = default;
    static SchroederTree leaf() { return SchroederTree(); }
    static SchroederTree node(std::vector<SchroederTree> children);
    /// Corolla with n leaves (n >= 2).
    static SchroederTree corolla(int n);

    bool is_leaf() const { return children_.empty(); }
    int arity() const { return static_cast<int>(children_.size()); }
    const std::vector<SchroederTree>& children() const { return children_; }
    int leaf_count() const;
    int internal_count() const;

    friend bool operator==(const SchroederTree& a, const SchroederTree& b) {
        return a.children_ == b.children_;
    }
    friend bool operator!=(const SchroederTree& a, const SchroederTree& b) { return !(a == b); }

private:
    std::vector<SchroederTree> children_;
};

/// Full binary tree: leaf, or exactly two subtrees.
class BinaryTree {
public:
    BinaryTree() = default;
    static BinaryTree leaf() { return BinaryTree(); }
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return kids_.empty(); }
    const BinaryTree& left() const;
    const BinaryTree& right() const;
    int internal_count() const;

    /// Preorder code, 1 = internal vertex, 0 = leaf.
    std::vector<int> code() const;
    static BinaryTree from_code(const std::vector<int>& code);

    SchroederTree as_schroeder() const;
    static BinaryTree from_schroeder(const SchroederTree& t);  // throws unless binary

    friend bool operator==(const BinaryTree& a, const BinaryTree& b) { return a.kids_ == b.kids_; }
    friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return !(a == b); }

private:
    std::vector<BinaryTree> kids_;  // empty or size 2
};

/// General plane tree (unary vertices allowed); at least one vertex.
class PlaneTree {
public:
    PlaneTree() = default;  // single vertex
    static PlaneTree node(std::vector<PlaneTree> children);

    int arity() const { return static_cast<int>(children_.size()); }
    const std::vector<PlaneTree>& children() const { return children_; }
    int vertex_count() const;

    /// Polish code: a vertex with k children emits k, preorder.
    std::vector<int> code() const;
    static PlaneTree from_code(const std::vector<int>& code);

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
        return a.children_ == b.children_;
    }

private:
    std::vector<PlaneTree> children_;
};

/// Non-plane rooted tree decorated by positive integers; children are kept
/// sorted by canonical code, so structural equality is isomorphism.
class DecoratedTree {
public:
    explicit DecoratedTree(int decoration, std::vector<DecoratedTree> children = {});

    int decoration() const { return decoration_; }
    const std::vector<DecoratedTree>& children() const { return children_; }
    /// |T| = sum of all decorations.
    int weight() const;
    int vertex_count() const;

    /// Canonical nested encoding; equal iff trees are isomorphic with equal
    /// decorations.
    const std::vector<int>& key() const { return key_; }

    friend bool operator==(const DecoratedTree& a, const DecoratedTree& b) {
        return a.key_ == b.key_;
    }
    friend bool operator!=(const DecoratedTree& a, const DecoratedTree& b) { return !(a == b); }
    friend bool operator<(const DecoratedTree& a, const DecoratedTree& b) {
        return a.key_ < b.key_;
    }

private:
    int decoration_;
    std::vector<DecoratedTree> children_;
    std::vector<int> key_;
};

/// Commutative monomial of decorated trees, kept sorted.
using CKForest = std::vector<DecoratedTree>;

CKForest make_forest(std::vector<DecoratedTree> trees);
int forest_weight(const CKForest& f);

// ---- Polish codes of Schroeder trees ----

/// Preorder code: leaf emits 0, a vertex with k+1 children emits k.
PseudoComposition polish_encode(const SchroederTree& t);
/// Inverse; throws std::invalid_argument naming the first violating position.
SchroederTree polish_decode(const PseudoComposition& code);

/// phi(v) = number of leaves below v, for every internal vertex in preorder.
std::vector<int> leaf_weights(const SchroederTree& t);

/// d_I = sum over internal vertices of (phi(v) - 1).
long long d_statistic(const SchroederTree& t);

/// m_I(q) = prod_v 1/q_{phi(v)-1}  (the tree-expansion coefficient).
QRat tree_coefficient(const SchroederTree& t);

// ---- Contractions ----

/// All trees obtained by contracting internal left edges in every possible
/// way; includes t itself. Cardinality 2^{#internal left edges}.
std::vector<SchroederTree> contractions(const SchroederTree& t);

/// Code-level counterpart: sum consecutive nonzero entries in all ways.
std::vector<PseudoComposition> anti_refinements(const PseudoComposition& I);

/// The coarsest anti-refinement I# (every maximal nonzero run fully summed).
PseudoComposition max_contraction(const PseudoComposition& I);

// ---- Skeleton ----

/// Skeleton: leaf -> empty forest; node with n children -> root decorated
/// n-1 over the multiset of children skeletons. Singleton forest for
/// internal trees.
CKForest skeleton(const SchroederTree& t);

// ---- Hooks ----

/// h_v = number of vertices of the subtree at v, preorder.
std::vector<int> hook_lengths(const PlaneTree& t);

/// (q)_n m_I(q) q^{d_I - d_{I#}} for the code I of t; a polynomial.
QRat q_hook_binary(const BinaryTree& t);

// ---- Enumeration (desk scale) ----

/// All Schroeder trees with exactly `leaves` leaves (little Schroeder counts).
const std::vector<SchroederTree>& schroeder_trees(int leaves);
/// All plane trees with exactly n vertices (Catalan counts).
const std::vector<PlaneTree>& plane_trees(int n);
/// All full binary trees with exactly n internal vertices.
std::vector<BinaryTree> binary_trees(int n);
/// All decorated rooted trees of weight exactly w (decorations >= 1).
std::vector<DecoratedTree> decorated_trees_of_weight(int w);

}  // namespace ncconj
