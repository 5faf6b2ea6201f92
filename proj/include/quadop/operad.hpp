#pragma once

#include <string>
#include <vector>

#include "quadop/polymatrix.hpp"

namespace quadop {

// Complete rooted planar n-ary tree: a leaf, or an internal node with exactly
// n ordered children. Encodes a self-composition of the generator phi; the
// arity is the leaf count, 1 + w(n-1) for w internal nodes.
class TreeMono {
public:
    TreeMono() = default;  // leaf
    explicit TreeMono(std::vector<TreeMono> children)
        : kids_(std::move(children)) {}

    static TreeMono leaf() { return TreeMono(); }
    // The generator: one internal node with n leaf children.
    static TreeMono generator(unsigned n) {
        return TreeMono(std::vector<TreeMono>(n));
    }

    bool is_leaf() const { return kids_.empty(); }
    const std::vector<TreeMono>& children() const { return kids_; }

    unsigned arity() const {
        if (is_leaf()) return 1;
        unsigned k = 0;
        for (auto& c : kids_) k += c.arity();
        return k;
    }
    unsigned weight() const {  // internal node count
        if (is_leaf()) return 0;
        unsigned w = 1;
        for (auto& c : kids_) w += c.weight();
        return w;
    }

    bool operator==(const TreeMono& o) const { return kids_ == o.kids_; }
    bool operator!=(const TreeMono& o) const { return !(*this == o); }

    std::string parens_str() const {
        if (is_leaf()) return "*";
        std::string s = "(";
        for (auto& c : kids_) s += c.parens_str();
        return s + ")";
    }

    // Compositional notation, inner compositions applied right to left:
    // "(phi o_4 phi) o_3 phi", "phi o_2 (phi o_1 phi)".
    std::string comp_str() const {
        if (is_leaf()) return "*";
        std::string expr = "phi";
        for (std::size_t i = kids_.size(); i-- > 0;) {
            if (kids_[i].is_leaf()) continue;
            std::string sub = kids_[i].comp_str();
            if (kids_[i].weight() > 1) sub = "(" + sub + ")";
            expr = (expr == "phi" ? expr : "(" + expr + ")") + " o_" +
                   std::to_string(i + 1) + " " + sub;
        }
        return expr;
    }

private:
    std::vector<TreeMono> kids_;
};

// Total order of the paper: walk the two trees in parallel; at the leftmost
// position where subtrees differ, the higher arity precedes; equal arities
// recurse. Returns <0 if t1 precedes t2, 0 if equal, >0 otherwise.
int tree_compare(const TreeMono& t1, const TreeMono& t2);

// Substitutes (the root of) beta for the i-th argument of alpha, 1 <= i <=
// arity(alpha). Composing with a leaf is the identity operation.
TreeMono compose(const TreeMono& alpha, unsigned i, const TreeMono& beta);

struct Basis {
    unsigned n = 0, w = 0;
    std::vector<TreeMono> monomials;  // strictly increasing in tree_compare

    unsigned arity() const { return 1 + w * (n - 1); }
    // Index of t in the basis, or -1.
    int index_of(const TreeMono& t) const;
};

// All complete planar n-ary trees with w internal nodes, sorted.
Basis enumerate_basis(unsigned n, unsigned w);

// dim O(1 + w(n-1)) = C(nw, w) / ((n-1)w + 1), the n-ary Catalan number.
mpz_class catalan_dim(unsigned n, unsigned w);

// A quadratic relation rho = sum_i coeff[i] phi o_i phi, n = 4.
struct Relation {
    RingPtr ring;
    std::vector<Poly> coeff;  // length 4
};

// The 11 consequences rho o_i phi (1 <= i <= 7) and phi o_j rho (1 <= j <= 4),
// each expanded as a coefficient vector over the 22-monomial arity-10 basis.
// Generation order: right compositions first, then left.
std::vector<std::vector<Poly>> consequences(const Relation& rho);

// Stacks the consequences of all relations, removes exact duplicate rows, and
// sorts rows by their sequence of nonzero column positions (leading columns
// increase top to bottom; a row whose support is a strict prefix of another's
// sorts after it).
PolyMatrix consequence_matrix(const std::vector<Relation>& relations);

}  // namespace quadop
