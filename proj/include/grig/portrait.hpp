#pragma once

#include <memory>
#include <string>

#include "grig/words.hpp"

namespace grig {

// ---------------------------------------------------------------------------
// Canonical portraits.
//
// A portrait is a finite decorated binary tree: interior nodes carry the
// activity bit of the element (does it swap the two level-1 subtrees) and
// the portraits of its two sections; leaves carry a nucleus label in
// {1,a,b,c,d}.  A node whose decoration matches a nucleus element collapses
// to the corresponding leaf, bottom-up:
//
//   (0,1,1) -> 1   (1,1,1) -> a   (0,a,c) -> b   (0,a,d) -> c   (0,1,b) -> d
//
// Since an automorphism of the binary tree is determined by its root
// activity and its two sections, and the five signatures above are exactly
// the nucleus elements, collapsed portraits are equal iff the group elements
// are equal.  Note a leaf labelled 1 can occur below the root: e.g. the
// sections of ada are (b, 1), and (0,b,1) matches no nucleus signature.
// ---------------------------------------------------------------------------

class Portrait {
public:
    Portrait() : Portrait(leaf('1')) {}

    static Portrait leaf(char label) {
        if (label != '1' && !is_generator(label))
            throw std::invalid_argument("portrait leaf label must be in {1,a,b,c,d}");
        return Portrait(std::make_shared<const NodeData>(NodeData{label == 'a', label, nullptr, nullptr}));
    }

    // canonicalizing constructor: collapses nucleus signatures
    static Portrait node(bool active, const Portrait& left, const Portrait& right) {
        if (left.is_leaf() && right.is_leaf()) {
            char l = left.label(), r = right.label();
            if (!active && l == '1' && r == '1') return leaf('1');
            if (active && l == '1' && r == '1') return leaf('a');
            if (!active && l == 'a' && r == 'c') return leaf('b');
            if (!active && l == 'a' && r == 'd') return leaf('c');
            if (!active && l == '1' && r == 'b') return leaf('d');
        }
        return Portrait(std::make_shared<const NodeData>(NodeData{active, 0, left.root_, right.root_}));
    }

    bool is_leaf() const { return root_->label != 0; }
    char label() const { return root_->label; }
    bool active() const { return root_->active; }
    Portrait left() const { return Portrait(root_->left); }
    Portrait right() const { return Portrait(root_->right); }

    bool is_trivial() const { return is_leaf() && label() == '1'; }

    // preorder serialization: node := activity-bit ("L" label | "N" node node)
    std::string key() const {
        std::string out;
        serialize(*root_, out);
        return out;
    }

    friend bool operator==(const Portrait& x, const Portrait& y) {
        return x.root_ == y.root_ || x.key() == y.key();
    }

private:
    struct NodeData {
        bool active;
        char label;  // 0 for interior nodes
        std::shared_ptr<const NodeData> left, right;
    };

    explicit Portrait(std::shared_ptr<const NodeData> root) : root_(std::move(root)) {}

    static void serialize(const NodeData& n, std::string& out) {
        out += n.active ? '1' : '0';
        if (n.label != 0) {
            out += 'L';
            out += n.label;
        } else {
            out += 'N';
            serialize(*n.left, out);
            serialize(*n.right, out);
        }
    }

    std::shared_ptr<const NodeData> root_;
};

inline std::string canonical_key(const Portrait& p) { return p.key(); }

// Canonical portrait of the element represented by a word.  Sections of an
// active element g are read off psi(g*a) with the two components swapped.
inline Portrait portrait_of(const Word& w) {
    Word r = reduce(w);
    if (r.empty()) return Portrait::leaf('1');
    if (r.size() == 1) return Portrait::leaf(r[0]);
    if (activity(r) == 0) {
        auto [w0, w1] = psi_split(r);
        return Portrait::node(false, portrait_of(w0), portrait_of(w1));
    }
    auto [w0, w1] = psi_split(reduce(r + 'a'));
    return Portrait::node(true, portrait_of(w1), portrait_of(w0));
}

inline std::string element_key(const Word& w) { return portrait_of(w).key(); }

}  // namespace grig
