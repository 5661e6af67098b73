#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "grig/ball.hpp"

namespace grig {

struct precision_ambiguity_error : std::runtime_error {
    explicit precision_ambiguity_error(const std::string& what) : std::runtime_error(what) {}
};

struct table_too_small_error : std::runtime_error {
    explicit table_too_small_error(const std::string& what) : std::runtime_error(what) {}
};

// zeta = w(a) / (2/eta - 1); note 2/eta - 1 = eta^2 + eta exactly.
inline FieldElement zeta_value() {
    return omega_weights().wa / FieldElement(Rat(0), Rat(1), Rat(1));
}

// 2/eta = eta^2 + eta + 1
inline FieldElement two_over_eta() { return FieldElement(Rat(1), Rat(1), Rat(1)); }

// C_n = binom(2n,n)/(n+1), exact
inline Int catalan(unsigned n) {
    Int num = 1, den = 1;
    for (unsigned k = 1; k <= n; ++k) {
        num *= Int(n + k);
        den *= Int(k);
    }
    return num / den / Int(n + 1);
}

// alpha = log(2) / log(2/eta), cached per precision
inline ApproxReal alpha_approx(unsigned bits) {
    static std::map<unsigned, RatInterval> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(bits);
        if (it != cache.end()) return ApproxReal(it->second);
    }
    RatInterval two_eta = two_over_eta().to_approx(bits + 16).interval();
    RatInterval num = ln2_enclosure(bits + 16);
    RatInterval den = ln_interval(two_eta, bits + 16);
    RatInterval result = (num / den).round_out(bits + 8);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(bits, result);
    return ApproxReal(result);
}

struct LeafBudgetParams {
    FieldElement K;      // leaf cutoff weight, must exceed zeta
    FieldElement zeta;   // w(a)/(2/eta - 1)
    ApproxReal alpha;    // log(2)/log(2/eta) at the construction precision
    unsigned max_bits = 4096;

    static LeafBudgetParams with_cutoff(FieldElement cutoff, unsigned precision_bits = 128) {
        FieldElement z = zeta_value();
        if (!(z < cutoff))
            throw std::invalid_argument("leaf cutoff K must exceed zeta = w(a)/(2/eta-1)");
        return LeafBudgetParams{std::move(cutoff), std::move(z), alpha_approx(precision_bits)};
    }
};

// ---------------------------------------------------------------------------
// L_n = max{1, ceil(2*((n - zeta)/(K - zeta))^alpha) - 1}.
//
// The power is evaluated in interval arithmetic and the ceiling is taken only
// once the enclosure pins a unique value.  The quantity can be an exact
// integer: (2 - zeta)/(1 - zeta) = 2/eta exactly, so at n=2, K=1 the argument
// of the ceiling is exactly 4 and no amount of refinement would decide it.
// Integer powers of 2/eta are therefore detected exactly, where
// ((2/eta)^j)^alpha = 2^j by the definition of alpha.
// ---------------------------------------------------------------------------
inline unsigned long leaf_budget(const FieldElement& n, const LeafBudgetParams& p) {
    if (!(p.K < n)) return 1;  // includes every n <= K; ratio <= 1 gives ceil(2)-1 = 1

    static std::unordered_map<std::string, unsigned long> memo;
    static std::mutex memo_mtx;
    const std::string memo_key = n.render() + "|" + p.K.render();
    {
        std::lock_guard<std::mutex> lock(memo_mtx);
        auto it = memo.find(memo_key);
        if (it != memo.end()) return it->second;
    }
    auto remember = [&](unsigned long value) {
        std::lock_guard<std::mutex> lock(memo_mtx);
        memo.emplace(memo_key, value);
        return value;
    };

    const FieldElement ratio = (n - p.zeta) / (p.K - p.zeta);

    // exact case: ratio == (2/eta)^j
    {
        FieldElement pw(1);
        const FieldElement base = two_over_eta();
        for (unsigned j = 0; j <= 256 && !(ratio < pw); ++j) {
            if (pw == ratio) {
                Int t = Int(1) << (j + 1);  // 2 * 2^j
                Int L = t - 1;
                return remember(L < 1 ? 1ul : static_cast<unsigned long>(L));
            }
            pw *= base;
        }
    }

    for (unsigned bits = 64; bits <= p.max_bits; bits *= 2) {
        RatInterval r = ratio.to_approx(bits).interval();
        RatInterval a = alpha_approx(bits).interval();
        RatInterval t = Rat(2) * pow_interval(r, a, bits);
        Int c_lo = rat_ceil(t.lo), c_hi = rat_ceil(t.hi);
        if (c_lo == c_hi) {
            Int L = c_lo - 1;
            if (L < 1) L = 1;
            return remember(static_cast<unsigned long>(L));
        }
    }
    throw precision_ambiguity_error(
        "leaf budget at n = " + n.render() + " is provably within 2^-" +
        std::to_string(p.max_bits) + " of an integer boundary");
}

// ---------------------------------------------------------------------------
// CodeTree: the image of the injection of group elements into labelled
// binary rooted trees.  Leaves hold elements of weight <= K (canonical key
// plus the table's representative word); interior vertices hold a label in
// {1, a}.
// ---------------------------------------------------------------------------

class CodeTree {
public:
    struct Leaf {
        std::string key;
        Word rep;
    };

    static CodeTree leaf(std::string key, Word rep) {
        CodeTree t;
        t.node_ = std::make_shared<const Node>(Node{Leaf{std::move(key), std::move(rep)}, 0, nullptr, nullptr});
        return t;
    }

    static CodeTree node(char h, CodeTree left, CodeTree right) {
        if (h != '1' && h != 'a') throw std::invalid_argument("interior label must be 1 or a");
        CodeTree t;
        t.node_ = std::make_shared<const Node>(
            Node{Leaf{}, h, std::make_shared<CodeTree>(std::move(left)),
                 std::make_shared<CodeTree>(std::move(right))});
        return t;
    }

    bool is_leaf() const { return node_->h == 0; }
    const Leaf& leaf_data() const { return node_->leaf; }
    char root_label() const { return node_->h; }
    const CodeTree& left() const { return *node_->left; }
    const CodeTree& right() const { return *node_->right; }

    std::size_t leaf_count() const {
        return is_leaf() ? 1 : left().leaf_count() + right().leaf_count();
    }

    std::size_t depth() const {
        return is_leaf() ? 0 : 1 + std::max(left().depth(), right().depth());
    }

    // "(h left right)" with leaves rendered as their representative words
    std::string serialize() const {
        if (is_leaf()) return leaf_data().rep.render();
        return "(" + std::string(1, root_label()) + " " + left().serialize() + " " +
               right().serialize() + ")";
    }

private:
    struct Node {
        Leaf leaf;
        char h;  // 0 for leaves
        std::shared_ptr<CodeTree> left, right;
    };
    std::shared_ptr<const Node> node_;
};

namespace detail {

inline const BallEntry& lookup_or_fail(const BallTable& t, const Word& w) {
    const BallEntry* e = t.find(element_key(w));
    if (!e)
        throw table_too_small_error("section " + w.render() +
                                    " is not resolvable in the lookup table (radius " +
                                    t.radius().render() + ")");
    return *e;
}

inline CodeTree encode_impl(const Word& w, const LeafBudgetParams& p, const BallTable& t,
                            unsigned depth) {
    if (depth > 128) throw std::logic_error("encoding recursion failed to terminate");
    const BallEntry& entry = lookup_or_fail(t, w);
    if (!(p.K < entry.length)) return CodeTree::leaf(element_key(w), entry.rep);
    char h = activity(w) ? 'a' : '1';
    Word wh = (h == 'a') ? reduce(w + 'a') : w;
    auto [w0, w1] = psi_split(wh);
    return CodeTree::node(h, encode_impl(reduce(w0), p, t, depth + 1),
                          encode_impl(reduce(w1), p, t, depth + 1));
}

}  // namespace detail

// The representation iota(g): a single leaf when the weight is within the
// cutoff; otherwise the root is labelled by the h in {1,a} with g*h in the
// level-1 stabilizer and the branches encode the sections of g*h.
inline CodeTree encode(const Word& g, const LeafBudgetParams& p, const BallTable& t) {
    return detail::encode_impl(reduce(g), p, t, 0);
}

// Inverse of the encoding, assembled directly as a canonical portrait:
// a node with label 1 is the element with sections (left, right); a node
// with label a additionally swaps the subtrees.
inline Portrait decode(const CodeTree& t) {
    if (t.is_leaf()) return portrait_of(t.leaf_data().rep);
    Portrait p0 = decode(t.left());
    Portrait p1 = decode(t.right());
    if (t.root_label() == '1') return Portrait::node(false, p0, p1);
    return Portrait::node(true, p1, p0);
}

// Tree-counting bound: C_{L-1} * 2^(L-1) * gamma(K)^L with L = L_n, counting
// binary tree shapes, interior labels and leaf contents of the encodings.
inline Int upper_bound(const FieldElement& n, const LeafBudgetParams& p, const BallTable& t) {
    unsigned long L = leaf_budget(n, p);
    Int gammaK(growth_function(t, p.K));
    Int result = catalan(static_cast<unsigned>(L - 1)) * (Int(1) << (L - 1));
    Int power = 1;
    for (unsigned long i = 0; i < L; ++i) power *= gammaK;
    return result * power;
}

}  // namespace grig
