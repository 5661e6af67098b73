#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grig {

// ---------------------------------------------------------------------------
// Words over the generators {a,b,c,d} and the recursive action on finite
// binary strings:
//
//   a(x s) = x' s          (flip the first letter)
//   b(0s) = 0 a(s)   b(1s) = 1 c(s)
//   c(0s) = 0 a(s)   c(1s) = 1 d(s)
//   d(0s) = 0 s      d(1s) = 1 b(s)
//
// A word acts letter by letter, rightmost generator first.  {1,b,c,d} form a
// Klein group, every generator is an involution, and the normal form in the
// free product <a> * V is the unique reduced (alternating) word.
// ---------------------------------------------------------------------------

inline bool is_generator(char ch) { return ch == 'a' || ch == 'b' || ch == 'c' || ch == 'd'; }
inline bool is_star(char ch) { return ch == 'b' || ch == 'c' || ch == 'd'; }

class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : s_(std::move(letters)) {
        for (char ch : s_)
            if (!is_generator(ch))
                throw std::invalid_argument("word letters must be in {a,b,c,d}: " + s_);
    }

    // "1" denotes the empty word in all textual interfaces
    static Word parse(const std::string& text) {
        if (text == "1" || text.empty()) return Word{};
        return Word(text);
    }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    char operator[](std::size_t i) const { return s_[i]; }
    const std::string& letters() const { return s_; }
    std::string render() const { return s_.empty() ? "1" : s_; }

    auto begin() const { return s_.begin(); }
    auto end() const { return s_.end(); }

    friend Word operator+(const Word& u, const Word& v) { return Word(u.s_ + v.s_); }
    friend Word operator+(const Word& u, char g) { return Word(u.s_ + g); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    Word reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }

private:
    std::string s_;
};

inline void validate_bits(const std::string& s) {
    for (char ch : s)
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("binary string must be over {0,1}: " + s);
}

// product of two distinct letters of {b,c,d} is the third one
inline char klein_mul(char x, char y) {
    return char('b' + 'c' + 'd' - x - y);
}

// Normal form in <a> * V: cancel equal neighbours, fuse adjacent {b,c,d}
// pairs through the Klein table.  One left-to-right stack pass suffices
// because the stack is alternating at all times.
inline Word reduce(const Word& w) {
    std::string st;
    for (char ch : w) {
        if (!st.empty() && st.back() == ch) {
            st.pop_back();
        } else if (!st.empty() && is_star(st.back()) && is_star(ch)) {
            st.back() = klein_mul(st.back(), ch);
        } else {
            st.push_back(ch);
        }
    }
    return Word(std::move(st));
}

inline bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] == w[i] || (is_star(w[i - 1]) && is_star(w[i]))) return false;
    return true;
}

// parity of a-letters: 0 iff the element fixes the first letter of every input
inline int activity(const Word& w) {
    int p = 0;
    for (char ch : w) p ^= (ch == 'a');
    return p;
}

namespace detail {

// single-generator action, iterative form of the displayed recursion
inline void act_letter(char g, std::string& s) {
    std::size_t i = 0;
    char cur = g;
    while (i < s.size()) {
        char x = s[i];
        switch (cur) {
            case 'a': s[i] = (x == '0' ? '1' : '0'); return;
            case 'b': cur = (x == '0' ? 'a' : 'c'); ++i; break;
            case 'c': cur = (x == '0' ? 'a' : 'd'); ++i; break;
            case 'd':
                if (x == '0') return;
                cur = 'b';
                ++i;
                break;
            default: return;
        }
    }
}

}  // namespace detail

inline std::string act(const Word& w, const std::string& input) {
    validate_bits(input);
    std::string s = input;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        detail::act_letter(*it, s);
    return s;
}

// The wreath decomposition table for the level-1 stabilizer:
//   b -> (a, c)   c -> (a, d)   d -> (1, b)
// with the a-conjugates swapped.  Overridable so the checkers can be fed a
// deliberately wrong table in their own tests.
struct PsiTable {
    std::pair<std::string, std::string> b{"a", "c"};
    std::pair<std::string, std::string> c{"a", "d"};
    std::pair<std::string, std::string> d{"", "b"};

    const std::pair<std::string, std::string>& of(char g) const {
        switch (g) {
            case 'b': return b;
            case 'c': return c;
            case 'd': return d;
        }
        throw std::logic_error("psi table lookup of a non-star letter");
    }
};

inline const PsiTable& default_psi_table() {
    static const PsiTable table{};
    return table;
}

// psi: H -> G x G on word representatives, extended multiplicatively.
// Precondition: activity(w) == 0.
inline std::pair<Word, Word> psi_split(const Word& w, const PsiTable& table = default_psi_table()) {
    if (activity(w) != 0)
        throw std::invalid_argument("psi_split requires even a-parity: " + w.render());
    std::string w0, w1;
    int p = 0;
    for (char ch : w) {
        if (ch == 'a') {
            p ^= 1;
        } else {
            const auto& [u, v] = table.of(ch);
            if (p == 0) {
                w0 += u;
                w1 += v;
            } else {
                w0 += v;
                w1 += u;
            }
        }
    }
    return {Word(std::move(w0)), Word(std::move(w1))};
}

// Word problem: reduce, then recurse through the wreath decomposition.
// Each section of a reduced word of length n >= 2 has length <= (n+1)/2.
inline bool is_trivial(const Word& w) {
    Word r = reduce(w);
    if (r.empty()) return true;
    if (r.size() == 1) return false;
    if (activity(r) != 0) return false;
    auto [w0, w1] = psi_split(r);
    return is_trivial(w0) && is_trivial(w1);
}

}  // namespace grig
