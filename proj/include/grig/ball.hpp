#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "grig/portrait.hpp"
#include "grig/weights.hpp"

namespace grig {

struct element_cap_error : std::runtime_error {
    explicit element_cap_error(std::size_t cap)
        : std::runtime_error("ball enumeration exceeded the element cap of " + std::to_string(cap)) {}
};

struct not_in_ball_error : std::runtime_error {
    explicit not_in_ball_error(const std::string& what) : std::runtime_error(what) {}
};

struct table_io_error : std::runtime_error {
    explicit table_io_error(const std::string& what) : std::runtime_error(what) {}
};

struct file_not_found_error : table_io_error {
    explicit file_not_found_error(const std::string& path)
        : table_io_error("table file not found: " + path) {}
};

// ---------------------------------------------------------------------------
// BallTable: every group element of weighted length <= radius, keyed by the
// canonical portrait serialization, with its exact minimal length and a
// canonical minimal representative word.
// ---------------------------------------------------------------------------

struct BallEntry {
    Word rep;
    FieldElement length;
};

class BallTable {
public:
    BallTable(std::string scheme_name, FieldElement radius)
        : scheme_name_(std::move(scheme_name)), radius_(std::move(radius)) {}

    const std::string& scheme_name() const { return scheme_name_; }
    const FieldElement& radius() const { return radius_; }
    std::size_t size() const { return entries_.size(); }

    bool contains(const std::string& key) const { return entries_.count(key) != 0; }

    const BallEntry& at(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw not_in_ball_error("element not present in the enumerated ball");
        return it->second;
    }

    const BallEntry* find(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void insert(std::string key, BallEntry entry) { entries_.emplace(std::move(key), std::move(entry)); }

    const std::unordered_map<std::string, BallEntry>& entries() const { return entries_; }

    // deterministic order: by exact length, then representative length, then word
    std::vector<std::pair<std::string, const BallEntry*>> sorted_entries() const {
        std::vector<std::pair<std::string, const BallEntry*>> out;
        out.reserve(entries_.size());
        for (const auto& [k, e] : entries_) out.emplace_back(k, &e);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            const BallEntry &a = *x.second, &b = *y.second;
            if (a.length != b.length) return a.length < b.length;
            if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
            if (a.rep != b.rep) return a.rep < b.rep;
            return x.first < y.first;
        });
        return out;
    }

    friend bool operator==(const BallTable& x, const BallTable& y) {
        if (x.scheme_name_ != y.scheme_name_ || !(x.radius_ == y.radius_) ||
            x.entries_.size() != y.entries_.size())
            return false;
        for (const auto& [k, e] : x.entries_) {
            const BallEntry* o = y.find(k);
            if (!o || !(o->length == e.length) || o->rep != e.rep) return false;
        }
        return true;
    }

private:
    std::string scheme_name_;
    FieldElement radius_;
    std::unordered_map<std::string, BallEntry> entries_;
};

constexpr std::size_t kDefaultElementCap = 10'000'000;

// Shortest-path enumeration from the identity, multiplying by generators on
// the right.  Priorities are exact field elements; the representative stored
// for each element is the minimum over (length, word length, word) of all
// relaxations from settled predecessors, which makes the output independent
// of traversal order.  `edge_order` only permutes relaxation order and must
// not change the result (exercised by the determinism tests).
inline BallTable enumerate_ball(const WeightScheme& ws, const FieldElement& radius,
                                std::size_t element_cap = kDefaultElementCap,
                                const std::string& edge_order = "abcd") {
    if (radius.sign() < 0) throw std::invalid_argument("ball radius must be nonnegative");
    if (!ws.all_positive()) throw std::invalid_argument("weights must be strictly positive");

    struct Candidate {
        FieldElement length;
        Word word;
        std::string key;
    };
    struct Later {
        bool operator()(const Candidate& x, const Candidate& y) const {
            if (x.length != y.length) return y.length < x.length;
            if (x.word.size() != y.word.size()) return x.word.size() > y.word.size();
            return x.word > y.word;
        }
    };

    BallTable table(ws.name, radius);
    std::unordered_map<std::string, std::pair<FieldElement, Word>> best;
    std::priority_queue<Candidate, std::vector<Candidate>, Later> queue;

    const std::string identity_key = Portrait::leaf('1').key();
    best.emplace(identity_key, std::make_pair(FieldElement(0), Word{}));
    queue.push({FieldElement(0), Word{}, identity_key});

    while (!queue.empty()) {
        Candidate cur = queue.top();
        queue.pop();
        if (table.contains(cur.key)) continue;  // lazily deleted duplicate
        table.insert(cur.key, BallEntry{cur.word, cur.length});
        if (table.size() > element_cap) throw element_cap_error(element_cap);

        for (char g : edge_order) {
            FieldElement length = cur.length + ws.of(g);
            if (radius < length) continue;
            Word word = reduce(cur.word + g);
            std::string key = element_key(word);
            if (table.contains(key)) continue;
            auto it = best.find(key);
            bool better = it == best.end();
            if (!better) {
                const auto& [blen, bword] = it->second;
                better = length < blen ||
                         (length == blen && (word.size() < bword.size() ||
                                             (word.size() == bword.size() && word < bword)));
            }
            if (better) {
                best[key] = {length, word};
                queue.push({length, word, key});
                if (best.size() > element_cap) throw element_cap_error(element_cap);
            }
        }
    }
    return table;
}

// gamma_omega(n): number of elements of length <= n, exact comparison.
inline std::size_t growth_function(const BallTable& t, const FieldElement& n) {
    if (t.radius() < n)
        throw std::invalid_argument("growth sample point exceeds the table radius");
    std::size_t count = 0;
    for (const auto& [key, entry] : t.entries())
        if (!(n < entry.length)) ++count;
    return count;
}

inline FieldElement length_of(const Word& w, const WeightScheme&, const BallTable& t) {
    return t.at(element_key(w)).length;
}

// ---------------------------------------------------------------------------
// Table files: versioned text format, one record per element.
//
//   grigtable v1
//   scheme <name>
//   radius <c0> <c1> <c2>
//   count <N>
//   <key-hex> <word> <c0> <c1> <c2>
// ---------------------------------------------------------------------------

namespace detail {

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char ch : bytes) {
        out += digits[ch >> 4];
        out += digits[ch & 15];
    }
    return out;
}

inline std::string from_hex(const std::string& hex) {
    auto nibble = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw table_io_error("odd-length hex key");
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw table_io_error("invalid hex key");
        out += char(hi * 16 + lo);
    }
    return out;
}

inline std::string triple(const FieldElement& x) {
    return render_rational(x.c0()) + " " + render_rational(x.c1()) + " " + render_rational(x.c2());
}

}  // namespace detail

inline void save_table(const BallTable& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw table_io_error("cannot open table file for writing: " + path.string());
    out << "grigtable v1\n";
    out << "scheme " << t.scheme_name() << "\n";
    out << "radius " << detail::triple(t.radius()) << "\n";
    out << "count " << t.size() << "\n";
    for (const auto& [key, entry] : t.sorted_entries())
        out << detail::to_hex(key) << " " << entry->rep.render() << " "
            << detail::triple(entry->length) << "\n";
    if (!out) throw table_io_error("write failure on table file: " + path.string());
}

inline BallTable load_table(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw file_not_found_error(path.string());
    std::ifstream in(path);
    if (!in) throw file_not_found_error(path.string());

    auto read_line = [&in, &path](const char* what) {
        std::string line;
        if (!std::getline(in, line))
            throw table_io_error("corrupt table file (truncated at " + std::string(what) + "): " +
                                 path.string());
        return line;
    };

    if (read_line("magic") != "grigtable v1")
        throw table_io_error("corrupt table file or unsupported version: " + path.string());

    std::istringstream scheme_line(read_line("scheme"));
    std::string tag, scheme;
    scheme_line >> tag >> scheme;
    if (tag != "scheme" || scheme.empty())
        throw table_io_error("corrupt table file (scheme line): " + path.string());

    auto parse_triple = [&path](std::istream& is) {
        std::string a, b, c;
        if (!(is >> a >> b >> c))
            throw table_io_error("corrupt table file (coefficient triple): " + path.string());
        return FieldElement(parse_rational(a), parse_rational(b), parse_rational(c));
    };

    std::istringstream radius_line(read_line("radius"));
    radius_line >> tag;
    if (tag != "radius") throw table_io_error("corrupt table file (radius line): " + path.string());
    FieldElement radius = parse_triple(radius_line);

    std::istringstream count_line(read_line("count"));
    std::size_t count = 0;
    count_line >> tag >> count;
    if (tag != "count") throw table_io_error("corrupt table file (count line): " + path.string());

    BallTable table(scheme, radius);
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream rec(read_line("record"));
        std::string hex, word;
        if (!(rec >> hex >> word))
            throw table_io_error("corrupt table file (record " + std::to_string(i) + "): " +
                                 path.string());
        FieldElement length = parse_triple(rec);
        table.insert(detail::from_hex(hex), BallEntry{Word::parse(word), length});
    }
    if (table.size() != count)
        throw table_io_error("corrupt table file (duplicate keys): " + path.string());
    return table;
}

}  // namespace grig
