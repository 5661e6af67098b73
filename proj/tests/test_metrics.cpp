#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "grig/ball.hpp"
#include "grig/verify.hpp"

using namespace grig;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

// naive oracle: all reduced words up to the radius, deduplicated by portrait,
// keeping the minimal unit length per element
std::unordered_map<std::string, std::size_t> naive_unit_ball(std::size_t radius) {
    std::unordered_map<std::string, std::size_t> min_len;
    for (const Word& w : detail::reduced_words_up_to(radius)) {
        std::string key = element_key(w);
        auto it = min_len.find(key);
        if (it == min_len.end() || w.size() < it->second) min_len[key] = w.size();
    }
    return min_len;
}

}  // namespace

TEST_CASE("word weights") {
    const WeightScheme omega = omega_weights();
    CHECK(word_weight(Word("ab"), omega) == FieldElement(1));
    CHECK(word_weight(Word("aba"), unit_weights()) == FieldElement(3));
    CHECK(word_weight(Word("dac"), omega) == FieldElement(1));
    CHECK(word_weight(Word{}, omega).is_zero());
}

TEST_CASE("unit balls") {
    CHECK(enumerate_ball(unit_weights(), FieldElement(0)).size() == 1);
    CHECK(enumerate_ball(unit_weights(), FieldElement(1)).size() == 5);
    CHECK(enumerate_ball(unit_weights(), FieldElement(2)).size() == 11);

    SECTION("agreement with the naive oracle up to radius 5") {
        auto oracle = naive_unit_ball(5);
        for (std::size_t r = 0; r <= 5; ++r) {
            BallTable t = enumerate_ball(unit_weights(), FieldElement(int(r)));
            std::set<std::string> expected;
            for (const auto& [key, len] : oracle)
                if (len <= r) expected.insert(key);
            REQUIRE(t.size() == expected.size());
            for (const auto& key : expected) REQUIRE(t.contains(key));
            for (const auto& [key, entry] : t.entries()) {
                REQUIRE(expected.count(key) == 1);
                REQUIRE(entry.length == FieldElement(int(oracle.at(key))));
            }
        }
    }
}

TEST_CASE("the omega ball of radius 1 has exactly 14 elements") {
    BallTable t = enumerate_ball(omega_weights(), FieldElement(1));
    CHECK(t.size() == 14);

    // weight-exactly-1 boundary elements must be included
    const WeightScheme omega = omega_weights();
    for (const char* w : {"ab", "ba", "dac", "cad"}) {
        const BallEntry* e = t.find(element_key(Word(w)));
        REQUIRE(e != nullptr);
        CHECK(e->length == FieldElement(1));
    }

    // full membership, derived independently
    std::set<std::string> expected;
    for (const char* w : {"", "a", "b", "c", "d", "ab", "ac", "ad", "ba", "ca", "da",
                          "dad", "dac", "cad"})
        expected.insert(element_key(Word::parse(w)));
    REQUIRE(expected.size() == 14);
    for (const auto& key : expected) CHECK(t.contains(key));
}

TEST_CASE("lengths from the table") {
    const WeightScheme omega = omega_weights();
    BallTable t = enumerate_ball(omega, FieldElement(2));

    // bc = d, and d is the cheapest representative: length = w(d) = 1 - eta
    CHECK(length_of(Word("bc"), omega, t) == omega.wd);
    CHECK(length_of(Word{}, omega, t).is_zero());
    CHECK(length_of(Word("aa"), omega, t).is_zero());
    CHECK_THROWS_AS(length_of(Word("ababab"), omega, t), not_in_ball_error);

    CHECK(growth_function(t, FieldElement(0)) == 1);
    CHECK(growth_function(t, FieldElement(1)) == 14);
    CHECK_THROWS_AS(growth_function(t, FieldElement(3)), std::invalid_argument);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_ball(unit_weights(), FieldElement(3), 5), element_cap_error);
    CHECK_THROWS_AS(enumerate_ball(unit_weights(), FieldElement(-1)), std::invalid_argument);
}

TEST_CASE("determinism under relaxation order") {
    BallTable a = enumerate_ball(omega_weights(), FieldElement(2), kDefaultElementCap, "abcd");
    BallTable b = enumerate_ball(omega_weights(), FieldElement(2), kDefaultElementCap, "dcba");
    REQUIRE(a == b);

    auto pa = temp_file("grig_det_a.tbl"), pb = temp_file("grig_det_b.tbl");
    save_table(a, pa);
    save_table(b, pb);
    std::ifstream fa(pa), fb(pb);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    REQUIRE(ca == cb);
    fs::remove(pa);
    fs::remove(pb);
}

TEST_CASE("table files") {
    BallTable t = enumerate_ball(unit_weights(), FieldElement(2));
    auto path = temp_file("grig_roundtrip.tbl");

    SECTION("round trip") {
        save_table(t, path);
        BallTable loaded = load_table(path);
        REQUIRE(loaded == t);
        fs::remove(path);
    }
    SECTION("truncated file is rejected") {
        save_table(t, path);
        // chop the file in half
        std::ifstream in(path);
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        std::ofstream out(path, std::ios::trunc);
        out << content.substr(0, content.size() / 2);
        out.close();
        CHECK_THROWS_AS(load_table(path), table_io_error);
        fs::remove(path);
    }
    SECTION("wrong version is rejected") {
        std::ofstream out(path, std::ios::trunc);
        out << "grigtable v99\nscheme unit\nradius 2 0 0\ncount 0\n";
        out.close();
        CHECK_THROWS_AS(load_table(path), table_io_error);
        fs::remove(path);
    }
    SECTION("missing file is a distinct error") {
        CHECK_THROWS_AS(load_table(temp_file("grig_does_not_exist.tbl")), file_not_found_error);
    }
}

TEST_CASE("ball symmetry and growth regularity") {
    BallTable t = enumerate_ball(omega_weights(), FieldElement(3));

    SECTION("closed under inversion with equal lengths") {
        for (const auto& [key, entry] : t.entries()) {
            const BallEntry* inv = t.find(element_key(entry.rep.reversed()));
            REQUIRE(inv != nullptr);
            REQUIRE(inv->length == entry.length);
        }
    }
    SECTION("representatives realize their exact length") {
        const WeightScheme omega = omega_weights();
        for (const auto& [key, entry] : t.entries()) {
            REQUIRE(word_weight(entry.rep, omega) == entry.length);
            REQUIRE(is_reduced(entry.rep));
            REQUIRE(element_key(entry.rep) == key);
        }
    }
    SECTION("monotone and submultiplicative at half-integer samples") {
        auto gamma = [&](const Rat& q) { return growth_function(t, FieldElement(q)); };
        std::vector<Rat> pts;
        for (int k = 0; k <= 6; ++k) pts.emplace_back(k, 2);
        for (std::size_t i = 1; i < pts.size(); ++i) REQUIRE(gamma(pts[i - 1]) <= gamma(pts[i]));
        for (const Rat& m : pts)
            for (const Rat& n : pts)
                if (m + n <= 3) REQUIRE(gamma(m + n) <= gamma(m) * gamma(n));
    }
}
