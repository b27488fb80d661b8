#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "invseq/catalog.hpp"

using namespace invseq;
using namespace invseq::catalog;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<Int> terms(const char* key, int n, std::optional<std::string> method = {}) {
    Options o;
    o.method = std::move(method);
    return fast_terms(PatternSet::parse(key), n, o);
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = registry();
    CHECK(reg.size() == 22);
    std::set<std::string> keys;
    for (const auto& f : reg) {
        CAPTURE(f.key);
        CHECK(keys.insert(f.key).second);
        CHECK_FALSE(f.methods.empty());
        CHECK(f.oeis.rfind("A", 0) == 0);
        CHECK(PatternSet::parse(f.key).key() == f.key);
        for (const auto& a : f.aliases) CHECK(find(PatternSet::parse(a)) == &f);
    }
    CHECK(find(PatternSet::parse("210,000"))->key == "000,201");
    CHECK(find(PatternSet::parse("010,201"))->key == "010,210");
    CHECK(find(PatternSet::parse("012")) == nullptr);
}

TEST_CASE("dispatch") {
    CHECK(terms("010", 7) == ints({1, 1, 2, 5, 15, 53, 215, 979}));
    CHECK(terms("000,210", 7) == ints({1, 1, 2, 5, 16, 60, 257, 1218}));
    CHECK(terms("012", 7, kBrute) == ints({1, 1, 2, 5, 13, 34, 89, 233}));
    CHECK(terms("000", 0, kBrute) == ints({1}));
}

TEST_CASE("every family, every method, seven terms") {
    const std::map<std::string, std::vector<Int>> golden = {
        {"010", ints({1, 2, 5, 15, 53, 215, 979})},
        {"000,100", ints({1, 2, 5, 16, 60, 260, 1267})},
        {"102,201", ints({1, 2, 6, 22, 87, 354, 1465})},
        {"000,102", ints({1, 2, 5, 14, 40, 121, 373})},
        {"102,210", ints({1, 2, 6, 22, 87, 351, 1416})},
        {"000,201", ints({1, 2, 5, 16, 60, 257, 1218})},
        {"100,110", ints({1, 2, 6, 22, 93, 437, 2233})},
        {"100,101", ints({1, 2, 6, 22, 93, 439, 2267})},
        {"110,201", ints({1, 2, 6, 23, 103, 512, 2739})},
        {"101,210", ints({1, 2, 6, 23, 103, 513, 2763})},
        {"011,120", ints({1, 2, 5, 14, 42, 132, 431})},
        {"100,120", ints({1, 2, 6, 22, 92, 421, 2062})},
        {"120,201", ints({1, 2, 6, 23, 102, 498, 2607})},
        {"110,120", ints({1, 2, 6, 22, 92, 423, 2091})},
        {"010,120", ints({1, 2, 5, 15, 52, 201, 845})},
        {"101,120", ints({1, 2, 6, 22, 90, 397, 1859})},
        {"000,120", ints({1, 2, 5, 15, 50, 185, 737})},
        {"000,010", ints({1, 2, 4, 10, 29, 95, 345})},
        {"010,210", ints({1, 2, 5, 15, 53, 214, 958})},
        {"010,110", ints({1, 2, 5, 15, 52, 201, 847})},
        {"010,102", ints({1, 2, 5, 15, 51, 186, 707})},
        {"100,102", ints({1, 2, 6, 21, 80, 318, 1305})},
    };
    CHECK(golden.size() == registry().size());
    for (const auto& f : registry()) {
        CAPTURE(f.key);
        for (const auto& m : f.methods) {
            CAPTURE(m);
            auto t = terms(f.key.c_str(), 7, m);
            REQUIRE(t.size() == 8);
            CHECK(t[0] == 1);
            CHECK(std::vector<Int>(t.begin() + 1, t.end()) == golden.at(f.key));
        }
    }
}

TEST_CASE("errors") {
    try {
        terms("012,021", 5);
        FAIL("expected NotImplemented");
    } catch (const NotImplemented& e) {
        CHECK(std::string(e.what()).find("nearest registered family") != std::string::npos);
    }
    CHECK_THROWS_AS(terms("010", 5, "gf"), NotImplemented);
    CHECK_THROWS_AS(terms("010", -1), ParseError);
    Options o;
    o.method = kBrute;
    o.budget = 10;
    CHECK_THROWS_AS(fast_terms(PatternSet::parse("010"), 8, o), BudgetExceeded);
    CHECK(nearest_key(PatternSet::parse("012,201")).find("201") != std::string::npos);
}

TEST_CASE("crosscheck") {
    const auto r = crosscheck(PatternSet::parse("102,201"), 9, 200);
    CHECK(r.ok());
    CHECK(r.key == "102,201");
    CHECK(r.comparisons.size() == 7);
    CHECK(crosscheck(PatternSet::parse("000,010"), 9, 100).ok());
    CHECK(crosscheck(PatternSet::parse("010,110"), 8, 100).ok());
    CHECK(crosscheck(PatternSet::parse("010,201"), 8, 60).ok());
    CHECK(first_mismatch(ints({1, 2, 3}), ints({1, 2, 4, 5})) == 2);
    CHECK_FALSE(first_mismatch(ints({1, 2}), ints({1, 2, 4})));
}

TEST_CASE("manifest") {
    const auto text = manifest_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == 22);
    CHECK(text.find("A263779") != std::string::npos);
    const auto j = nlohmann::json::parse(manifest_json());
    CHECK(j.size() == 22);
    CHECK(j[0]["patterns"] == "010");
}
