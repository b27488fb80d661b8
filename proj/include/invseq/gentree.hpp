#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invseq/core.hpp"

namespace invseq::gentree {

using Int = mpz_class;

struct Label {
    int kind = 0;
    std::array<int, 3> p{0, 0, 0};  // unused trailing params stay 0

    auto operator<=>(const Label&) const = default;
};

// (c0 + c1*i + c2*i^2) / den, required to be a non-negative integer at
// every index where it is used.
struct Multiplicity {
    std::int64_t c0 = 1, c1 = 0, c2 = 0, den = 1;
    std::int64_t at(std::int64_t i) const;
};

class Emitter {
public:
    virtual ~Emitter() = default;
    virtual void emit(const Label& child, std::int64_t mult = 1, int jump = 1) = 0;
    // Children with params base + i*dir for i in [lo, hi], each with
    // multiplicity mult(i). Empty when lo > hi.
    virtual void emit_range(int kind, std::array<int, 3> base, std::array<int, 3> dir, int lo, int hi,
                            Multiplicity mult = {}, int jump = 1) = 0;
};

struct SuccessionRule {
    std::string id;
    Label axiom;  // sits at level 0
    std::vector<std::string> kind_names;
    std::vector<int> kind_arity;
    std::vector<bool> counted;  // per kind
    std::function<void(const Label&, Emitter&)> produce;

    std::string format(const Label& l) const;
};

struct LevelDistribution {
    int level = 0;
    std::map<Label, Int> counts;

    Int total(const SuccessionRule& rule) const;
    Int count_kind(int kind) const;
};

struct Child {
    Label label;
    int jump = 1;
    Int mult;

    bool operator==(const Child&) const = default;
};

// Materialized children of one label, merged by (jump, label) and sorted.
std::vector<Child> expand(const SuccessionRule& rule, const Label& label);

enum class Engine {
    ranged,  // range emissions folded in with difference tables
    naive,   // every child visited individually
};

std::vector<LevelDistribution> run_rule_levels(const SuccessionRule& rule, int n_max,
                                               Engine engine = Engine::ranged);
std::vector<Int> run_rule(const SuccessionRule& rule, int n_max, Engine engine = Engine::ranged);

SuccessionRule rule_factorial();
SuccessionRule rule_cat();
SuccessionRule rule_000_100();
SuccessionRule rule_102_201();
SuccessionRule rule_000_102();
SuccessionRule rule_102_210();
SuccessionRule rule_101_102_201();

// Lookup by stable id ("omega.000_100", ...). Throws Error on unknown ids.
SuccessionRule rule_by_id(const std::string& id);
std::vector<std::string> rule_ids();

// Kind indices used by the built-in rules.
namespace kinds {
inline constexpr int a = 0, b1 = 1, b2 = 2, b3 = 3, c = 4;         // 102_201
inline constexpr int c1 = 3, c2 = 4;                               // 102_210 (a, b1, b2, c1, c2)
inline constexpr int unimodal = 0, tail = 1;                       // 101_102_201
}  // namespace kinds

struct TreeLevel {
    std::uint64_t nodes = 0;
    // Histogram of children counts over the nodes of this level.
    std::map<int, std::uint64_t> child_counts;
};

// Explicit tree of P-avoiding inversion sequences grown by appending one
// entry at a time, down to level n_max. Throws BudgetExceeded.
std::vector<TreeLevel> grow_right_tree(const PatternSet& P, int n_max, std::uint64_t budget = 100'000'000);

}  // namespace invseq::gentree
