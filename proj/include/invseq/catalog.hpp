#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/grid.hpp"
#include "invseq/oracle.hpp"
#include "invseq/tables.hpp"

// Registry of pattern families with exact counting methods, and the single
// dispatch entry point used by the tools and bindings.
namespace invseq::catalog {

// No fast method is registered for the requested set or method.
class NotImplemented : public Error {
public:
    using Error::Error;
};

inline const std::string kBrute = "brute";

struct Family {
    std::string key;                   // canonical PatternSet key
    std::vector<std::string> methods;  // preferred first
    std::string oeis;
    int oeis_offset = 1;               // index of the first b-file line
    std::string construction;          // short description of the counting method
    std::vector<std::string> aliases;  // symmetric keys resolving here
};

const std::vector<Family>& registry();

// Registered family for P after alias resolution, or nullptr.
const Family* find(const PatternSet& P);

// Registered key sharing the most patterns with P (used in error messages).
std::string nearest_key(const PatternSet& P);

struct Options {
    std::optional<std::string> method;  // default: the family's first method
    std::uint64_t budget = oracle::kDefaultBudget;
    tables::Deadline deadline{};
};

// Exact terms t_0..t_{n_max}. Throws NotImplemented for unknown families or
// methods, BudgetExceeded when the brute-force budget or deadline is hit.
std::vector<Int> fast_terms(const PatternSet& P, int n_max, const Options& opt = {});

// Index of the first differing term over the common prefix, if any.
std::optional<int> first_mismatch(const std::vector<Int>& a, const std::vector<Int>& b);

struct Comparison {
    std::string lhs, rhs;
    int n_max = 0;
    std::optional<int> mismatch;
};

struct CrosscheckReport {
    std::string key;
    std::vector<Comparison> comparisons;
    bool ok() const;
};

// Brute force against every method for n <= n_small, then every method
// against the preferred one for n <= n_large.
CrosscheckReport crosscheck(const PatternSet& P, int n_small, int n_large,
                            std::uint64_t budget = oracle::kDefaultBudget);

// One line per family: key, methods, OEIS id, aliases, construction.
std::string manifest_text();
// Same content as a JSON document.
std::string manifest_json();

}  // namespace invseq::catalog
