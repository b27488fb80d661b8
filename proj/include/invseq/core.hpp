#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

// Finite sequence of non-negative integers. Positions are 1-based in every
// public API that reports them; storage is an ordinary 0-based vector.
using IntSeq = std::vector<int>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text or arguments.
class ParseError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed (e.g. a production emitted a
// malformed label, or a series was not divisible where it must be).
class StructuralError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed its candidate budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Thrown when a deadline passes; `reached` is the last size fully computed.
class DeadlineExceeded : public BudgetExceeded {
public:
    DeadlineExceeded(const std::string& what, int reached) : BudgetExceeded(what), reached_(reached) {}
    int reached() const { return reached_; }

private:
    int reached_;
};

class Deadline {
public:
    Deadline() = default;
    static Deadline after(std::chrono::milliseconds budget);
    bool expired() const;
    // Throws DeadlineExceeded once the deadline has passed.
    void check(int reached) const;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

class Pattern {
public:
    // Rank-reduces `seq`; throws ParseError on empty input.
    static Pattern canonicalize(std::span<const int> seq);
    // Accepts digit strings such as "010"; rejects text that is not already
    // canonical (e.g. "131" or "02").
    static Pattern parse(std::string_view text);

    const IntSeq& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    int operator[](std::size_t i) const { return terms_[i]; }
    std::string str() const;

    auto operator<=>(const Pattern&) const = default;

private:
    explicit Pattern(IntSeq t) : terms_(std::move(t)) {}
    IntSeq terms_;
};

class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Pattern> patterns);
    // Comma-separated canonical digit strings, e.g. "102,201". The empty
    // string is the empty set.
    static PatternSet parse(std::string_view text);

    const std::vector<Pattern>& patterns() const { return patterns_; }
    bool empty() const { return patterns_.empty(); }
    std::size_t size() const { return patterns_.size(); }
    // Sorted, comma-joined key.
    std::string key() const;

    bool operator==(const PatternSet&) const = default;

private:
    std::vector<Pattern> patterns_;
};

inline Pattern canonicalize(std::span<const int> seq) { return Pattern::canonicalize(seq); }

bool contains(std::span<const int> seq, const Pattern& rho);
bool contains_any(std::span<const int> seq, const PatternSet& P);
bool avoids(std::span<const int> seq, const PatternSet& P);

// True iff some occurrence of rho uses the last entry of seq. Used by the
// pruned enumerators: if seq minus its last entry avoids rho, this decides
// whether seq does.
bool contains_ending_at_last(std::span<const int> seq, const Pattern& rho);

bool is_shifted_inv_seq(std::span<const int> seq, int s);
inline bool is_inv_seq(std::span<const int> seq) { return is_shifted_inv_seq(seq, 0); }

struct Stats {
    int max = -1;
    std::optional<int> min;  // absent for the empty sequence
    int firstmax = 0;        // 1-based; 0 for the empty sequence
    int lastmax = 0;
    int dist = 0;
    std::vector<int> vals;   // sorted distinct values
    std::vector<int> des;    // 1-based positions i with seq[i] > seq[i+1]
    int rep = -1;            // largest value occurring at least twice
    int top = 0;             // number of distinct values above rep
};

Stats stats(std::span<const int> seq);

// Second largest value (-1 when fewer than two distinct values).
int second_max(std::span<const int> seq);

// Values v in [0, max(alpha)] such that alpha . (max(alpha)+1) . v contains
// a pattern of P. Throws std::invalid_argument if alpha does not avoid P.
std::vector<int> forbidden_values(std::span<const int> alpha, const PatternSet& P);

std::string to_string(std::span<const int> seq);

}  // namespace invseq
