#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "abelian/rational.hpp"
#include "abelian/words.hpp"

namespace abelian {

struct Corridor {
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    std::uint32_t width() const { return max - min; }
};

/// Per-length catalog of the Parikh vectors of a window's factors, with
/// per-letter corridors. Everything is computed from a fixed finite window
/// (a prefix of the word under study); answers are meaningful relative to
/// that window only.
class AbelianIndex {
public:
    AbelianIndex(const InfiniteWord& x, std::size_t max_len, std::size_t window)
        : AbelianIndex(x.prefix(window), x.alphabet(), max_len) {}
    AbelianIndex(const Word& window_word, Alphabet alphabet, std::size_t max_len);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t max_len() const { return per_length_.size(); }
    std::size_t window() const { return window_; }

    bool contains(std::size_t n, const ParikhVector& v) const;
    /// Distinct Parikh vectors of the length-n factors, sorted.
    std::vector<ParikhVector> parikhs(std::size_t n) const;
    std::size_t abelian_complexity(std::size_t n) const;
    Corridor corridor(std::size_t n, std::size_t letter_idx) const;

    /// True when both indices catalog identical Parikh sets for every length.
    friend bool operator==(const AbelianIndex& a, const AbelianIndex& b);

private:
    struct LengthData {
        std::unordered_set<std::string> keys;  // packed ParikhVector keys
        std::vector<Corridor> corridors;       // per letter
    };
    void check_len(std::size_t n) const;

    Alphabet alphabet_;
    std::size_t window_;
    std::vector<LengthData> per_length_;  // index n-1 holds length n
};

/// Result of the window-doubling stabilization heuristic: the index was
/// rebuilt at N, 2N, 4N, ... until two consecutive doublings left every
/// Parikh set unchanged (or the cap was hit, reported as not stabilized).
struct StabilizedIndex {
    AbelianIndex index;
    std::size_t window;
    bool stabilized;
};

StabilizedIndex stabilized_index(const InfiniteWord& x, std::size_t max_len,
                                 std::size_t initial_window, std::size_t max_window);

std::vector<ParikhVector> factor_parikhs(const InfiniteWord& x, std::size_t n, std::size_t window);
std::size_t abelian_complexity(const InfiniteWord& x, std::size_t n, std::size_t window);
Corridor corridor(const InfiniteWord& x, Letter a, std::size_t n, std::size_t window);
std::pair<Rational, Rational> freq_bounds(const InfiniteWord& x, Letter a, std::size_t n,
                                          std::size_t window);

/// Number of distinct length-n factors of the window.
std::size_t factor_complexity(const InfiniteWord& x, std::size_t n, std::size_t window);
/// Distinct-factor counts for every length 1..max_len of the window word,
/// computed in one pass (suffix automaton).
std::vector<std::size_t> factor_complexity_profile(const Word& window_word, std::size_t max_len);

/// The set of length-n factors of the window.
std::unordered_set<Word> factor_set(const Word& window_word, std::size_t n);
std::unordered_set<Word> factor_set(const InfiniteWord& x, std::size_t n, std::size_t window);

struct BalanceWitness {
    std::size_t length = 0;
    Letter letter = 0;
    Word low, high;  // two factors whose counts differ by more than one
};

struct BalanceReport {
    bool balanced = true;
    std::optional<BalanceWitness> witness;
};

/// Checks |count(u,a) - count(v,a)| <= 1 for all same-length factors up to
/// max_len within the window; on failure reports an offending pair.
BalanceReport is_balanced(const InfiniteWord& x, std::size_t max_len, std::size_t window);

/// Least p <= |w|/2 such that the string w is p-periodic, if any. The
/// Coven-Hedlund abelian criterion (all length-n factors abelian equivalent
/// for some n) runs first as a filter; candidates are then verified letter
/// by letter.
std::optional<std::size_t> least_period(const Word& w);

/// Pure periodicity of the word at window scale. A period candidate found
/// on prefix(window) is confirmed on prefix(2*window): prefixes of
/// aperiodic words (Sturmian prefixes in particular) can be periodic as
/// strings, but their fake periods break once the window doubles.
std::optional<std::size_t> is_periodic_window(const InfiniteWord& x, std::size_t window);

/// Least n such that all length-n factors of w are abelian equivalent
/// (searched up to cap), the quantity n0 driving periodic censuses.
std::optional<std::size_t> abelian_periodicity_length(const Word& w, const Alphabet& a,
                                                      std::size_t cap);

}  // namespace abelian
