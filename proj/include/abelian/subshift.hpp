#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "abelian/words.hpp"

namespace abelian {

/// Complete deterministic automaton over an alphabet; accepting states mark
/// exactly the forbidden words.
struct Dfa {
    Alphabet alphabet;
    std::size_t start = 0;
    std::vector<std::map<Letter, std::size_t>> transitions;
    std::vector<bool> accepting;

    std::size_t step(std::size_t state, Letter c) const;
    bool accepts(const Word& w) const;
    void validate() const;  // completeness and determinism
};

/// A forbidden-factor set: either a finite, factor-minimal word list or a
/// regular set given by a DFA. Defines the subshift of bi-infinite words
/// avoiding every listed factor.
class ForbiddenSet {
public:
    static ForbiddenSet finite(std::vector<Word> words, Alphabet alphabet);
    static ForbiddenSet automaton(Dfa dfa);

    /// Text format: one word per line, or an automaton block with lines
    /// `states N`, `start S`, `accept S...`, `trans S a T`. '#' comments.
    static ForbiddenSet parse(std::istream& in, const std::string& origin = "<input>");

    const Alphabet& alphabet() const { return alphabet_; }
    bool is_finite() const { return !dfa_.has_value(); }
    const std::vector<Word>& words() const { return words_; }

    /// Whether w itself belongs to the forbidden set.
    bool matches(const Word& w) const;
    /// Whether no factor of w is forbidden.
    bool legal(const Word& w) const;
    /// Legality of an extension uc given that u is legal: only factors
    /// ending at the new letter need to be checked.
    bool legal_extension(const Word& u, Letter c) const;

private:
    ForbiddenSet() = default;
    Alphabet alphabet_;
    std::vector<Word> words_;                 // finite case, deduped, factor-minimal
    std::unordered_set<Word> word_set_;       // finite case lookup
    std::size_t max_word_len_ = 0;            // finite case
    std::optional<Dfa> dfa_;
};

/// All legal words of length at most `horizon`, with two-sided
/// extendability tags computed by downward iteration: a legal word of
/// maximal length is bi-extendable; a shorter word is bi-extendable when
/// some one-letter left extension and some one-letter right extension are
/// legal and themselves bi-extendable.
class BoundedLanguage {
public:
    BoundedLanguage(const ForbiddenSet& forbidden, std::size_t horizon);

    std::size_t horizon() const { return horizon_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& legal(std::size_t n) const;
    bool is_legal(const Word& w) const;
    bool is_bi_extendable(const Word& w) const;
    /// Whether some bi-extendable legal word of length |v| has Parikh vector v.
    bool abelian_match(std::size_t n, const ParikhVector& v) const;
    std::size_t legal_count(std::size_t n) const { return by_length_.at(n).size(); }

private:
    std::size_t horizon_;
    Alphabet alphabet_;
    std::vector<std::vector<Word>> by_length_;              // [n] -> sorted legal words
    std::unordered_set<Word> legal_set_;
    std::unordered_set<Word> bi_extendable_;
    std::vector<std::unordered_set<std::string>> parikh_;   // [n] -> keys of bi-extendable words
};

/// Finite-scale necessary condition for membership in the language of the
/// abelian closure of the subshift: every factor of w must be abelian
/// equivalent to a bi-extendable legal word of its length. |w| must not
/// exceed the horizon.
bool abelian_legal(const Word& w, const BoundedLanguage& language);

/// Minimal forbidden words up to length max_len: illegal words whose two
/// maximal proper factors are legal. Sorted by length, then lexicographic.
std::vector<Word> minimal_forbidden(const ForbiddenSet& forbidden, std::size_t max_len);

/// Trie-shaped complete DFA accepting exactly the given words.
Dfa exact_match_dfa(const std::vector<Word>& words, const Alphabet& alphabet);

// The worked subshift fixtures.
ForbiddenSet golden_mean();        // {11} over {0,1}
ForbiddenSet three_letter_walk();  // {aa,ac,ba,bb,cb} over {a,b,c}
/// Order-6 binary SFT whose allowed 6-windows are those of the two cycles
/// (0011)^inf and (000111)^inf plus the one-way crossover between them
/// (two cycles with equal letter frequencies joined by a one-way path;
/// the explicit forbidden list is reconstructed from that shape).
ForbiddenSet binary_order6();
ForbiddenSet four_letter_sofic();  // {a,b,d}c + d{a,b,c} + c({a,b}* \ (ab)*)d as a DFA

/// Finite-scale engine behind "the closure of this SFT is not an SFT": for
/// the fragment c^K ab c^n ba c^K (K = n+2), every factor of length <= n is
/// abelian-legal, yet the factor b c^n b is not.
struct SftReport {
    std::size_t n = 0;
    std::size_t horizon = 0;
    bool short_factors_legal = false;
    bool long_factor_rejected = false;
    Word rejected_factor;
    bool pass() const { return short_factors_legal && long_factor_rejected; }
};

SftReport sft_counterexample_report(std::size_t n);

/// Binary variant at fixed shape: one crossover-style defect is fine, two
/// defects separated by (0011)-cycling are not.
struct BinaryOrder6Report {
    std::size_t horizon = 0;
    bool good_fragment_legal = false;
    bool bad_fragment_rejected = false;
    Word rejected_factor;
    bool pass() const { return good_fragment_legal && bad_fragment_rejected; }
};

BinaryOrder6Report binary_order6_report();

/// Brute force over w in {a,b}^<=max_w: the cwd that are minimal forbidden
/// for the closure of the four-letter sofic fixture. Equals
/// {cwd : |w|_a != |w|_b}.
std::vector<Word> nonsofic_witness(std::size_t max_w);

}  // namespace abelian
