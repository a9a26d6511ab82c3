#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelian/analysis.hpp"
#include "abelian/generators.hpp"
#include "abelian/words.hpp"

namespace abelian {

/// Finite-scale membership verdict: "member up to L on window N", never an
/// unconditional claim. A rejection carries the shortest offending factor.
struct MembershipVerdict {
    bool member = false;
    std::optional<Word> witness;  // factor of y with no abelian match in x
    std::size_t max_len = 0;      // L
    std::size_t window_y = 0;
    std::size_t window_x = 0;

    std::size_t witness_length() const { return witness ? witness->size() : 0; }
};

/// Every factor of y_window of length <= L must have its Parikh vector in
/// x's index. The search runs shortest length first, leftmost first, so
/// the returned witness is stable.
MembershipVerdict abelian_member(const Word& y_window, const AbelianIndex& x_index, std::size_t L);
MembershipVerdict abelian_member(const InfiniteWord& y, const InfiniteWord& x, std::size_t L,
                                 std::size_t window);

/// Binary-only criterion: member iff y's per-length corridors of letter 1
/// are contained in x's. Agrees with abelian_member on binary words.
MembershipVerdict corridor_member(const Word& y_window, const Word& x_window, std::size_t L);
MembershipVerdict corridor_member(const InfiniteWord& y, const InfiniteWord& x, std::size_t L,
                                  std::size_t window);

/// Heavy/light tags of a factor of a ternary rotation word, relative to the
/// window corridors: heavy means the count attains the corridor maximum.
struct HeavyLightClass {
    bool heavy1 = false;
    bool heavy2 = false;
    bool light1() const { return !heavy1; }
    bool light2() const { return !heavy2; }
};

HeavyLightClass heavy_light_classify(const Word& v, const InfiniteWord& x, std::size_t window);

enum class HlKind { OneHeavyTwoLight, TwoHeavyOneLight, BothHeavy, BothLight };

const char* to_string(HlKind k);
HlKind hl_kind_from_string(const std::string& s);

/// Geometric existence decision with the branch that fired, so boundary
/// cases are auditable.
struct HlVerdict {
    bool exists = false;
    std::string branch;
};

/// Decides, by exact circle geometry, whether the ternary rotation word
/// contains a factor of length m in the requested class. Boundary cases
/// ({-m alpha} equal to ||zeta|| or 1-||zeta||) are resolved through the
/// enumerated boundary words; the intercept test scans the backward orbit
/// up to orbit_bound steps.
HlVerdict exists_hl_factor(HlKind kind, const TernaryRotationSpec& spec, std::size_t m,
                           std::size_t orbit_bound = 20000);

/// Brute-force counterpart: classifies every length-m factor of the window.
bool scan_hl_exists(HlKind kind, const InfiniteWord& x, std::size_t m, std::size_t window);

/// Whether the length-m prefix of the rotation word is heavy (count of 1s
/// attains the corridor maximum), decided by the interval test
/// rho in I(R^-m(0), 1) with the stated endpoint rule.
bool heavy_prefix_predicate(const BinaryRotationSpec& spec, std::size_t m);

/// Both membership directions between two ternary rotation words of equal
/// slope, plus the exact gap witness ||zeta_hi|| > {-m alpha} > ||zeta_lo||
/// when the offsets have different norms.
struct OffsetOrderReport {
    MembershipVerdict a_in_b;  // word(specA) against closure of word(specB)
    MembershipVerdict b_in_a;
    std::optional<std::size_t> gap_witness_m;
};

OffsetOrderReport offset_order_member(const TernaryRotationSpec& a, const TernaryRotationSpec& b,
                                      std::size_t L, std::size_t window,
                                      std::size_t gap_search_bound = 4096);

/// Complete census of the periodic words in the abelian closure of a purely
/// periodic word: all candidate periods up to the abelian-periodicity
/// length n0 are enumerated and filtered by membership at L = 2*n0.
/// Returns lexicographically-least primitive orbit representatives, sorted.
std::vector<Word> periodic_census(const InfiniteWord& z, std::size_t window);

/// A labeled candidate for a membership probe battery.
struct ClosureProbe {
    std::string label;
    InfiniteWord word;
    bool expect_member = true;
};

struct ProbeOutcome {
    std::string label;
    bool expect_member = true;
    MembershipVerdict verdict;
    bool as_expected() const { return verdict.member == expect_member; }
};

std::vector<ProbeOutcome> probe_membership(const std::vector<ClosureProbe>& probes,
                                           const InfiniteWord& x, std::size_t L,
                                           std::size_t window);

/// Samples the closure of a minimal-complexity ternary fixture (zeta =
/// alpha) at the given candidates. Requires the fixture's offset to equal
/// its slope.
std::vector<ProbeOutcome> np2_closure_probe(const TernaryRotationSpec& u,
                                            const std::vector<ClosureProbe>& candidates,
                                            std::size_t L, std::size_t window);

/// Parse of a word as partial block + full blocks + partial block over
/// {sigma0, sigma1}, in forward or fully reversed orientation.
struct BlockDecomposition {
    bool reversed = false;
    Word lead;                // suffix of a block (prefix reversed, if reversed)
    std::vector<int> blocks;  // 0/1 per full block
    Word trail;               // prefix of a block
};

std::optional<BlockDecomposition> blocks_decompose(const Word& w, const Word& sigma0,
                                                   const Word& sigma1);

/// Reversal approximant accepted, block-mutated variants rejected.
struct FourLetterProbeReport {
    std::vector<ProbeOutcome> rows;
    bool all_as_expected() const;
};

FourLetterProbeReport minimal_subshift_probe_4letter(const FmSpec& fixture, std::size_t L,
                                                     std::size_t window);

/// The two facts about Arnoux-Rauzy closures: 20c is in the abelian closure
/// of c, yet some short factor of 20c is absent from c's language.
struct ArClosureReport {
    bool directive_ok = false;       // directive has the required 0{0,1}*1{0,1}*2 prefix
    MembershipVerdict c_itself;      // c against its own closure
    MembershipVerdict twenty_c;      // 20c against the closure of c
    std::optional<Word> missing_factor;  // factor of 20c absent from L(c) window
};

ArClosureReport ar_closure_probe(const InfiniteWord& directive, std::size_t L, std::size_t window);

}  // namespace abelian
