#pragma once

#include <map>
#include <optional>

#include "abelian/quadext.hpp"
#include "abelian/words.hpp"

namespace abelian {

/// Substitution rule set with a designated start letter. For fixed points
/// the image of the start letter must begin with that letter and have
/// length at least two (prolongable).
struct MorphismSpec {
    std::map<Letter, Word> images;
    Letter start = '0';
};

/// The unique fixed point of a prolongable morphism, starting with `start`.
InfiniteWord morphic_fixed_point(const MorphismSpec& spec);

InfiniteWord thue_morse();
InfiniteWord fibonacci_word();
InfiniteWord tribonacci_word();

InfiniteWord periodic_word(const Word& block);
InfiniteWord preperiodic_word(const Word& head, const Word& block);
/// All words over {0,..,k-1} concatenated in length-then-lexicographic order.
InfiniteWord champernowne(int k);

/// x with `head` prepended.
InfiniteWord prepend(const Word& head, const InfiniteWord& x);
/// The shifted word x[k..].
InfiniteWord shifted(const InfiniteWord& x, std::size_t k);
/// Letterwise substitution applied to x (not a fixed point). Images may be
/// empty as long as the output keeps growing.
InfiniteWord substituted(const InfiniteWord& x, const std::map<Letter, Word>& images);

enum class EndpointConvention { Underline, Bar };

/// Binary coding of the rotation by alpha started at rho: letter n is 1
/// exactly when the orbit point lies in I(1-alpha, 1). The convention
/// selects which endpoints the coding intervals contain.
struct BinaryRotationSpec {
    QuadExt alpha;
    TorusPoint rho;
    EndpointConvention convention = EndpointConvention::Underline;
};

InfiniteWord binary_rotation_word(const BinaryRotationSpec& spec);

/// Ternary coding of the rotation by alpha (alpha < 1/2) with offset zeta
/// in [alpha, 1-alpha]: J2 = I(zeta-alpha, zeta), J1 = I(1-alpha, 1), and
/// J0 the rest. `one_in_j1` / `zeta_in_j2` pick the closed endpoints; the
/// two combinations that would make J1 and J2 overlap are rejected.
struct TernaryRotationSpec {
    QuadExt alpha;
    TorusPoint zeta;
    TorusPoint rho;
    bool one_in_j1 = false;
    bool zeta_in_j2 = false;
};

struct TernaryIntervals {
    CircleInterval j1, j2;
};

/// Validates the spec and materializes J1, J2 (J0 is the complement).
TernaryIntervals ternary_intervals(const TernaryRotationSpec& spec);
InfiniteWord ternary_rotation_word(const TernaryRotationSpec& spec);

/// S(backbone, z0, z1): the nth 0 of the binary backbone is replaced by the
/// nth letter of z0, the nth 1 by the nth letter of z1.
struct InterleaveSpec {
    InfiniteWord backbone, z0, z1;
};

InfiniteWord interleave(const InterleaveSpec& spec);

/// True when, within the window, consecutive occurrences of each letter
/// are equally spaced.
bool is_constant_gap(const InfiniteWord& z, std::size_t window);

/// Shortest palindrome having u as a prefix.
Word palindromic_closure(const Word& u);
/// Iterated palindromic closure psi over a finite directive word.
Word iterated_palindromic_closure(const Word& directive);

/// Characteristic Arnoux-Rauzy word psi(directive). Every letter of the
/// directive's alphabet must occur in the consumed directive window;
/// otherwise prefix production fails with an instructive error.
InfiniteWord arnoux_rauzy(const InfiniteWord& directive);
Word arnoux_rauzy_prefix(const InfiniteWord& directive, std::size_t n);

/// Reversal of prefix(window): a finite approximant of the reversal word.
Word reversal_prefix(const InfiniteWord& x, std::size_t window);

/// Minimal-complexity construction over E, F, G: the image of a Sturmian
/// backbone under 0 -> GE, 1 -> GF (letter sets written in order).
struct FmSpec {
    Word g, e, f;
    InfiniteWord backbone;
};

/// The two substitution blocks GE and GF.
std::pair<Word, Word> fm_blocks(const FmSpec& spec);
InfiniteWord fm_min_complexity_word(const FmSpec& spec);

}  // namespace abelian
