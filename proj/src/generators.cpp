#include "abelian/generators.hpp"

#include <algorithm>
#include <set>

namespace abelian {

namespace {

Alphabet alphabet_of_images(const MorphismSpec& spec) {
    std::string letters;
    for (const auto& [from, to] : spec.images) {
        letters += from;
        letters += to;
    }
    return Alphabet(letters);
}

struct MorphicProducer : InfiniteWord::Producer {
    std::map<Letter, Word> images;
    Letter start;
    std::size_t consumed = 0;

    MorphicProducer(std::map<Letter, Word> img, Letter s) : images(std::move(img)), start(s) {}

    void extend(std::string& buf, std::size_t target) override {
        // buf is sigma applied to the first `consumed` letters of the fixed
        // point, hence itself a prefix of the fixed point.
        if (buf.empty()) {
            buf = images.at(start);
            consumed = 1;
        }
        while (buf.size() < target) {
            if (consumed >= buf.size())
                throw std::invalid_argument("morphism is not expanding on reachable letters");
            buf += images.at(buf[consumed]);
            ++consumed;
        }
    }
};

struct PeriodicProducer : InfiniteWord::Producer {
    Word head, block;
    PeriodicProducer(Word h, Word b) : head(std::move(h)), block(std::move(b)) {}
    void extend(std::string& buf, std::size_t target) override {
        if (buf.empty()) buf = head;
        while (buf.size() < target) buf += block;
    }
};

struct ChampernowneProducer : InfiniteWord::Producer {
    int base;
    std::size_t word_len = 0;
    std::vector<int> digits;

    explicit ChampernowneProducer(int k) : base(k) {}

    void extend(std::string& buf, std::size_t target) override {
        while (buf.size() < target) {
            if (!advance()) {
                ++word_len;
                digits.assign(word_len, 0);
            }
            for (int d : digits) buf += static_cast<char>('0' + d);
        }
    }

    bool advance() {
        if (digits.empty()) return false;
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < base) return true;
            digits[i] = 0;
        }
        return false;
    }
};

struct PrependProducer : InfiniteWord::Producer {
    Word head;
    InfiniteWord tail;
    PrependProducer(Word h, InfiniteWord t) : head(std::move(h)), tail(std::move(t)) {}
    void extend(std::string& buf, std::size_t target) override {
        if (buf.empty()) buf = head;
        if (target > head.size()) buf = head + tail.prefix(target - head.size());
    }
};

struct ShiftProducer : InfiniteWord::Producer {
    InfiniteWord base;
    std::size_t offset;
    ShiftProducer(InfiniteWord b, std::size_t k) : base(std::move(b)), offset(k) {}
    void extend(std::string& buf, std::size_t target) override {
        buf = base.prefix(offset + target).substr(offset);
    }
};

}  // namespace

InfiniteWord morphic_fixed_point(const MorphismSpec& spec) {
    auto it = spec.images.find(spec.start);
    if (it == spec.images.end() || it->second.size() < 2 || it->second[0] != spec.start)
        throw std::invalid_argument(
            "morphism is not prolongable: image of the start letter must begin "
            "with it and have length at least 2");
    Alphabet alpha = alphabet_of_images(spec);
    for (char c : alpha.letters())
        if (!spec.images.count(c))
            throw std::invalid_argument(std::string("no image for letter '") + c + "'");
    std::string name = "morphic(start=";
    name += spec.start;
    name += ")";
    return InfiniteWord(name, alpha, std::make_shared<MorphicProducer>(spec.images, spec.start));
}

InfiniteWord thue_morse() {
    return morphic_fixed_point({{{'0', "01"}, {'1', "10"}}, '0'});
}

InfiniteWord fibonacci_word() {
    return morphic_fixed_point({{{'0', "01"}, {'1', "0"}}, '0'});
}

InfiniteWord tribonacci_word() {
    return morphic_fixed_point({{{'0', "01"}, {'1', "02"}, {'2', "0"}}, '0'});
}

InfiniteWord periodic_word(const Word& block) {
    if (block.empty()) throw std::invalid_argument("periodic word needs a non-empty block");
    return InfiniteWord("periodic(" + block + ")", Alphabet(block),
                        std::make_shared<PeriodicProducer>("", block));
}

InfiniteWord preperiodic_word(const Word& head, const Word& block) {
    if (block.empty()) throw std::invalid_argument("preperiodic word needs a non-empty block");
    return InfiniteWord("preperiodic(" + head + "," + block + ")", Alphabet(head + block),
                        std::make_shared<PeriodicProducer>(head, block));
}

InfiniteWord champernowne(int k) {
    if (k < 2 || k > 10) throw std::invalid_argument("champernowne base must be in 2..10");
    std::string letters;
    for (int i = 0; i < k; ++i) letters += static_cast<char>('0' + i);
    return InfiniteWord("champ(" + std::to_string(k) + ")", Alphabet(letters),
                        std::make_shared<ChampernowneProducer>(k));
}

InfiniteWord prepend(const Word& head, const InfiniteWord& x) {
    return InfiniteWord(head + "." + x.name(), x.alphabet().merged(Alphabet(head)),
                        std::make_shared<PrependProducer>(head, x));
}

InfiniteWord shifted(const InfiniteWord& x, std::size_t k) {
    return InfiniteWord("shift(" + std::to_string(k) + "," + x.name() + ")", x.alphabet(),
                        std::make_shared<ShiftProducer>(x, k));
}

namespace {

struct SubstitutionProducer : InfiniteWord::Producer {
    InfiniteWord base;
    std::map<Letter, Word> images;
    std::size_t consumed = 0;

    SubstitutionProducer(InfiniteWord b, std::map<Letter, Word> img)
        : base(std::move(b)), images(std::move(img)) {}

    void extend(std::string& buf, std::size_t target) override {
        std::size_t stalled = 0;
        while (buf.size() < target) {
            const Word& image = images.at(base.letter(consumed++));
            buf += image;
            stalled = image.empty() ? stalled + 1 : 0;
            if (stalled > 4 * target + 64)
                throw std::invalid_argument("substitution erases the whole word");
        }
    }
};

}  // namespace

InfiniteWord substituted(const InfiniteWord& x, const std::map<Letter, Word>& images) {
    std::string letters;
    for (char c : x.alphabet().letters()) {
        auto it = images.find(c);
        if (it == images.end())
            throw std::invalid_argument(std::string("no image for letter '") + c + "'");
        letters += it->second;
    }
    std::string name = "subst(" + x.name() + ")";
    return InfiniteWord(name, Alphabet(letters), std::make_shared<SubstitutionProducer>(x, images));
}

namespace {

void check_slope(const QuadExt& alpha) {
    if (alpha.sign() <= 0 || alpha >= QuadExt(1))
        throw std::invalid_argument("rotation slope must satisfy 0 < alpha < 1");
}

struct BinaryRotationProducer : InfiniteWord::Producer {
    QuadExt alpha;
    CircleInterval i1;
    TorusPoint point;

    BinaryRotationProducer(const BinaryRotationSpec& spec)
        : alpha(spec.alpha), point(spec.rho) {
        TorusPoint zero{QuadExt(0)};
        TorusPoint split{QuadExt(1) - spec.alpha};
        i1 = spec.convention == EndpointConvention::Underline ? CircleInterval::underline(split, zero)
                                                              : CircleInterval::bar(split, zero);
    }

    void extend(std::string& buf, std::size_t target) override {
        while (buf.size() < target) {
            buf += i1.contains(point) ? '1' : '0';
            point = point.rotated(alpha);
        }
    }
};

struct TernaryRotationProducer : InfiniteWord::Producer {
    QuadExt alpha;
    TernaryIntervals iv;
    TorusPoint point;

    TernaryRotationProducer(const TernaryRotationSpec& spec)
        : alpha(spec.alpha), iv(ternary_intervals(spec)), point(spec.rho) {}

    void extend(std::string& buf, std::size_t target) override {
        while (buf.size() < target) {
            if (iv.j1.contains(point))
                buf += '1';
            else if (iv.j2.contains(point))
                buf += '2';
            else
                buf += '0';
            point = point.rotated(alpha);
        }
    }
};

}  // namespace

InfiniteWord binary_rotation_word(const BinaryRotationSpec& spec) {
    check_slope(spec.alpha);
    std::string name = "sturmian(alpha=" + spec.alpha.to_string() + ",rho=" + spec.rho.to_string() +
                       ",conv=" + (spec.convention == EndpointConvention::Underline ? "under" : "bar") +
                       ")";
    return InfiniteWord(name, Alphabet("01"), std::make_shared<BinaryRotationProducer>(spec));
}

TernaryIntervals ternary_intervals(const TernaryRotationSpec& spec) {
    check_slope(spec.alpha);
    QuadExt half(Rational(1, 2));
    if (spec.alpha >= half) throw std::invalid_argument("ternary coding requires alpha < 1/2");
    TorusPoint low{spec.alpha};
    TorusPoint high{QuadExt(1) - spec.alpha};
    if (spec.zeta < low || spec.zeta > high)
        throw std::invalid_argument("offset zeta must lie in [alpha, 1-alpha]");
    if (spec.zeta == low && spec.one_in_j1 && !spec.zeta_in_j2)
        throw std::invalid_argument(
            "undefined coding: with zeta = alpha, 1 in J1 and zeta not in J2 would overlap J1 and J2");
    if (spec.zeta == high && !spec.one_in_j1 && spec.zeta_in_j2)
        throw std::invalid_argument(
            "undefined coding: with zeta = 1-alpha, 1 not in J1 and zeta in J2 would overlap J1 and J2");

    TorusPoint zero{QuadExt(0)};
    TorusPoint j2_start{spec.zeta.value() - spec.alpha};
    CircleInterval j1 = spec.one_in_j1 ? CircleInterval::bar(high, zero)
                                       : CircleInterval::underline(high, zero);
    CircleInterval j2 = spec.zeta_in_j2 ? CircleInterval::bar(j2_start, spec.zeta)
                                        : CircleInterval::underline(j2_start, spec.zeta);
    return TernaryIntervals{j1, j2};
}

InfiniteWord ternary_rotation_word(const TernaryRotationSpec& spec) {
    std::string name = "ternary(alpha=" + spec.alpha.to_string() + ",zeta=" + spec.zeta.to_string() +
                       ",rho=" + spec.rho.to_string() +
                       ",one_in_j1=" + (spec.one_in_j1 ? "true" : "false") +
                       ",zeta_in_j2=" + (spec.zeta_in_j2 ? "true" : "false") + ")";
    return InfiniteWord(name, Alphabet("012"), std::make_shared<TernaryRotationProducer>(spec));
}

namespace {

struct InterleaveProducer : InfiniteWord::Producer {
    InfiniteWord backbone, z0, z1;
    std::size_t zeros = 0, ones = 0;

    InterleaveProducer(InterleaveSpec spec)
        : backbone(std::move(spec.backbone)), z0(std::move(spec.z0)), z1(std::move(spec.z1)) {}

    void extend(std::string& buf, std::size_t target) override {
        Word bb = backbone.prefix(target);
        std::size_t n0 = static_cast<std::size_t>(std::count(bb.begin(), bb.end(), '0'));
        Word w0 = z0.prefix(n0);
        Word w1 = z1.prefix(bb.size() - n0);
        for (std::size_t i = buf.size(); i < bb.size(); ++i)
            buf += bb[i] == '0' ? w0[zeros++] : w1[ones++];
    }
};

}  // namespace

InfiniteWord interleave(const InterleaveSpec& spec) {
    if (!(spec.backbone.alphabet() == Alphabet("01")))
        throw std::invalid_argument("interleave backbone must be a binary word over {0,1}");
    Alphabet alpha = spec.z0.alphabet().merged(spec.z1.alphabet());
    std::string name =
        "interleave(" + spec.backbone.name() + ";" + spec.z0.name() + ";" + spec.z1.name() + ")";
    return InfiniteWord(name, alpha, std::make_shared<InterleaveProducer>(spec));
}

bool is_constant_gap(const InfiniteWord& z, std::size_t window) {
    Word w = z.prefix(window);
    std::map<Letter, std::size_t> last;
    std::map<Letter, std::size_t> gap;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter c = w[i];
        auto it = last.find(c);
        if (it != last.end()) {
            std::size_t g = i - it->second;
            auto ins = gap.emplace(c, g);
            if (!ins.second && ins.first->second != g) return false;
        }
        last[c] = i;
    }
    return true;
}

Word palindromic_closure(const Word& u) {
    // Find the longest palindromic suffix, then mirror the remainder.
    auto is_palindrome = [](const Word& w, std::size_t from) {
        std::size_t i = from, j = w.size();
        while (i + 1 < j) {
            if (w[i] != w[j - 1]) return false;
            ++i;
            --j;
        }
        return true;
    };
    std::size_t from = 0;
    while (!is_palindrome(u, from)) ++from;
    Word out = u;
    for (std::size_t i = from; i-- > 0;) out += u[i];
    return out;
}

Word iterated_palindromic_closure(const Word& directive) {
    Word w;
    for (Letter c : directive) w = palindromic_closure(w + c);
    return w;
}

namespace {

struct ArnouxRauzyProducer : InfiniteWord::Producer {
    InfiniteWord directive;
    Word psi;
    std::set<Letter> seen;  // directive letters consumed so far
    std::size_t consumed = 0;

    explicit ArnouxRauzyProducer(InfiniteWord d) : directive(std::move(d)) {}

    void extend(std::string& buf, std::size_t target) override {
        std::size_t needed = directive.alphabet().size();
        // Grow psi until it covers the target and the consumed directive
        // window has shown every alphabet letter. A letter still missing
        // after a generous window means the directive is degenerate.
        std::size_t guard = std::max<std::size_t>(4 * target + 256, 1024);
        while (psi.size() < target || seen.size() < needed) {
            if (consumed >= guard)
                throw std::invalid_argument(
                    "directive letter(s) missing from the first " + std::to_string(consumed) +
                    " directive symbols; an Arnoux-Rauzy directive must contain every alphabet "
                    "letter infinitely often (use a directive window where all letters recur)");
            Letter c = directive.letter(consumed++);
            seen.insert(c);
            psi = palindromic_closure(psi + c);
        }
        buf = psi.substr(0, std::max(buf.size(), target));
    }
};

}  // namespace

InfiniteWord arnoux_rauzy(const InfiniteWord& directive) {
    return InfiniteWord("ar(directive=" + directive.name() + ")", directive.alphabet(),
                        std::make_shared<ArnouxRauzyProducer>(directive));
}

Word arnoux_rauzy_prefix(const InfiniteWord& directive, std::size_t n) {
    return arnoux_rauzy(directive).prefix(n);
}

Word reversal_prefix(const InfiniteWord& x, std::size_t window) {
    Word w = x.prefix(window);
    std::reverse(w.begin(), w.end());
    return w;
}

std::pair<Word, Word> fm_blocks(const FmSpec& spec) {
    if (spec.g.empty()) throw std::invalid_argument("letter set G must be non-empty");
    if (spec.e.empty() && spec.f.empty()) throw std::invalid_argument("E and F cannot both be empty");
    std::set<Letter> all;
    for (const Word* part : {&spec.g, &spec.e, &spec.f})
        for (Letter c : *part)
            if (!all.insert(c).second)
                throw std::invalid_argument("letter sets G, E, F must be pairwise disjoint");
    return {spec.g + spec.e, spec.g + spec.f};
}

InfiniteWord fm_min_complexity_word(const FmSpec& spec) {
    auto [block0, block1] = fm_blocks(spec);
    if (!(spec.backbone.alphabet() == Alphabet("01")))
        throw std::invalid_argument("fm backbone must be a binary word over {0,1}");
    // Not a fixed point: apply the substitution to the backbone.
    struct Producer : InfiniteWord::Producer {
        InfiniteWord backbone;
        Word b0, b1;
        std::size_t consumed = 0;
        Producer(InfiniteWord s, Word w0, Word w1)
            : backbone(std::move(s)), b0(std::move(w0)), b1(std::move(w1)) {}
        void extend(std::string& buf, std::size_t target) override {
            while (buf.size() < target) buf += backbone.letter(consumed++) == '0' ? b0 : b1;
        }
    };
    Alphabet alpha(spec.g + spec.e + spec.f);
    std::string name = "fm(G=" + spec.g + ";E=" + spec.e + ";F=" + spec.f + ";s=" +
                       spec.backbone.name() + ")";
    return InfiniteWord(name, alpha, std::make_shared<Producer>(spec.backbone, block0, block1));
}

}  // namespace abelian
