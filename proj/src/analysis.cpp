#include "abelian/analysis.hpp"

#include <algorithm>
#include <map>

namespace abelian {

AbelianIndex::AbelianIndex(const Word& window_word, Alphabet alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), window_(window_word.size()) {
    alphabet_.validate(window_word);
    if (max_len > window_word.size())
        throw std::invalid_argument("factor length exceeds window");
    const std::size_t k = alphabet_.size();
    per_length_.resize(max_len);
    for (std::size_t n = 1; n <= max_len; ++n) {
        LengthData& data = per_length_[n - 1];
        data.corridors.assign(k, Corridor{UINT32_MAX, 0});
        ParikhVector counts(k);
        for (std::size_t i = 0; i < n; ++i) ++counts[alphabet_.index(window_word[i])];
        for (std::size_t start = 0;; ++start) {
            data.keys.insert(counts.key());
            for (std::size_t j = 0; j < k; ++j) {
                Corridor& c = data.corridors[j];
                c.min = std::min(c.min, counts[j]);
                c.max = std::max(c.max, counts[j]);
            }
            if (start + n >= window_word.size()) break;
            --counts[alphabet_.index(window_word[start])];
            ++counts[alphabet_.index(window_word[start + n])];
        }
    }
}

void AbelianIndex::check_len(std::size_t n) const {
    if (n == 0 || n > per_length_.size())
        throw std::invalid_argument("factor length out of indexed range");
}

bool AbelianIndex::contains(std::size_t n, const ParikhVector& v) const {
    check_len(n);
    return per_length_[n - 1].keys.count(v.key()) > 0;
}

std::vector<ParikhVector> AbelianIndex::parikhs(std::size_t n) const {
    check_len(n);
    std::vector<ParikhVector> out;
    out.reserve(per_length_[n - 1].keys.size());
    for (const auto& key : per_length_[n - 1].keys) out.push_back(ParikhVector::from_key(key));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t AbelianIndex::abelian_complexity(std::size_t n) const {
    check_len(n);
    return per_length_[n - 1].keys.size();
}

Corridor AbelianIndex::corridor(std::size_t n, std::size_t letter_idx) const {
    check_len(n);
    return per_length_[n - 1].corridors.at(letter_idx);
}

bool operator==(const AbelianIndex& a, const AbelianIndex& b) {
    if (!(a.alphabet_ == b.alphabet_) || a.per_length_.size() != b.per_length_.size()) return false;
    for (std::size_t i = 0; i < a.per_length_.size(); ++i)
        if (a.per_length_[i].keys != b.per_length_[i].keys) return false;
    return true;
}

StabilizedIndex stabilized_index(const InfiniteWord& x, std::size_t max_len,
                                 std::size_t initial_window, std::size_t max_window) {
    std::size_t n = std::max(initial_window, max_len);
    AbelianIndex current(x, max_len, n);
    int stable_steps = 0;
    while (stable_steps < 2 && 2 * n <= max_window) {
        AbelianIndex next(x, max_len, 2 * n);
        stable_steps = (next == current) ? stable_steps + 1 : 0;
        current = std::move(next);
        n *= 2;
    }
    return StabilizedIndex{std::move(current), n, stable_steps >= 2};
}

std::vector<ParikhVector> factor_parikhs(const InfiniteWord& x, std::size_t n, std::size_t window) {
    return AbelianIndex(x, n, window).parikhs(n);
}

std::size_t abelian_complexity(const InfiniteWord& x, std::size_t n, std::size_t window) {
    return AbelianIndex(x, n, window).abelian_complexity(n);
}

Corridor corridor(const InfiniteWord& x, Letter a, std::size_t n, std::size_t window) {
    if (!x.alphabet().contains(a)) return Corridor{0, 0};  // letter never occurs
    AbelianIndex idx(x, n, window);
    return idx.corridor(n, x.alphabet().index(a));
}

std::pair<Rational, Rational> freq_bounds(const InfiniteWord& x, Letter a, std::size_t n,
                                          std::size_t window) {
    Corridor c = corridor(x, a, n, window);
    return {Rational(c.min, static_cast<long>(n)), Rational(c.max, static_cast<long>(n))};
}

namespace {

/// Suffix automaton over the window word; counts distinct factors per length.
struct SuffixAutomaton {
    struct Node {
        std::map<char, int> next;
        int link = -1;
        int len = 0;
    };
    std::vector<Node> nodes;
    int last = 0;

    explicit SuffixAutomaton(const Word& s) {
        nodes.reserve(2 * s.size() + 2);
        nodes.emplace_back();
        for (char c : s) append(c);
    }

    void append(char c) {
        int cur = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[cur].len = nodes[last].len + 1;
        int p = last;
        while (p >= 0 && !nodes[p].next.count(c)) {
            nodes[p].next[c] = cur;
            p = nodes[p].link;
        }
        if (p == -1) {
            nodes[cur].link = 0;
        } else {
            int q = nodes[p].next[c];
            if (nodes[p].len + 1 == nodes[q].len) {
                nodes[cur].link = q;
            } else {
                int clone = static_cast<int>(nodes.size());
                nodes.push_back(nodes[q]);
                nodes[clone].len = nodes[p].len + 1;
                while (p >= 0 && nodes[p].next[c] == q) {
                    nodes[p].next[c] = clone;
                    p = nodes[p].link;
                }
                nodes[q].link = clone;
                nodes[cur].link = clone;
            }
        }
        last = cur;
    }

    /// counts[n] = number of distinct factors of length n, for n <= max_len.
    std::vector<std::size_t> length_profile(std::size_t max_len) const {
        std::vector<long long> diff(max_len + 2, 0);
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            std::size_t lo = static_cast<std::size_t>(nodes[nodes[i].link].len) + 1;
            std::size_t hi = static_cast<std::size_t>(nodes[i].len);
            if (lo > max_len) continue;
            hi = std::min(hi, max_len);
            ++diff[lo];
            --diff[hi + 1];
        }
        std::vector<std::size_t> counts(max_len + 1, 0);
        long long running = 0;
        for (std::size_t n = 1; n <= max_len; ++n) {
            running += diff[n];
            counts[n] = static_cast<std::size_t>(running);
        }
        return counts;
    }
};

}  // namespace

std::vector<std::size_t> factor_complexity_profile(const Word& window_word, std::size_t max_len) {
    if (max_len > window_word.size())
        throw std::invalid_argument("factor length exceeds window");
    return SuffixAutomaton(window_word).length_profile(max_len);
}

std::size_t factor_complexity(const InfiniteWord& x, std::size_t n, std::size_t window) {
    return factor_complexity_profile(x.prefix(window), n)[n];
}

std::unordered_set<Word> factor_set(const Word& window_word, std::size_t n) {
    std::unordered_set<Word> out;
    if (n == 0 || n > window_word.size()) return out;
    for (std::size_t i = 0; i + n <= window_word.size(); ++i) out.insert(window_word.substr(i, n));
    return out;
}

std::unordered_set<Word> factor_set(const InfiniteWord& x, std::size_t n, std::size_t window) {
    return factor_set(x.prefix(window), n);
}

BalanceReport is_balanced(const InfiniteWord& x, std::size_t max_len, std::size_t window) {
    Word w = x.prefix(window);
    AbelianIndex idx(w, x.alphabet(), max_len);
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (std::size_t j = 0; j < x.alphabet().size(); ++j) {
            Corridor c = idx.corridor(n, j);
            if (c.width() <= 1) continue;
            BalanceWitness wit;
            wit.length = n;
            wit.letter = x.alphabet().letter(j);
            for (std::size_t i = 0; i + n <= w.size(); ++i) {
                Word f = w.substr(i, n);
                auto count = static_cast<std::uint32_t>(std::count(f.begin(), f.end(), wit.letter));
                if (count == c.min && wit.low.empty()) wit.low = f;
                if (count == c.max && wit.high.empty()) wit.high = f;
            }
            return BalanceReport{false, wit};
        }
    }
    return BalanceReport{true, std::nullopt};
}

std::optional<std::size_t> abelian_periodicity_length(const Word& w, const Alphabet& a,
                                                      std::size_t cap) {
    const std::size_t k = a.size();
    for (std::size_t n = 1; n <= std::min(cap, w.size()); ++n) {
        ParikhVector counts(k);
        for (std::size_t i = 0; i < n; ++i) ++counts[a.index(w[i])];
        ParikhVector first = counts;
        bool uniform = true;
        for (std::size_t start = 0; start + n < w.size(); ++start) {
            --counts[a.index(w[start])];
            ++counts[a.index(w[start + n])];
            if (!(counts == first)) {
                uniform = false;
                break;
            }
        }
        if (uniform) return n;
    }
    return std::nullopt;
}

namespace {

bool verifies_period(const Word& w, std::size_t p) {
    for (std::size_t i = p; i < w.size(); ++i)
        if (w[i] != w[i - p]) return false;
    return true;
}

std::size_t kmp_least_period(const Word& w) {
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (b > 0 && w[i] != w[b]) b = border[b];
        if (w[i] == w[b]) ++b;
        border[i + 1] = b;
    }
    return w.size() - border[w.size()];
}

}  // namespace

std::optional<std::size_t> least_period(const Word& w) {
    if (w.empty()) return std::nullopt;
    Alphabet a(w);
    auto n0 = abelian_periodicity_length(w, a, w.size() / 2);
    if (!n0) return std::nullopt;  // a p <= |w|/2 period would make all length-p windows abelian equal
    for (std::size_t q = 1; q <= *n0; ++q)
        if (*n0 % q == 0 && verifies_period(w, q)) return q;
    std::size_t p = kmp_least_period(w);
    if (p <= w.size() / 2) return p;
    return std::nullopt;
}

std::optional<std::size_t> is_periodic_window(const InfiniteWord& x, std::size_t window) {
    auto p = least_period(x.prefix(window));
    if (!p) return std::nullopt;
    if (!verifies_period(x.prefix(2 * window), *p)) return std::nullopt;
    return p;
}

}  // namespace abelian
