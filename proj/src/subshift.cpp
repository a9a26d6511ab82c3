#include "abelian/subshift.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "abelian/analysis.hpp"

namespace abelian {

std::size_t Dfa::step(std::size_t state, Letter c) const {
    auto it = transitions.at(state).find(c);
    if (it == transitions.at(state).end())
        throw std::invalid_argument(std::string("automaton has no transition on '") + c + "'");
    return it->second;
}

bool Dfa::accepts(const Word& w) const {
    std::size_t s = start;
    for (Letter c : w) s = step(s, c);
    return accepting.at(s);
}

void Dfa::validate() const {
    if (transitions.size() != accepting.size())
        throw std::invalid_argument("automaton state tables disagree");
    if (start >= transitions.size()) throw std::invalid_argument("automaton start state out of range");
    for (const auto& row : transitions) {
        if (row.size() != alphabet.size())
            throw std::invalid_argument("automaton is not complete over its alphabet");
        for (const auto& [c, t] : row) {
            if (!alphabet.contains(c)) throw std::invalid_argument("transition letter outside alphabet");
            if (t >= transitions.size()) throw std::invalid_argument("transition target out of range");
        }
    }
}

ForbiddenSet ForbiddenSet::finite(std::vector<Word> words, Alphabet alphabet) {
    ForbiddenSet f;
    f.alphabet_ = std::move(alphabet);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // Factor-minimality: drop any word containing another listed word.
    std::vector<Word> kept;
    for (const Word& w : words) {
        f.alphabet_.validate(w);
        if (w.empty()) throw std::invalid_argument("the empty word cannot be forbidden");
        bool redundant = false;
        for (const Word& v : words)
            if (v != w && v.size() < w.size() && w.find(v) != Word::npos) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(w);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Word& a, const Word& b) { return std::pair(a.size(), a) < std::pair(b.size(), b); });
    for (const Word& w : kept) f.max_word_len_ = std::max(f.max_word_len_, w.size());
    f.word_set_.insert(kept.begin(), kept.end());
    f.words_ = std::move(kept);
    return f;
}

ForbiddenSet ForbiddenSet::automaton(Dfa dfa) {
    dfa.validate();
    ForbiddenSet f;
    f.alphabet_ = dfa.alphabet;
    f.dfa_ = std::move(dfa);
    return f;
}

ForbiddenSet ForbiddenSet::parse(std::istream& in, const std::string& origin) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        line.erase(0, i);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument(origin + ": empty forbidden-set description");

    if (lines[0].rfind("states", 0) != 0) {
        std::string letters;
        for (const auto& w : lines) letters += w;
        return finite(std::vector<Word>(lines.begin(), lines.end()), Alphabet(letters));
    }

    Dfa dfa;
    std::size_t n_states = 0;
    std::string letters;
    std::vector<std::tuple<std::size_t, Letter, std::size_t>> trans;
    std::vector<std::size_t> accept;
    std::optional<std::size_t> start;
    for (const auto& l : lines) {
        std::istringstream ss(l);
        std::string key;
        ss >> key;
        auto malformed = [&] { throw std::invalid_argument(origin + ": malformed line '" + l + "'"); };
        if (key == "states") {
            if (!(ss >> n_states)) malformed();
        } else if (key == "start") {
            std::size_t s;
            if (!(ss >> s)) malformed();
            start = s;
        } else if (key == "accept") {
            std::size_t s;
            while (ss >> s) accept.push_back(s);
        } else if (key == "trans") {
            std::size_t s, t;
            std::string a;
            if (!(ss >> s >> a >> t)) malformed();
            if (a.size() != 1) throw std::invalid_argument(origin + ": transition letter must be one character");
            trans.emplace_back(s, a[0], t);
            letters += a[0];
        } else {
            throw std::invalid_argument(origin + ": unknown directive '" + key + "'");
        }
    }
    if (n_states == 0 || !start) throw std::invalid_argument(origin + ": automaton needs states and start");
    dfa.alphabet = Alphabet(letters);
    dfa.start = *start;
    dfa.transitions.resize(n_states);
    dfa.accepting.assign(n_states, false);
    for (auto s : accept) dfa.accepting.at(s) = true;
    for (auto& [s, a, t] : trans) {
        if (dfa.transitions.at(s).count(a))
            throw std::invalid_argument(origin + ": duplicate transition");
        dfa.transitions.at(s)[a] = t;
    }
    return automaton(std::move(dfa));
}

bool ForbiddenSet::matches(const Word& w) const {
    if (dfa_) return dfa_->accepts(w);
    return word_set_.count(w) > 0;
}

bool ForbiddenSet::legal(const Word& w) const {
    if (dfa_) {
        // One automaton run per start position; stop at the first hit.
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t s = dfa_->start;
            for (std::size_t j = i; j < w.size(); ++j) {
                s = dfa_->step(s, w[j]);
                if (dfa_->accepting[s]) return false;
            }
        }
        return true;
    }
    for (std::size_t n = 1; n <= std::min(max_word_len_, w.size()); ++n)
        for (std::size_t i = 0; i + n <= w.size(); ++i)
            if (word_set_.count(w.substr(i, n))) return false;
    return true;
}

bool ForbiddenSet::legal_extension(const Word& u, Letter c) const {
    if (dfa_) return legal(u + c);
    Word w = u + c;
    for (std::size_t n = 1; n <= std::min(max_word_len_, w.size()); ++n)
        if (word_set_.count(w.substr(w.size() - n))) return false;
    return true;
}

BoundedLanguage::BoundedLanguage(const ForbiddenSet& forbidden, std::size_t horizon)
    : horizon_(horizon), alphabet_(forbidden.alphabet()) {
    if (horizon == 0) throw std::invalid_argument("horizon must be positive");
    by_length_.resize(horizon + 1);
    by_length_[0].push_back(Word());
    legal_set_.insert(Word());
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (const Word& u : by_length_[n - 1]) {
            for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                Letter c = alphabet_.letter(i);
                if (!forbidden.legal_extension(u, c)) continue;
                Word w = u + c;
                by_length_[n].push_back(w);
                legal_set_.insert(std::move(w));
            }
        }
    }

    // Bi-extendability, from the horizon downward.
    parikh_.resize(horizon + 1);
    for (const Word& w : by_length_[horizon]) {
        bi_extendable_.insert(w);
        parikh_[horizon].insert(ParikhVector::of(w, alphabet_).key());
    }
    for (std::size_t n = horizon; n-- > 1;) {
        for (const Word& w : by_length_[n]) {
            bool left = false, right = false;
            for (std::size_t i = 0; i < alphabet_.size() && !(left && right); ++i) {
                Letter c = alphabet_.letter(i);
                if (!left && bi_extendable_.count(c + w)) left = true;
                if (!right && bi_extendable_.count(w + c)) right = true;
            }
            if (left && right) {
                bi_extendable_.insert(w);
                parikh_[n].insert(ParikhVector::of(w, alphabet_).key());
            }
        }
    }
}

const std::vector<Word>& BoundedLanguage::legal(std::size_t n) const {
    if (n > horizon_) throw std::invalid_argument("length exceeds the language horizon");
    return by_length_[n];
}

bool BoundedLanguage::is_legal(const Word& w) const {
    if (w.size() > horizon_) throw std::invalid_argument("length exceeds the language horizon");
    return legal_set_.count(w) > 0;
}

bool BoundedLanguage::is_bi_extendable(const Word& w) const {
    if (w.size() > horizon_) throw std::invalid_argument("length exceeds the language horizon");
    return bi_extendable_.count(w) > 0;
}

bool BoundedLanguage::abelian_match(std::size_t n, const ParikhVector& v) const {
    if (n > horizon_) throw std::invalid_argument("length exceeds the language horizon");
    return parikh_[n].count(v.key()) > 0;
}

bool abelian_legal(const Word& w, const BoundedLanguage& language) {
    if (w.size() > language.horizon())
        throw std::invalid_argument("word longer than the language horizon");
    const Alphabet& a = language.alphabet();
    a.validate(w);
    for (std::size_t n = 1; n <= w.size(); ++n) {
        ParikhVector counts(a.size());
        for (std::size_t i = 0; i < n; ++i) ++counts[a.index(w[i])];
        for (std::size_t start = 0;; ++start) {
            if (!language.abelian_match(n, counts)) return false;
            if (start + n >= w.size()) break;
            --counts[a.index(w[start])];
            ++counts[a.index(w[start + n])];
        }
    }
    return true;
}

std::vector<Word> minimal_forbidden(const ForbiddenSet& forbidden, std::size_t max_len) {
    // The classic scheme runs over the subshift language, not mere
    // F-avoidance: a word counts as present when it is legal and
    // bi-extendable at a horizon slightly past max_len. This matters for
    // forbidden sets that are not factor-closed-tight (the order-6 fixture,
    // where 0000 avoids every listed word yet extends to no legal window).
    std::size_t slack = 6;
    if (forbidden.is_finite())
        for (const Word& w : forbidden.words()) slack = std::max(slack, w.size());
    BoundedLanguage lang(forbidden, std::max<std::size_t>(max_len, 1) + slack);
    auto in_language = [&](const Word& w) { return lang.is_legal(w) && lang.is_bi_extendable(w); };
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (const Word& u : lang.legal(n - 1)) {
            if (n > 1 && !in_language(u)) continue;  // right trim must be in the language
            for (std::size_t i = 0; i < forbidden.alphabet().size(); ++i) {
                Letter c = forbidden.alphabet().letter(i);
                Word w = u + c;
                if (lang.is_legal(w) && in_language(w)) continue;
                Word left = w.substr(1);
                if (!(left.empty() || (lang.is_legal(left) && in_language(left)))) continue;
                out.push_back(std::move(w));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return std::pair(a.size(), a) < std::pair(b.size(), b); });
    return out;
}

Dfa exact_match_dfa(const std::vector<Word>& words, const Alphabet& alphabet) {
    Dfa dfa;
    dfa.alphabet = alphabet;
    dfa.start = 0;
    dfa.transitions.emplace_back();  // root
    dfa.accepting.push_back(false);
    const std::size_t dead = 1;
    dfa.transitions.emplace_back();
    dfa.accepting.push_back(false);
    for (const Word& w : words) {
        std::size_t s = 0;
        for (Letter c : w) {
            auto it = dfa.transitions[s].find(c);
            if (it == dfa.transitions[s].end() || it->second == dead) {
                std::size_t t = dfa.transitions.size();
                dfa.transitions.emplace_back();
                dfa.accepting.push_back(false);
                dfa.transitions[s][c] = t;
                s = t;
            } else {
                s = it->second;
            }
        }
        dfa.accepting[s] = true;
    }
    for (auto& row : dfa.transitions)
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            row.emplace(alphabet.letter(i), dead);
    dfa.validate();
    return dfa;
}

ForbiddenSet golden_mean() {
    return ForbiddenSet::finite({"11"}, Alphabet("01"));
}

ForbiddenSet three_letter_walk() {
    return ForbiddenSet::finite({"aa", "ac", "ba", "bb", "cb"}, Alphabet("abc"));
}

ForbiddenSet binary_order6() {
    // Allowed 6-windows: those of (0011)^inf and (000111)^inf plus the
    // single crossover window 011000; everything else of length 6 is
    // forbidden.
    std::vector<Word> allowed = {"001100", "011001", "110011", "100110", "000111", "001110",
                                 "011100", "111000", "110001", "100011", "011000"};
    std::vector<Word> forbidden;
    for (int bits = 0; bits < 64; ++bits) {
        Word w;
        for (int i = 5; i >= 0; --i) w += ((bits >> i) & 1) ? '1' : '0';
        if (std::find(allowed.begin(), allowed.end(), w) == allowed.end()) forbidden.push_back(w);
    }
    return ForbiddenSet::finite(std::move(forbidden), Alphabet("01"));
}

ForbiddenSet four_letter_sofic() {
    // States: 0 start, 1 after [ab], 2 after d, 3 c then w in (ab)*,
    // 4 c then w in (ab)*a, 5 c then w outside (ab)* for good, 6 accept,
    // 7 dead.
    Dfa dfa;
    dfa.alphabet = Alphabet("abcd");
    dfa.start = 0;
    dfa.transitions = {
        {{'a', 1}, {'b', 1}, {'c', 3}, {'d', 2}},
        {{'a', 7}, {'b', 7}, {'c', 6}, {'d', 7}},
        {{'a', 6}, {'b', 6}, {'c', 6}, {'d', 7}},
        {{'a', 4}, {'b', 5}, {'c', 7}, {'d', 7}},
        {{'a', 5}, {'b', 3}, {'c', 7}, {'d', 6}},
        {{'a', 5}, {'b', 5}, {'c', 7}, {'d', 6}},
        {{'a', 7}, {'b', 7}, {'c', 7}, {'d', 7}},
        {{'a', 7}, {'b', 7}, {'c', 7}, {'d', 7}},
    };
    dfa.accepting = {false, false, false, false, false, false, true, false};
    return ForbiddenSet::automaton(std::move(dfa));
}

SftReport sft_counterexample_report(std::size_t n) {
    if (n < 1) throw std::invalid_argument("parameter must be at least 1");
    SftReport rep;
    rep.n = n;
    rep.horizon = n + 2;
    BoundedLanguage lang(three_letter_walk(), rep.horizon);

    const std::size_t K = n + 2;
    Word fragment = Word(K, 'c') + "ab" + Word(n, 'c') + "ba" + Word(K, 'c');

    rep.short_factors_legal = true;
    for (std::size_t len = 1; len <= n && rep.short_factors_legal; ++len)
        for (std::size_t i = 0; i + len <= fragment.size(); ++i)
            if (!abelian_legal(fragment.substr(i, len), lang)) {
                rep.short_factors_legal = false;
                break;
            }

    Word offender = "b" + Word(n, 'c') + "b";
    rep.long_factor_rejected = !abelian_legal(offender, lang);
    if (rep.long_factor_rejected) rep.rejected_factor = offender;
    return rep;
}

BinaryOrder6Report binary_order6_report() {
    BinaryOrder6Report rep;
    rep.horizon = 16;
    BoundedLanguage lang(binary_order6(), rep.horizon);

    auto rep4 = [](std::size_t k) {
        Word w;
        for (std::size_t i = 0; i < k; ++i) w += "0011";
        return w;
    };
    Word good = rep4(3) + "00011" + rep4(3);
    Word bad = rep4(2) + "00011" + rep4(1) + "00011" + rep4(2);

    rep.good_fragment_legal = true;
    for (std::size_t len = 1; len <= rep.horizon && rep.good_fragment_legal; ++len)
        for (std::size_t i = 0; i + len <= good.size(); ++i)
            if (!abelian_legal(good.substr(i, len), lang)) {
                rep.good_fragment_legal = false;
                break;
            }

    for (std::size_t len = 1; len <= rep.horizon && rep.rejected_factor.empty(); ++len)
        for (std::size_t i = 0; i + len <= bad.size(); ++i)
            if (!abelian_legal(bad.substr(i, len), lang)) {
                rep.rejected_factor = bad.substr(i, len);
                break;
            }
    rep.bad_fragment_rejected = !rep.rejected_factor.empty();
    return rep;
}

std::vector<Word> nonsofic_witness(std::size_t max_w) {
    BoundedLanguage lang(four_letter_sofic(), max_w + 2);
    std::vector<Word> out;
    std::vector<Word> level = {""};
    for (std::size_t n = 0; n <= max_w; ++n) {
        for (const Word& w : level) {
            Word cwd = "c" + w + "d";
            if (!abelian_legal(cwd, lang) && abelian_legal(cwd.substr(1), lang) &&
                abelian_legal(cwd.substr(0, cwd.size() - 1), lang))
                out.push_back(cwd);
        }
        if (n == max_w) break;
        std::vector<Word> next;
        next.reserve(level.size() * 2);
        for (const Word& w : level) {
            next.push_back(w + "a");
            next.push_back(w + "b");
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return std::pair(a.size(), a) < std::pair(b.size(), b); });
    return out;
}

}  // namespace abelian
