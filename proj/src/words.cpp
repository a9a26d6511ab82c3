#include "abelian/words.hpp"

#include <algorithm>
#include <cstring>

namespace abelian {

Alphabet::Alphabet(std::string_view letters) {
    std::string s(letters);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
    letters_ = std::move(s);
    std::fill(std::begin(index_), std::end(index_), -1);
    for (std::size_t i = 0; i < letters_.size(); ++i)
        index_[static_cast<unsigned char>(letters_[i])] = static_cast<int>(i);
}

void Alphabet::validate(const Word& w) const {
    for (Letter c : w)
        if (!contains(c))
            throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " + letters_);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
    return Alphabet(letters_ + other.letters_);
}

ParikhVector ParikhVector::of(const Word& w, const Alphabet& a) {
    ParikhVector v(a.size());
    for (Letter c : w) ++v[a.index(c)];
    return v;
}

std::uint64_t ParikhVector::total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& o) {
    if (counts_.size() != o.counts_.size())
        throw std::invalid_argument("parikh vectors over different alphabets");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
    return *this;
}

std::string ParikhVector::key() const {
    std::string k(counts_.size() * 4, '\0');
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        std::uint32_t c = counts_[i];
        k[4 * i] = static_cast<char>(c & 0xff);
        k[4 * i + 1] = static_cast<char>((c >> 8) & 0xff);
        k[4 * i + 2] = static_cast<char>((c >> 16) & 0xff);
        k[4 * i + 3] = static_cast<char>((c >> 24) & 0xff);
    }
    return k;
}

ParikhVector ParikhVector::from_key(std::string_view key) {
    ParikhVector v(key.size() / 4);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint32_t c = 0;
        for (int b = 3; b >= 0; --b) c = (c << 8) | static_cast<unsigned char>(key[4 * i + b]);
        v[i] = c;
    }
    return v;
}

std::string ParikhVector::to_string(const Alphabet& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ",";
        s += a.letter(i);
        s += ":";
        s += std::to_string(counts_[i]);
    }
    return s + ")";
}

Word InfiniteWord::prefix(std::size_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    if (state_->cache.size() < n) {
        producer_->extend(state_->cache, n);
        if (state_->cache.size() < n)
            throw std::runtime_error("generator '" + name_ + "' failed to produce " +
                                     std::to_string(n) + " letters");
    }
    return state_->cache.substr(0, n);
}

}  // namespace abelian
