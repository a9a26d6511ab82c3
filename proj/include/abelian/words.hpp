#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

/// Letters are printable characters; a word is a plain string. The letter
/// order used everywhere (Parikh indexing, enumeration, display) is the
/// character order, so '0' < '1' < '2' < 'a' < 'b'.
using Letter = char;
using Word = std::string;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    std::size_t size() const { return letters_.size(); }
    bool contains(Letter c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    Letter letter(std::size_t i) const { return letters_.at(i); }
    const std::string& letters() const { return letters_; }

    std::size_t index(Letter c) const {
        int i = index_[static_cast<unsigned char>(c)];
        if (i < 0) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " + letters_);
        return static_cast<std::size_t>(i);
    }

    /// Throws if some symbol of w is outside this alphabet.
    void validate(const Word& w) const;

    Alphabet merged(const Alphabet& other) const;
    bool is_binary01() const { return letters_ == "01"; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

private:
    std::string letters_;  // sorted, unique
    int index_[256] = {};  // letter -> position, -1 when absent
};

/// Per-letter occurrence counts of a finite word, indexed by alphabet position.
class ParikhVector {
public:
    explicit ParikhVector(std::size_t k) : counts_(k, 0) {}
    ParikhVector(std::initializer_list<std::uint32_t> c) : counts_(c) {}

    static ParikhVector of(const Word& w, const Alphabet& a);

    std::size_t size() const { return counts_.size(); }
    std::uint32_t operator[](std::size_t i) const { return counts_[i]; }
    std::uint32_t& operator[](std::size_t i) { return counts_[i]; }
    std::uint64_t total() const;

    friend bool operator==(const ParikhVector& x, const ParikhVector& y) { return x.counts_ == y.counts_; }
    friend bool operator<(const ParikhVector& x, const ParikhVector& y) { return x.counts_ < y.counts_; }
    ParikhVector& operator+=(const ParikhVector& o);
    friend ParikhVector operator+(ParikhVector a, const ParikhVector& b) { return a += b; }

    /// Fixed-width byte encoding, usable as a hash key.
    std::string key() const;
    static ParikhVector from_key(std::string_view key);

    std::string to_string(const Alphabet& a) const;

private:
    std::vector<std::uint32_t> counts_;
};

inline ParikhVector parikh(const Word& w, const Alphabet& a) { return ParikhVector::of(w, a); }

inline bool abelian_equiv(const Word& u, const Word& v, const Alphabet& a) {
    return ParikhVector::of(u, a) == ParikhVector::of(v, a);
}

/// A deterministic one-sided infinite word. Implementations append letters
/// on demand; the wrapper caches the produced prefix, which makes
/// prefix(m) a prefix of prefix(n) for m <= n by construction. Prefix
/// requests are serialized, so a shared word is safe to use concurrently.
class InfiniteWord {
public:
    class Producer {
    public:
        virtual ~Producer() = default;
        /// Append letters to buf until buf.size() >= target.
        virtual void extend(std::string& buf, std::size_t target) = 0;
    };

    InfiniteWord(std::string name, Alphabet alphabet, std::shared_ptr<Producer> producer)
        : name_(std::move(name)),
          alphabet_(std::move(alphabet)),
          producer_(std::move(producer)),
          state_(std::make_shared<State>()) {}

    Word prefix(std::size_t n) const;
    Letter letter(std::size_t i) const { return prefix(i + 1)[i]; }

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    struct State {
        std::mutex mutex;
        std::string cache;
    };

    std::string name_;
    Alphabet alphabet_;
    std::shared_ptr<Producer> producer_;
    std::shared_ptr<State> state_;
};

}  // namespace abelian
