#ifndef NCSTOCH_SERIES_HPP
#define NCSTOCH_SERIES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncstoch/rational.hpp"

namespace ncstoch {

/// Finite alphabet of noncommuting letters. Letters are interned; a Letter is
/// an index into its alphabet.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    static std::shared_ptr<const Alphabet> make(std::vector<std::string> names) {
        return std::make_shared<const Alphabet>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::uint32_t idx) const { return names_.at(idx); }
    /// Throws UnknownLetter.
    std::uint32_t index(const std::string& name) const;
    bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Word in the free monoid: a sequence of letter indices. The empty word is
/// the monoid identity.
using Word = std::vector<std::uint32_t>;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Orders by (length, lexicographic on letter indices).
bool word_less(const Word& a, const Word& b);

/// Noncommutative power series over Q truncated at a degree bound. Zero
/// coefficients are never stored, so structural equality is equality of
/// truncations.
class TruncSeries {
public:
    TruncSeries(AlphabetPtr alphabet, std::size_t bound)
        : alphabet_(std::move(alphabet)), bound_(bound) {}

    static TruncSeries constant(AlphabetPtr alphabet, std::size_t bound, const Rational& c);
    static TruncSeries one(AlphabetPtr alphabet, std::size_t bound) {
        return constant(std::move(alphabet), bound, Rational(1));
    }
    static TruncSeries letter(AlphabetPtr alphabet, std::size_t bound, std::uint32_t idx);
    static TruncSeries letter(AlphabetPtr alphabet, std::size_t bound, const std::string& name);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word{}); }
    /// Adds c to the coefficient of w, pruning zeros; ignores words beyond
    /// the bound.
    void add_term(const Word& w, const Rational& c);

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    /// Cauchy product truncated at the bound.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const Rational& s, const TruncSeries& a);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Terms sorted by (length, lexicographic); rendering order.
    std::vector<std::pair<Word, Rational>> sorted_terms() const;
    /// First term of the difference with another series, if any; used for
    /// witness reporting.
    std::string str() const;

private:
    AlphabetPtr alphabet_;
    std::size_t bound_;
    std::unordered_map<Word, Rational, WordHash> terms_;

    friend void check_compatible(const TruncSeries& a, const TruncSeries& b, const char* op);
};

/// sum_{k=0..bound} s^k; requires zero constant term.
TruncSeries star(const TruncSeries& s);
/// Multiplicative inverse; requires nonzero constant term.
TruncSeries inverse(const TruncSeries& s);
/// The derivation sending each word w to |w| w.
TruncSeries lambda(const TruncSeries& s);

/// Letter-to-series substitution with images of degree <= 1, so that
/// truncation degree is preserved word-by-word.
class Substitution {
public:
    Substitution(AlphabetPtr alphabet, std::size_t bound)
        : alphabet_(std::move(alphabet)), bound_(bound) {}

    /// Throws DegreeRaisingSubstitution when the image has degree > 1.
    void set(std::uint32_t letter, TruncSeries image);
    void set(const std::string& letter, TruncSeries image);
    bool has(std::uint32_t letter) const { return images_.count(letter) > 0; }
    const TruncSeries& image(std::uint32_t letter) const;

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t bound() const { return bound_; }

private:
    AlphabetPtr alphabet_;
    std::size_t bound_;
    std::map<std::uint32_t, TruncSeries> images_;
};

/// Homomorphic image of s word-by-word; letters without an assigned image map
/// to themselves.
TruncSeries substitute(const TruncSeries& s, const Substitution& sigma);

} // namespace ncstoch

#endif
