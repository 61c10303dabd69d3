#include "ncstoch/series.hpp"

#include <algorithm>
#include <sstream>

#include "ncstoch/errors.hpp"

namespace ncstoch {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        if (!by_name_.emplace(names_[i], i).second)
            throw Error("duplicate letter in alphabet: " + names_[i]);
    }
}

std::uint32_t Alphabet::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw UnknownLetter(name);
    return it->second;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_compatible(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.alphabet_ != b.alphabet_)
        throw DegreeMismatch(std::string("series ") + op + ": different alphabets");
    if (a.bound_ != b.bound_)
        throw DegreeMismatch(std::string("series ") + op + ": degree bounds " +
                             std::to_string(a.bound_) + " vs " + std::to_string(b.bound_));
}

TruncSeries TruncSeries::constant(AlphabetPtr alphabet, std::size_t bound, const Rational& c) {
    TruncSeries s(std::move(alphabet), bound);
    s.add_term(Word{}, c);
    return s;
}

TruncSeries TruncSeries::letter(AlphabetPtr alphabet, std::size_t bound, std::uint32_t idx) {
    if (idx >= alphabet->size()) throw Error("letter index out of range");
    TruncSeries s(std::move(alphabet), bound);
    s.add_term(Word{idx}, Rational(1));
    return s;
}

TruncSeries TruncSeries::letter(AlphabetPtr alphabet, std::size_t bound, const std::string& name) {
    const std::uint32_t idx = alphabet->index(name);
    return letter(std::move(alphabet), bound, idx);
}

Rational TruncSeries::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(const Word& w, const Rational& c) {
    if (w.size() > bound_ || c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(alphabet_, bound_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b, "+");
    TruncSeries r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b, "-");
    TruncSeries r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b, "*");
    TruncSeries r(a.alphabet_, a.bound_);
    for (const auto& [wa, ca] : a.terms_) {
        if (wa.size() > a.bound_) continue;
        for (const auto& [wb, cb] : b.terms_) {
            if (wa.size() + wb.size() > a.bound_) continue;
            Word w(wa);
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

TruncSeries operator*(const Rational& s, const TruncSeries& a) {
    TruncSeries r(a.alphabet_, a.bound_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b, "==");
    return a.terms_ == b.terms_;
}

std::vector<std::pair<Word, Rational>> TruncSeries::sorted_terms() const {
    std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return word_less(x.first, y.first); });
    return v;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        if (w.empty()) {
            os << a;
            continue;
        }
        if (!a.is_one()) os << a << "*";
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? "." : "") << alphabet_->name(w[i]);
    }
    return os.str();
}

TruncSeries star(const TruncSeries& s) {
    if (!s.constant_term().is_zero())
        throw NonzeroConstantTerm("star of series with constant term " + s.constant_term().str());
    TruncSeries acc = TruncSeries::one(s.alphabet(), s.bound());
    TruncSeries power = acc;
    for (std::size_t k = 1; k <= s.bound(); ++k) {
        power = power * s;
        if (power.is_zero()) break;
        acc = acc + power;
    }
    return acc;
}

TruncSeries inverse(const TruncSeries& s) {
    const Rational c = s.constant_term();
    if (c.is_zero()) throw ZeroConstantTerm();
    // s = c (1 - u) with u of zero constant term; s^{-1} = star(u) c^{-1}.
    const Rational cinv = c.inverse();
    TruncSeries u = TruncSeries::one(s.alphabet(), s.bound()) - cinv * s;
    return cinv * star(u);
}

TruncSeries lambda(const TruncSeries& s) {
    TruncSeries r(s.alphabet(), s.bound());
    for (const auto& [w, c] : s.sorted_terms())
        r.add_term(w, Rational(static_cast<long>(w.size())) * c);
    return r;
}

void Substitution::set(std::uint32_t letter, TruncSeries image) {
    bool degree_ok = true;
    for (const auto& [w, c] : image.sorted_terms())
        if (w.size() > 1) degree_ok = false;
    if (!degree_ok)
        throw DegreeRaisingSubstitution("substitution image of " + alphabet_->name(letter) +
                                        " has degree > 1");
    images_.insert_or_assign(letter, std::move(image));
}

void Substitution::set(const std::string& letter, TruncSeries image) {
    set(alphabet_->index(letter), std::move(image));
}

const TruncSeries& Substitution::image(std::uint32_t letter) const {
    return images_.at(letter);
}

TruncSeries substitute(const TruncSeries& s, const Substitution& sigma) {
    TruncSeries r(sigma.alphabet(), sigma.bound());
    for (const auto& [w, c] : s.sorted_terms()) {
        TruncSeries img = TruncSeries::constant(sigma.alphabet(), sigma.bound(), c);
        for (auto letter : w) {
            img = img * (sigma.has(letter)
                             ? sigma.image(letter)
                             : TruncSeries::letter(sigma.alphabet(), sigma.bound(), letter));
        }
        r = r + img;
    }
    return r;
}

} // namespace ncstoch
