// Integral group rings of free groups and Fox's free differential calculus.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>

#include "tautcx/finite_group.hpp"
#include "tautcx/word.hpp"

namespace tautcx {

using Int = boost::multiprecision::cpp_int;

/// Finite Z-linear combination of reduced words.  No zero coefficients are
/// stored; the term order (shortlex on words) fixes all printed output.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return from_word(Word()); }
    static GroupRingElement from_word(const Word& w, Int coeff = 1) {
        GroupRingElement e;
        e.add_term(w, coeff);
        return e;
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    GroupRingElement& operator-=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(multiply(wa, wb), ca * cb);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    GroupRingElement scaled(const Int& k) const {
        GroupRingElement r;
        if (k == 0) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
        return r;
    }

    /// Left translate: w0 * this.
    GroupRingElement translated(const Word& w0) const {
        GroupRingElement r;
        for (const auto& [w, c] : terms_) r.add_term(multiply(w0, w), c);
        return r;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::map<Word, Int> terms_;
};

inline GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
inline GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

/// Augmentation Z[F] -> Z, every word to 1.
inline Int augment(const GroupRingElement& a) {
    Int s = 0;
    for (const auto& [w, c] : a.terms()) s += c;
    return s;
}

/// Fox derivative with respect to generator g, computed run by run:
///   d(x^e)/dx = 1 + x + ... + x^{e-1}          (e > 0)
///   d(x^e)/dx = -(x^{-1} + ... + x^{e})        (e < 0)
inline GroupRingElement fox_derivative(const Word& w, int g) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : w.runs()) {
        if (l.gen == g) {
            if (l.exp > 0) {
                for (std::int64_t t = 0; t < l.exp; ++t)
                    out.add_term(multiply(prefix, Word::generator(g, t)), 1);
            } else {
                for (std::int64_t t = 1; t <= -l.exp; ++t)
                    out.add_term(multiply(prefix, Word::generator(g, -t)), -1);
            }
        }
        prefix.push(l.gen, l.exp);
    }
    return out;
}

/// Image of one word under a homomorphism to a finite group given by
/// generator images (indices into G).
inline int word_image(const Word& w, const std::vector<int>& images, const FiniteGroup& G) {
    int r = G.identity();
    for (const Letter& l : w.runs()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
            throw std::out_of_range("word_image: no image for generator " + std::to_string(l.gen));
        r = G.mul(r, G.pow(images[static_cast<std::size_t>(l.gen)], l.exp));
    }
    return r;
}

/// Pushforward Z[F] -> Z[G]; the result maps group-element index to the
/// summed coefficient.
inline std::map<int, Int> apply_hom(const GroupRingElement& a, const std::vector<int>& images,
                                    const FiniteGroup& G) {
    std::map<int, Int> out;
    for (const auto& [w, c] : a.terms()) {
        int g = word_image(w, images, G);
        auto it = out.find(g);
        if (it == out.end()) {
            out.emplace(g, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

inline std::string format_ring_element(const GroupRingElement& a, const Alphabet& alphabet) {
    if (a.is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) ss << "-";
        } else {
            ss << (c < 0 ? " - " : " + ");
        }
        first = false;
        ss << abs.str() << "*" << format_word(w, alphabet);
    }
    return ss.str();
}

}  // namespace tautcx
