// Free-group words over an indexed generator alphabet, stored in
// exponent-run form so that relators like x^{qm} stay compact.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tautcx {

/// One maximal run of a single generator: gen^exp with exp != 0.
struct Letter {
    int gen = 0;
    std::int64_t exp = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Generator names for one free group.  Ordinary generators come first;
/// relator symbols rho_j (used when an identity is viewed as a word in
/// the free product P * F) are appended after them.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> ordinary, std::vector<std::string> rho = {})
        : names_(std::move(ordinary)), num_ordinary_(names_.size()) {
        for (auto& r : rho) names_.push_back(std::move(r));
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("Alphabet: duplicate generator name " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    std::size_t num_ordinary() const { return num_ordinary_; }
    std::size_t num_rho() const { return names_.size() - num_ordinary_; }
    bool is_rho(int g) const { return static_cast<std::size_t>(g) >= num_ordinary_; }

    const std::string& name(int g) const {
        if (g < 0 || static_cast<std::size_t>(g) >= names_.size())
            throw std::out_of_range("Alphabet: unknown generator id " + std::to_string(g));
        return names_[static_cast<std::size_t>(g)];
    }

    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        throw std::invalid_argument("Alphabet: unknown generator name '" + n + "'");
    }

    /// Extends this (ordinary-only) alphabet with rho-symbols, one per relator.
    Alphabet with_rho(std::size_t count) const {
        std::vector<std::string> ord(names_.begin(), names_.begin() + static_cast<long>(num_ordinary_));
        std::vector<std::string> rho;
        rho.reserve(count);
        for (std::size_t j = 0; j < count; ++j) rho.push_back("rho" + std::to_string(j + 1));
        return Alphabet(std::move(ord), std::move(rho));
    }

private:
    std::vector<std::string> names_;
    std::size_t num_ordinary_ = 0;
};

/// A freely reduced word.  Invariants: adjacent runs have distinct
/// generators and no run has exponent zero.
class Word {
public:
    Word() = default;

    static Word from_letters(const std::vector<Letter>& raw) {
        Word w;
        for (const Letter& l : raw) w.push(l.gen, l.exp);
        return w;
    }

    static Word generator(int g, std::int64_t e = 1) {
        Word w;
        w.push(g, e);
        return w;
    }

    const std::vector<Letter>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }

    /// Number of single letters after expanding runs.
    std::int64_t length() const {
        std::int64_t n = 0;
        for (const Letter& l : runs_) n += l.exp >= 0 ? l.exp : -l.exp;
        return n;
    }

    int max_gen() const {
        int m = -1;
        for (const Letter& l : runs_) m = std::max(m, l.gen);
        return m;
    }

    /// Appends gen^exp, keeping the word reduced.
    void push(int gen, std::int64_t exp) {
        if (exp == 0) return;
        if (!runs_.empty() && runs_.back().gen == gen) {
            runs_.back().exp += exp;
            if (runs_.back().exp == 0) runs_.pop_back();
            return;
        }
        runs_.push_back(Letter{gen, exp});
    }

    void push(const Word& other) {
        for (const Letter& l : other.runs_) push(l.gen, l.exp);
    }

    Word inverse() const {
        Word w;
        w.runs_.reserve(runs_.size());
        for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
            w.runs_.push_back(Letter{it->gen, -it->exp});
        return w;
    }

    /// Single letters (gen, sign) with runs expanded.
    std::vector<std::pair<int, int>> expand() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(length()));
        for (const Letter& l : runs_) {
            int s = l.exp > 0 ? 1 : -1;
            for (std::int64_t i = 0; i < (l.exp > 0 ? l.exp : -l.exp); ++i) out.emplace_back(l.gen, s);
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Shortlex-style order: by expanded length, then run sequence.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        const auto& x = a.runs_;
        const auto& y = b.runs_;
        for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
            if (auto c = x[i].gen <=> y[i].gen; c != 0) return c;
            if (auto c = x[i].exp <=> y[i].exp; c != 0) return c;
        }
        return x.size() <=> y.size();
    }

private:
    std::vector<Letter> runs_;
};

inline Word multiply(const Word& a, const Word& b) {
    Word w = a;
    w.push(b);
    return w;
}

inline Word invert(const Word& a) { return a.inverse(); }

inline Word power(const Word& a, std::int64_t n) {
    if (n == 0) return Word();
    if (a.runs().size() == 1) return Word::generator(a.runs()[0].gen, a.runs()[0].exp * n);
    Word base = n > 0 ? a : a.inverse();
    std::int64_t k = n > 0 ? n : -n;
    Word w;
    for (std::int64_t i = 0; i < k; ++i) w.push(base);
    return w;
}

inline Word conjugate(const Word& g, const Word& w) {
    Word out = g;
    out.push(w);
    out.push(g.inverse());
    return out;
}

inline Word commutator(const Word& a, const Word& b) {
    Word out = a;
    out.push(b);
    out.push(a.inverse());
    out.push(b.inverse());
    return out;
}

/// Free reduction of a raw letter sequence, validated against an alphabet.
inline Word reduce(const std::vector<Letter>& raw, const Alphabet& alphabet) {
    for (const Letter& l : raw)
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet.size())
            throw std::out_of_range("reduce: unknown generator id " + std::to_string(l.gen));
    return Word::from_letters(raw);
}

/// Substitutes images[g] for generator g.  Every generator occurring in w
/// must have an image.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (const Letter& l : w.runs()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
            throw std::out_of_range("substitute: no image for generator " + std::to_string(l.gen));
        out.push(power(images[static_cast<std::size_t>(l.gen)], l.exp));
    }
    return out;
}

/// Renames generator g to map[g] (used to place knot-group words into the
/// flattened alphabets of covering presentations).
inline Word relabel(const Word& w, const std::vector<int>& map) {
    Word out;
    for (const Letter& l : w.runs()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= map.size())
            throw std::out_of_range("relabel: no slot for generator " + std::to_string(l.gen));
        out.push(map[static_cast<std::size_t>(l.gen)], l.exp);
    }
    return out;
}

/// w = prefix * core * prefix^{-1} with core cyclically reduced.
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
    std::vector<std::pair<int, int>> ls = w.expand();
    std::size_t i = 0, j = ls.size();
    while (j > i + 1 && ls[i].first == ls[j - 1].first && ls[i].second == -ls[j - 1].second) {
        ++i;
        --j;
    }
    Word prefix, core;
    for (std::size_t t = 0; t < i; ++t) prefix.push(ls[t].first, ls[t].second);
    for (std::size_t t = i; t < j; ++t) core.push(ls[t].first, ls[t].second);
    return {prefix, core};
}

/// All q with target = q * source * q^{-1}, where source is cyclically
/// reduced, found by rotation matching; empty when not conjugate.  The
/// returned conjugators are one per matching rotation (the full solution
/// set is q * centralizer(source)).
inline std::vector<Word> conjugators_onto(const Word& source, const Word& target) {
    auto [p, core] = cyclic_reduce(target);
    std::vector<std::pair<int, int>> c = source.expand();
    std::vector<std::pair<int, int>> t = core.expand();
    std::vector<Word> out;
    if (c.size() != t.size()) return out;
    if (c.empty()) {
        if (core.empty()) out.push_back(Word());
        return out;
    }
    const std::size_t n = c.size();
    for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = t[i] == c[(i + k) % n];
        if (!ok) continue;
        // core = rot_k(source) = u^{-1} source u with u = first k letters of source
        Word u;
        for (std::size_t i = 0; i < k; ++i) u.push(c[i].first, c[i].second);
        Word q = p;
        q.push(u.inverse());
        out.push_back(q);
    }
    return out;
}

inline std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::ostringstream ss;
    bool first = true;
    for (const Letter& l : w.runs()) {
        if (!first) ss << '*';
        first = false;
        ss << alphabet.name(l.gen);
        if (l.exp != 1) ss << '^' << l.exp;
    }
    return ss.str();
}

/// Parses the `x1^2*x2^-1` text form.  "1" (or empty) is the empty word.
inline Word parse_word(const std::string& text, const Alphabet& alphabet) {
    Word w;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text == "1") return w;
    while (i < text.size()) {
        skip_ws();
        if (i < text.size() && text[i] == '1' && w.empty()) {
            ++i;
            skip_ws();
            break;
        }
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\'')) ++i;
        if (i == start) throw std::invalid_argument("parse_word: expected generator name in '" + text + "'");
        int gen = alphabet.index_of(text.substr(start, i - start));
        std::int64_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t es = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es) throw std::invalid_argument("parse_word: bad exponent in '" + text + "'");
            exp = std::stoll(text.substr(es, i - es));
        }
        w.push(gen, exp);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != '*') throw std::invalid_argument("parse_word: expected '*' in '" + text + "'");
            ++i;
        }
    }
    return w;
}

}  // namespace tautcx
