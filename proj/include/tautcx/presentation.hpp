// Finitely presented groups and identities among relations.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautcx/group_ring.hpp"
#include "tautcx/word.hpp"

namespace tautcx {

struct Presentation {
    Alphabet alphabet;            // ordinary generators only
    std::vector<Word> relators;   // reduced, nonempty

    std::size_t num_generators() const { return alphabet.num_ordinary(); }
    std::size_t num_relators() const { return relators.size(); }

    void validate() const {
        for (const Word& r : relators) {
            if (r.empty()) throw std::invalid_argument("Presentation: empty relator");
            if (r.max_gen() >= static_cast<int>(alphabet.num_ordinary()))
                throw std::invalid_argument("Presentation: relator uses non-ordinary symbol");
        }
    }
};

/// One factor w * rho_j^{sign} * w^{-1} of an identity among relations.
struct IdentityFactor {
    Word conjugator;   // over ordinary generators
    int relator = 0;   // 0-based index into Presentation::relators
    int sign = 1;      // +1 or -1
};

struct Identity {
    std::vector<IdentityFactor> factors;

    Identity inverse() const {
        Identity inv;
        inv.factors.reserve(factors.size());
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            inv.factors.push_back(IdentityFactor{it->conjugator, it->relator, -it->sign});
        return inv;
    }

    /// g * s * g^{-1}: prefixes every conjugator.
    Identity conjugated(const Word& g) const {
        Identity out;
        out.factors.reserve(factors.size());
        for (const IdentityFactor& f : factors)
            out.factors.push_back(IdentityFactor{multiply(g, f.conjugator), f.relator, f.sign});
        return out;
    }

    Identity& append(const Identity& o) {
        factors.insert(factors.end(), o.factors.begin(), o.factors.end());
        return *this;
    }

    Identity& append(Word conj, int relator, int sign) {
        factors.push_back(IdentityFactor{std::move(conj), relator, sign});
        return *this;
    }
};

inline void check_factor_indices(const Presentation& p, const Identity& s) {
    for (const IdentityFactor& f : s.factors) {
        if (f.relator < 0 || static_cast<std::size_t>(f.relator) >= p.relators.size())
            throw std::out_of_range("Identity: relator index " + std::to_string(f.relator + 1) +
                                    " out of range");
        if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("Identity: sign must be +-1");
    }
}

/// The image of the identity under psi: substitute r_j for rho_j and reduce.
inline Word psi_image(const Presentation& p, const Identity& s) {
    check_factor_indices(p, s);
    Word out;
    for (const IdentityFactor& f : s.factors) {
        out.push(f.conjugator);
        const Word& r = p.relators[static_cast<std::size_t>(f.relator)];
        out.push(f.sign > 0 ? r : r.inverse());
        out.push(f.conjugator.inverse());
    }
    return out;
}

inline bool verify_identity(const Presentation& p, const Identity& s) {
    return psi_image(p, s).empty();
}

/// The identity as a word in the free product P * F, over the alphabet
/// extended with one rho-symbol per relator.
inline Word identity_word(const Presentation& p, const Identity& s) {
    check_factor_indices(p, s);
    int m = static_cast<int>(p.num_generators());
    Word out;
    for (const IdentityFactor& f : s.factors) {
        out.push(f.conjugator);
        out.push(m + f.relator, f.sign);
        out.push(f.conjugator.inverse());
    }
    return out;
}

/// Substitutes the relators for the rho-symbols in a P * F word and reduces.
inline Word psi_substitute(const Presentation& p, const Word& w) {
    int m = static_cast<int>(p.num_generators());
    Word out;
    for (const Letter& l : w.runs()) {
        if (l.gen < m) {
            out.push(l.gen, l.exp);
        } else {
            std::size_t j = static_cast<std::size_t>(l.gen - m);
            if (j >= p.relators.size())
                throw std::out_of_range("psi_substitute: bad rho index");
            out.push(power(p.relators[j], l.exp));
        }
    }
    return out;
}

/// psi-pushforward of a Z[P*F] element to Z[F].
inline GroupRingElement psi_substitute(const Presentation& p, const GroupRingElement& a) {
    GroupRingElement out;
    for (const auto& [w, c] : a.terms()) out.add_term(psi_substitute(p, w), c);
    return out;
}

}  // namespace tautcx
