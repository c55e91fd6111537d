// Seifert-surface word data for knots: the push-offs u_i^sharp / u_i^flat
// of a spine basis, over the free generators x_1..x_{2g} of the surface
// complement.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tautcx/word.hpp"

namespace tautcx {

struct KnotData {
    int genus = 0;
    std::vector<Word> u_sharp;  // 2g words over x_1..x_{2g}
    std::vector<Word> u_flat;
    std::string name = "knot";

    Alphabet surface_alphabet() const {
        std::vector<std::string> names;
        for (int i = 1; i <= 2 * genus; ++i) names.push_back("x" + std::to_string(i));
        return Alphabet(std::move(names));
    }

    /// The preferred longitude word prod_i [u_flat_{2i-1}, u_flat_{2i}].
    Word longitude() const {
        Word l;
        for (int i = 0; i < genus; ++i)
            l.push(commutator(u_flat[static_cast<std::size_t>(2 * i)],
                              u_flat[static_cast<std::size_t>(2 * i + 1)]));
        return l;
    }

    Word sharp_longitude() const {
        Word l;
        for (int i = 0; i < genus; ++i)
            l.push(commutator(u_sharp[static_cast<std::size_t>(2 * i)],
                              u_sharp[static_cast<std::size_t>(2 * i + 1)]));
        return l;
    }

    /// Boundary compatibility: both longitude expressions agree in the free
    /// group on x_1..x_{2g}.
    void validate() const {
        if (genus < 1) throw std::invalid_argument("KnotData: genus must be >= 1");
        if (u_sharp.size() != static_cast<std::size_t>(2 * genus) ||
            u_flat.size() != static_cast<std::size_t>(2 * genus))
            throw std::invalid_argument("KnotData: need 2g sharp and 2g flat words");
        for (const Word& w : u_sharp)
            if (w.max_gen() >= 2 * genus) throw std::invalid_argument("KnotData: word out of alphabet");
        for (const Word& w : u_flat)
            if (w.max_gen() >= 2 * genus) throw std::invalid_argument("KnotData: word out of alphabet");
        if (longitude() != sharp_longitude())
            throw std::invalid_argument("KnotData: boundary compatibility fails");
    }
};

/// Trefoil from its genus-1 Seifert surface, in the basis whose augmented
/// Fox matrices are the Seifert matrix V = [[-1,1],[0,-1]] and tV.
inline KnotData trefoil_knot() {
    KnotData k;
    k.genus = 1;
    k.name = "trefoil";
    Word x1 = Word::generator(0), x2 = Word::generator(1);
    k.u_sharp = {multiply(x1.inverse(), x2), x2.inverse()};
    k.u_flat = {x1.inverse(), multiply(x2.inverse(), x1)};
    k.validate();
    return k;
}

/// Figure-eight, basis normalized so the augmented Fox matrices are
/// V = [[1,-1],[0,-1]] and tV.
inline KnotData figure_eight_knot() {
    KnotData k;
    k.genus = 1;
    k.name = "figure_eight";
    Word x1 = Word::generator(0), x2 = Word::generator(1);
    k.u_sharp = {multiply(x1, x2.inverse()), x2.inverse()};
    k.u_flat = {x1, multiply(x2.inverse(), x1.inverse())};
    k.validate();
    return k;
}

/// Figure-eight in the classical spine basis (u1# = x1 x2, u1b = x1,
/// u2# = x2 x1 x2, u2b = x2).
inline KnotData figure_eight_knot_classical() {
    KnotData k;
    k.genus = 1;
    k.name = "figure_eight_classical";
    Word x1 = Word::generator(0), x2 = Word::generator(1);
    k.u_sharp = {multiply(x1, x2), multiply(multiply(x2, x1), x2)};
    k.u_flat = {x1, x2};
    k.validate();
    return k;
}

}  // namespace tautcx
