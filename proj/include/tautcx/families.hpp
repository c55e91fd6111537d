// Constructors for the presentation + identity pairs of the supported
// 3-manifold families: mapping tori, p/1- and 1/q-surgeries and spliced
// sums, cyclic branched covers, 0-surgery-like fillings of those covers,
// Seifert fibered spaces and Brieskorn spheres, lens spaces.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tautcx/knots.hpp"
#include "tautcx/presentation.hpp"

namespace tautcx {

struct TautPresentation {
    Presentation pres;
    Identity identity;
    std::vector<std::string> warnings;
};

namespace detail {

inline void verify_or_throw(TautPresentation& tp, const char* who) {
    tp.pres.validate();
    if (!verify_identity(tp.pres, tp.identity))
        throw std::logic_error(std::string(who) + ": constructed word is not an identity");
}

/// The four-factor block
///   z w_{i-1} rho_a w_{i-1}^{-1} z^{-1}
///   (z w_{i-1} u_a) rho_b (...)^{-1}
///   (z w_i u_b) rho_a^{-1} (...)^{-1}
///   z w_i rho_b^{-1} w_i^{-1} z^{-1}
/// shared by the mapping-torus, surgery and branched-cover identities.
inline void append_block(Identity& s, const Word& z, const Word& w_prev, const Word& w_cur,
                         const Word& u_a, const Word& u_b, int rel_a, int rel_b) {
    Word c0 = multiply(z, w_prev);
    s.append(c0, rel_a, +1);
    s.append(multiply(c0, u_a), rel_b, +1);
    Word c1 = multiply(z, w_cur);
    s.append(multiply(c1, u_b), rel_a, -1);
    s.append(c1, rel_b, -1);
}

inline std::int64_t ipow_check(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Lens spaces L(p, q):  <x | x^p> with identity rho x^{-q} rho^{-1} x^{q}.

inline TautPresentation lens(std::int64_t p, std::int64_t q) {
    if (p < 2) throw std::invalid_argument("lens: p must be >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lens: gcd(p, q) must be 1");
    TautPresentation tp;
    tp.pres.alphabet = Alphabet({"x"});
    tp.pres.relators = {Word::generator(0, p)};
    tp.identity.append(Word(), 0, +1);
    tp.identity.append(Word::generator(0, -q), 0, -1);
    detail::verify_or_throw(tp, "lens");
    return tp;
}

// --------------------------------------------------------------------------
// Surface bundles over the circle.

struct MappingClassData {
    int genus = 0;
    std::vector<Word> images;  // f(x_1)..f(x_2g) over x_1..x_2g
    void validate() const {
        if (genus < 1) throw std::invalid_argument("MappingClassData: genus must be >= 1");
        if (images.size() != static_cast<std::size_t>(2 * genus))
            throw std::invalid_argument("MappingClassData: need 2g images");
        for (const Word& w : images)
            if (w.max_gen() >= 2 * genus)
                throw std::invalid_argument("MappingClassData: image out of alphabet");
    }
};

inline Word surface_relator(int genus) {
    Word r;
    for (int i = 0; i < genus; ++i)
        r.push(commutator(Word::generator(2 * i), Word::generator(2 * i + 1)));
    return r;
}

/// Solves f_*(R) = q R q^{-1} for the boundary word R = prod [x_{2i-1}, x_{2i}],
/// by cyclic reduction; returns a minimal-length solution.
inline Word compute_qf(int genus, const std::vector<Word>& images) {
    MappingClassData d{genus, images};
    d.validate();
    Word R = surface_relator(genus);
    Word fR;
    for (int i = 0; i < genus; ++i)
        fR.push(commutator(images[static_cast<std::size_t>(2 * i)],
                           images[static_cast<std::size_t>(2 * i + 1)]));
    std::vector<Word> cands = conjugators_onto(R, fR);
    if (cands.empty()) throw std::domain_error("compute_qf: not boundary-preserving");
    // minimize within q * <R>
    Word best;
    bool have = false;
    for (Word q : cands) {
        for (;;) {
            Word shorter = multiply(q, R);
            Word shorter2 = multiply(q, R.inverse());
            if (shorter.length() < q.length())
                q = shorter;
            else if (shorter2.length() < q.length())
                q = shorter2;
            else
                break;
        }
        if (!have || q.length() < best.length() || (q.length() == best.length() && q < best)) {
            best = q;
            have = true;
        }
    }
    return best;
}

/// Mapping torus of f, presentation with relators
///   r_i = t f(x_i) t^{-1} x_i^{-1}  (i <= 2g),  r_{2g+1} = prod [x_{2i-1}, x_{2i}].
inline TautPresentation mapping_torus(const MappingClassData& data) {
    data.validate();
    const int g = data.genus;
    std::vector<std::string> names;
    for (int i = 1; i <= 2 * g; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("t");
    const int gamma = 2 * g;

    TautPresentation tp;
    tp.pres.alphabet = Alphabet(std::move(names));
    for (int i = 0; i < 2 * g; ++i) {
        Word r = Word::generator(gamma);
        r.push(data.images[static_cast<std::size_t>(i)]);
        r.push(gamma, -1);
        r.push(i, -1);
        tp.pres.relators.push_back(r);
    }
    tp.pres.relators.push_back(surface_relator(g));
    const int last = 2 * g;

    Word qf = compute_qf(g, data.images);
    Word w_prev, w_cur;
    for (int i = 0; i < g; ++i) {
        w_cur = multiply(w_prev, commutator(Word::generator(2 * i), Word::generator(2 * i + 1)));
        detail::append_block(tp.identity, Word(), w_prev, w_cur, Word::generator(2 * i),
                             Word::generator(2 * i + 1), 2 * i, 2 * i + 1);
        w_prev = w_cur;
    }
    tp.identity.append(Word(), last, +1);
    tp.identity.append(multiply(Word::generator(gamma), qf), last, -1);
    detail::verify_or_throw(tp, "mapping_torus");
    return tp;
}

/// The 3-torus with the Example 2.3 presentation <x,y,z | [x,y],[y,z],[z,x]>,
/// realized as the genus-1 mapping torus of the identity map.
inline TautPresentation torus3() {
    TautPresentation tp;
    tp.pres.alphabet = Alphabet({"x", "y", "z"});
    Word x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
    tp.pres.relators = {commutator(x, y), commutator(y, z), commutator(z, x)};
    tp.identity.append(Word(), 2, +1);
    tp.identity.append(x, 1, -1);
    tp.identity.append(multiply(multiply(x, y), x.inverse()), 2, -1);
    tp.identity.append(commutator(x, y), 1, +1);
    tp.identity.append(Word(), 0, +1);
    tp.identity.append(z, 0, -1);
    detail::verify_or_throw(tp, "torus3");
    return tp;
}

// --------------------------------------------------------------------------
// Spliced sums and p/1-, 1/q-surgeries.

enum class SurgeryVariant { POverOne, OneOverQ };

namespace detail {

/// Appends the blocks prod_i W_i for one knot piece whose relators start at
/// rel_base and whose flat words live at the given generator offset.
inline void append_knot_blocks(Identity& s, const KnotData& K, const std::vector<int>& genmap,
                               int rel_base) {
    Word w_prev, w_cur;
    for (int i = 0; i < K.genus; ++i) {
        Word ua = relabel(K.u_flat[static_cast<std::size_t>(2 * i)], genmap);
        Word ub = relabel(K.u_flat[static_cast<std::size_t>(2 * i + 1)], genmap);
        w_cur = multiply(w_prev, commutator(ua, ub));
        append_block(s, Word(), w_prev, w_cur, ua, ub, rel_base + 2 * i, rel_base + 2 * i + 1);
        w_prev = w_cur;
    }
}

inline std::vector<int> offset_map(int count, int offset) {
    std::vector<int> m(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = offset + i;
    return m;
}

}  // namespace detail

/// Spliced sums / surgeries.  With no partner the second piece is the unknot
/// and the result is the p/1- or 1/q-surgery on K.
///
/// p/1 form: generators x_1..x_2g, m, y_1..y_2g'; relators
///   r_i  = m u_i^sharp m^-1 (u_i^flat)^-1        (K, i <= 2g)
///   r'_i = m v_i^sharp m^-1 (v_i^flat)^-1        (partner, meridians identified)
///   r_o  = l m^p l'^-1                           (l, l' the preferred longitudes)
/// 1/q form: extra generator m'; r_dag = m l^q l'^-1, r_star = m' l^-1.
inline TautPresentation surgery(const KnotData& K, SurgeryVariant variant, std::int64_t coeff,
                                const std::optional<KnotData>& partner = std::nullopt) {
    K.validate();
    if (partner) partner->validate();
    const int g = K.genus;
    const int gp = partner ? partner->genus : 0;
    const bool one_over = variant == SurgeryVariant::OneOverQ;

    std::vector<std::string> names;
    for (int i = 1; i <= 2 * g; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("m");
    for (int i = 1; i <= 2 * gp; ++i) names.push_back("y" + std::to_string(i));
    if (one_over) names.push_back("mp");

    const int mer = 2 * g;
    const int mer2 = 2 * g + 2 * gp + 1;  // 1/q only
    std::vector<int> kmap = detail::offset_map(2 * g, 0);
    std::vector<int> pmap = detail::offset_map(2 * gp, 2 * g + 1);

    TautPresentation tp;
    tp.pres.alphabet = Alphabet(std::move(names));

    auto hnn_relator = [](int meridian, const Word& sharp, const Word& flat) {
        Word r = Word::generator(meridian);
        r.push(sharp);
        r.push(meridian, -1);
        r.push(flat.inverse());
        return r;
    };
    for (int i = 0; i < 2 * g; ++i)
        tp.pres.relators.push_back(hnn_relator(mer, relabel(K.u_sharp[static_cast<std::size_t>(i)], kmap),
                                               relabel(K.u_flat[static_cast<std::size_t>(i)], kmap)));
    for (int i = 0; i < 2 * gp; ++i)
        tp.pres.relators.push_back(
            hnn_relator(one_over ? mer2 : mer, relabel(partner->u_sharp[static_cast<std::size_t>(i)], pmap),
                        relabel(partner->u_flat[static_cast<std::size_t>(i)], pmap)));

    Word lK = relabel(K.longitude(), kmap);
    Word lP = partner ? relabel(partner->longitude(), pmap) : Word();

    if (!one_over) {
        // r_o = l m^p l'^-1
        Word r = lK;
        r.push(mer, coeff);
        r.push(lP.inverse());
        tp.pres.relators.push_back(r);
        const int r_o = 2 * g + 2 * gp;

        detail::append_knot_blocks(tp.identity, K, kmap, 0);
        tp.identity.append(Word(), r_o, +1);
        if (partner) {
            Identity blocks;
            detail::append_knot_blocks(blocks, *partner, pmap, 2 * g);
            tp.identity.append(blocks.inverse());
        }
        tp.identity.append(Word::generator(mer), r_o, -1);
    } else {
        // r_dag = m l^q l'^-1 ; r_star = m' l^-1
        Word rdag = Word::generator(mer);
        rdag.push(power(lK, coeff));
        rdag.push(lP.inverse());
        tp.pres.relators.push_back(rdag);
        Word rstar = Word::generator(mer2);
        rstar.push(lK.inverse());
        tp.pres.relators.push_back(rstar);
        const int r_dag = 2 * g + 2 * gp;
        const int r_star = r_dag + 1;

        detail::append_knot_blocks(tp.identity, K, kmap, 0);
        tp.identity.append(Word(), r_star, -1);
        tp.identity.append(Word::generator(mer2), r_dag, +1);
        if (partner) detail::append_knot_blocks(tp.identity, *partner, pmap, 2 * g);
        tp.identity.append(lP, r_star, +1);
        tp.identity.append(Word(), r_dag, -1);
    }
    detail::verify_or_throw(tp, "surgery");
    return tp;
}

// --------------------------------------------------------------------------
// Cyclic branched covers B_K^d, presentation (generators x_i^(k) flattened to
// slot (k-1)*2g + i) with relators r_{i,k} = u^sharp_{i,k} (u^flat_{i,k+1})^-1.

namespace detail {

inline std::vector<int> sheet_map(int genus, int d, int k /*1-based sheet*/) {
    int kk = ((k - 1) % d + d) % d;  // 0-based
    return offset_map(2 * genus, kk * 2 * genus);
}

}  // namespace detail

inline TautPresentation branched_cover(const KnotData& K, int d) {
    K.validate();
    if (d < 2) throw std::invalid_argument("branched_cover: d must be >= 2");
    const int g = K.genus;

    std::vector<std::string> names;
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("x" + std::to_string(i) + "_" + std::to_string(k));

    TautPresentation tp;
    tp.pres.alphabet = Alphabet(std::move(names));
    auto rel_index = [&](int i /*1..2g*/, int k /*1..d*/) { return (k - 1) * 2 * g + (i - 1); };
    for (int k = 1; k <= d; ++k) {
        std::vector<int> mk = detail::sheet_map(g, d, k);
        std::vector<int> mk1 = detail::sheet_map(g, d, k + 1);
        for (int i = 1; i <= 2 * g; ++i) {
            Word r = relabel(K.u_sharp[static_cast<std::size_t>(i - 1)], mk);
            r.push(relabel(K.u_flat[static_cast<std::size_t>(i - 1)], mk1).inverse());
            tp.pres.relators.push_back(r);
        }
    }
    for (int k = 1; k <= d; ++k) {
        std::vector<int> mk1 = detail::sheet_map(g, d, k + 1);
        Word w_prev, w_cur;
        for (int i = 0; i < g; ++i) {
            Word ua = relabel(K.u_flat[static_cast<std::size_t>(2 * i)], mk1);
            Word ub = relabel(K.u_flat[static_cast<std::size_t>(2 * i + 1)], mk1);
            w_cur = multiply(w_prev, commutator(ua, ub));
            detail::append_block(tp.identity, Word(), w_prev, w_cur, ua, ub,
                                 rel_index(2 * i + 1, k), rel_index(2 * i + 2, k));
            w_prev = w_cur;
        }
    }
    detail::verify_or_throw(tp, "branched_cover");
    return tp;
}

/// The 0-surgery-like filling of the d-fold cover exterior: generators
/// x_i^(k) and the lifted meridian mb, relators
///   r_{i,k} = mb u^sharp_{i,k} mb^-1 (u^flat_{i,k+1})^-1,
///   r_l     = l^(1) l^(2) ... l^(d).
inline TautPresentation zero_surgery_cover(const KnotData& K, int d) {
    K.validate();
    if (d < 1) throw std::invalid_argument("zero_surgery_cover: d must be >= 1");
    const int g = K.genus;

    std::vector<std::string> names;
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= 2 * g; ++i)
            names.push_back("x" + std::to_string(i) + "_" + std::to_string(k));
    names.push_back("mb");
    const int mb = 2 * g * d;

    TautPresentation tp;
    tp.pres.alphabet = Alphabet(std::move(names));
    auto rel_index = [&](int i, int k) { return (k - 1) * 2 * g + (i - 1); };
    for (int k = 1; k <= d; ++k) {
        std::vector<int> mk = detail::sheet_map(g, d, k);
        std::vector<int> mk1 = detail::sheet_map(g, d, k + 1);
        for (int i = 1; i <= 2 * g; ++i) {
            Word r = Word::generator(mb);
            r.push(relabel(K.u_sharp[static_cast<std::size_t>(i - 1)], mk));
            r.push(mb, -1);
            r.push(relabel(K.u_flat[static_cast<std::size_t>(i - 1)], mk1).inverse());
            tp.pres.relators.push_back(r);
        }
    }
    auto sheet_longitude = [&](int k) { return relabel(K.longitude(), detail::sheet_map(g, d, k)); };
    Word rl;
    for (int k = 1; k <= d; ++k) rl.push(sheet_longitude(k));
    tp.pres.relators.push_back(rl);
    const int r_l = 2 * g * d;

    // z_k = l^(2) ... l^(k); the surgery symbol enters conjugated by
    // c = l^(2) ... l^(d) so that the whole word cancels freely.
    Word zk;
    for (int k = 1; k <= d; ++k) {
        if (k >= 2) zk.push(sheet_longitude(k));
        std::vector<int> mk1 = detail::sheet_map(g, d, k + 1);
        Word w_prev, w_cur;
        for (int i = 0; i < g; ++i) {
            Word ua = relabel(K.u_flat[static_cast<std::size_t>(2 * i)], mk1);
            Word ub = relabel(K.u_flat[static_cast<std::size_t>(2 * i + 1)], mk1);
            w_cur = multiply(w_prev, commutator(ua, ub));
            detail::append_block(tp.identity, zk, w_prev, w_cur, ua, ub, rel_index(2 * i + 1, k),
                                 rel_index(2 * i + 2, k));
            w_prev = w_cur;
        }
    }
    tp.identity.append(zk, r_l, +1);  // zk now equals l^(2)..l^(d)
    tp.identity.append(Word::generator(mb), r_l, -1);
    detail::verify_or_throw(tp, "zero_surgery_cover");
    return tp;
}

// --------------------------------------------------------------------------
// Seifert fibered spaces over S^2.

/// Presentation with relators r_i = (x_i x_{i+1} ... x_n x_1 ... x_{i-1})^{-a_{n+1}} x_i^{e_i a_i}
/// and identity rho_1 (x_1^-1 rho_1^-1 x_1) ... rho_n (x_n^-1 rho_n^-1 x_n).
inline TautPresentation seifert(const std::vector<std::int64_t>& a, const std::vector<int>& eps) {
    const int n = static_cast<int>(eps.size());
    if (a.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("seifert: need n+1 coefficients and n signs");
    if (n < 1) throw std::invalid_argument("seifert: need at least one exceptional fiber");
    for (std::int64_t ai : a)
        if (ai < 2) throw std::invalid_argument("seifert: all a_i must be >= 2");
    for (int e : eps)
        if (e != 1 && e != -1) throw std::invalid_argument("seifert: signs must be +-1");

    TautPresentation tp;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    tp.pres.alphabet = Alphabet(std::move(names));
    for (int i = 0; i < n; ++i) {
        Word c;
        for (int j = 0; j < n; ++j) c.push((i + j) % n, 1);
        Word r = power(c, -a[static_cast<std::size_t>(n)]);
        r.push(i, eps[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)]);
        tp.pres.relators.push_back(r);
        tp.identity.append(Word(), i, +1);
        tp.identity.append(Word::generator(i, -1), i, -1);
    }
    if (n == 1)
        tp.warnings.push_back("n = 1 is degenerate; infinite-fundamental-group hypothesis not checked");
    detail::verify_or_throw(tp, "seifert");
    return tp;
}

/// The Seifert manifold M_{m,n} used for the order-m^3 computations:
///   < x1, x2 | r1 = (x1^-1 x2^-1)^n x1^m, r2 = (x2^-1 x1^-1)^n x2^m >
/// with identity rho2 (x2 rho2^-1 x2^-1) rho1 (x1 rho1^-1 x1^-1).
inline TautPresentation seifert_mmn(std::int64_t m, std::int64_t n) {
    if (m < 2 || n < 1) throw std::invalid_argument("seifert_mmn: need m >= 2, n >= 1");
    TautPresentation tp;
    tp.pres.alphabet = Alphabet({"x1", "x2"});
    Word x1 = Word::generator(0), x2 = Word::generator(1);
    Word d1 = multiply(x1.inverse(), x2.inverse());
    Word d2 = multiply(x2.inverse(), x1.inverse());
    Word r1 = power(d1, n);
    r1.push(0, m);
    Word r2 = power(d2, n);
    r2.push(1, m);
    tp.pres.relators = {r1, r2};
    tp.identity.append(Word(), 1, +1);
    tp.identity.append(x2, 1, -1);
    tp.identity.append(Word(), 0, +1);
    tp.identity.append(x1, 0, -1);
    detail::verify_or_throw(tp, "seifert_mmn");
    return tp;
}

// --------------------------------------------------------------------------
// Brieskorn spheres Sigma(p, q, mpq + eps), from eps/m-surgery on the (p,q)
// torus knot.

inline TautPresentation brieskorn(std::int64_t p, std::int64_t q, std::int64_t m, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("brieskorn: eps must be +-1");
    if (p < 2 || q < 2 || m < 2)
        throw std::invalid_argument("brieskorn: p, q, m must all be > 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("brieskorn: gcd(p, q) must be 1");
    const std::int64_t N = m * p * q + eps;
    // 1/p + 1/q + 1/N < 1  <=>  qN + pN + pq < pqN
    if (q * N + p * N + p * q >= p * q * N)
        throw std::domain_error("brieskorn: not aspherical (1/p + 1/q + 1/(mpq+eps) >= 1)");
    // a p + b q = 1
    std::int64_t a = 0, b = 1, a_prev = 1, b_prev = 0, r = q, r_prev = p;
    while (r != 0) {
        std::int64_t quot = r_prev / r;
        std::int64_t tmp;
        tmp = r_prev - quot * r; r_prev = r; r = tmp;
        tmp = a_prev - quot * a; a_prev = a; a = tmp;
        tmp = b_prev - quot * b; b_prev = b; b = tmp;
    }
    const std::int64_t ca = a_prev, cb = b_prev;  // ca*p + cb*q = 1

    TautPresentation tp;
    tp.pres.alphabet = Alphabet({"x", "y"});
    Word W;  // the meridian x^a y^b
    W.push(0, ca);
    W.push(1, cb);
    Word r1 = Word::generator(0, q * m);
    r1.push(power(W, -N));
    Word r2 = power(W, N);
    r2.push(1, -p);
    r2.push(0, -q * m - q);
    tp.pres.relators = {r1, r2};

    Word g = Word::generator(0, q * m);
    g.push(1, -p);
    g.push(0, -q * m - q);
    tp.identity.append(Word(), 0, +1);
    tp.identity.append(Word(), 1, -1);
    tp.identity.append(Word(), 0, -1);
    tp.identity.append(g, 1, +1);
    detail::verify_or_throw(tp, "brieskorn");
    return tp;
}

}  // namespace tautcx
