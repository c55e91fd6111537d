// Finite groups as explicit multiplication tables.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautcx {

class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {},
                std::string group_name = "G")
        : n_(order), table_(std::move(table)), names_(std::move(names)), group_name_(std::move(group_name)) {
        if (n_ <= 0 || table_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw std::invalid_argument("FiniteGroup: table size mismatch");
        for (int v : table_)
            if (v < 0 || v >= n_) throw std::invalid_argument("FiniteGroup: table entry out of range");
        find_identity();
        build_inverses();
        check_associativity();
        if (names_.empty()) {
            names_.reserve(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) names_.push_back("g" + std::to_string(i));
        }
    }

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    int pow(int a, std::int64_t e) const {
        if (e < 0) return pow(inv(a), -e);
        int r = id_;
        while (e-- > 0) r = mul(r, a);
        return r;
    }

    int element_order(int a) const {
        int r = a, k = 1;
        while (r != id_) {
            r = mul(r, a);
            ++k;
        }
        return k;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < n_; ++a) {
            bool central = true;
            for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
            if (central) z.push_back(a);
        }
        return z;
    }

    const std::string& element_name(int a) const { return names_[static_cast<std::size_t>(a)]; }
    const std::string& name() const { return group_name_; }
    const std::vector<int>& table() const { return table_; }

private:
    void find_identity() {
        id_ = -1;
        for (int e = 0; e < n_; ++e) {
            bool ok = true;
            for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
            if (ok) {
                id_ = e;
                break;
            }
        }
        if (id_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
    }

    void build_inverses() {
        inv_.assign(static_cast<std::size_t>(n_), -1);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == id_ && mul(b, a) == id_) {
                    inv_[static_cast<std::size_t>(a)] = b;
                    break;
                }
            if (inv_[static_cast<std::size_t>(a)] < 0)
                throw std::invalid_argument("FiniteGroup: element without inverse");
        }
    }

    // Full check up to order 64, random sampling beyond.
    void check_associativity() const {
        if (n_ <= 64) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw std::invalid_argument("FiniteGroup: not associative");
            return;
        }
        std::mt19937 rng(0xA55A);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::invalid_argument("FiniteGroup: not associative");
        }
    }

    int n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    int id_ = 0;
    std::vector<std::string> names_;
    std::string group_name_;
};

inline FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    return FiniteGroup(n, std::move(t), std::move(names), "Z/" + std::to_string(n));
}

inline FiniteGroup trivial_group() { return cyclic_group(1); }

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order() * B.order();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    auto enc = [&](int a, int b) { return a * B.order() + b; };
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int b1 = 0; b1 < B.order(); ++b1) {
            names.push_back("(" + A.element_name(a1) + "," + B.element_name(b1) + ")");
            for (int a2 = 0; a2 < A.order(); ++a2)
                for (int b2 = 0; b2 < B.order(); ++b2)
                    t[static_cast<std::size_t>(enc(a1, b1)) * n + enc(a2, b2)] =
                        enc(A.mul(a1, a2), B.mul(b1, b2));
        }
    return FiniteGroup(n, std::move(t), std::move(names), A.name() + "x" + B.name());
}

/// Dihedral group of order 2n: elements r^a s^e, s r s = r^{-1}.
inline FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_group: n must be positive");
    int N = 2 * n;
    auto enc = [&](int a, int e) { return a + n * e; };
    std::vector<int> t(static_cast<std::size_t>(N) * N);
    std::vector<std::string> names(static_cast<std::size_t>(N));
    for (int a = 0; a < n; ++a)
        for (int e = 0; e < 2; ++e) {
            names[static_cast<std::size_t>(enc(a, e))] =
                "r" + std::to_string(a) + (e ? "s" : "");
            for (int b = 0; b < n; ++b)
                for (int f = 0; f < 2; ++f) {
                    // (r^a s^e)(r^b s^f) = r^{a + (-1)^e b} s^{e+f}
                    int c = e ? (a - b % n + n) % n : (a + b) % n;
                    t[static_cast<std::size_t>(enc(a, e)) * N + enc(b, f)] = enc(c, (e + f) % 2);
                }
        }
    return FiniteGroup(N, std::move(t), std::move(names), "D" + std::to_string(n));
}

/// Symmetric group on k letters, k <= 5, elements = permutations in lex order.
inline FiniteGroup symmetric_group(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("symmetric_group: k in 1..5 only");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        std::string nm;
        for (int v : perms[static_cast<std::size_t>(a)]) nm += std::to_string(v);
        names.push_back(nm);
        for (int b = 0; b < n; ++b) {
            std::vector<int> q(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                q[static_cast<std::size_t>(i)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
            t[static_cast<std::size_t>(a) * n + b] = index_of(q);
        }
    }
    return FiniteGroup(n, std::move(t), std::move(names), "S" + std::to_string(k));
}

inline FiniteGroup alternating_group4() {
    FiniteGroup s4 = symmetric_group(4);
    // even permutations of S4 in table order
    std::vector<int> even;
    for (int a = 0; a < 24; ++a) {
        // parity from the element name (a permutation of 0123)
        const std::string& nm = s4.element_name(a);
        int invs = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (nm[static_cast<std::size_t>(i)] > nm[static_cast<std::size_t>(j)]) ++invs;
        if (invs % 2 == 0) even.push_back(a);
    }
    std::vector<int> t(144);
    std::vector<std::string> names;
    auto pos = [&](int g) {
        return static_cast<int>(std::find(even.begin(), even.end(), g) - even.begin());
    };
    for (int i = 0; i < 12; ++i) {
        names.push_back(s4.element_name(even[static_cast<std::size_t>(i)]));
        for (int j = 0; j < 12; ++j)
            t[static_cast<std::size_t>(i) * 12 + j] =
                pos(s4.mul(even[static_cast<std::size_t>(i)], even[static_cast<std::size_t>(j)]));
    }
    return FiniteGroup(12, std::move(t), std::move(names), "A4");
}

inline FiniteGroup quaternion_group8() {
    // elements: 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign): 0..7
    auto enc = [](int axis, int neg) { return axis * 2 + neg; };  // axis 0=1,1=i,2=j,3=k
    // quaternion multiplication on axes with sign
    auto mulq = [&](int a, int b) {
        int ax = a / 2, an = a % 2, bx = b / 2, bn = b % 2;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        // sign[i][j] = 1 when e_i e_j = -e_{axis}
        return enc(axis[ax][bx], (an + bn + sign[ax][bx]) % 2);
    };
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[static_cast<std::size_t>(a) * 8 + b] = mulq(a, b);
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup(8, std::move(t), std::move(names), "Q8");
}

/// The non-abelian group of order m^3 generated by x, y with central z = [x,y]
/// and x^m = y^m = z^m = 1.  Elements are normal forms x^a y^b z^c encoded as
/// (a*m + b)*m + c.  The relation used throughout: y x = z^{-1} x y.
class HeisenbergGroup {
public:
    explicit HeisenbergGroup(int m) : m_(m), group_(build(m)) {
        if (m < 2) throw std::invalid_argument("heisenberg_group: m must be >= 2");
    }

    int m() const { return m_; }
    const FiniteGroup& group() const { return group_; }

    int encode(std::int64_t a, std::int64_t b, std::int64_t c) const {
        auto r = [&](std::int64_t v) { return static_cast<int>(((v % m_) + m_) % m_); };
        return (r(a) * m_ + r(b)) * m_ + r(c);
    }
    int x() const { return encode(1, 0, 0); }
    int y() const { return encode(0, 1, 0); }
    int z() const { return encode(0, 0, 1); }

private:
    static FiniteGroup build(int m) {
        if (m < 2) throw std::invalid_argument("heisenberg_group: m must be >= 2");
        int n = m * m * m;
        auto enc = [&](int a, int b, int c) { return (a * m + b) * m + c; };
        std::vector<int> t(static_cast<std::size_t>(n) * n);
        std::vector<std::string> names(static_cast<std::size_t>(n));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    names[static_cast<std::size_t>(enc(a, b, c))] = "x^" + std::to_string(a) +
                                                                    "y^" + std::to_string(b) +
                                                                    "z^" + std::to_string(c);
                    for (int a2 = 0; a2 < m; ++a2)
                        for (int b2 = 0; b2 < m; ++b2)
                            for (int c2 = 0; c2 < m; ++c2) {
                                // x^a y^b z^c * x^a' y^b' z^c' = x^{a+a'} y^{b+b'} z^{c+c'-a'b}
                                int cc = ((c + c2 - a2 * b) % m + m) % m;
                                t[static_cast<std::size_t>(enc(a, b, c)) * n +
                                  enc(a2, b2, c2)] = enc((a + a2) % m, (b + b2) % m, cc);
                            }
                }
        return FiniteGroup(n, std::move(t), std::move(names), "H(" + std::to_string(m) + ")");
    }

    int m_;
    FiniteGroup group_;
};

inline HeisenbergGroup heisenberg_group(int m) { return HeisenbergGroup(m); }

}  // namespace tautcx
