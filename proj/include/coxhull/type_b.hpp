#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxhull/permutation.hpp"

namespace coxhull {

/**
 * Signed permutation of {-n..-1, 1..n} in one-line notation w(1)..w(n);
 * the action on negatives is forced by w(-i) = -w(i).
 */
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        const int n = size();
        std::vector<bool> seen(n, false);
        for (int v : w_) {
            int a = std::abs(v);
            if (a < 1 || a > n || seen[a - 1])
                throw std::invalid_argument("not a signed permutation one-line array");
            seen[a - 1] = true;
        }
        inv_.assign(n, 0);
        for (int i = 1; i <= n; ++i) {
            int v = w_[i - 1];
            inv_[std::abs(v) - 1] = v > 0 ? i : -i;
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return SignedPermutation(std::move(w));
    }

    /// The longest element: every entry negated.
    static SignedPermutation longest(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = -(i + 1);
        return SignedPermutation(std::move(w));
    }

    /// Parses space-separated signed entries, e.g. "4 -2 1 3".
    static SignedPermutation parse(const std::string& s) {
        Word tokens = parse_word(s);
        return SignedPermutation(std::vector<int>(tokens.begin(), tokens.end()));
    }

    int size() const { return static_cast<int>(w_.size()); }

    /// Signed evaluation: i may be any of +-1..+-n.
    int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }

    /// Signed position of a value: w(inv(v)) = v.
    int inv(int v) const { return v > 0 ? inv_[v - 1] : -inv_[-v - 1]; }

    const std::vector<int>& one_line() const { return w_; }

    SignedPermutation compose(const SignedPermutation& other) const {
        std::vector<int> w(size());
        for (int k = 1; k <= size(); ++k) w[k - 1] = (*this)(other(k));
        return SignedPermutation(std::move(w));
    }

    SignedPermutation inverse() const {
        // Positions of values are exactly the inverse one-line.
        return SignedPermutation(inv_);
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(w_[i]);
        }
        return out;
    }

    bool operator==(const SignedPermutation& o) const { return w_ == o.w_; }
    bool operator<(const SignedPermutation& o) const { return w_ < o.w_; }

private:
    std::vector<int> w_;
    std::vector<int> inv_;
};

/// All of B_n: permutations in lex order, sign patterns per permutation,
/// with the identity first.
inline std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations(n)) {
        for (uint32_t signs = 0; signs < (uint32_t(1) << n); ++signs) {
            std::vector<int> w = p.one_line();
            for (int i = 0; i < n; ++i)
                if (signs & (uint32_t(1) << i)) w[i] = -w[i];
            out.push_back(SignedPermutation(std::move(w)));
        }
    }
    return out;
}

/// Canonical reflection bit order over B_n: the pair swaps t_{i,j} first,
/// then the sign-mixing t_{i,-j}, then the sign changes t_{i,-i}.
inline int signed_pair_bit(int i, int j, int n) { return pair_bit(i, j, n); }
inline int signed_mixed_bit(int i, int j, int n) { return num_pair_bits(n) + pair_bit(i, j, n); }
inline int signed_flip_bit(int i, int n) { return 2 * num_pair_bits(n) + (i - 1); }
inline int num_signed_bits(int n) { return n * n; }

inline uint64_t inversion_mask(const SignedPermutation& w) {
    const int n = w.size();
    uint64_t m = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w.inv(i) > w.inv(j)) m |= uint64_t(1) << signed_pair_bit(i, j, n);
            if (w.inv(i) < w.inv(-j)) m |= uint64_t(1) << signed_mixed_bit(i, j, n);
        }
        if (w.inv(i) < 0) m |= uint64_t(1) << signed_flip_bit(i, n);
    }
    return m;
}

/// Right multiplication by generator s: s = 1 negates position 1,
/// s = k >= 2 swaps positions k-1 and k.
inline SignedPermutation right_mult_gen(const SignedPermutation& w, int s) {
    std::vector<int> v = w.one_line();
    if (s == 1) {
        v[0] = -v[0];
    } else {
        std::swap(v[s - 2], v[s - 1]);
    }
    return SignedPermutation(std::move(v));
}

/// Reduced word over the B_n generators, by stripping right descents
/// (smallest generator first).
inline Word reduced_word(const SignedPermutation& w) {
    Word letters;
    std::vector<int> v = w.one_line();
    const int n = w.size();
    bool moved = true;
    while (moved) {
        moved = false;
        if (v[0] < 0) {
            v[0] = -v[0];
            letters.push_back(1);
            moved = true;
            continue;
        }
        for (int k = 2; k <= n; ++k)
            if (v[k - 2] > v[k - 1]) {
                std::swap(v[k - 2], v[k - 1]);
                letters.push_back(k);
                moved = true;
                break;
            }
    }
    for (int i = 0; i < n; ++i)
        if (v[i] != i + 1) throw std::logic_error("descent stripping did not reach the identity");
    std::reverse(letters.begin(), letters.end());
    return letters;
}

/**
 * Centrally symmetric poset on the 2n signed labels +-1..+-n:
 * p_i < p_j forces p_{-j} < p_{-i}. Stored as the full strict order.
 */
class TypeBPoset {
public:
    TypeBPoset(int n, const std::vector<std::pair<int, int>>& relations, bool symmetrize = false)
        : n_(n), less_(4 * n * n, false) {
        for (auto [i, j] : relations) {
            check_label(i);
            check_label(j);
            if (i == j) throw std::invalid_argument("type B poset relation p_i < p_i");
            less_[pos(i, j)] = true;
            if (symmetrize) less_[pos(-j, -i)] = true;
        }
        close();
        for (int i : labels())
            for (int j : labels())
                if (less(i, j) && !less(-j, -i))
                    throw std::invalid_argument("relations are not centrally symmetric");
    }

    static TypeBPoset from_json(const nlohmann::json& j, bool symmetrize = false) {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> covers;
        for (const auto& c : j.at("covers"))
            covers.emplace_back(c[0].get<int>(), c[1].get<int>());
        return TypeBPoset(n, covers, symmetrize);
    }

    static TypeBPoset load_file(const std::string& path, bool symmetrize = false) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open poset file: " + path);
        nlohmann::json j;
        in >> j;
        return from_json(j, symmetrize);
    }

    int n() const { return n_; }
    int num_elements() const { return 2 * n_; }

    std::vector<int> labels() const {
        std::vector<int> out;
        for (int i = 1; i <= n_; ++i) out.push_back(i);
        for (int i = 1; i <= n_; ++i) out.push_back(-i);
        return out;
    }

    /// Dense index of a signed label.
    int idx(int label) const { return label > 0 ? label - 1 : n_ + (-label) - 1; }

    bool less(int i, int j) const { return less_[pos(i, j)]; }

    bool is_maximal(int i) const {
        for (int j : labels())
            if (less(i, j)) return false;
        return true;
    }

    /// Lower covers of label j, in label-index order.
    std::vector<int> lower_covers(int j) const {
        std::vector<int> out;
        for (int i : labels()) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (int k : labels())
                if (less(i, k) && less(k, j)) {
                    cover = false;
                    break;
                }
            if (cover) out.push_back(i);
        }
        return out;
    }

    bool operator==(const TypeBPoset& o) const { return n_ == o.n_ && less_ == o.less_; }
    bool operator<(const TypeBPoset& o) const {
        return n_ != o.n_ ? n_ < o.n_ : less_ < o.less_;
    }

private:
    size_t pos(int i, int j) const { return size_t(idx(i)) * 2 * n_ + idx(j); }
    void check_label(int i) const {
        if (i == 0 || std::abs(i) > n_)
            throw std::invalid_argument("type B poset label out of range");
    }
    void close() {
        auto ls = labels();
        for (int k : ls)
            for (int i : ls)
                if (less(i, k))
                    for (int j : ls)
                        if (less(k, j)) less_[pos(i, j)] = true;
        for (int i : ls)
            if (less(i, i)) throw std::invalid_argument("relations contain a cycle");
    }

    int n_;
    std::vector<char> less_;
};

/// Common-order poset of a set of signed permutations; the central
/// symmetry of the result is structural and re-checked by the constructor.
inline TypeBPoset typeb_poset(const std::vector<SignedPermutation>& U) {
    if (U.empty()) throw std::invalid_argument("typeb_poset of an empty set");
    const int n = U.front().size();
    for (const auto& u : U)
        if (u.size() != n) throw std::invalid_argument("signed permutations of unequal size");
    std::vector<std::pair<int, int>> rel;
    std::vector<int> ls;
    for (int i = 1; i <= n; ++i) ls.push_back(i);
    for (int i = 1; i <= n; ++i) ls.push_back(-i);
    for (int i : ls)
        for (int j : ls) {
            if (i == j) continue;
            bool all = true;
            for (const auto& u : U)
                if (u.inv(i) >= u.inv(j)) {
                    all = false;
                    break;
                }
            if (all) rel.emplace_back(i, j);
        }
    return TypeBPoset(n, rel);
}

inline TypeBPoset typeb_poset(const SignedPermutation& u) {
    return typeb_poset({SignedPermutation::identity(u.size()), u});
}

/**
 * Antisymmetric order-preserving bijection to the signed values; stored
 * as the value at each dense index (0 marks a hole during restriction).
 */
struct TypeBExtension {
    std::vector<int> values;

    SignedPermutation pi(const TypeBPoset& P) const {
        const int n = P.n();
        std::vector<int> w(n, 0);
        for (int label : P.labels()) {
            int v = values[P.idx(label)];
            if (v > 0) w[v - 1] = label;
        }
        return SignedPermutation(std::move(w));
    }

    bool operator==(const TypeBExtension& o) const { return values == o.values; }
    bool operator<(const TypeBExtension& o) const { return values < o.values; }
};

inline bool is_typeb_extension(const TypeBPoset& P, const TypeBExtension& lam) {
    const int n = P.n();
    if (static_cast<int>(lam.values.size()) != 2 * n) return false;
    std::vector<bool> seen(n, false);
    for (int i = 1; i <= n; ++i) {
        int v = lam.values[P.idx(i)];
        if (v == 0 || std::abs(v) > n || seen[std::abs(v) - 1]) return false;
        seen[std::abs(v) - 1] = true;
        if (lam.values[P.idx(-i)] != -v) return false;
    }
    for (int i : P.labels())
        for (int j : P.labels())
            if (P.less(i, j) && lam.values[P.idx(i)] >= lam.values[P.idx(j)]) return false;
    return true;
}

namespace detail {

// Peels maximal elements downward: assigns value v to a maximal active
// label and -v to its mirror, recursing with v - 1.
template <class Fn>
void walk_typeb(const TypeBPoset& P, std::vector<bool>& active, std::vector<int>& vals, int v,
                Fn&& emit) {
    if (v == 0) {
        emit(vals);
        return;
    }
    for (int a : P.labels()) {
        if (!active[P.idx(a)]) continue;
        bool maximal = true;
        for (int c : P.labels())
            if (active[P.idx(c)] && P.less(a, c)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        active[P.idx(a)] = active[P.idx(-a)] = false;
        vals[P.idx(a)] = v;
        vals[P.idx(-a)] = -v;
        walk_typeb(P, active, vals, v - 1, emit);
        active[P.idx(a)] = active[P.idx(-a)] = true;
        vals[P.idx(a)] = vals[P.idx(-a)] = 0;
    }
}

}  // namespace detail

/// Complete enumeration, sorted lexicographically by value array.
inline std::vector<TypeBExtension> typeb_linear_extensions(const TypeBPoset& P) {
    std::vector<TypeBExtension> out;
    std::vector<bool> active(2 * P.n(), true);
    std::vector<int> vals(2 * P.n(), 0);
    detail::walk_typeb(P, active, vals, P.n(),
                       [&](const std::vector<int>& v) { out.push_back({v}); });
    std::sort(out.begin(), out.end());
    return out;
}

inline uint64_t count_typeb_extensions(const TypeBPoset& P) {
    uint64_t count = 0;
    std::vector<bool> active(2 * P.n(), true);
    std::vector<int> vals(2 * P.n(), 0);
    detail::walk_typeb(P, active, vals, P.n(), [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Extensions of P minus the pair {p_k, p_-k}, with holes (0) at that pair.
inline std::vector<TypeBExtension> typeb_extensions_excluding(const TypeBPoset& P, int k) {
    std::vector<TypeBExtension> out;
    std::vector<bool> active(2 * P.n(), true);
    active[P.idx(k)] = active[P.idx(-k)] = false;
    std::vector<int> vals(2 * P.n(), 0);
    detail::walk_typeb(P, active, vals, P.n() - 1,
                       [&](const std::vector<int>& v) { out.push_back({v}); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/**
 * Moves the value at label `a` upward: repeatedly swaps with the active
 * strictly greater element of smallest value, mirroring every swap on the
 * negated labels. When the chosen element is the mirror of `a` itself the
 * two swaps coincide and only one is applied.
 */
inline void typeb_bubble_up(const TypeBPoset& P, const std::vector<bool>& active,
                            std::vector<int>& vals, int a) {
    while (true) {
        int b = 0;
        int best = 0;
        bool have = false;
        for (int c : P.labels()) {
            if (!active[P.idx(c)] || !P.less(a, c)) continue;
            if (!have || vals[P.idx(c)] < best) {
                have = true;
                best = vals[P.idx(c)];
                b = c;
            }
        }
        if (!have) break;  // a is maximal among active elements
        std::swap(vals[P.idx(a)], vals[P.idx(b)]);
        if (b != -a) std::swap(vals[P.idx(-a)], vals[P.idx(-b)]);
        a = b;
    }
}

}  // namespace detail

/// Bubble-up embedding of an extension of P minus {p_k, p_-k} into B(P).
inline TypeBExtension typeb_phi(const TypeBPoset& P, int k, const TypeBExtension& sub) {
    const int n = P.n();
    if (static_cast<int>(sub.values.size()) != 2 * n || sub.values[P.idx(k)] != 0 ||
        sub.values[P.idx(-k)] != 0)
        throw std::invalid_argument("typeb_phi: input must leave exactly the pair +-k unvalued");
    std::vector<int> vals = sub.values;
    vals[P.idx(k)] = n;
    vals[P.idx(-k)] = -n;
    std::vector<bool> active(2 * n, true);
    detail::typeb_bubble_up(P, active, vals, k);
    return {vals};
}

/**
 * The type B insertion map: step k activates the pair {p_{w(k)}, p_{-w(k)}},
 * gives them the values +-k, and bubbles the positive value up within the
 * active restriction.
 */
inline TypeBExtension typeb_insert(const TypeBPoset& P, const SignedPermutation& w) {
    const int n = P.n();
    if (w.size() != n)
        throw std::invalid_argument("typeb_insert: poset and permutation sizes differ");
    std::vector<int> vals(2 * n, 0);
    std::vector<bool> active(2 * n, false);
    for (int k = 1; k <= n; ++k) {
        int a = w(k);
        active[P.idx(a)] = active[P.idx(-a)] = true;
        vals[P.idx(a)] = k;
        vals[P.idx(-a)] = -k;
        detail::typeb_bubble_up(P, active, vals, a);
    }
    return {vals};
}

/**
 * Promotion chain of a type B extension: the path of the top value under
 * repeated swaps with the largest-valued lower cover, each swap mirrored
 * on the negated labels.
 */
inline std::vector<int> typeb_promotion_chain(const TypeBPoset& P, const TypeBExtension& lam) {
    const int n = P.n();
    std::vector<int> vals = lam.values;
    int t = 0;
    for (int label : P.labels())
        if (vals[P.idx(label)] == n) t = label;
    std::vector<int> chain{t};
    while (true) {
        int next = 0, best = 0;
        bool have = false;
        for (int c : P.lower_covers(t)) {
            if (!have || vals[P.idx(c)] > best) {
                have = true;
                best = vals[P.idx(c)];
                next = c;
            }
        }
        if (!have) break;
        std::swap(vals[P.idx(t)], vals[P.idx(next)]);
        if (next != -t) std::swap(vals[P.idx(-t)], vals[P.idx(-next)]);
        chain.push_back(next);
        t = next;
    }
    return chain;
}

struct CollisionB {
    TypeBExtension lhs, rhs;
    TypeBExtension image_first, image_second;
};

struct InjectionReportB {
    uint64_t domain_size = 0;
    uint64_t codomain_bound = 0;
    bool injective = true;
    std::optional<CollisionB> collision;
};

/// Type B analog of theorem_injection, certified exhaustively.
inline InjectionReportB typeb_injection(const SignedPermutation& w, const SignedPermutation& u) {
    if (w.size() != u.size()) throw std::invalid_argument("signed permutations of unequal size");
    const SignedPermutation id = SignedPermutation::identity(w.size());
    const SignedPermutation wu = w.compose(u);
    const TypeBPoset P = typeb_poset({id, w, wu});
    const TypeBPoset Pw = typeb_poset({id, w});
    const TypeBPoset wPu = typeb_poset({w, wu});

    InjectionReportB rep;
    rep.codomain_bound = count_typeb_extensions(Pw) * count_typeb_extensions(wPu);
    std::map<std::pair<std::vector<int>, std::vector<int>>, TypeBExtension> seen;
    for (const auto& lam : typeb_linear_extensions(P)) {
        ++rep.domain_size;
        SignedPermutation pi = lam.pi(P);
        TypeBExtension a = typeb_insert(Pw, pi);
        TypeBExtension b = typeb_insert(wPu, pi);
        auto key = std::make_pair(a.values, b.values);
        auto [it, fresh] = seen.emplace(key, lam);
        if (!fresh) {
            rep.injective = false;
            rep.collision = CollisionB{it->second, lam, a, b};
            return rep;
        }
    }
    return rep;
}

struct SidorenkoReportB {
    bool holds = true;
    double min_ratio = 0.0;
    SignedPermutation argmin = SignedPermutation::identity(1);
    uint64_t checked = 0;
};

/// Extension-count product of each signed inversion poset and its
/// negated-companion against 2^n n!, over all of B_n.
inline SidorenkoReportB typeb_sidorenko_check(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("typeb_sidorenko_check supports n in 1..4");
    uint64_t group_order = 1;
    for (int k = 2; k <= n; ++k) group_order *= k;
    group_order <<= n;
    SidorenkoReportB rep;
    rep.min_ratio = -1.0;
    const SignedPermutation w0 = SignedPermutation::longest(n);
    for (const auto& w : all_signed_permutations(n)) {
        uint64_t e1 = count_typeb_extensions(typeb_poset(w));
        uint64_t e2 = count_typeb_extensions(typeb_poset(w.compose(w0)));
        double ratio = double(e1) * double(e2) / double(group_order);
        if (rep.min_ratio < 0 || ratio < rep.min_ratio) {
            rep.min_ratio = ratio;
            rep.argmin = w;
        }
        if (e1 * e2 < group_order) rep.holds = false;
        ++rep.checked;
    }
    return rep;
}

/**
 * Every type B poset on 2n labeled elements, enumerated over the orbits of
 * element pairs under the central symmetry and filtered for transitivity.
 * Exhaustive for n <= 3.
 */
inline std::vector<TypeBPoset> all_typeb_posets(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("all_typeb_posets supports n <= 3");
    std::vector<int> ls;
    for (int i = 1; i <= n; ++i) ls.push_back(i);
    for (int i = 1; i <= n; ++i) ls.push_back(-i);

    // Orbit representatives of unordered pairs under {a,b} -> {-a,-b}.
    std::vector<std::pair<int, int>> orbits;
    std::set<std::pair<int, int>> taken;
    auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (size_t x = 0; x < ls.size(); ++x)
        for (size_t y = x + 1; y < ls.size(); ++y) {
            auto p = norm(ls[x], ls[y]);
            auto q = norm(-ls[x], -ls[y]);
            if (taken.count(p) || taken.count(q)) continue;
            taken.insert(p);
            taken.insert(q);
            orbits.push_back(p);
        }

    std::vector<TypeBPoset> out;
    std::vector<int> state(orbits.size(), 0);
    const int N = 2 * n;
    auto idx = [&](int label) { return label > 0 ? label - 1 : n + (-label) - 1; };
    while (true) {
        std::vector<std::vector<bool>> rel(N, std::vector<bool>(N, false));
        for (size_t k = 0; k < orbits.size(); ++k) {
            auto [a, b] = orbits[k];
            if (state[k] == 1) {
                rel[idx(a)][idx(b)] = true;
                rel[idx(-b)][idx(-a)] = true;
            } else if (state[k] == 2) {
                rel[idx(b)][idx(a)] = true;
                rel[idx(-a)][idx(-b)] = true;
            }
        }
        bool ok = true;
        for (int a = 0; a < N && ok; ++a)
            for (int b = 0; b < N && ok; ++b) {
                if (rel[a][b] && rel[b][a]) ok = false;
                if (!ok) break;
                if (!rel[a][b]) continue;
                for (int c = 0; c < N; ++c)
                    if (rel[b][c] && !rel[a][c]) {
                        ok = false;
                        break;
                    }
            }
        if (ok) {
            std::vector<std::pair<int, int>> relations;
            for (int a : ls)
                for (int b : ls)
                    if (rel[idx(a)][idx(b)]) relations.emplace_back(a, b);
            out.push_back(TypeBPoset(n, relations));
        }
        size_t k = 0;
        while (k < state.size() && state[k] == 2) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
    return out;
}

/// The hyperoctahedral group as a mask backend (identity at index 0).
struct BnBackend {
    int n = 0;
    std::vector<SignedPermutation> elements;
    std::vector<uint64_t> masks;

    size_t size() const { return elements.size(); }
    uint64_t inversion_mask(uint32_t i) const { return masks[i]; }

    uint32_t index_of(const SignedPermutation& p) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == p) return static_cast<uint32_t>(i);
        throw std::invalid_argument("signed permutation not in backend");
    }
};

inline BnBackend make_bn(int n) {
    BnBackend b;
    b.n = n;
    b.elements = all_signed_permutations(n);
    b.masks.reserve(b.elements.size());
    for (const auto& p : b.elements) b.masks.push_back(inversion_mask(p));
    return b;
}

}  // namespace coxhull
