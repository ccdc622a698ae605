#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coxhull/poset.hpp"

namespace coxhull {

/**
 * Common-order poset of a set of permutations: p_i < p_j exactly when
 * every u in U places i before j. For U = {id, u} this is the inversion
 * poset of u; for U = {w, wu} it is that poset with labels permuted by w.
 */
inline Poset inversion_poset(const std::vector<Permutation>& U) {
    if (U.empty()) throw std::invalid_argument("inversion_poset of an empty set");
    const int n = U.front().size();
    for (const auto& u : U)
        if (u.size() != n) throw std::invalid_argument("permutations of unequal size");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool all = true;
            for (const auto& u : U)
                if (u.inv(i) >= u.inv(j)) {
                    all = false;
                    break;
                }
            if (all) rel.emplace_back(i, j);
        }
    return Poset(n, rel);
}

inline Poset inversion_poset(const Permutation& u) {
    return inversion_poset({Permutation::identity(u.size()), u});
}

/**
 * The insertion map: scans w left to right, giving p_{w(k)} the value k
 * and then bubbling that value upward. The bubble step swaps with the
 * already-valued strictly greater element of smallest value; that element
 * is automatically a cover inside the valued subposet.
 */
inline LinearExtension insert(const Poset& P, const Permutation& w) {
    const int n = P.size();
    if (w.size() != n) throw std::invalid_argument("insert: poset and permutation sizes differ");
    std::vector<int> vals(n, 0);  // 0 = not yet valued
    for (int k = 1; k <= n; ++k) {
        int a = w(k);
        vals[a - 1] = k;
        while (true) {
            int b = 0, best = n + 1;
            for (int c = 1; c <= n; ++c)
                if (vals[c - 1] != 0 && P.less(a, c) && vals[c - 1] < best) {
                    best = vals[c - 1];
                    b = c;
                }
            if (b == 0) break;  // a is maximal among valued elements
            std::swap(vals[a - 1], vals[b - 1]);
            a = b;
        }
    }
    return {vals};
}

/**
 * Promotion chain of a linear extension: start at the element with value n
 * and repeatedly descend to the lower cover with the largest value,
 * stopping at a minimal element.
 */
inline std::vector<int> promotion_chain(const Poset& P, const LinearExtension& lam) {
    int t = 0;
    for (int i = 1; i <= P.size(); ++i)
        if (lam.value_at(i) == P.size()) t = i;
    std::vector<int> chain{t};
    while (true) {
        int next = 0, best = 0;
        for (int c : P.lower_covers(t))
            if (lam.value_at(c) > best) {
                best = lam.value_at(c);
                next = c;
            }
        if (next == 0) break;
        chain.push_back(next);
        t = next;
    }
    return chain;
}

/**
 * Extensions of P with p_i removed, encoded over P's own indexing with a
 * 0 at position i and values 1..n-1 elsewhere.
 */
inline std::vector<LinearExtension> linear_extensions_excluding(const Poset& P, int i) {
    const int n = P.size();
    std::vector<std::pair<int, int>> rel;
    std::vector<int> keep;  // old labels, ascending
    for (int a = 1; a <= n; ++a)
        if (a != i) keep.push_back(a);
    for (int a : keep)
        for (int b : keep)
            if (P.less(a, b))
                rel.emplace_back(
                    int(std::lower_bound(keep.begin(), keep.end(), a) - keep.begin()) + 1,
                    int(std::lower_bound(keep.begin(), keep.end(), b) - keep.begin()) + 1);
    Poset sub(n - 1, rel);
    std::vector<LinearExtension> out;
    for (const auto& lam : linear_extensions(sub)) {
        std::vector<int> vals(n, 0);
        for (int k = 0; k < n - 1; ++k) vals[keep[k] - 1] = lam.values[k];
        out.push_back({vals});
    }
    return out;
}

/**
 * Bubble-up embedding of an extension of P minus p_i into the extensions
 * of P: give p_i the value n and swap upward as in the insertion map.
 * The input carries a 0 at position i (see linear_extensions_excluding).
 */
inline LinearExtension phi(const Poset& P, int i, const LinearExtension& sub) {
    const int n = P.size();
    if (static_cast<int>(sub.values.size()) != n || sub.value_at(i) != 0)
        throw std::invalid_argument("phi: input must leave exactly p_i unvalued");
    std::vector<int> vals = sub.values;
    vals[i - 1] = n;
    int a = i;
    while (true) {
        int b = 0, best = n + 1;
        for (int c = 1; c <= n; ++c)
            if (P.less(a, c) && vals[c - 1] != 0 && vals[c - 1] < best) {
                best = vals[c - 1];
                b = c;
            }
        if (b == 0) break;
        std::swap(vals[a - 1], vals[b - 1]);
        a = b;
    }
    return {vals};
}

struct CollisionA {
    LinearExtension lhs, rhs;      // two domain extensions with equal images
    LinearExtension image_first, image_second;
};

struct InjectionReportA {
    uint64_t domain_size = 0;
    uint64_t codomain_bound = 0;  // e(P_w) * e(wP_u)
    bool injective = true;
    std::optional<CollisionA> collision;
};

/**
 * The two-sided insertion of the triple poset of {id, w, wu} into
 * extensions of the posets of {id, w} and {w, wu}; injectivity is
 * certified by exhaustive image comparison.
 */
inline InjectionReportA theorem_injection(const Permutation& w, const Permutation& u) {
    if (w.size() != u.size()) throw std::invalid_argument("permutations of unequal size");
    const Permutation id = Permutation::identity(w.size());
    const Permutation wu = w.compose(u);
    const Poset P = inversion_poset({id, w, wu});
    const Poset Pw = inversion_poset({id, w});
    const Poset wPu = inversion_poset({w, wu});

    InjectionReportA rep;
    rep.codomain_bound = count_linear_extensions(Pw) * count_linear_extensions(wPu);
    std::map<std::pair<std::vector<int>, std::vector<int>>, LinearExtension> seen;
    for (const auto& lam : linear_extensions(P)) {
        ++rep.domain_size;
        Permutation pi = lam.pi();
        LinearExtension a = insert(Pw, pi);
        LinearExtension b = insert(wPu, pi);
        auto key = std::make_pair(a.values, b.values);
        auto [it, fresh] = seen.emplace(key, lam);
        if (!fresh) {
            rep.injective = false;
            rep.collision = CollisionA{it->second, lam, a, b};
            return rep;
        }
    }
    return rep;
}

struct SidorenkoReport {
    bool holds = true;
    double min_ratio = 0.0;
    Permutation argmin = Permutation::identity(1);
    uint64_t checked = 0;
};

/// Product of extension counts of each inversion poset and its complement
/// against n!, over all of S_n.
inline SidorenkoReport sidorenko_check(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("sidorenko_check supports n in 1..7");
    uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    SidorenkoReport rep;
    rep.min_ratio = -1.0;
    for (const auto& w : all_permutations(n)) {
        uint64_t e1 = count_linear_extensions(inversion_poset(w));
        uint64_t e2 = count_linear_extensions(inversion_poset(w.reversed()));
        double ratio = double(e1) * double(e2) / double(factorial);
        if (rep.min_ratio < 0 || ratio < rep.min_ratio) {
            rep.min_ratio = ratio;
            rep.argmin = w;
        }
        if (e1 * e2 < factorial) rep.holds = false;
        ++rep.checked;
    }
    return rep;
}

/**
 * The symmetric group as a mask backend: all of S_n in lexicographic
 * one-line order (identity first), inversion sets as pair bit masks.
 */
struct SnBackend {
    int n = 0;
    std::vector<Permutation> elements;
    std::vector<uint64_t> masks;

    size_t size() const { return elements.size(); }
    uint64_t inversion_mask(uint32_t i) const { return masks[i]; }

    uint32_t index_of(const Permutation& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || !(*it == p))
            throw std::invalid_argument("permutation not in backend");
        return static_cast<uint32_t>(it - elements.begin());
    }
};

inline SnBackend make_sn(int n) {
    SnBackend b;
    b.n = n;
    b.elements = all_permutations(n);
    b.masks.reserve(b.elements.size());
    for (const auto& p : b.elements) b.masks.push_back(inversion_mask(p));
    return b;
}

}  // namespace coxhull
