#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxhull/coxeter_matrix.hpp"

namespace coxhull {

/**
 * Element of a right-angled Coxeter group in canonical normal form: the
 * lexicographically least word among the commutation class of a reduced
 * word. Two words represent the same element iff their canonical forms
 * are equal.
 */
struct RAWord {
    Word letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool is_identity() const { return letters.empty(); }
    std::string str() const { return format_word(letters); }

    bool operator==(const RAWord& o) const { return letters == o.letters; }
    bool operator<(const RAWord& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

/// Reflections are canonical palindromes a s a^{-1}; same representation.
using RAReflection = RAWord;

/**
 * A right-angled Coxeter group given by its matrix. All operations work
 * on canonical reduced words; the group may be infinite, so everything
 * that enumerates is explicitly bounded.
 */
class RAGroup {
public:
    explicit RAGroup(CoxeterMatrix M) : m_(std::move(M)) {
        if (!m_.is_right_angled())
            throw std::invalid_argument("matrix is not right-angled");
    }

    const CoxeterMatrix& matrix() const { return m_; }
    int rank() const { return m_.rank(); }
    bool commutes(int s, int t) const { return s == t || m_.order(s, t) == 2; }

    /**
     * Reduces a word (cancelling equal letters that commutation can make
     * adjacent) and canonicalizes the result by greedily emitting the
     * smallest available letter.
     */
    RAWord normal_form(const Word& letters) const {
        std::vector<int> buf;
        for (int s : letters) {
            if (s < 1 || s > rank()) throw std::invalid_argument("generator index out of range");
            // Scan back over letters commuting with s; cancel an equal one.
            int cancel = -1;
            for (int i = static_cast<int>(buf.size()) - 1; i >= 0; --i) {
                if (buf[i] == s) {
                    cancel = i;
                    break;
                }
                if (!commutes(buf[i], s)) break;
            }
            if (cancel >= 0)
                buf.erase(buf.begin() + cancel);
            else
                buf.push_back(s);
        }
        return RAWord{canonicalize(buf)};
    }

    RAWord identity() const { return RAWord{}; }
    RAWord generator(int s) const { return normal_form({s}); }

    RAWord mul(const RAWord& a, const RAWord& b) const {
        Word w = a.letters;
        w.insert(w.end(), b.letters.begin(), b.letters.end());
        return normal_form(w);
    }

    RAWord mul_left(int s, const RAWord& w) const {
        Word v{s};
        v.insert(v.end(), w.letters.begin(), w.letters.end());
        return normal_form(v);
    }

    RAWord inverse(const RAWord& w) const {
        Word v(w.letters.rbegin(), w.letters.rend());
        return normal_form(v);
    }

    bool left_descent(int s, const RAWord& w) const {
        return mul_left(s, w).length() < w.length();
    }

    bool right_descent(const RAWord& w, int s) const {
        return mul(w, RAWord{{s}}).length() < w.length();
    }

    /// Canonical reflection w s w^{-1} as a palindrome in normal form.
    RAReflection conjugated_generator(const RAWord& w, int s) const {
        Word v = w.letters;
        v.push_back(s);
        v.insert(v.end(), w.letters.rbegin(), w.letters.rend());
        return normal_form(v);
    }

    /**
     * Inversion set from the prefixes of the canonical word. A repeated
     * prefix reflection would mean the word is not reduced, which cannot
     * happen for normal forms; it is checked loudly anyway.
     */
    std::set<RAReflection> inversions(const RAWord& w) const {
        std::set<RAReflection> out;
        Word prefix;
        for (int s : w.letters) {
            Word pal = prefix;
            pal.push_back(s);
            pal.insert(pal.end(), prefix.rbegin(), prefix.rend());
            auto [it, fresh] = out.insert(normal_form(pal));
            if (!fresh) throw std::logic_error("repeated prefix reflection in a reduced word");
            prefix.push_back(s);
        }
        return out;
    }

    bool leq_weak(const RAWord& u, const RAWord& v) const {
        auto tu = inversions(u);
        auto tv = inversions(v);
        return std::includes(tv.begin(), tv.end(), tu.begin(), tu.end());
    }

    /**
     * Weak-order meet by stripping common left descents, smallest
     * generator first. The defining property -- the inversion set of the
     * meet is the intersection of the inversion sets -- is asserted on
     * every call and a failure throws, so a wrong greedy choice can never
     * produce a silently wrong answer.
     */
    RAWord meet(const RAWord& u, const RAWord& v) const {
        Word prefix;
        RAWord uu = u, vv = v;
        bool stripped = true;
        while (stripped) {
            stripped = false;
            for (int s = 1; s <= rank(); ++s) {
                if (left_descent(s, uu) && left_descent(s, vv)) {
                    uu = mul_left(s, uu);
                    vv = mul_left(s, vv);
                    prefix.push_back(s);
                    stripped = true;
                    break;
                }
            }
        }
        RAWord result = normal_form(prefix);

        auto want = intersect(inversions(u), inversions(v));
        if (inversions(result) != want)
            throw std::logic_error("meet postcondition failed: inversion sets do not intersect");
        return result;
    }

    /**
     * Hull members {x : D subset T_L(x) subset A} for A the union and D the
     * intersection of the generators' inversion sets. Search goes upward
     * from the identity, extending only while the appended prefix
     * reflection stays inside A; every member has length at most |A|, so
     * the search is finite even though the group need not be.
     */
    std::vector<RAWord> hull(const std::vector<RAWord>& xs) const {
        if (xs.empty()) throw std::invalid_argument("hull of an empty element list");
        std::set<RAReflection> upper = inversions(xs.front());
        std::set<RAReflection> lower = upper;
        for (size_t i = 1; i < xs.size(); ++i) {
            auto t = inversions(xs[i]);
            std::set<RAReflection> u2, l2;
            std::set_union(upper.begin(), upper.end(), t.begin(), t.end(),
                           std::inserter(u2, u2.begin()));
            std::set_intersection(lower.begin(), lower.end(), t.begin(), t.end(),
                                  std::inserter(l2, l2.begin()));
            upper = std::move(u2);
            lower = std::move(l2);
        }

        std::set<RAWord> seen;
        std::deque<RAWord> queue;
        seen.insert(identity());
        queue.push_back(identity());
        while (!queue.empty()) {
            RAWord x = queue.front();
            queue.pop_front();
            for (int s = 1; s <= rank(); ++s) {
                RAWord xs2 = mul(x, RAWord{{s}});
                if (xs2.length() <= x.length()) continue;
                if (!upper.count(conjugated_generator(x, s))) continue;
                if (seen.insert(xs2).second) queue.push_back(xs2);
            }
        }

        std::vector<RAWord> members;
        for (const auto& x : seen) {
            auto t = inversions(x);
            if (std::includes(t.begin(), t.end(), lower.begin(), lower.end()))
                members.push_back(x);
        }
        return members;  // std::set order: by length, then lexicographic
    }

    struct RAInjectionReport {
        uint64_t domain_size = 0;
        uint64_t codomain_bound = 0;
        bool injective = true;
        bool components_in_intervals = true;
        std::optional<std::pair<RAWord, RAWord>> collision;  // two preimages
    };

    /// x -> (x meet u, x meet v) on conv(id, u, v), checked for injectivity
    /// and for both components landing in the claimed intervals.
    RAInjectionReport injection_check(const RAWord& u, const RAWord& v) const {
        RAInjectionReport rep;
        auto members = hull({identity(), u, v});
        rep.codomain_bound =
            uint64_t(hull({identity(), u}).size()) * hull({identity(), v}).size();
        std::map<std::pair<RAWord, RAWord>, RAWord> seen;
        for (const auto& x : members) {
            ++rep.domain_size;
            RAWord mu = meet(x, u);
            RAWord mv = meet(x, v);
            if (!leq_weak(mu, u) || !leq_weak(mv, v)) rep.components_in_intervals = false;
            auto key = std::make_pair(mu, mv);
            auto [it, fresh] = seen.emplace(key, x);
            if (!fresh) {
                rep.injective = false;
                rep.collision = std::make_pair(it->second, x);
                return rep;
            }
        }
        return rep;
    }

    /// Minimal coset representative: strips right descents lying in J.
    RAWord min_coset_rep(const RAWord& w, const std::vector<int>& J) const {
        RAWord cur = w;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int s : J) {
                if (right_descent(cur, s)) {
                    cur = mul(cur, RAWord{{s}});
                    moved = true;
                    break;
                }
            }
        }
        return cur;
    }

    /// All elements of length <= radius (finite for bounded radius).
    std::vector<RAWord> ball(int radius) const {
        std::set<RAWord> seen;
        std::deque<RAWord> queue;
        seen.insert(identity());
        queue.push_back(identity());
        while (!queue.empty()) {
            RAWord x = queue.front();
            queue.pop_front();
            if (x.length() >= radius) continue;
            for (int s = 1; s <= rank(); ++s) {
                RAWord y = mul(x, RAWord{{s}});
                if (y.length() > x.length() && seen.insert(y).second) queue.push_back(y);
            }
        }
        return {seen.begin(), seen.end()};
    }

private:
    static std::set<RAReflection> intersect(const std::set<RAReflection>& a,
                                            const std::set<RAReflection>& b) {
        std::set<RAReflection> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::inserter(out, out.begin()));
        return out;
    }

    /// Lexicographically least word in the commutation class: repeatedly
    /// emit the smallest letter whose earlier letters all commute with it.
    Word canonicalize(std::vector<int> buf) const {
        Word out;
        out.reserve(buf.size());
        while (!buf.empty()) {
            int pick = -1;
            for (size_t i = 0; i < buf.size(); ++i) {
                bool movable = true;
                for (size_t j = 0; j < i; ++j)
                    if (!commutes(buf[j], buf[i])) {
                        movable = false;
                        break;
                    }
                if (movable && (pick < 0 || buf[i] < buf[pick])) pick = static_cast<int>(i);
            }
            out.push_back(buf[pick]);
            buf.erase(buf.begin() + pick);
        }
        return out;
    }

    CoxeterMatrix m_;
};

}  // namespace coxhull
