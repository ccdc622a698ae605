#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxhull/coxeter_matrix.hpp"

namespace coxhull {

/// Permutation of [n] in one-line notation, with the inverse cached.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        const int n = size();
        inv_.assign(n, 0);
        std::vector<bool> seen(n, false);
        for (int i = 1; i <= n; ++i) {
            int v = w_[i - 1];
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("not a permutation one-line array");
            seen[v - 1] = true;
            inv_[v - 1] = i;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// Parses "45312" (digits) or "4 5 3 1 2" (space separated).
    static Permutation parse(const std::string& s) {
        std::vector<int> w;
        if (s.find(' ') == std::string::npos && s.find('-') == std::string::npos) {
            for (char c : s) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit string");
                w.push_back(c - '0');
            }
        } else {
            Word tokens = parse_word(s);
            w.assign(tokens.begin(), tokens.end());
        }
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    /// Position of value v: w(inv(v)) = v.
    int inv(int v) const { return inv_[v - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    /// Function composition: (this o other)(k) = this(other(k)).
    Permutation compose(const Permutation& other) const {
        std::vector<int> w(size());
        for (int k = 1; k <= size(); ++k) w[k - 1] = (*this)(other(k));
        return Permutation(std::move(w));
    }

    Permutation inverse() const { return Permutation(inv_); }

    /// One-line array reversed; equals this * w0.
    Permutation reversed() const {
        std::vector<int> w(w_.rbegin(), w_.rend());
        return Permutation(std::move(w));
    }

    std::string str() const {
        std::string out;
        bool digits = size() <= 9;
        for (int i = 0; i < size(); ++i) {
            if (!digits && i) out += ' ';
            out += std::to_string(w_[i]);
        }
        return out;
    }

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

private:
    std::vector<int> w_;
    std::vector<int> inv_;
};

/// All permutations of [n] in lexicographic one-line order (identity first).
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Canonical bit position of the reflection swapping i < j, over [n].
inline int pair_bit(int i, int j, int n) {
    // Pairs (1,2),(1,3),...,(1,n),(2,3),... in order.
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

inline int num_pair_bits(int n) { return n * (n - 1) / 2; }

/// Inversion set of w as a bit mask: bit (i,j) set iff i appears after j.
inline uint64_t inversion_mask(const Permutation& w) {
    const int n = w.size();
    uint64_t m = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w.inv(i) > w.inv(j)) m |= uint64_t(1) << pair_bit(i, j, n);
    return m;
}

/// Right multiplication by the adjacent transposition s_k swaps positions k, k+1.
inline Permutation right_mult_gen(const Permutation& w, int k) {
    std::vector<int> v = w.one_line();
    std::swap(v[k - 1], v[k]);
    return Permutation(std::move(v));
}

/// A reduced word for w over s_1..s_{n-1}, built by stripping right descents.
inline Word reduced_word(const Permutation& w) {
    Word letters;
    std::vector<int> v = w.one_line();
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 0; k + 1 < v.size(); ++k) {
            if (v[k] > v[k + 1]) {
                std::swap(v[k], v[k + 1]);
                letters.push_back(static_cast<int>(k + 1));
                moved = true;
                break;
            }
        }
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

/**
 * Order-preserving relabeling used by restriction arguments: maps the
 * values of `vals` (all distinct) onto 1..|vals| keeping relative order.
 */
inline std::vector<int> compress_order(const std::vector<int>& vals) {
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(vals.size());
    for (size_t i = 0; i < vals.size(); ++i)
        out[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin() + 1);
    return out;
}

}  // namespace coxhull
