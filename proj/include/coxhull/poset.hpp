#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "coxhull/permutation.hpp"

namespace coxhull {

/**
 * Finite labeled poset on elements p_1..p_n, stored as the full strict
 * order (transitive closure of the given relations) plus derived covers.
 */
class Poset {
public:
    Poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n), less_(n * n, false) {
        for (auto [i, j] : relations) {
            check_index(i);
            check_index(j);
            if (i == j) throw std::invalid_argument("poset relation p_i < p_i");
            less_[idx(i, j)] = true;
        }
        close();
    }

    static Poset from_json(const nlohmann::json& j) {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> covers;
        for (const auto& c : j.at("covers")) {
            if (c.size() != 2) throw std::invalid_argument("poset cover must be a pair");
            covers.emplace_back(c[0].get<int>(), c[1].get<int>());
        }
        return Poset(n, covers);
    }

    static Poset load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open poset file: " + path);
        nlohmann::json j;
        in >> j;
        return from_json(j);
    }

    int size() const { return n_; }

    /// Strict order, 1-based element indices.
    bool less(int i, int j) const { return less_[idx(i, j)]; }

    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                if (!less(i, j)) continue;
                bool cover = true;
                for (int k = 1; k <= n_ && cover; ++k)
                    if (less(i, k) && less(k, j)) cover = false;
                if (cover) out.emplace_back(i, j);
            }
        return out;
    }

    /// Elements covered by j (lower covers), ascending.
    std::vector<int> lower_covers(int j) const {
        std::vector<int> out;
        for (int i = 1; i <= n_; ++i) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (int k = 1; k <= n_ && cover; ++k)
                if (less(i, k) && less(k, j)) cover = false;
            if (cover) out.push_back(i);
        }
        return out;
    }

    bool is_maximal(int i) const {
        for (int j = 1; j <= n_; ++j)
            if (less(i, j)) return false;
        return true;
    }

    bool operator==(const Poset& o) const { return n_ == o.n_ && less_ == o.less_; }
    bool operator<(const Poset& o) const {
        return n_ != o.n_ ? n_ < o.n_ : less_ < o.less_;
    }

private:
    size_t idx(int i, int j) const { return size_t(i - 1) * n_ + (j - 1); }
    void check_index(int i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("poset element index out of range");
    }
    void close() {
        for (int k = 1; k <= n_; ++k)
            for (int i = 1; i <= n_; ++i)
                if (less(i, k))
                    for (int j = 1; j <= n_; ++j)
                        if (less(k, j)) less_[idx(i, j)] = true;
        for (int i = 1; i <= n_; ++i)
            if (less(i, i)) throw std::invalid_argument("relations contain a cycle");
    }

    int n_;
    std::vector<char> less_;
};

/**
 * Order-preserving bijection P -> [n], stored as the value array
 * (values[i-1] is the value at p_i). The associated permutation sends
 * k to the element holding value k.
 */
struct LinearExtension {
    std::vector<int> values;

    int value_at(int i) const { return values[i - 1]; }

    Permutation pi() const {
        std::vector<int> p(values.size());
        for (size_t i = 0; i < values.size(); ++i) p[values[i] - 1] = static_cast<int>(i + 1);
        return Permutation(std::move(p));
    }

    bool operator==(const LinearExtension& o) const { return values == o.values; }
    bool operator<(const LinearExtension& o) const { return values < o.values; }
};

inline bool is_linear_extension(const Poset& P, const LinearExtension& lam) {
    const int n = P.size();
    if (static_cast<int>(lam.values.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : lam.values) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (P.less(i, j) && lam.value_at(i) >= lam.value_at(j)) return false;
    return true;
}

namespace detail {

template <class Fn>
void walk_extensions(const Poset& P, std::vector<int>& vals, std::vector<bool>& used, int next,
                     Fn&& emit) {
    const int n = P.size();
    if (next > n) {
        emit(vals);
        return;
    }
    for (int i = 1; i <= n; ++i) {
        if (used[i - 1]) continue;
        bool ready = true;  // all strictly smaller elements already valued
        for (int k = 1; k <= n && ready; ++k)
            if (P.less(k, i) && !used[k - 1]) ready = false;
        if (!ready) continue;
        used[i - 1] = true;
        vals[i - 1] = next;
        walk_extensions(P, vals, used, next + 1, emit);
        used[i - 1] = false;
        vals[i - 1] = 0;
    }
}

}  // namespace detail

/// Complete enumeration, sorted lexicographically by value array.
inline std::vector<LinearExtension> linear_extensions(const Poset& P) {
    std::vector<LinearExtension> out;
    std::vector<int> vals(P.size(), 0);
    std::vector<bool> used(P.size(), false);
    detail::walk_extensions(P, vals, used, 1,
                            [&](const std::vector<int>& v) { out.push_back({v}); });
    std::sort(out.begin(), out.end());
    return out;
}

inline uint64_t count_linear_extensions(const Poset& P) {
    uint64_t count = 0;
    std::vector<int> vals(P.size(), 0);
    std::vector<bool> used(P.size(), false);
    detail::walk_extensions(P, vals, used, 1, [&](const std::vector<int>&) { ++count; });
    return count;
}

/**
 * Every labeled poset on n elements, by filtering all 3^C(n,2) pairwise
 * comparability assignments for transitivity. Exhaustive for n <= 5.
 */
inline std::vector<Poset> all_posets(int n) {
    if (n < 0 || n > 5) throw std::invalid_argument("all_posets supports n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0);
    while (true) {
        std::vector<std::vector<bool>> rel(n + 1, std::vector<bool>(n + 1, false));
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (state[k] == 1) rel[pairs[k].first][pairs[k].second] = true;
            if (state[k] == 2) rel[pairs[k].second][pairs[k].first] = true;
        }
        bool transitive = true;
        for (int a = 1; a <= n && transitive; ++a)
            for (int b = 1; b <= n && transitive; ++b)
                for (int c = 1; c <= n; ++c)
                    if (rel[a][b] && rel[b][c] && !rel[a][c]) {
                        transitive = false;
                        break;
                    }
        if (transitive) {
            std::vector<std::pair<int, int>> relations;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (rel[a][b]) relations.emplace_back(a, b);
            out.push_back(Poset(n, relations));
        }
        size_t k = 0;
        while (k < state.size() && state[k] == 2) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
    return out;
}

}  // namespace coxhull
