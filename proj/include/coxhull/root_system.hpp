#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "coxhull/coxeter_matrix.hpp"

namespace coxhull {

/**
 * Root system of the geometric representation, with roots as coordinate
 * vectors in the simple-root basis. Closure is numeric (dedup tolerance
 * 1e-9); every downstream computation on root indices is exact.
 *
 * Roots are indexed with all positive roots first (simple roots at
 * 0..rank-1, in generator order); root j and its negative are paired by
 * negative_of[j].
 */
struct RootSystem {
    int rank = 0;
    int num_positive = 0;
    std::vector<std::vector<double>> roots;      // size 2 * num_positive
    std::vector<int> negative_of;                // involution on root indices
    std::vector<std::vector<int>> action;        // action[s-1][j] = index of s(root j)

    int num_roots() const { return static_cast<int>(roots.size()); }
    bool is_positive(int j) const { return j < num_positive; }
    /// Root index of the simple root of generator s (1-based).
    int simple_root(int s) const { return s - 1; }
    int act(int s, int j) const { return action[s - 1][j]; }
};

/**
 * Closes the simple roots under all generator reflections.
 * Throws if more than max_roots roots appear, which catches non-finite
 * types (their root systems are infinite).
 */
inline RootSystem build_root_system(const CoxeterMatrix& M, int max_roots = 200) {
    const int r = M.rank();

    // Bilinear form: B(a_i, a_j) = -cos(pi / m_ij), with m = infinity giving -1.
    std::vector<std::vector<double>> B(r, std::vector<double>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int m = M.order(i + 1, j + 1);
            B[i][j] = (m == CoxeterMatrix::kInfinity)
                          ? -1.0
                          : -std::cos(std::numbers::pi / static_cast<double>(m));
        }

    auto reflect = [&](int s, const std::vector<double>& v) {
        double dot = 0.0;
        for (int j = 0; j < r; ++j) dot += B[s][j] * v[j];
        std::vector<double> out = v;
        out[s] -= 2.0 * dot;
        return out;
    };

    constexpr double kTol = 1e-9;
    auto key_of = [&](const std::vector<double>& v) {
        std::vector<int64_t> key(r);
        for (int j = 0; j < r; ++j) key[j] = static_cast<int64_t>(std::llround(v[j] / kTol));
        return key;
    };

    std::vector<std::vector<double>> roots;
    std::map<std::vector<int64_t>, int> index;
    auto find_or_add = [&](const std::vector<double>& v) {
        auto key = key_of(v);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (static_cast<int>(roots.size()) >= max_roots)
            throw std::runtime_error("root closure exceeded cap: not finite type or cap too low");
        int id = static_cast<int>(roots.size());
        roots.push_back(v);
        index.emplace(std::move(key), id);
        return id;
    };

    for (int i = 0; i < r; ++i) {
        std::vector<double> e(r, 0.0);
        e[i] = 1.0;
        find_or_add(e);
    }

    std::vector<std::vector<int>> action(r);
    for (size_t head = 0; head < roots.size(); ++head) {
        for (int s = 0; s < r; ++s) {
            if (action[s].size() <= head) action[s].resize(head + 1, -1);
            action[s][head] = find_or_add(reflect(s, roots[head]));
        }
    }
    // New roots appended during the loop above get their actions filled too.
    for (int s = 0; s < r; ++s) {
        for (size_t j = action[s].size(); j < roots.size(); ++j)
            action[s].push_back(find_or_add(reflect(s, roots[j])));
        if (action[s].size() != roots.size())
            throw std::logic_error("root closure bookkeeping error");
    }

    const int total = static_cast<int>(roots.size());
    auto positive = [&](const std::vector<double>& v) {
        double sum = 0.0;
        for (double c : v) sum += c;
        return sum > 0.0;
    };

    // Reindex: positive roots first, each negative at num_positive + rank of its pair.
    std::vector<int> new_of(total, -1);
    int p = 0;
    for (int j = 0; j < total; ++j)
        if (positive(roots[j])) new_of[j] = p++;
    if (2 * p != total) throw std::logic_error("roots do not split into +- pairs");
    int q = p;
    for (int j = 0; j < total; ++j)
        if (!positive(roots[j])) new_of[j] = q++;

    RootSystem R;
    R.rank = r;
    R.num_positive = p;
    R.roots.resize(total);
    R.action.assign(r, std::vector<int>(total));
    for (int j = 0; j < total; ++j) {
        R.roots[new_of[j]] = roots[j];
        for (int s = 0; s < r; ++s) R.action[s][new_of[j]] = new_of[action[s][j]];
    }

    R.negative_of.assign(total, -1);
    std::map<std::vector<int64_t>, int> by_key;
    for (int j = 0; j < total; ++j) by_key[key_of(R.roots[j])] = j;
    for (int j = 0; j < total; ++j) {
        std::vector<double> neg = R.roots[j];
        for (double& c : neg) c = -c;
        auto it = by_key.find(key_of(neg));
        if (it == by_key.end()) throw std::logic_error("root without a negative");
        R.negative_of[j] = it->second;
    }
    return R;
}

}  // namespace coxhull
