#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxhull/root_system.hpp"

namespace coxhull {

inline bool mask_subset(uint64_t a, uint64_t b) { return (a & ~b) == 0; }

/**
 * Fully enumerated finite Coxeter group. Elements are indexed in
 * BFS-from-identity order (ties broken by smallest generator), so index 0
 * is the identity and indices are stable across runs.
 *
 * The inversion set of each element is stored as a bit mask over positive
 * root indices; weak-order comparisons are single-word subset tests.
 * Immutable after construction.
 */
class GroupTable {
public:
    explicit GroupTable(const RootSystem& R, size_t max_elements = 50000) : rank_(R.rank) {
        build(R, max_elements);
    }

    int rank() const { return rank_; }
    size_t size() const { return mask_.size(); }
    int num_reflections() const { return num_reflections_; }
    uint32_t identity() const { return 0; }
    uint32_t longest_element() const { return w0_; }

    uint64_t inversion_mask(uint32_t e) const { return mask_[e]; }
    int length(uint32_t e) const { return length_[e]; }

    /// Right multiplication by generator s (1-based).
    uint32_t mult_gen(uint32_t e, int s) const { return mult_[size_t(e) * rank_ + (s - 1)]; }

    /// Element index of the reflection attached to positive root j.
    uint32_t reflection_element(int j) const { return refl_elem_[j]; }

    /// Positive-root index of a reflection element, or -1 if e is not a reflection.
    int root_of_reflection(uint32_t e) const {
        auto it = root_of_refl_.find(e);
        return it == root_of_refl_.end() ? -1 : it->second;
    }

    /// Canonical reduced word from the BFS tree.
    Word word(uint32_t e) const {
        Word w;
        while (e != 0) {
            w.push_back(parent_gen_[e]);
            e = parent_[e];
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    uint32_t element_of(const Word& w) const {
        uint32_t e = 0;
        for (int s : w) {
            if (s < 1 || s > rank_) throw std::invalid_argument("generator index out of range");
            e = mult_gen(e, s);
        }
        return e;
    }

    bool is_reduced(const Word& w) const {
        return length(element_of(w)) == static_cast<int>(w.size());
    }

    uint32_t product(uint32_t a, uint32_t b) const {
        for (int s : word(b)) a = mult_gen(a, s);
        return a;
    }

    uint32_t inverse(uint32_t a) const {
        Word w = word(a);
        uint32_t e = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) e = mult_gen(e, *it);
        return e;
    }

    bool leq_weak(uint32_t u, uint32_t v) const { return mask_subset(mask_[u], mask_[v]); }

    /**
     * Positive-root indices of the prefix reflections of a reduced word,
     * one per prefix, in word order. Throws std::invalid_argument when the
     * word is detectably non-reduced (a prefix reflection repeats).
     */
    std::vector<int> inversions_from_word(const Word& w) const {
        std::vector<int> out;
        uint64_t seen = 0;
        uint32_t prefix = 0;  // product of letters before the current one
        for (int s : w) {
            uint32_t t = product(mult_gen(prefix, s), inverse(prefix));
            int root = root_of_reflection(t);
            if (root < 0) throw std::logic_error("prefix product is not a reflection");
            uint64_t bit = uint64_t(1) << root;
            if (seen & bit)
                throw std::invalid_argument("word is not reduced: repeated prefix reflection");
            seen |= bit;
            out.push_back(root);
            prefix = mult_gen(prefix, s);
        }
        return out;
    }

    /**
     * Minimal-length representative of the coset w * W_J, computed by
     * stripping right descents that lie in J (smallest index first).
     */
    uint32_t min_coset_rep(uint32_t w, const std::vector<int>& J) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int s : J) {
                uint32_t ws = mult_gen(w, s);
                if (length(ws) < length(w)) {
                    w = ws;
                    moved = true;
                    break;
                }
            }
        }
        return w;
    }

    /**
     * Weak-order meet by brute force: the common lower bounds of (u, v) are
     * exactly the elements whose mask lies inside mask(u) & mask(v); the
     * meet is their unique maximum. Throws if the scan ever finds two
     * incomparable maximal lower bounds (cannot happen in a Coxeter group).
     */
    uint32_t meet_brute(uint32_t u, uint32_t v) const {
        uint64_t cap = mask_[u] & mask_[v];
        uint32_t best = 0;
        for (uint32_t x = 0; x < size(); ++x)
            if (mask_subset(mask_[x], cap) && length(x) > length(best)) best = x;
        for (uint32_t x = 0; x < size(); ++x)
            if (mask_subset(mask_[x], cap) && !leq_weak(x, best))
                throw std::logic_error("weak order meet is not unique");
        return best;
    }

private:
    void build(const RootSystem& R, size_t max_elements) {
        const int r = R.rank;
        const int P = R.num_positive;
        num_reflections_ = P;
        if (P > 64)
            throw std::runtime_error("more than 64 positive roots; masks need one machine word");

        // BFS over right multiplication. Inversion masks identify elements,
        // so they double as the dedup key; the transient root permutation of
        // each element is only needed to locate w(alpha_s).
        std::vector<std::vector<uint8_t>> images;
        std::unordered_map<uint64_t, uint32_t> by_mask;

        std::vector<uint8_t> id_image(R.num_roots());
        for (int j = 0; j < R.num_roots(); ++j) id_image[j] = static_cast<uint8_t>(j);
        images.push_back(std::move(id_image));
        mask_.push_back(0);
        length_.push_back(0);
        parent_.push_back(0);
        parent_gen_.push_back(0);
        by_mask.emplace(0, 0);

        // (element, generator) witnessing each positive root as w(alpha_s).
        std::vector<std::pair<uint32_t, int>> root_witness(P, {UINT32_MAX, 0});

        mult_.clear();
        for (uint32_t e = 0; e < images.size(); ++e) {
            mult_.resize((size_t(e) + 1) * r, UINT32_MAX);
            for (int s = 1; s <= r; ++s) {
                int img = images[e][R.simple_root(s)];  // w(alpha_s)
                uint64_t child_mask;
                if (R.is_positive(img)) {
                    child_mask = mask_[e] | (uint64_t(1) << img);
                    if (root_witness[img].first == UINT32_MAX) root_witness[img] = {e, s};
                } else {
                    child_mask = mask_[e] & ~(uint64_t(1) << R.negative_of[img]);
                }
                auto it = by_mask.find(child_mask);
                uint32_t child;
                if (it != by_mask.end()) {
                    child = it->second;
                } else {
                    if (!R.is_positive(img))
                        throw std::logic_error("BFS found an unseen shorter element");
                    if (images.size() >= max_elements)
                        throw std::runtime_error("group enumeration exceeded element cap");
                    child = static_cast<uint32_t>(images.size());
                    std::vector<uint8_t> child_image(R.num_roots());
                    for (int j = 0; j < R.num_roots(); ++j)
                        child_image[j] = images[e][R.act(s, j)];
                    images.push_back(std::move(child_image));
                    mask_.push_back(child_mask);
                    length_.push_back(static_cast<uint16_t>(length_[e] + 1));
                    parent_.push_back(e);
                    parent_gen_.push_back(static_cast<uint8_t>(s));
                    by_mask.emplace(child_mask, child);
                }
                mult_[size_t(e) * r + (s - 1)] = child;
            }
        }

        const uint64_t full = (P == 64) ? ~uint64_t(0) : ((uint64_t(1) << P) - 1);
        auto it = by_mask.find(full);
        if (it == by_mask.end()) throw std::logic_error("no longest element found");
        w0_ = it->second;

        refl_elem_.assign(P, 0);
        for (int j = 0; j < P; ++j) {
            auto [e, s] = root_witness[j];
            if (e == UINT32_MAX) throw std::logic_error("positive root never witnessed");
            refl_elem_[j] = product(mult_gen(e, s), inverse(e));  // w s w^{-1}
            root_of_refl_.emplace(refl_elem_[j], j);
        }
    }

    int rank_;
    int num_reflections_ = 0;
    uint32_t w0_ = 0;
    std::vector<uint64_t> mask_;
    std::vector<uint16_t> length_;
    std::vector<uint32_t> mult_;
    std::vector<uint32_t> parent_;
    std::vector<uint8_t> parent_gen_;
    std::vector<uint32_t> refl_elem_;
    std::unordered_map<uint32_t, int> root_of_refl_;
};

/// Convenience: named type or arbitrary finite-type matrix to a full table.
inline GroupTable enumerate_group(const CoxeterMatrix& M, int max_roots = 200,
                                  size_t max_elements = 50000) {
    return GroupTable(build_root_system(M, max_roots), max_elements);
}

}  // namespace coxhull
