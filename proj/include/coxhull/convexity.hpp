#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coxhull/group_table.hpp"

namespace coxhull {

/**
 * Anything exposing indexed elements with single-word inversion masks.
 * Convex sets are exactly the mask intervals {x : lower <= mask(x) <= upper}
 * under containment, so hull computations are two subset tests per element.
 */
template <class B>
concept MaskBackend = requires(const B& b, uint32_t i) {
    { b.size() } -> std::convertible_to<size_t>;
    { b.inversion_mask(i) } -> std::convertible_to<uint64_t>;
};

struct Hull {
    std::vector<uint32_t> generators;
    uint64_t lower = 0;  // intersection of generator masks
    uint64_t upper = 0;  // union of generator masks
    std::vector<uint32_t> members;
};

template <MaskBackend B>
size_t hull_size(const B& b, uint64_t lower, uint64_t upper) {
    size_t count = 0;
    const size_t n = b.size();
    for (uint32_t x = 0; x < n; ++x) {
        uint64_t m = b.inversion_mask(x);
        count += mask_subset(lower, m) && mask_subset(m, upper);
    }
    return count;
}

template <MaskBackend B>
Hull hull(const B& b, std::span<const uint32_t> xs) {
    if (xs.empty()) throw std::invalid_argument("hull of an empty element list");
    Hull h;
    h.generators.assign(xs.begin(), xs.end());
    h.lower = ~uint64_t(0);
    for (uint32_t x : xs) {
        h.lower &= b.inversion_mask(x);
        h.upper |= b.inversion_mask(x);
    }
    for (uint32_t x = 0; x < b.size(); ++x) {
        uint64_t m = b.inversion_mask(x);
        if (mask_subset(h.lower, m) && mask_subset(m, h.upper)) h.members.push_back(x);
    }
    return h;
}

/**
 * A set is convex iff it equals the mask interval spanned by its own
 * intersection/union. On success the witness pair (lower, upper) is
 * written when requested.
 */
template <MaskBackend B>
bool is_convex(const B& b, std::span<const uint32_t> elems, uint64_t* lower_out = nullptr,
               uint64_t* upper_out = nullptr) {
    if (elems.empty()) throw std::invalid_argument("is_convex of an empty set");
    uint64_t lower = ~uint64_t(0), upper = 0;
    for (uint32_t x : elems) {
        lower &= b.inversion_mask(x);
        upper |= b.inversion_mask(x);
    }
    bool convex = hull_size(b, lower, upper) == elems.size();
    if (convex) {
        if (lower_out) *lower_out = lower;
        if (upper_out) *upper_out = upper;
    }
    return convex;
}

struct HullWitness {
    std::string u, v, w;
    std::array<uint64_t, 3> sizes{};  // |conv(u,v)|, |conv(v,w)|, |conv(u,w or u,v,w)|
};

struct HullReport {
    std::string scope;
    uint64_t pairs_checked = 0;
    bool holds = true;
    std::optional<HullWitness> witness;
    double elapsed_ms = 0.0;
};

using ElementNamer = std::function<std::string(uint32_t)>;

inline ElementNamer index_namer() {
    return [](uint32_t e) { return std::to_string(e); };
}

namespace detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(first, last) over a partition of [0, total); used by the sweeps.
inline void parallel_chunks(size_t total, int jobs, const std::function<void(size_t, size_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || total < 64) {
        fn(0, total);
        return;
    }
    std::vector<std::thread> workers;
    size_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        size_t first = std::min(total, size_t(t) * chunk);
        size_t last = std::min(total, first + chunk);
        if (first < last) workers.emplace_back([&fn, first, last] { fn(first, last); });
    }
    for (auto& w : workers) w.join();
}

template <MaskBackend B>
std::vector<uint64_t> all_masks(const B& b) {
    std::vector<uint64_t> masks(b.size());
    for (uint32_t x = 0; x < b.size(); ++x) masks[x] = b.inversion_mask(x);
    return masks;
}

}  // namespace detail

/**
 * Group sweep for the strong inequality
 *   |conv(u,v)| * |conv(v,w)| >= |conv(u,v,w)|.
 * Left translation reduces every triple to (a, id, b), so one pass over
 * unordered element pairs suffices; the inequality is symmetric in (a, b).
 * Only valid on vertex-transitive backends (groups). The first violating
 * pair in canonical index order is reported.
 */
template <MaskBackend B>
HullReport check_strong_hull(const B& b, std::string scope, int jobs = 0,
                             const ElementNamer& name = index_namer()) {
    auto t0 = std::chrono::steady_clock::now();
    const size_t n = b.size();
    const auto masks = detail::all_masks(b);
    if (n == 0 || masks[0] != 0)
        throw std::invalid_argument("group backend must have the identity at index 0");

    // ideal[a] = |conv(id, a)| = #{x : mask(x) subset mask(a)}.
    std::vector<uint64_t> ideal(n, 0);
    detail::parallel_chunks(n, jobs, [&](size_t first, size_t last) {
        for (size_t a = first; a < last; ++a) {
            uint64_t c = 0;
            for (size_t x = 0; x < n; ++x) c += mask_subset(masks[x], masks[a]);
            ideal[a] = c;
        }
    });

    std::atomic<uint64_t> first_bad{~uint64_t(0)};  // packed (a << 32) | b
    detail::parallel_chunks(n, jobs, [&](size_t first, size_t last) {
        for (size_t a = first; a < last; ++a) {
            for (size_t bb = a; bb < n; ++bb) {
                uint64_t un = masks[a] | masks[bb];
                uint64_t c = 0;
                for (size_t x = 0; x < n; ++x) c += mask_subset(masks[x], un);
                if (ideal[a] * ideal[bb] < c) {
                    uint64_t packed = (uint64_t(a) << 32) | bb;
                    uint64_t prev = first_bad.load();
                    while (packed < prev && !first_bad.compare_exchange_weak(prev, packed)) {
                    }
                    break;
                }
            }
        }
    });

    HullReport rep;
    rep.scope = std::move(scope);
    rep.pairs_checked = uint64_t(n) * (n + 1) / 2;
    if (first_bad.load() != ~uint64_t(0)) {
        uint32_t a = static_cast<uint32_t>(first_bad.load() >> 32);
        uint32_t bb = static_cast<uint32_t>(first_bad.load() & 0xffffffffu);
        uint64_t c = hull_size(b, 0, masks[a] | masks[bb]);
        rep.holds = false;
        rep.witness = HullWitness{name(a), name(0), name(bb), {ideal[a], ideal[bb], c}};
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/**
 * Group sweep for the pairwise inequality
 *   |conv(u,v)| * |conv(v,w)| >= |conv(u,w)|,
 * reduced by translation to pairs (a, id, b) exactly as above.
 */
template <MaskBackend B>
HullReport check_hull_property(const B& b, std::string scope, int jobs = 0,
                               const ElementNamer& name = index_namer()) {
    auto t0 = std::chrono::steady_clock::now();
    const size_t n = b.size();
    const auto masks = detail::all_masks(b);
    if (n == 0 || masks[0] != 0)
        throw std::invalid_argument("group backend must have the identity at index 0");

    std::vector<uint64_t> ideal(n, 0);
    detail::parallel_chunks(n, jobs, [&](size_t first, size_t last) {
        for (size_t a = first; a < last; ++a) {
            uint64_t c = 0;
            for (size_t x = 0; x < n; ++x) c += mask_subset(masks[x], masks[a]);
            ideal[a] = c;
        }
    });

    std::atomic<uint64_t> first_bad{~uint64_t(0)};
    detail::parallel_chunks(n, jobs, [&](size_t first, size_t last) {
        for (size_t a = first; a < last; ++a) {
            for (size_t bb = a; bb < n; ++bb) {
                uint64_t lo = masks[a] & masks[bb];
                uint64_t up = masks[a] | masks[bb];
                uint64_t c = 0;
                for (size_t x = 0; x < n; ++x)
                    c += mask_subset(lo, masks[x]) && mask_subset(masks[x], up);
                if (ideal[a] * ideal[bb] < c) {
                    uint64_t packed = (uint64_t(a) << 32) | bb;
                    uint64_t prev = first_bad.load();
                    while (packed < prev && !first_bad.compare_exchange_weak(prev, packed)) {
                    }
                    break;
                }
            }
        }
    });

    HullReport rep;
    rep.scope = std::move(scope);
    rep.pairs_checked = uint64_t(n) * (n + 1) / 2;
    if (first_bad.load() != ~uint64_t(0)) {
        uint32_t a = static_cast<uint32_t>(first_bad.load() >> 32);
        uint32_t bb = static_cast<uint32_t>(first_bad.load() & 0xffffffffu);
        uint64_t c = 0;
        for (size_t x = 0; x < n; ++x)
            c += mask_subset(masks[a] & masks[bb], masks[x]) &&
                 mask_subset(masks[x], masks[a] | masks[bb]);
        rep.holds = false;
        rep.witness = HullWitness{name(a), name(0), name(bb), {ideal[a], ideal[bb], c}};
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/**
 * Brute-force pairwise-hull check over all triples, for backends that are
 * not vertex-transitive (acyclic-orientation graphs). Reports the first
 * violating triple (u, v, w) in lexicographic index order.
 */
template <MaskBackend B>
HullReport check_hull_property_triples(const B& b, std::string scope,
                                       const ElementNamer& name = index_namer()) {
    auto t0 = std::chrono::steady_clock::now();
    const size_t n = b.size();
    const auto masks = detail::all_masks(b);

    std::vector<uint32_t> pair_size(n * n, 0);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = u; v < n; ++v) {
            uint64_t lo = masks[u] & masks[v];
            uint64_t up = masks[u] | masks[v];
            uint32_t c = 0;
            for (size_t x = 0; x < n; ++x)
                c += mask_subset(lo, masks[x]) && mask_subset(masks[x], up);
            pair_size[u * n + v] = pair_size[v * n + u] = c;
        }

    HullReport rep;
    rep.scope = std::move(scope);
    rep.pairs_checked = uint64_t(n) * n * n;
    for (size_t u = 0; u < n && rep.holds; ++u)
        for (size_t v = 0; v < n && rep.holds; ++v)
            for (size_t w = 0; w < n; ++w) {
                uint64_t lhs = uint64_t(pair_size[u * n + v]) * pair_size[v * n + w];
                if (lhs < pair_size[u * n + w]) {
                    rep.holds = false;
                    rep.witness = HullWitness{
                        name(static_cast<uint32_t>(u)), name(static_cast<uint32_t>(v)),
                        name(static_cast<uint32_t>(w)),
                        {pair_size[u * n + v], pair_size[v * n + w], pair_size[u * n + w]}};
                    break;
                }
            }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// All-triples version of the strong inequality; only for small backends.
template <MaskBackend B>
HullReport check_strong_hull_triples(const B& b, std::string scope,
                                     const ElementNamer& name = index_namer()) {
    auto t0 = std::chrono::steady_clock::now();
    const size_t n = b.size();
    const auto masks = detail::all_masks(b);
    if (n > 512) throw std::invalid_argument("all-triples strong sweep is limited to 512 elements");

    std::vector<uint32_t> pair_size(n * n, 0);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = u; v < n; ++v) {
            uint64_t lo = masks[u] & masks[v];
            uint64_t up = masks[u] | masks[v];
            uint32_t c = 0;
            for (size_t x = 0; x < n; ++x)
                c += mask_subset(lo, masks[x]) && mask_subset(masks[x], up);
            pair_size[u * n + v] = pair_size[v * n + u] = c;
        }

    HullReport rep;
    rep.scope = std::move(scope);
    rep.pairs_checked = uint64_t(n) * n * n;
    for (size_t u = 0; u < n && rep.holds; ++u)
        for (size_t v = 0; v < n && rep.holds; ++v)
            for (size_t w = 0; w < n; ++w) {
                uint64_t lo = masks[u] & masks[v] & masks[w];
                uint64_t up = masks[u] | masks[v] | masks[w];
                uint64_t triple = 0;
                for (size_t x = 0; x < n; ++x)
                    triple += mask_subset(lo, masks[x]) && mask_subset(masks[x], up);
                uint64_t lhs = uint64_t(pair_size[u * n + v]) * pair_size[v * n + w];
                if (lhs < triple) {
                    rep.holds = false;
                    rep.witness = HullWitness{
                        name(static_cast<uint32_t>(u)), name(static_cast<uint32_t>(v)),
                        name(static_cast<uint32_t>(w)),
                        {pair_size[u * n + v], pair_size[v * n + w], triple}};
                    break;
                }
            }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct MetricValue {
    double value = 0.0;
    bool metric_verified = false;  // false until a hull-property check has been run
};

/// log |conv(u, v)|; a metric exactly when the backend has the hull property.
template <MaskBackend B>
MetricValue log_hull_metric(const B& b, uint32_t u, uint32_t v, bool hull_property_verified) {
    uint64_t lo = b.inversion_mask(u) & b.inversion_mask(v);
    uint64_t up = b.inversion_mask(u) | b.inversion_mask(v);
    return {std::log(static_cast<double>(hull_size(b, lo, up))), hull_property_verified};
}

}  // namespace coxhull
