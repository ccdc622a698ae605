// Cross-backend agreement: the numeric root-system realization and the
// one-line combinatorial rules must produce identical inversion data under
// the canonical generator correspondence.

#include <bit>
#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "coxhull/convexity.hpp"
#include "coxhull/group_table.hpp"
#include "coxhull/type_a.hpp"
#include "coxhull/type_b.hpp"

using namespace coxhull;

namespace {

// Transposition classification of a permutation known to be a reflection.
int pair_bit_of_reflection(const Permutation& p) {
    const int n = p.size();
    int i = 0, j = 0;
    for (int k = 1; k <= n; ++k)
        if (p(k) != k) {
            i = k;
            j = p(k);
            break;
        }
    REQUIRE(i < j);
    REQUIRE(p(j) == i);
    return pair_bit(i, j, n);
}

// Signed reflection classification: sign flip, plain swap, or mixed swap.
int signed_bit_of_reflection(const SignedPermutation& p) {
    const int n = p.size();
    std::vector<int> moved;
    for (int k = 1; k <= n; ++k)
        if (p(k) != k) moved.push_back(k);
    if (moved.size() == 1) {
        int i = moved[0];
        REQUIRE(p(i) == -i);
        return signed_flip_bit(i, n);
    }
    REQUIRE(moved.size() == 2);
    int i = moved[0], j = moved[1];
    if (p(i) == j) {
        REQUIRE(p(j) == i);
        return signed_pair_bit(i, j, n);
    }
    REQUIRE(p(i) == -j);
    REQUIRE(p(j) == -i);
    return signed_mixed_bit(i, j, n);
}

}  // namespace

TEST_CASE("numeric realization of the rank-4 chain matches the symmetric group") {
    auto G = enumerate_group(CoxeterMatrix::from_type("A4"));
    const int n = 5;
    REQUIRE(G.size() == 120);

    // Group isomorphism by folding reduced words over position swaps.
    std::vector<Permutation> perm_of;
    perm_of.reserve(G.size());
    std::set<std::vector<int>> distinct;
    for (uint32_t e = 0; e < G.size(); ++e) {
        Permutation p = Permutation::identity(n);
        for (int s : G.word(e)) p = right_mult_gen(p, s);
        perm_of.push_back(p);
        distinct.insert(p.one_line());
    }
    REQUIRE(distinct.size() == G.size());

    // Root index -> transposition bit via the reflection elements.
    std::vector<int> bit_of_root(G.num_reflections());
    for (int j = 0; j < G.num_reflections(); ++j)
        bit_of_root[j] = pair_bit_of_reflection(perm_of[G.reflection_element(j)]);
    std::set<int> bits(bit_of_root.begin(), bit_of_root.end());
    REQUIRE(bits.size() == static_cast<size_t>(G.num_reflections()));

    SECTION("inversion masks agree element by element") {
        for (uint32_t e = 0; e < G.size(); ++e) {
            uint64_t remapped = 0;
            for (int j = 0; j < G.num_reflections(); ++j)
                if ((G.inversion_mask(e) >> j) & 1) remapped |= uint64_t(1) << bit_of_root[j];
            REQUIRE(remapped == inversion_mask(perm_of[e]));
        }
    }

    SECTION("prefix reflections match the one-line rule for every element") {
        for (const auto& w : all_permutations(n)) {
            Word word = reduced_word(w);
            uint64_t from_prefixes = 0;
            Permutation prefix = Permutation::identity(n);
            for (int s : word) {
                // t = prefix * s * prefix^{-1} under function composition.
                Permutation t =
                    prefix.compose(right_mult_gen(Permutation::identity(n), s))
                        .compose(prefix.inverse());
                uint64_t bit = uint64_t(1) << pair_bit_of_reflection(t);
                REQUIRE((from_prefixes & bit) == 0);
                from_prefixes |= bit;
                prefix = right_mult_gen(prefix, s);
            }
            REQUIRE(from_prefixes == inversion_mask(w));
        }
    }
}

TEST_CASE("numeric realization of the rank-3 signed chain matches the signed group") {
    auto G = enumerate_group(CoxeterMatrix::from_type("B3"));
    const int n = 3;
    REQUIRE(G.size() == 48);

    std::vector<SignedPermutation> perm_of;
    perm_of.reserve(G.size());
    std::set<std::vector<int>> distinct;
    for (uint32_t e = 0; e < G.size(); ++e) {
        SignedPermutation p = SignedPermutation::identity(n);
        for (int s : G.word(e)) p = right_mult_gen(p, s);
        perm_of.push_back(p);
        distinct.insert(p.one_line());
    }
    REQUIRE(distinct.size() == G.size());

    std::vector<int> bit_of_root(G.num_reflections());
    for (int j = 0; j < G.num_reflections(); ++j)
        bit_of_root[j] = signed_bit_of_reflection(perm_of[G.reflection_element(j)]);
    std::set<int> bits(bit_of_root.begin(), bit_of_root.end());
    REQUIRE(bits.size() == static_cast<size_t>(G.num_reflections()));

    SECTION("inversion masks agree element by element") {
        for (uint32_t e = 0; e < G.size(); ++e) {
            uint64_t remapped = 0;
            for (int j = 0; j < G.num_reflections(); ++j)
                if ((G.inversion_mask(e) >> j) & 1) remapped |= uint64_t(1) << bit_of_root[j];
            REQUIRE(remapped == inversion_mask(perm_of[e]));
        }
    }

    SECTION("prefix reflections match the signed one-line rule for every element") {
        for (const auto& w : all_signed_permutations(n)) {
            Word word = reduced_word(w);
            uint64_t from_prefixes = 0;
            SignedPermutation prefix = SignedPermutation::identity(n);
            for (int s : word) {
                SignedPermutation t =
                    prefix.compose(right_mult_gen(SignedPermutation::identity(n), s))
                        .compose(prefix.inverse());
                uint64_t bit = uint64_t(1) << signed_bit_of_reflection(t);
                REQUIRE((from_prefixes & bit) == 0);
                from_prefixes |= bit;
                prefix = right_mult_gen(prefix, s);
            }
            REQUIRE(from_prefixes == inversion_mask(w));
        }
    }

    SECTION("lengths agree with the signed inversion count") {
        for (uint32_t e = 0; e < G.size(); ++e)
            REQUIRE(G.length(e) == std::popcount(inversion_mask(perm_of[e])));
    }
}

TEST_CASE("rank-2 numeric realizations match both combinatorial backends") {
    // The same sweep outcome through three independent routes.
    auto table = enumerate_group(CoxeterMatrix::from_type("B2"));
    auto comb = make_bn(2);
    REQUIRE(table.size() == comb.size());
    auto rep_table = check_strong_hull(table, "table");
    auto rep_comb = check_strong_hull(comb, "comb");
    CHECK(rep_table.holds == rep_comb.holds);

    auto a2 = enumerate_group(CoxeterMatrix::from_type("A2"));
    auto s3 = make_sn(3);
    CHECK(check_strong_hull(a2, "a2").holds == check_strong_hull(s3, "s3").holds);
}
