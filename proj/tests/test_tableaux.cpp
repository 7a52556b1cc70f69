#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "spechtkl/partitions.hpp"
#include "spechtkl/permutation.hpp"
#include "spechtkl/tableaux.hpp"

using namespace skl;

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Brute-force standard tableau count: place 1..n one cell at a time, always
// keeping rows and columns increasing (equivalently, filling each row prefix
// and never letting row i outgrow row i-1).
long long count_fillings(const Partition& lambda, std::vector<int>& filled, int placed) {
    if (placed == comp_sum(lambda)) return 1;
    long long total = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (filled[i] == lambda[i]) continue;
        if (i > 0 && filled[i] >= filled[i - 1]) continue;
        ++filled[i];
        total += count_fillings(lambda, filled, placed + 1);
        --filled[i];
    }
    return total;
}

long long brute_syt(const Partition& lambda) {
    std::vector<int> filled(lambda.size(), 0);
    return count_fillings(lambda, filled, 0);
}

long long class_size(int n, const Partition& ct) {
    std::map<int, int> mult;
    for (int part : ct) ++mult[part];
    long long denom = 1;
    for (auto [k, m] : mult) {
        for (int j = 0; j < m; ++j) denom *= k;
        denom *= factorial(m);
    }
    return factorial(n) / denom;
}

}  // namespace

TEST_CASE("partition and composition enumeration") {
    CHECK(compositions_of(3) ==
          std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(compositions_of(6).size() == 32);  // 2^(n-1)
    for (const Composition& c : compositions_of(5)) CHECK(is_composition_of(c, 5));
    for (const Partition& p : partitions_of(5)) CHECK(is_partition(p));
}

TEST_CASE("conjugate shapes and sorting compositions") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({2, 2}) == Partition{2, 2});
    CHECK(conjugate({4}) == Partition{1, 1, 1, 1});
    CHECK(conjugate({}) == Partition{});
    for (const Partition& p : partitions_of(6)) CHECK(conjugate(conjugate(p)) == p);

    CHECK(sort_to_partition({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(sort_to_partition({2, 2}) == Partition{2, 2});
}

TEST_CASE("hook length counts match brute-force enumeration") {
    CHECK(syt_count({2, 1}) == 2);
    CHECK(syt_count({3, 2}) == 5);
    CHECK(syt_count({2, 2, 1}) == 5);
    for (int n = 1; n <= 6; ++n) {
        long long square_sum = 0;
        for (const Partition& lambda : partitions_of(n)) {
            long long f = syt_count(lambda);
            CHECK(f == brute_syt(lambda));
            square_sum += f * f;
        }
        CHECK(square_sum == factorial(n));
    }
}

TEST_CASE("row insertion") {
    SUBCASE("worked example") {
        auto [P, Q] = rsk(Permutation({3, 1, 2}));
        CHECK(P.rows == std::vector<std::vector<int>>{{1, 2}, {3}});
        CHECK(Q.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    }
    SUBCASE("extreme shapes") {
        auto [P, Q] = rsk(Permutation::identity(4));
        CHECK(P.shape() == Partition{4});
        CHECK(P == Q);
        auto [Pw, Qw] = rsk(Permutation({4, 3, 2, 1}));
        CHECK(Pw.shape() == Partition{1, 1, 1, 1});
        CHECK(Pw == Qw);
    }
    SUBCASE("bijectivity, duality, and fiber sizes over S_4") {
        const SymmetricGroup& G = SymmetricGroup::get(4);
        std::set<std::pair<StandardTableau, StandardTableau>> images;
        std::map<Partition, long long> fiber;
        int involutions = 0;
        for (int id = 0; id < G.size(); ++id) {
            const Permutation& w = G.perm(id);
            auto [P, Q] = rsk(w);
            CHECK(P.shape() == Q.shape());
            images.insert({P, Q});
            ++fiber[P.shape()];
            // inverting the permutation swaps the two tableaux
            auto [Pi, Qi] = rsk(w.inverse());
            CHECK(Pi == Q);
            CHECK(Qi == P);
            if (P == Q) ++involutions;
        }
        CHECK(images.size() == 24);
        CHECK(involutions == 10);
        for (auto& [lambda, count] : fiber) CHECK(count == syt_count(lambda) * syt_count(lambda));
    }
}

TEST_CASE("border strip character recursion") {
    SUBCASE("pinned values") {
        CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
        CHECK(mn_character({2, 1}, {2, 1}) == 0);
        CHECK(mn_character({2, 1}, {3}) == -1);
        CHECK(mn_character({3, 2}, {2, 2, 1}) == 1);
        CHECK(mn_character({2, 2}, {4}) == 0);
        CHECK_THROWS_AS(mn_character({2, 1}, {2, 2}), SizeMismatch);
    }
    SUBCASE("trivial and sign rows") {
        for (int n = 1; n <= 6; ++n) {
            Partition column(n, 1);
            for (const Partition& ct : partitions_of(n)) {
                CHECK(mn_character({n}, ct) == 1);
                int sign = ((n - static_cast<int>(ct.size())) % 2) ? -1 : 1;
                CHECK(mn_character(column, ct) == sign);
            }
        }
    }
    SUBCASE("dimension at the identity class") {
        for (const Partition& lambda : partitions_of(6))
            CHECK(mn_character(lambda, Partition(6, 1)) == syt_count(lambda));
    }
    SUBCASE("conjugate shape twists by sign") {
        for (const Partition& lambda : partitions_of(5))
            for (const Partition& ct : partitions_of(5)) {
                int sign = ((5 - static_cast<int>(ct.size())) % 2) ? -1 : 1;
                CHECK(mn_character(conjugate(lambda), ct) == sign * mn_character(lambda, ct));
            }
    }
    SUBCASE("row orthogonality") {
        for (int n = 1; n <= 5; ++n) {
            std::vector<Partition> shapes = partitions_of(n);
            for (const Partition& a : shapes)
                for (const Partition& b : shapes) {
                    long long dot = 0;
                    for (const Partition& ct : partitions_of(n))
                        dot += class_size(n, ct) * mn_character(a, ct) * mn_character(b, ct);
                    CHECK(dot == (a == b ? factorial(n) : 0));
                }
        }
    }
}
