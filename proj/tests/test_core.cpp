#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbontab/laurent.hpp"
#include "ribbontab/partition.hpp"

using namespace ribbontab;

TEST_CASE("conjugate") {
    CHECK(conjugate({5, 2, 1}) == Partition{3, 2, 1, 1, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(conjugate({3, 3}) == Partition{2, 2, 2});
    for (const auto& p : partitions_of(9)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dominance") {
    CHECK(dominance_leq({1, 1, 1}, {3}));
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK(!dominance_leq({3, 1}, {2, 2}));
    CHECK_THROWS(dominance_leq({2}, {1}));
}

TEST_CASE("n_stat") {
    CHECK(n_stat({3, 2, 1}) == 4);
    CHECK(n_stat({}) == 0);
    CHECK(n_stat({1, 1, 1, 1}) == 6);
}

TEST_CASE("core and quotient") {
    auto cq = core_quotient({8, 7, 7, 4, 1, 1, 1, 1, 1}, 3);
    CHECK(cq.core == Partition{2, 1, 1});
    auto cq2 = core_quotient({3, 3, 3, 2, 1}, 3);
    CHECK(cq2.core == Partition{});
    CHECK(cq2.quotient == std::vector<Partition>{{1}, {1, 1}, {1}});
    auto cq3 = core_quotient({2, 1}, 4);
    CHECK(cq3.core == Partition{2, 1});
    for (const auto& q : cq3.quotient) CHECK(q.empty());
}

TEST_CASE("core quotient round trip") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 1; k <= 5; ++k) {
                auto cq = core_quotient(p, k);
                int qsize = 0;
                for (const auto& q : cq.quotient) qsize += size_of(q);
                CHECK(size_of(p) == size_of(cq.core) + k * qsize);
                CHECK(from_core_quotient(cq.core, cq.quotient) == p);
            }
}

TEST_CASE("k_sign") {
    CHECK(k_sign({4, 4, 3}, {4, 1}, 3) == 1);
    CHECK(k_sign({4, 4, 3}, {3, 2}, 3) == -1);
    CHECK(k_sign({3, 1}, {3, 1}, 3) == 1);
    CHECK(k_sign({2, 2}, {}, 2) == 1);
}

TEST_CASE("ramanujan sums") {
    for (long n = 1; n <= 12; ++n) CHECK(ramanujan_c(0, n) == euler_phi(n));
    CHECK(ramanujan_c(1, 4) == 0);
    CHECK(ramanujan_c(3, 3) == 2);
    for (long n = 2; n <= 12; ++n) {
        long s = 0;
        for (long k = 0; k < n; ++k) s += ramanujan_c(k, n);
        CHECK(s == 0);
    }
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1).to_string() == "-1 + q");
    CHECK(cyclotomic(3).to_string() == "1 + q + q^2");
    CHECK(cyclotomic(6).to_string() == "1 - q + q^2");
}

TEST_CASE("reduce_mod") {
    auto m3 = q_power_minus_one(3);
    CHECK(reduce_mod(LaurentPoly::monomial(4), m3) == LaurentPoly::monomial(1));
    CHECK(reduce_mod(LaurentPoly::monomial(-1), m3) == LaurentPoly::monomial(2));
    // zeta^2 + zeta^3 mod Phi_3 = q^2 + 1
    auto phi3 = cyclotomic(3);
    LaurentPoly p = LaurentPoly::monomial(2) + LaurentPoly::monomial(3);
    LaurentPoly want = LaurentPoly::monomial(2) + LaurentPoly(mpq_class(1));
    CHECK(reduce_mod(p, phi3) == reduce_mod(want, phi3));
    // 2(z^2+z^3) - (z+z^2) = 2z^2 + 3 mod Phi_3: z + z^2 = -1
    LaurentPoly lhs = p + p - (LaurentPoly::monomial(1) + LaurentPoly::monomial(2));
    LaurentPoly rhs = LaurentPoly::monomial(2, 2) + LaurentPoly(mpq_class(3));
    CHECK(reduce_mod(lhs, phi3) == reduce_mod(rhs, phi3));
}

TEST_CASE("reduce_mod multiplicativity") {
    auto mods = {q_power_minus_one(4), cyclotomic(5), cyclotomic(6)};
    unsigned seed = 12345;
    auto rnd = [&seed]() {
        seed = seed * 1103515245 + 12345;
        return static_cast<int>((seed >> 16) % 13) - 6;
    };
    for (const auto& m : mods) {
        for (int trial = 0; trial < 30; ++trial) {
            LaurentPoly a, b;
            for (int i = 0; i < 5; ++i) {
                a.add_term(rnd(), mpq_class(rnd()));
                b.add_term(rnd(), mpq_class(rnd()));
            }
            CHECK(reduce_mod(a * b, m) == reduce_mod(reduce_mod(a, m) * reduce_mod(b, m), m));
        }
    }
}

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly a = LaurentPoly::monomial(-1) + LaurentPoly::monomial(2, mpq_class(3, 2));
    CHECK(a.to_string() == "q^-1 + 3/2*q^2");
    CHECK((a - a).is_zero());
    std::map<int, mpq_class> want{{1, mpq_class(1)}, {-2, mpq_class(3, 2)}};
    CHECK(a.invert_q().terms == want);
    CHECK(a.evaluate_at_one() == mpq_class(5, 2));
}

TEST_CASE("partition strings") {
    CHECK(partition_to_string({3, 2, 1, 1}) == "3,2,1,1");
    CHECK(partition_from_string("3,2,1,1") == Partition{3, 2, 1, 1});
    CHECK(partition_from_string("") == Partition{});
    CHECK_THROWS(partition_from_string("1,2"));
}
