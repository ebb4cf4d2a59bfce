// SPDX-License-Identifier: MIT
#include <random>
#include <sstream>

#include "doctest.h"
#include "nono/partitions.hpp"

using namespace nono;

namespace {

Word W(const char* s) { return word_from_digits(s); }

std::set<Word> WS(std::initializer_list<const char*> ws) {
    std::set<Word> out;
    for (auto w : ws) out.insert(W(w));
    return out;
}

PartitionCollection binary4() {
    PartitionCollection pc(2, 4);
    pc[1] = {WS({"0"}), WS({"1"})};
    pc[2] = {WS({"01"}), {}};
    pc[3] = {{}, WS({"011"})};
    return pc;
}

PartitionCollection ternary6(bool maximal) {
    PartitionCollection pc(3, 6);
    pc[1] = {WS({"0"}), WS({"1", "2"})};
    pc[2] = {{}, WS({"01", "02"})};
    pc[3] = {WS({"001"}), WS({"002"})};
    pc[4] = {WS({"0002"}), WS({"0011", "0012"})};
    if (maximal)
        pc[5] = {WS({"00101", "00102"}), WS({"00011", "00012", "00021", "00022"})};
    else
        pc[5] = {WS({"00011", "00012"}), WS({"00101", "00102", "00021", "00022"})};
    return pc;
}

}  // namespace

TEST_CASE("generate_code examples") {
    CHECK(generate_code(binary4()) == Code(2, 4, {W("0011")}));

    Code c2 = generate_code(ternary6(true));
    Code expect(3, 6, {W("000011"), W("000012"), W("000021"), W("000022"), W("001002"), W("000201"),
                       W("000202"), W("001011"), W("001012"), W("001021"), W("001022")});
    CHECK(c2 == expect);

    PartitionCollection two(2, 2);
    two[1] = {WS({"0"}), WS({"1"})};
    CHECK(generate_code(two) == Code(2, 2, {W("01")}));

    PartitionCollection broken = binary4();
    broken[2].L.clear();
    CHECK_THROWS_AS(generate_code(broken), InputError);
}

TEST_CASE("profiles") {
    CHECK(profile_of(binary4()) == PartitionProfile(2, 4, {1, 1, 0}, {1, 0, 1}));
    CHECK(profile_of(ternary6(true)) == PartitionProfile(3, 6, {1, 0, 1, 1, 2}, {2, 2, 1, 2, 4}));
    CHECK(size_from_profile(PartitionProfile(2, 4, {1, 1, 0}, {1, 0, 1})) == 1);
    CHECK(size_from_profile(PartitionProfile(4, 3, {3, 0}, {1, 3})) == 9);
    CHECK(size_from_profile(PartitionProfile(2, 2, {1}, {1})) == 1);
    CHECK(size_from_profile(PartitionProfile(3, 6, {1, 0, 1, 1, 2}, {2, 2, 1, 2, 4})) == 11);
    CHECK_THROWS_AS(size_from_profile(PartitionProfile(2, 2, {2}, {1})), InputError);
}

TEST_CASE("instantiate_profile") {
    auto pc = instantiate_profile(PartitionProfile(2, 3, {1, 0}, {1, 1}));
    CHECK(pc[1].L == WS({"0"}));
    CHECK(pc[1].R == WS({"1"}));
    CHECK(pc[2].L.empty());
    CHECK(pc[2].R == WS({"01"}));

    auto pc4 = instantiate_profile(PartitionProfile(4, 3, {3, 0}, {1, 3}));
    CHECK(pc4[1].L == WS({"0", "1", "2"}));
    CHECK(pc4[1].R == WS({"3"}));
    CHECK(pc4[2].R == WS({"03", "13", "23"}));

    CHECK_THROWS_AS(instantiate_profile(PartitionProfile(2, 2, {2}, {1})), InputError);

    PartitionProfile p(3, 6, {1, 0, 1, 1, 2}, {2, 2, 1, 2, 4});
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(profile_of(instantiate_profile(p, random_chooser(seed))) == p);
}

TEST_CASE("decompose") {
    auto t = decompose(W("0011"), binary4());
    CHECK(t.steps == std::vector<std::string>{"llrr", "llr", "lr"});
    PartitionCollection two(2, 2);
    two[1] = {WS({"0"}), WS({"1"})};
    CHECK(decompose(W("01"), two).steps == std::vector<std::string>{"lr"});
    CHECK(decompose(W("0"), two).steps == std::vector<std::string>{"l"});
    CHECK(decompose(W("1"), two).steps == std::vector<std::string>{"r"});

    // Every code word ends in lr.
    std::mt19937_64 rng(3);
    for (int t2 = 0; t2 < 200; ++t2) {
        auto pc = random_collection(2 + t2 % 2, 3 + t2 % 5, rng);
        for (const auto& w : generate_code(pc).words) REQUIRE(decompose(w, pc).steps.back() == "lr");
    }
}

TEST_CASE("structural maximality examples") {
    CHECK_FALSE(is_maximal_structural(ternary6(false)));
    CHECK(is_maximal_structural(ternary6(true)));
    CHECK(is_maximal_structural(binary4()));

    Code c1 = generate_code(ternary6(false));
    CHECK_FALSE(is_maximal_bruteforce(c1));
    c1.insert(W("001101"));
    CHECK(is_nonoverlapping_code(c1));
    CHECK(is_maximal_bruteforce(generate_code(ternary6(true))));
}

TEST_CASE("partitions_of_maximal") {
    auto pc = partitions_of_maximal(Code(2, 4, {W("0011")}));
    REQUIRE(pc);
    CHECK(generate_code(*pc) == Code(2, 4, {W("0011")}));

    Code t(3, 3, {W("012"), W("002"), W("102"), W("112")});
    auto pt = partitions_of_maximal(t);
    REQUIRE(pt);
    CHECK((*pt)[1].L == WS({"0", "1"}));
    CHECK((*pt)[1].R == WS({"2"}));
    // L_2 is drawn from (L_1 R_1) = {02, 12}; neither is a prefix in the code.
    CHECK((*pt)[2].L.empty());
    CHECK((*pt)[2].R == WS({"02", "12"}));
    CHECK(generate_code(*pt) == t);

    CHECK_FALSE(partitions_of_maximal(Code(4, 3, {W("012"), W("312")})));
}

TEST_CASE("collection counts") {
    auto count = [](int q, int n) { return for_each_collection(q, n, [](const PartitionCollection&) {}); };
    CHECK(count(2, 4) == 8);
    CHECK(count(2, 6) == 48);
    CHECK(count(2, 8) == 3888);
    CHECK(count(3, 4) == 216);
}

TEST_CASE("structural and brute-force maximality agree, q=2 n in {4,6,8} exhaustive") {
    for (int n : {4, 6, 8}) {
        int maximal = 0;
        for_each_collection(2, n, [&](const PartitionCollection& pc) {
            bool s = is_maximal_structural(pc);
            bool b = is_maximal_bruteforce(generate_code(pc));
            if (s != b) {
                std::ostringstream os;
                write_collection(pc, os);
                INFO(os.str());
                REQUIRE(s == b);
            }
            maximal += s;
        });
        CHECK(maximal > 0);
    }
}

TEST_CASE("structural and brute-force maximality agree on random ternary collections") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1500; ++t) {
        int n = 3 + t % 4;
        auto pc = random_collection(3, n, rng);
        bool s = is_maximal_structural(pc);
        bool b = is_maximal_bruteforce(generate_code(pc));
        if (s != b) {
            std::ostringstream os;
            write_collection(pc, os);
            INFO(os.str());
            REQUIRE(s == b);
        }
    }
}

TEST_CASE("uniqueness of the collection behind a maximal code") {
    std::mt19937_64 rng(9);
    int seen = 0;
    for (int t = 0; t < 3000; ++t) {
        int q = 2 + t % 2, n = 3 + t % 5;
        auto pc = random_collection(q, n, rng);
        if (!is_maximal_structural(pc)) continue;
        ++seen;
        auto back = partitions_of_maximal(generate_code(pc));
        REQUIRE(back);
        if (q >= 3 || n % 2 == 1) {
            REQUIRE(*back == pc);
        } else {
            for (int i = 1; i < n / 2; ++i) REQUIRE((*back)[i] == pc[i]);
            const auto& a = (*back)[n / 2];
            const auto& b = pc[n / 2];
            bool same = a == b;
            bool mirror = a.L == b.R && a.R == b.L && (a.L.empty() || a.R.empty());
            REQUIRE((same || mirror));
            if (same) REQUIRE(*back == pc);
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("random collections: non-overlap, size law, per-level codes, letter law") {
    std::mt19937_64 rng(1);
    for (int q : {2, 3})
        for (int n = 3; n <= 7; ++n)
            for (int t = 0; t < 300; ++t) {
                auto pc = random_collection(q, n, rng);
                Code c = generate_code(pc);
                REQUIRE(is_nonoverlapping_code(c));
                std::set<Symbol> first, last;
                for (const auto& w : pc[1].L) first.insert(w[0]);
                for (const auto& w : pc[1].R) last.insert(w[0]);
                REQUIRE(static_cast<std::int64_t>(c.size()) == size_from_profile(profile_of(pc)));
                for (int k = 1; k < n; ++k) {
                    Code lv(q, k);
                    for (const auto& w : pc[k].L) lv.insert(w);
                    for (const auto& w : pc[k].R) lv.insert(w);
                    REQUIRE(is_nonoverlapping_code(lv));
                    if (k > 1)
                        for (const auto& w : lv.words) {
                            REQUIRE(first.count(w.front()));
                            REQUIRE(last.count(w.back()));
                        }
                }
            }
}

TEST_CASE("collection file round trip") {
    std::ostringstream out;
    write_collection(ternary6(true), out);
    std::istringstream in(out.str());
    CHECK(read_collection(in) == ternary6(true));
    CHECK(out.str().find("L2: -") != std::string::npos);

    std::istringstream bad("q=2 n=4\nL1: 0\nR1: 2\n");
    CHECK_THROWS_AS(read_collection(bad), ParseError);
}
