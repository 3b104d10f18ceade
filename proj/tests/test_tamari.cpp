#include "doctest.h"
#include "oracles.hpp"
#include "tamarib/tamari.hpp"

using namespace tamarib;
using namespace tamarib::testing;

TEST_SUITE_BEGIN("tamari");

TEST_CASE("symbols") {
    CHECK(TBSymbol::inf() > TBSymbol::finite(1000));
    CHECK(TBSymbol::inf() == TBSymbol::inf());
    CHECK(TBSymbol::inf() <= TBSymbol::inf());
    CHECK((TBSymbol::inf() - 3).is_inf());
    CHECK((TBSymbol::finite(2) - 3).value() == -1);
}

TEST_CASE("validate_type_b examples") {
    CHECK(validate_type_b(parse_tb_vector("(0,0,0,0)")).valid);
    CHECK(validate_type_b(parse_tb_vector("(0,0,1,2)")).valid);

    const auto r = validate_type_b(parse_tb_vector("(1,0)"));
    CHECK_FALSE(r.valid);
    CHECK(r.rule == 2);
    CHECK(r.i == 1);
    CHECK(r.j == 2);

    const auto s = validate_type_b(parse_tb_vector("(0,1,1,2)"));
    CHECK_FALSE(s.valid);
    CHECK(s.rule == 1);
    CHECK(s.i == 2);
    CHECK(s.j == 3);
    CHECK(s.describe() == "rule (i) violated at i=2, j=3");
}

TEST_CASE("validate_type_b rejects malformed symbols") {
    CHECK_THROWS_AS(validate_type_b(parse_tb_vector("(0,4,0,0)")), MalformedVector);
    CHECK_THROWS_AS(validate_type_b(parse_tb_vector("(-1,0)")), MalformedVector);
    CHECK_THROWS_AS(validate_type_b(TBVector{}), MalformedVector);
}

TEST_CASE("validate_type_a examples") {
    CHECK(validate_type_a(TAVector({1, 2, 3})).valid);
    CHECK(validate_type_a(TAVector({3, 2, 3})).valid);
    CHECK(validate_type_a(TAVector({1, 3, 3})).valid);
    CHECK_FALSE(validate_type_a(TAVector({2, 3, 3})).valid);
    const auto r = validate_type_a(TAVector({3, 1, 3}));
    CHECK_FALSE(r.valid);
    CHECK(r.rule == 1);
    CHECK(r.i == 2);
    CHECK_THROWS_AS(validate_type_a(TAVector({0, 2, 3})), MalformedVector);
    CHECK_THROWS_AS(validate_type_a(TAVector({1, 4, 3})), MalformedVector);
}

TEST_CASE("enumerate_type_b small cases") {
    const auto one = enumerate_type_b(1);
    REQUIRE(one.size() == 2);
    CHECK(to_string(one[0]) == "(0)");
    CHECK(to_string(one[1]) == "(inf)");

    std::vector<std::string> two;
    for (const auto& v : enumerate_type_b(2)) two.push_back(to_string(v));
    CHECK(two == std::vector<std::string>{"(0,0)", "(0,1)", "(0,inf)", "(1,inf)", "(inf,0)", "(inf,inf)"});

    CHECK_THROWS_AS(enumerate_type_b(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_type_a(0), std::invalid_argument);
}

TEST_CASE("enumerate_type_b equals the brute-force filter") {
    // Frozen from the brute-force grid filter: 2, 6, 20, 70, 252.
    const std::vector<std::size_t> frozen{2, 6, 20, 70, 252};
    for (int n = 1; n <= 5; ++n) {
        const auto fast = enumerate_type_b(n);
        const auto slow = brute_force_type_b(n);
        CHECK(fast == slow);
        CHECK(fast.size() == frozen[static_cast<std::size_t>(n - 1)]);
        // The library validator agrees with the naive rules on the whole grid.
        for (const auto& v : fast) CHECK(validate_type_b(v).valid);
    }
}

TEST_CASE("type-B counts are central binomials up to n = 7") {
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_type_b(n).size() == binomial(2 * n, n));
}

TEST_CASE("validator and naive rules agree on every grid tuple (n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> symbols;
        for (int s = 0; s < n; ++s) symbols.push_back(s);
        symbols.push_back(kInf);
        std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
        for (;;) {
            std::vector<int> r;
            for (auto d : digit) r.push_back(symbols[d]);
            CHECK(validate_type_b(to_tb(r)).valid == naive_type_b_member(r));
            int pos = n - 1;
            while (pos >= 0 && ++digit[static_cast<std::size_t>(pos)] == symbols.size())
                digit[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
    }
}

TEST_CASE("prose consequences hold for every element") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& v : enumerate_type_b(n)) {
            for (int i = 0; i + 1 < n; ++i) {
                if (v[i] == v[i + 1]) CHECK((v[i].is_inf() || v[i].value() == 0));
                if (v[i].is_inf()) CHECK((v[i + 1].is_inf() || v[i + 1].value() == 0));
            }
            if (n > 1 && v[0] == TBSymbol::finite(1)) CHECK(v[n - 1].is_inf());
        }
    }
}

TEST_CASE("(0,1,...,n-1) is the largest all-finite element") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<TBSymbol> e;
        for (int i = 0; i < n; ++i) e.push_back(TBSymbol::finite(i));
        const TBVector staircase(e);
        CHECK(validate_type_b(staircase).valid);
        for (const auto& v : enumerate_type_b(n)) {
            const bool finite = std::none_of(v.entries().begin(), v.entries().end(), [](TBSymbol s) { return s.is_inf(); });
            if (finite) CHECK(leq_componentwise(v, staircase));
        }
    }
}

TEST_CASE("componentwise order") {
    const auto a = parse_tb_vector("(0,1)");
    CHECK(leq_componentwise(a, a));
    CHECK(leq_componentwise(a, parse_tb_vector("(0,inf)")));
    CHECK_FALSE(leq_componentwise(parse_tb_vector("(0,inf)"), parse_tb_vector("(inf,0)")));
    CHECK(leq_componentwise(parse_tb_vector("(0,0,1,0)"), parse_tb_vector("(0,0,1,2)")));
    CHECK_THROWS_AS(leq_componentwise(a, parse_tb_vector("(0,1,2)")), std::invalid_argument);
    CHECK_THROWS_AS(leq_componentwise(TAVector({1}), TAVector({1, 2})), std::invalid_argument);
}

TEST_CASE("bottom and top are unique extremes") {
    for (int n = 1; n <= 5; ++n) {
        const auto lattice = build_type_b_lattice(n);
        const auto& p = lattice.poset;
        const Index bottom = 0;
        const Index top = p.size() - 1;
        CHECK(lattice.elements[bottom] == TBVector(std::vector<TBSymbol>(static_cast<std::size_t>(n), TBSymbol::finite(0))));
        CHECK(lattice.elements[top] == TBVector(std::vector<TBSymbol>(static_cast<std::size_t>(n), TBSymbol::inf())));
        for (Index v = 0; v < p.size(); ++v) {
            CHECK(p.leq(bottom, v));
            CHECK(p.leq(v, top));
        }
    }
}

TEST_CASE("entry sums") {
    CHECK(entry_sum(parse_tb_vector("(0,0,0)")) == 0);
    CHECK(entry_sum(parse_tb_vector("(inf,inf,inf,inf)")) == 16);
    CHECK(entry_sum(parse_tb_vector("(0,0,1,2)")) == 3);
}

TEST_CASE("type-A counts are Catalan numbers") {
    CHECK(enumerate_type_a(1) == std::vector<TAVector>{TAVector({1})});
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_type_a(n).size() == catalan(n));
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_type_a(n).size() == brute_force_type_a_count(n));
    CHECK(enumerate_type_a(3).size() == 5);
    CHECK(enumerate_type_a(5).size() == 42);
}

TEST_CASE("text form round trip (property)") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& v : enumerate_type_b(n)) CHECK(parse_tb_vector(to_string(v)) == v);
    CHECK(parse_tb_vector(" (0, 0,3, inf) ") == parse_tb_vector("(0,0,3,inf)"));
    CHECK(to_string(parse_tb_vector("(0,\xE2\x88\x9E)")) == "(0,inf)");
    CHECK_THROWS_AS(parse_tb_vector("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tb_vector("(0,x)"), std::invalid_argument);
}

TEST_SUITE_END();
