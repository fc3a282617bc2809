#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "k3cover/lattice.hpp"
#include "k3cover/named_lattices.hpp"
#include "oracles.hpp"

using namespace k3cover;

TEST_CASE("pairing and norms on small lattices") {
    Lattice a2 = lattices::a2_minus1();
    QVec e1 = basis_vector(a2, 0), e2 = basis_vector(a2, 1);
    REQUIRE(norm(a2, e1) == Rat(-2));
    REQUIRE(pair(a2, e1, e2) == Rat(1));
    QVec sum = add(e1, e2);
    REQUIRE(norm(a2, sum) == Rat(-2));

    Lattice u = make_lattice({"F", "O"}, IMat{{0, 1}, {1, -2}});
    REQUIRE(norm(u, basis_vector(u, 0)) == Rat(0));
    REQUIRE(pair(u, basis_vector(u, 0), basis_vector(u, 1)) == Rat(1));
    REQUIRE(signature(u).pos == 1);
    REQUIRE(signature(u).neg == 1);
    REQUIRE(signature(u).zero == 0);
}

TEST_CASE("make_lattice rejects malformed input") {
    REQUIRE_THROWS_AS(make_lattice({"a", "b"}, IMat{{0, 1}, {2, 0}}), invalid_input);
    REQUIRE_THROWS_AS(make_lattice({"a", "a"}, IMat{{0, 1}, {1, 0}}), invalid_input);
    REQUIRE_THROWS_AS(make_lattice({"a"}, IMat{{0, 1}, {1, 0}}), invalid_input);
}

TEST_CASE("signature agrees with the characteristic-polynomial oracle") {
    // Spot checks first.
    REQUIRE(str(signature_of(IMat{{0, 1}, {1, -2}})) == "(1,1)");
    REQUIRE(str(signature_of(IMat{{0}})) == "(0,0;1 null)");
    REQUIRE(str(signature_of(IMat{{2, 0, 0}, {0, -2, 0}, {0, 0, 0}})) == "(1,1;1 null)");

    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(oracles::rand_int(1, 6));
        IMat m = oracles::random_symmetric(n, 4);
        Signature got = signature_of(m);
        Signature want = oracles::char_poly_signature(m);
        INFO("trial " << trial << ", matrix " << n << "x" << n);
        REQUIRE(got.pos == want.pos);
        REQUIRE(got.neg == want.neg);
        REQUIRE(got.zero == want.zero);
    }
}

TEST_CASE("invariant factors agree with the determinantal-divisor oracle") {
    REQUIRE(invariant_factors(IMat{{-2, 1}, {1, -2}}) == IVec{1, 3});
    REQUIRE(invariant_factors(IMat{{2, 0}, {0, 4}}) == IVec{2, 4});
    // A matrix needing the divisibility fix-up: gcd of entries 1 but no unit
    // entry.
    REQUIRE(invariant_factors(IMat{{2, 3}, {3, 2}}) == IVec{1, 5});

    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(oracles::rand_int(1, 5));
        IMat m = oracles::random_symmetric(n, 4);
        INFO("trial " << trial);
        REQUIRE(invariant_factors(m) == oracles::determinantal_divisors(m));
    }
}

TEST_CASE("determinant matches Laplace expansion") {
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(oracles::rand_int(1, 5));
        IMat m = oracles::random_symmetric(n, 4);
        INFO("trial " << trial);
        REQUIRE(bareiss_det(m) == oracles::laplace_det(m));
    }
}

TEST_CASE("glue vectors enlarge the lattice and survive round trips") {
    Lattice a1x4 = lattices::a1_sum(4);
    QVec half(4, Rat(1, 2));

    Lattice glued = adjoin_glue(a1x4, half, "g");
    REQUIRE(glued.glue.size() == 1);
    REQUIRE(glued.glue[0] == half);  // stored verbatim
    REQUIRE(is_member(glued, half));
    REQUIRE_FALSE(is_member(a1x4, half));

    QVec partial{Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)};
    REQUIRE_FALSE(is_member(glued, partial));

    // Index-2 overlattice: determinant divides by 4.
    REQUIRE(det(a1x4) == 16);
    REQUIRE(det(glued) == 4);
    REQUIRE(is_even(glued));
}

TEST_CASE("adjoin_glue rejects vectors outside the dual or with odd square") {
    Lattice a1x4 = lattices::a1_sum(4);
    // Pairs integrally but has square -1/2.
    QVec bad_norm{Rat(1, 2), Rat(0), Rat(0), Rat(0)};
    REQUIRE_THROWS_AS(adjoin_glue(a1x4, bad_norm), invalid_input);
    // Does not even pair integrally.
    QVec bad_pair{Rat(1, 3), Rat(0), Rat(0), Rat(0)};
    REQUIRE_THROWS_AS(adjoin_glue(a1x4, bad_pair), invalid_input);
    // Wrong length.
    REQUIRE_THROWS_AS(adjoin_glue(a1x4, QVec{Rat(1, 2)}), invalid_input);
}

TEST_CASE("named lattices have the advertised determinants") {
    REQUIRE(det(lattices::a2_minus1()) == 3);
    REQUIRE(det(lattices::a1_sum(15)) == -32768);
    REQUIRE(det(lattices::even_set_15()) == -128);   // index 2^4 drop
    REQUIRE(det(lattices::rank16_base()) == -768);
    REQUIRE(det(lattices::rank16_prime()) == -192);  // one more glue: |det|/4
    REQUIRE(det(lattices::rank15_base()) == 1024);   // rank 15: (-1)^14 sign
    REQUIRE(det(lattices::rank15_prime()) == 256);
    REQUIRE(is_even(lattices::rank16_prime()));
    REQUIRE(is_even(lattices::rank15_prime()));
}

TEST_CASE("discriminant groups") {
    DiscriminantGroup a2 = discriminant_group(lattices::a2_minus1());
    REQUIRE(a2.order == 3);
    REQUIRE(a2.group == "Z/3");

    DiscriminantGroup base = discriminant_group(lattices::rank16_base());
    DiscriminantGroup prime = discriminant_group(lattices::rank16_prime());
    REQUIRE(base.order == 768);
    REQUIRE(prime.order == 192);
    REQUIRE(base.order == 4 * prime.order);
    // 192 = 6 * 2^5.
    REQUIRE(prime.order == Int(6) * 32);

    Lattice degenerate = make_lattice({"z"}, IMat{{0}});
    REQUIRE_THROWS_AS(discriminant_group(degenerate), invalid_input);
}

TEST_CASE("three-divisibility sees glue") {
    Lattice six = lattices::a2_minus1();
    six.names = {"A11", "A12"};
    for (int i = 1; i < 6; ++i) {
        Lattice block = lattices::a2_minus1();
        block.names = {"A" + std::to_string(i + 1) + "1",
                       "A" + std::to_string(i + 1) + "2"};
        six = lattices::direct_sum(six, block);
    }
    QVec l(12);
    for (std::size_t b = 0; b < 6; ++b) {
        l[2 * b] = Rat(2, 3);
        l[2 * b + 1] = Rat(1, 3);
    }
    QVec branch = scale(Rat(3), l);  // 2B + C for the block sums
    REQUIRE_FALSE(is_three_divisible(six, branch));
    Lattice glued = adjoin_glue(six, l, "L");
    REQUIRE(is_three_divisible(glued, branch));
}

TEST_CASE("root enumeration matches box counting") {
    Lattice a2 = lattices::a2_minus1();
    REQUIRE(enumerate_roots(a2, -2).size() == 6);
    REQUIRE(enumerate_roots(a2, -2).size() == oracles::count_roots_box(a2, -2, 4));
    REQUIRE(enumerate_roots(a2, -6).size() == oracles::count_roots_box(a2, -6, 4));
    REQUIRE(enumerate_roots(a2, -4).empty());  // A2 represents no -4

    Lattice a1x3 = lattices::a1_sum(3);
    REQUIRE(enumerate_roots(a1x3, -2).size() == 6);
    REQUIRE(enumerate_roots(a1x3, -4).size() == oracles::count_roots_box(a1x3, -4, 4));
    REQUIRE(enumerate_roots(a1x3, -8).size() == oracles::count_roots_box(a1x3, -8, 4));

    // A1^4 glued by the all-halves vector is the D4(-1) root lattice: 24
    // roots of square -2.
    Lattice d4 = adjoin_glue(lattices::a1_sum(4), QVec(4, Rat(1, 2)), "g");
    auto roots = enumerate_roots(d4, -2);
    REQUIRE(roots.size() == 24);
    REQUIRE(roots.size() == oracles::count_roots_box(d4, -2, 4));
    // Both signs of each root are listed.
    std::set<std::vector<std::string>> keys;
    for (const auto& r : roots) {
        std::vector<std::string> key;
        for (const auto& c : r) key.push_back(str(c));
        keys.insert(key);
        REQUIRE(norm(d4, r) == Rat(-2));
        REQUIRE(std::count_if(roots.begin(), roots.end(),
                              [&](const QVec& s) { return s == scale(Rat(-1), r); }) == 1);
    }
    REQUIRE(keys.size() == 24);

    // Positive definite side.
    Lattice pos = make_lattice({"x", "y"}, IMat{{2, 0}, {0, 2}});
    REQUIRE(enumerate_roots(pos, 2).size() == 4);
}

TEST_CASE("root enumeration guards") {
    Lattice u = make_lattice({"F", "O"}, IMat{{0, 1}, {1, -2}});
    REQUIRE_THROWS_AS(enumerate_roots(u, -2), invalid_input);
    REQUIRE_THROWS_AS(enumerate_roots(lattices::a1_sum(17), -2), invalid_input);
    REQUIRE_THROWS_AS(enumerate_roots(lattices::a2_minus1(), -10), invalid_input);
    REQUIRE_THROWS_AS(enumerate_roots(lattices::a2_minus1(), 0), invalid_input);
}

TEST_CASE("A2(-1) recognition") {
    REQUIRE(is_a2_minus1(lattices::a2_minus1()));
    REQUIRE(is_a2_minus1(make_lattice({"a", "b"}, IMat{{-2, -1}, {-1, -2}})));
    REQUIRE_FALSE(is_a2_minus1(lattices::a1_sum(2)));
    REQUIRE_FALSE(is_a2_minus1(make_lattice({"a", "b"}, IMat{{-4, 1}, {1, -2}})));
    REQUIRE_FALSE(is_a2_minus1(make_lattice({"a", "b"}, IMat{{2, 1}, {1, 2}})));
    REQUIRE_FALSE(is_a2_minus1(lattices::a1_sum(3)));
    REQUIRE_FALSE(is_a2_minus1(lattices::span_of_square("d", -2)));
}

TEST_CASE("K3 embeddability criterion") {
    Lattice u = make_lattice({"F", "O"}, IMat{{0, 1}, {1, -2}});
    REQUIRE(embeds_in_k3_lattice(u).kind == EmbedsVerdict::Kind::yes_sufficient);

    Lattice big = u;
    for (int i = 0; i < 5; ++i)
        big = lattices::direct_sum(big, lattices::a1_sum(2, "N" + std::to_string(i)));
    REQUIRE(big.rank() == 12);
    REQUIRE(embeds_in_k3_lattice(big).kind == EmbedsVerdict::Kind::yes_sufficient);

    Lattice thirteen = lattices::direct_sum(big, lattices::span_of_square("n", -2));
    REQUIRE(embeds_in_k3_lattice(thirteen).kind == EmbedsVerdict::Kind::unknown);

    REQUIRE(embeds_in_k3_lattice(lattices::a2_minus1()).kind == EmbedsVerdict::Kind::unknown);
    Lattice odd = make_lattice({"h"}, IMat{{1}});
    REQUIRE(embeds_in_k3_lattice(odd).kind == EmbedsVerdict::Kind::unknown);
}

TEST_CASE("flatten produces an integral basis containing the glue") {
    Lattice d4 = adjoin_glue(lattices::a1_sum(4), QVec(4, Rat(1, 2)), "g");
    Flattened flat = flatten(d4);
    REQUIRE(flat.lat.rank() == 4);
    REQUIRE(is_even(flat.lat));
    for (const auto& row : flat.basis_in_old) REQUIRE(is_member(d4, row));
    REQUIRE(is_member(d4, QVec(4, Rat(1, 2))));
}
