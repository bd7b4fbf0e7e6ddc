#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace syztest;

TEST_CASE("buchberger on monomial pairs keeps the input basis") {
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {});
    GroebnerBasis gb = gb_of_ideal({ring->parse("x^2"), ring->parse("x*y")});
    REQUIRE(gb.gens.size() == 2); // the single S-pair cancels identically
    verify_basis(gb);

    auto ring3 = make_ring({"x", "y", "z"}, FieldSpec{32003}, {});
    GroebnerBasis principal = gb_of_ideal({ring3->parse("y*z")});
    REQUIRE(principal.gens.size() == 1);
    CHECK(principal.gens[0][0] == ring3->parse("y*z"));
}

TEST_CASE("buchberger on the twelve-quadric ideal self-checks") {
    auto inst = fixture_huneke();
    const GroebnerBasis& gb = inst.ring->ideal_gb();
    CHECK(gb.gens.size() >= 12);
    verify_basis(gb); // every S-pair reduces to zero
    for (const auto& g : inst.ring->ideal())
        CHECK(normal_form(g, gb).is_zero()); // membership of original generators
}

TEST_CASE("normal_form examples and idempotence") {
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {});
    GroebnerBasis gb = gb_of_ideal({ring->parse("x^2"), ring->parse("x*y")});
    CHECK(normal_form(ring->parse("x^2"), gb).is_zero());
    Polynomial y2 = ring->parse("y^2");
    // no leading term of the basis divides y^2 (degree-2 piece of the ideal
    // is spanned by x^2 and x*y)
    CHECK(normal_form(y2, gb) == y2);

    auto ring5 = make_ring({"a", "b", "c", "d", "e"}, FieldSpec{32003}, {});
    GroebnerBasis gbe = gb_of_ideal({ring5->parse("ade-bce")});
    CHECK(normal_form(ring5->parse("e*(a*d-b*c)"), gbe).is_zero());

    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        std::vector<Term> ts;
        for (int k = 0; k < 3; ++k) {
            std::vector<int> e(2, 0);
            for (int d = 0, deg = int(rng() % 4); d < deg; ++d) e[rng() % 2]++;
            ts.push_back({Monomial(e), Coeff::from_int(long(rng() % 7) - 3, ring->field())});
        }
        Polynomial f = Polynomial::from_terms(ts, 2, ring->field(), ring->order());
        Polynomial nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
    }
}

TEST_CASE("syzygy_basis examples") {
    // ker(y : R -> R) over R = k[x,y]/(x^2, xy) is generated by x
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {"x^2", "x*y"});
    PolyMatrix m = make_matrix(ring, {{"y"}}, {0});
    PolyMatrix syz = syzygy_basis(m, *ring);
    REQUIRE(syz.rows == 1);
    REQUIRE(syz.cols == 1);
    CHECK(syz.at(0, 0) == ring->parse("x"));

    // matrix factorization: syzygies of [[a,b],[c,d]] over k[a..e]/(ade-bce)
    auto ring5 = make_ring({"a", "b", "c", "d", "e"}, FieldSpec{32003}, {"a*d*e-b*c*e"});
    PolyMatrix mf = make_matrix(ring5, {{"a", "b"}, {"c", "d"}}, {0, 0});
    PolyMatrix syz2 = syzygy_basis(mf, *ring5);
    PolyMatrix expected = make_matrix(ring5, {{"d*e", "-b*e"}, {"-c*e", "a*e"}}, {1, 1});
    CHECK(matrix_equal_up_to_col_order_scale(syz2, expected));

    // unit column: zero syzygy module
    PolyMatrix unit = make_matrix(ring, {{"1"}}, {0});
    // a unit presentation minimalizes away; raw syzygies of [1] are empty
    PolyMatrix syz3 = syzygy_basis(unit, *ring);
    CHECK(syz3.cols == 0);
}

TEST_CASE("syzygy soundness: columns multiply to zero mod I") {
    auto corpus = generate_corpus(11, 6);
    for (const auto& inst : corpus) {
        const PolyMatrix& A = inst.module.matrix();
        PolyMatrix syz = syzygy_basis(A, *inst.ring, inst.limits);
        for (int k = 0; k < syz.cols; ++k)
            for (int j = 0; j < A.rows; ++j) {
                Polynomial acc = inst.ring->zero();
                for (int m = 0; m < A.cols; ++m) acc = acc + A.at(j, m) * syz.at(m, k);
                CHECK(inst.ring->nf_mod_ideal(acc).is_zero());
            }
    }
}

TEST_CASE("ideal membership examples") {
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {});
    Ideal J = parse_ideal(ring, {"x^2", "x*y"});
    CHECK_FALSE(ideal_membership(ring->parse("x"), J));
    CHECK(ideal_membership(ring->zero(), J));
    auto ring5 = make_ring({"a", "b", "c", "d", "e"}, FieldSpec{32003}, {});
    CHECK(ideal_membership(ring5->parse("ade-bce"), parse_ideal(ring5, {"e"})));
}

TEST_CASE("radical membership examples") {
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {});
    CHECK(radical_membership(ring->parse("x"), parse_ideal(ring, {"x^2", "x*y"})));
    auto ring5 = make_ring({"a", "b", "c", "d", "e"}, FieldSpec{32003}, {});
    Ideal hyp = parse_ideal(ring5, {"a*d*e-b*c*e"});
    CHECK_FALSE(radical_membership(ring5->parse("a*d-b*c"), hyp));
    CHECK_FALSE(radical_membership(ring5->parse("e"), hyp));
    // confirm the negative answers with the power oracle
    GroebnerBasis gb = ideal_gb(hyp);
    for (const char* s : {"a*d-b*c", "e"}) {
        Polynomial f = ring5->parse(s);
        Polynomial power = ring5->one();
        for (int n = 1; n <= 4; ++n) {
            power = power * f;
            CHECK_FALSE(ideal_membership(power, gb));
        }
    }
}

TEST_CASE("radical membership agrees with iterated powers on monomial corpus") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        auto ring = make_ring({"x", "y", "z"}, FieldSpec{32003}, {});
        std::vector<std::string> gens;
        auto mono = [&](int deg) {
            std::string s;
            const char* names[3] = {"x", "y", "z"};
            for (int d = 0; d < deg; ++d) {
                if (!s.empty()) s += "*";
                s += names[rng() % 3];
            }
            return s.empty() ? std::string("x") : s;
        };
        for (int g = 0, n = 1 + int(rng() % 3); g < n; ++g) gens.push_back(mono(1 + int(rng() % 3)));
        Ideal J = parse_ideal(ring, gens);
        GroebnerBasis gb = ideal_gb(J);
        Polynomial f = ring->parse(mono(1 + int(rng() % 2)));
        bool rad = radical_membership(f, gb);
        bool power = false;
        Polynomial acc = ring->one();
        for (int n = 1; n <= 8 && !power; ++n) {
            acc = acc * f;
            power = ideal_membership(acc, gb);
        }
        CHECK(rad == power);
    }
}

TEST_CASE("ideal intersection examples") {
    auto ring5 = make_ring({"a", "b", "c", "d", "e"}, FieldSpec{32003}, {});
    Ideal J = parse_ideal(ring5, {"e"});
    Ideal K = parse_ideal(ring5, {"a*d-b*c"});
    Ideal inter = ideal_intersection(J, K);
    CHECK(ideal_equal(inter, parse_ideal(ring5, {"a*d*e-b*c*e"})));

    Ideal JJ = parse_ideal(ring5, {"e", "a*d"});
    CHECK(ideal_equal(ideal_intersection(JJ, JJ), JJ));

    auto ring2 = make_ring({"x", "y"}, FieldSpec{32003}, {});
    CHECK(ideal_equal(ideal_intersection(parse_ideal(ring2, {"x"}), parse_ideal(ring2, {"y"})),
                      parse_ideal(ring2, {"x*y"})));
}

TEST_CASE("ideal quotient examples") {
    auto ring1 = make_ring({"x"}, FieldSpec{32003}, {});
    CHECK(ideal_equal(ideal_quotient(parse_ideal(ring1, {"x^2"}), ring1->parse("x")),
                      parse_ideal(ring1, {"x"})));
    auto ring2 = make_ring({"x", "y"}, FieldSpec{32003}, {});
    Ideal J = parse_ideal(ring2, {"x^2", "x*y"});
    CHECK(ideal_equal(ideal_quotient(J, ring2->one()), J));
    CHECK_THROWS_AS(ideal_quotient(J, ring2->zero()), invariant_error);
}

TEST_CASE("huneke colon identities") {
    auto inst = fixture_huneke();
    const auto& ring = inst.ring;
    Ideal I{ring->ideal()};
    Ideal quotient = ideal_quotient(I, ring->parse("y"), inst.limits);
    Ideal expected = I;
    for (const char* s : {"u", "v", "z^2"}) expected.gens.push_back(ring->parse(s));
    CHECK(ideal_equal(quotient, expected, inst.limits));

    Ideal ann = annihilator_of_ideal_mod({ring->parse("u"), ring->parse("v"), ring->parse("z^2")},
                                         *ring, inst.limits);
    Ideal expected2 = I;
    expected2.gens.push_back(ring->parse("y"));
    CHECK(ideal_equal(ann, expected2, inst.limits));
}

TEST_CASE("annihilator examples") {
    auto ring = make_ring({"x", "y", "z"}, FieldSpec{32003}, {"y*z"});
    Ideal r = annihilator_of_ideal_mod({ring->parse("y")}, *ring);
    CHECK(ideal_equal(r, parse_ideal(ring, {"z"})));
    Ideal faithful = annihilator_of_ideal_mod({ring->one()}, *ring);
    CHECK(ideal_equal(faithful, Ideal{ring->ideal()}));
    CHECK_THROWS_AS(annihilator_of_ideal_mod({}, *ring), invariant_error);
}

TEST_CASE("membership consistency: generators reduce to zero in their basis") {
    auto inst = fixture_matfac();
    for (const auto& g : inst.ring->ideal())
        CHECK(normal_form(g, inst.ring->ideal_gb()).is_zero());
}

TEST_CASE("resource caps fail loudly") {
    auto ring = make_ring({"x", "y", "z"}, FieldSpec{32003}, {});
    Limits tiny;
    tiny.pair_cap = 1;
    std::vector<Polynomial> gens = {ring->parse("x^2*y - z^2"), ring->parse("x*z - y^2"),
                                    ring->parse("y*z - x^2")};
    CHECK_THROWS_AS(gb_of_ideal(gens, tiny), limit_error);
    try {
        gb_of_ideal(gens, tiny);
    } catch (const limit_error& e) {
        CHECK(e.cap == "pair_cap");
    }
}
