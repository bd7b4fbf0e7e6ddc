#include <doctest.h>

#include "helpers.hpp"

using namespace syztest;

namespace {

const CheckEntry* find_entry(const CheckReport& rep, const std::string& claim) {
    for (const auto& e : rep.entries)
        if (e.claim == claim) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("detect_nondecreasing_start examples") {
    CHECK(detect_nondecreasing_start({1, 1, 1, 2, 3}) == 0);
    CHECK(detect_nondecreasing_start({3, 1, 1, 3}) == 1);
    CHECK(detect_nondecreasing_start({5, 3, 4, 2}) == std::nullopt);
    CHECK(detect_nondecreasing_start({1}) == std::nullopt);
}

TEST_CASE("lemma checks on the first worked example") {
    CheckReport rep = run_checks(fixture_rahmati());
    CHECK_FALSE(rep.any_fails());
    CHECK(rep.betti == std::vector<int>{1, 1, 1, 2, 3, 5, 8, 13, 21});
    CHECK(rep.dims == std::vector<std::string>{"0", "1", "0", "1", "1", "1", "1", "1"});
    CHECK(rep.nondecreasing_from == 0);

    const CheckEntry* strict = find_entry(rep, "lemma_strict");
    REQUIRE(strict);
    CHECK(strict->verdict == Verdict::Holds);

    const CheckEntry* supp1 = find_entry(rep, "lemma_supp[n=1]");
    REQUIRE(supp1);
    CHECK(supp1->verdict == Verdict::Holds);
    CHECK(supp1->detail.find("touched minn = {}") != std::string::npos);

    const CheckEntry* main_a = find_entry(rep, "theorem_main.a");
    REQUIRE(main_a);
    CHECK(main_a->verdict == Verdict::Holds);
    CHECK(main_a->detail.find("n = 3") != std::string::npos);

    const CheckEntry* quick = find_entry(rep, "prop_quick");
    REQUIRE(quick);
    CHECK(quick->verdict == Verdict::Holds);
    CHECK(quick->detail.find("full from Omega_4") != std::string::npos);

    const CheckEntry* dim = find_entry(rep, "corollary_dim");
    REQUIRE(dim);
    CHECK(dim->verdict == Verdict::Holds);
}

TEST_CASE("checks on the matrix factorization") {
    CheckReport rep = run_checks(fixture_matfac());
    CHECK_FALSE(rep.any_fails());
    for (int b : rep.betti) CHECK(b == 2);
    CHECK(find_entry(rep, "lemma_strict")->verdict == Verdict::Vacuous);
    CHECK(find_entry(rep, "theorem_main.b")->verdict == Verdict::Holds);
    CHECK(find_entry(rep, "theorem_main.c")->verdict == Verdict::Holds);
    CHECK(find_entry(rep, "theorem_main.c")->detail.find("2=2") != std::string::npos);
    CHECK(find_entry(rep, "prop_quick")->verdict == Verdict::Holds);
    CHECK(find_entry(rep, "prop_quick")->detail.find("never full") != std::string::npos);
    // support classes split by parity
    REQUIRE(rep.supp_classes.size() == 2);
    CHECK(rep.supp_classes[0] == std::vector<int>{0, 2, 4, 6});
    CHECK(rep.supp_classes[1] == std::vector<int>{1, 3, 5, 7});
}

TEST_CASE("checks on the shrink example") {
    CheckReport rep = run_checks(fixture_shrink());
    CHECK_FALSE(rep.any_fails());
    const CheckEntry* shrink = find_entry(rep, "lemma_shrink");
    REQUIRE(shrink);
    CHECK(shrink->verdict == Verdict::Holds);
    CHECK(shrink->detail.find("height = 1") != std::string::npos);
}

TEST_CASE("checks on the colon example stay honest about the window") {
    CheckReport rep = run_checks(fixture_huneke());
    CHECK_FALSE(rep.any_fails());
    // the asymptotic claims cannot stabilize in a window this small
    CHECK(find_entry(rep, "theorem_main.b")->verdict == Verdict::WindowTooShort);
    CHECK(find_entry(rep, "corollary_dim")->verdict == Verdict::WindowTooShort);
    CHECK(find_entry(rep, "lemma_shrink")->verdict == Verdict::Holds);
}

TEST_CASE("vacuous verdicts for free modules") {
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {"x^2", "x*y"});
    PolyMatrix free_pres;
    free_pres.rows = 1;
    free_pres.cols = 0;
    free_pres.row_deg = {0};
    Instance inst{ring, Presentation(ring, free_pres), 6, "free", Limits{}};
    CheckReport rep = run_checks(inst);
    CHECK_FALSE(rep.any_fails());
    CHECK(rep.terminated);
    CHECK(find_entry(rep, "theorem_main.b")->verdict == Verdict::Vacuous);
    CHECK(find_entry(rep, "prop_quick")->verdict == Verdict::Vacuous);
    CHECK(find_entry(rep, "corollary_dim")->verdict == Verdict::Vacuous);
}

TEST_CASE("claim filters") {
    auto cs = ClaimSet::from_flag("shrink");
    REQUIRE(cs.has_value());
    CheckReport rep = run_checks(fixture_shrink(), *cs);
    CHECK(rep.entries.size() == 1);
    CHECK(rep.entries[0].claim == "lemma_shrink");
    CHECK_FALSE(ClaimSet::from_flag("bogus").has_value());
}

TEST_CASE("corpus generation is deterministic") {
    auto a = generate_corpus(1, 5);
    auto b = generate_corpus(1, 5);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].label == b[i].label);
        CHECK(a[i].ring->names() == b[i].ring->names());
        CHECK(a[i].module.matrix() == b[i].module.matrix());
        CHECK(a[i].ring->ideal() == b[i].ring->ideal());
    }
    auto hyp = generate_corpus(2, 3, CorpusProfile::Hypersurface);
    for (const auto& inst : hyp) CHECK(inst.ring->ideal().size() == 1);
    auto paper = generate_corpus(0, 0, CorpusProfile::Paper);
    REQUIRE(paper.size() == 4);
    CHECK(paper[0].label == "rahmati");
    CHECK(paper[2].label == "huneke");
}

TEST_CASE("corpus checks never fail and reports are deterministic") {
    auto corpus = generate_corpus(5, 6);
    std::vector<CheckReport> first, second;
    for (const auto& inst : corpus) first.push_back(run_checks(inst));
    for (const auto& inst : corpus) second.push_back(run_checks(inst));
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK_FALSE(first[i].any_fails());
        CHECK(first[i] == second[i]);
    }
}

TEST_CASE("lemma_shrink is vacuous on strictly increasing Betti numbers") {
    // the residue field over k[x,y]/(x^2, xy) has strictly increasing Betti
    // numbers, so no equal adjacent pair exists and beta_0 != beta_1
    auto ring = make_ring({"x", "y"}, FieldSpec{32003}, {"x^2", "x*y"});
    Instance inst{ring, make_presentation(ring, {{"x", "y"}}, {0}), 6, "residue", Limits{}};
    InstanceStudy st(inst);
    const auto& b = st.betti();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) REQUIRE(b[i] < b[i + 1]);
    CheckReport rep;
    check_lemma_shrink(st, rep);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].verdict == Verdict::Vacuous);
}

TEST_CASE("hypersurface corpus checks never fail") {
    for (const auto& inst : generate_corpus(41, 4, CorpusProfile::Hypersurface)) {
        CheckReport rep = run_checks(inst);
        CHECK_FALSE(rep.any_fails());
    }
}

TEST_CASE("asserted non-decreasing start replaces detection") {
    // valid assertion: same verdicts as detection on the shrink example
    Instance inst = fixture_shrink();
    inst.assume_nondecreasing_from = 0;
    CheckReport rep = run_checks(inst);
    CHECK_FALSE(rep.any_fails());
    CHECK(find_entry(rep, "theorem_main.b")->verdict == Verdict::Holds);

    // contradicted assertion: checks refuse instead of guessing
    Instance bad = fixture_huneke();
    bad.assume_nondecreasing_from = 0; // beta_0 = 3 > 1 = beta_1
    CheckReport rep2 = run_checks(bad);
    CHECK(find_entry(rep2, "theorem_main.b")->verdict == Verdict::Skipped);
    CHECK(find_entry(rep2, "theorem_main.b")->detail.find("contradicted") != std::string::npos);
}

TEST_CASE("window gate for asymptotic checks") {
    Instance inst = fixture_shrink();
    inst.window = 3;
    CheckReport rep = run_checks(inst);
    CHECK(find_entry(rep, "theorem_main.a")->verdict == Verdict::Skipped);
    CHECK(find_entry(rep, "corollary_dim")->verdict == Verdict::Skipped);
    CHECK(find_entry(rep, "prop_quick")->verdict == Verdict::Skipped);
}
