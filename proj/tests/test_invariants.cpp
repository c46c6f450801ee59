#include <random>

#include "doctest.h"
#include "lensracks/invariants.hpp"
#include "test_util.hpp"

using namespace lensracks;

namespace {

Poly wpoly(std::vector<std::string> vars,
           std::vector<std::pair<std::vector<int>, long long>> terms) {
  Poly p;
  p.vars = std::move(vars);
  for (auto& [e, c] : terms) p.add(e, c);
  return p;
}

}  // namespace

TEST_CASE("polynomial formatting") {
  CHECK(wpoly({"q1"}, {{{0}, 12}, {{1}, 10}}).text() == "12 + 10*q1");
  CHECK(wpoly({"q1"}, {}).text() == "0");
  CHECK(wpoly({"q1", "q2"}, {{{0, 0}, 1}, {{1, 1}, 7}}).text() == "1 + 7*q1*q2");
  CHECK(wpoly({"x"}, {{{0}, 4}, {{2}, 12}}).text() == "4 + 12*x^2");
  CHECK(wpoly({"x"}, {{{1}, 3}}).text() == "3*x");
  // first variable varies fastest across terms
  CHECK(wpoly({"q1", "q2"}, {{{0, 1}, 1}, {{1, 0}, 3}, {{0, 0}, 1}, {{1, 1}, 7}}).text() ==
        "1 + 3*q1 + q2 + 7*q1*q2");
}

TEST_CASE("machine format mirrors the term list") {
  auto p = wpoly({"q1", "q2"}, {{{0, 0}, 12}, {{1, 0}, 10}});
  CHECK(p.machine_text("phi_W") == "phi_W q1 q2\n0 0\t12\n1 0\t10\n");
}

TEST_CASE("specialization drops one variable") {
  auto p = wpoly({"q1", "x"}, {{{0, 0}, 2}, {{1, 2}, 3}});
  CHECK(p.specialize_to_one("x") == wpoly({"q1"}, {{{0}, 2}, {{1}, 3}}));
  CHECK(p.specialize_to_one("q1") == wpoly({"x"}, {{{0}, 2}, {{2}, 3}}));
  CHECK(p.value_at_one() == 5);
  CHECK_THROWS_AS(p.specialize_to_one("y"), Error);
}

TEST_CASE("one-element rack gives the unit invariants") {
  auto t = lrtest::rack("t1");
  for (const char* dn : {"unknot_p1", "unknot_p3", "trefoil_p2", "fiber_unknot_p2"}) {
    auto d = lrtest::diagram(dn);
    CHECK(integral_invariant(d, t) == 1);
    CHECK(writhe_enhanced_invariant(d, t).text() == "1");
    CHECK(symmetry_invariant(d, t).text() == "1");
    CHECK(writhe_symmetry_invariant(d, t).text() == "1");
  }
}

TEST_CASE("affine unknot invariants over the rank-2 order-3 rack") {
  auto t = lrtest::rack("x3");
  auto d = lrtest::diagram("unknot_p3");
  // zero-writhe class keeps 3 homomorphisms, the kinked class only the
  // color fixed by its own kink
  auto b = compute_invariants(d, t);
  CHECK(b.phi_z == 4);
  CHECK(b.phi_w.text() == "3 + q1");
  CHECK(b.phi_w == wpoly({"q1"}, {{{0}, 3}, {{1}, 1}}));
}

TEST_CASE("sigma is the identity for classical affine diagrams") {
  auto t = lrtest::rack("r3");
  auto d = lrtest::diagram("trefoil_p1");
  for (const auto& f : enumerate_homomorphisms(d, t))
    CHECK(symmetry_permutation(d, t, f).is_identity());
  CHECK(symmetry_invariant(d, t).text() == "9");
}

TEST_CASE("unknot pair sigma is the seeded swap") {
  auto d = lrtest::diagram("unknot_p2");

  auto x3 = lrtest::rack("x3");
  Homomorphism swap23{{{2}, {3}}};
  auto s = symmetry_permutation(d, x3, swap23);
  CHECK(s.apply(2) == 3);
  CHECK(s.apply(3) == 2);
  CHECK(s.apply(1) == 1);
  CHECK(s.order() == 2);

  auto qs4 = lrtest::rack("qs4");
  Homomorphism pair12{{{1}, {2}}};
  CHECK(symmetry_permutation(d, qs4, pair12).order() == 2);

  // constant at a quandle element: order 1
  Homomorphism c{{{1}, {1}}};
  CHECK(symmetry_permutation(d, qs4, c).is_identity());
}

TEST_CASE("symmetry_permutation rejects non-homomorphisms") {
  auto d = lrtest::diagram("unknot_p2");
  auto t = lrtest::rack("x3");
  Homomorphism bad{{{2}, {1}}};  // swapping 1 and 2 has no consistent closure
  CHECK_FALSE(check_conditions(d, t, bad));
  CHECK_THROWS_AS(symmetry_permutation(d, t, bad), Error);
}

TEST_CASE("specialization identities hold on the whole corpus") {
  for (const auto& dn : lrtest::corpus_diagrams())
    for (const auto& rn : lrtest::corpus_racks()) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(rn);
      auto b = compute_invariants(d, t);
      CHECK(b.phi_w.value_at_one() == b.phi_z);
      CHECK(b.phi_sym.value_at_one() == b.phi_z);
      CHECK(b.phi_wsym.specialize_to_one("x") == b.phi_w);
      auto sym = b.phi_wsym;
      for (int c = 1; c <= d.component_count(); ++c)
        sym = sym.specialize_to_one("q" + std::to_string(c));
      CHECK(sym == b.phi_sym);
    }
}

TEST_CASE("per-framing symmetry coefficients add up to the framing count") {
  for (const char* dn : {"unknot_p3", "trefoil_p2", "hopf_p2", "trefoil_f1_p3"})
    for (const auto& rn : lrtest::corpus_racks()) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(rn);
      auto b = compute_invariants(d, t);
      // group phi_wsym by the q-part
      std::map<std::vector<int>, long long> sums;
      for (const auto& [e, c] : b.phi_wsym.terms)
        sums[std::vector<int>(e.begin(), e.end() - 1)] += c;
      for (const auto& [e, c] : b.phi_w.terms) CHECK(sums[e] == c);
      for (const auto& [e, c] : sums) CHECK(b.phi_w.terms.at(e) == c);
    }
}

TEST_CASE("all four invariants survive omega2 and rank-many kinks") {
  for (const char* dn : {"unknot_p2", "trefoil_p1", "trefoil_f1_p2", "hopf_p2"})
    for (const auto& rn : lrtest::corpus_racks()) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(rn);
      auto base = compute_invariants(d, t);
      auto moved = compute_invariants(d.apply_omega2(1, d.arc_count()), t);
      CHECK(base.phi_z == moved.phi_z);
      CHECK(base.phi_w == moved.phi_w);
      CHECK(base.phi_sym == moved.phi_sym);
      CHECK(base.phi_wsym == moved.phi_wsym);

      auto kinked = d;
      for (int i = 0; i < t.rank(); ++i) kinked = kinked.add_positive_kink(1);
      auto kb = compute_invariants(kinked, t);
      CHECK(base.phi_z == kb.phi_z);
      CHECK(base.phi_w == kb.phi_w);
      CHECK(base.phi_sym == kb.phi_sym);
      CHECK(base.phi_wsym == kb.phi_wsym);
    }
}

TEST_CASE("sigma order divides p on affine diagrams") {
  for (const char* dn : {"unknot_p2", "unknot_p3", "trefoil_p2", "trefoil_p3", "hopf_p2",
                         "unlink2_p2", "trefoil_p1"})
    for (const auto& rn : lrtest::corpus_racks()) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(rn);
      for (const auto& [w, dw] : d.framing_representatives(t.rank()))
        for (const auto& f : enumerate_homomorphisms(dw, t))
          CHECK(d.p() % symmetry_permutation(dw, t, f).order() == 0);
    }
}

TEST_CASE("oracle-backed invariants agree with the solver path") {
  for (const char* dn : {"unknot_p2", "unknot_p3", "fiber_unknot_p2", "hopf_p2"})
    for (const auto& rn : lrtest::corpus_racks()) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(rn);
      bool in_budget = true;
      for (const auto& [w, dw] : d.framing_representatives(t.rank()))
        if (lrtest::oracle_space(dw, t) < 0) in_budget = false;
      if (!in_budget) continue;
      auto a = compute_invariants(d, t, KernelMode::Closure, false);
      auto b = compute_invariants(d, t, KernelMode::Closure, true);
      CHECK(a.phi_z == b.phi_z);
      CHECK(a.phi_w == b.phi_w);
      CHECK(a.phi_sym == b.phi_sym);
      CHECK(a.phi_wsym == b.phi_wsym);
    }
}

TEST_CASE("random move sequences preserve all four invariants") {
  std::mt19937 rng(424242);
  for (const char* dn : {"unknot_p2", "trefoil_p1", "fiber_unknot_p3", "hopf_p2", "l2_p3"})
    for (const char* rn : {"x3", "qs4"}) {
      auto d = lrtest::diagram(dn);
      auto t = lrtest::rack(std::string(rn));
      auto base = compute_invariants(d, t);
      for (int rep = 0; rep < 3; ++rep) {
        auto moved = d;
        for (int step = 0; step < 3; ++step) {
          std::uniform_int_distribution<int> arc(1, moved.arc_count());
          std::uniform_int_distribution<int> comp(1, moved.component_count());
          if (rng() % 2 == 0) {
            moved = moved.apply_omega2(arc(rng), arc(rng));
          } else {
            int c = comp(rng);
            for (int i = 0; i < t.rank(); ++i) moved = moved.add_positive_kink(c);
          }
        }
        auto b = compute_invariants(moved, t);
        CHECK(base.phi_z == b.phi_z);
        CHECK(base.phi_w == b.phi_w);
        CHECK(base.phi_sym == b.phi_sym);
        CHECK(base.phi_wsym == b.phi_wsym);
      }
    }
}

TEST_CASE("trefoil through the disk over the order-4 quandle") {
  // a reference row that the faithful conditions reproduce exactly
  auto d = lrtest::diagram("trefoil_f1_p2");
  auto t = lrtest::rack("qs4");
  auto b = compute_invariants(d, t);
  CHECK(b.phi_z == 16);
  CHECK(b.phi_sym.text() == "4 + 12*x^2");
}
