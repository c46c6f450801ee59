#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lensracks.h"

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(LR_FIXTURES_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Rack {
  lr_rack* h = nullptr;
  ~Rack() { lr_rack_free(h); }
};
struct Diagram {
  lr_diagram* h = nullptr;
  ~Diagram() { lr_diagram_free(h); }
};
struct CStr {
  char* s = nullptr;
  ~CStr() { lr_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("rack handle lifecycle and queries") {
  Rack r;
  REQUIRE(lr_rack_parse(fixture_text("x3.rack").c_str(), 0, &r.h) == LR_OK);
  CHECK(lr_rack_order(r.h) == 3);
  CHECK(lr_rack_rank(r.h) == 2);
  CHECK(lr_rack_is_quandle(r.h) == 0);
  int v = 0;
  CHECK(lr_rack_op(r.h, 2, 3, &v) == LR_OK);
  CHECK(v == 3);
  CHECK(lr_rack_inv_op(r.h, 3, 2, &v) == LR_OK);
  CHECK(v == 2);
  CHECK(lr_rack_op(r.h, 0, 9, &v) == LR_ERR_ARGUMENT);

  CStr text;
  CHECK(lr_rack_serialize(r.h, &text.s) == LR_OK);
  Rack again;
  CHECK(lr_rack_parse(text.s, 0, &again.h) == LR_OK);
  CHECK(lr_rack_rank(again.h) == 2);
}

TEST_CASE("rack parse failures set a status and a message") {
  lr_rack* h = nullptr;
  CHECK(lr_rack_parse("rack 2\n1 1\n1 2\n", 0, &h) == LR_ERR_VALIDATION);
  CHECK(std::string(lr_last_error()).find("column") != std::string::npos);
  CHECK(lr_rack_parse("nonsense\n", 0, &h) == LR_ERR_SYNTAX);
  CHECK(lr_rack_parse(nullptr, 0, &h) == LR_ERR_ARGUMENT);

  // transposed reinterpretation can fail validation
  CHECK(lr_rack_parse(fixture_text("x3.rack").c_str(), 1, &h) == LR_ERR_VALIDATION);
  REQUIRE(lr_rack_parse(fixture_text("qs4.rack").c_str(), 1, &h) == LR_OK);
  lr_rack_free(h);
}

TEST_CASE("operator classes text") {
  Rack r;
  REQUIRE(lr_rack_parse(fixture_text("m6.rack").c_str(), 0, &r.h) == LR_OK);
  CStr classes;
  CHECK(lr_rack_op_classes(r.h, &classes.s) == LR_OK);
  CHECK(classes.str() == "1\n2\n3\n4 5 6\n");
}

TEST_CASE("rack enumeration over the C surface") {
  long long count = 0;
  CStr text;
  CHECK(lr_enum_racks(2, 1, &count, &text.s) == LR_OK);
  CHECK(count == 2);
  CHECK(text.str() == "rack 2\n1 1\n2 2\n\nrack 2\n2 2\n1 1\n");
  CHECK(lr_enum_racks(7, 0, &count, nullptr) == LR_ERR_BUDGET);
}

TEST_CASE("diagram handle queries and moves") {
  Diagram d;
  REQUIRE(lr_diagram_parse(fixture_text("trefoil_p3.diag").c_str(), &d.h) == LR_OK);
  CHECK(lr_diagram_p(d.h) == 3);
  CHECK(lr_diagram_arc_count(d.h) == 3);
  CHECK(lr_diagram_component_count(d.h) == 1);
  CHECK(lr_diagram_disk_degree(d.h) == 0);
  int w[4] = {0, 0, 0, 0};
  CHECK(lr_diagram_writhe(d.h, w, 4) == LR_OK);
  CHECK(w[0] == 3);
  CHECK(lr_diagram_writhe(d.h, w, 0) == LR_ERR_ARGUMENT);

  Diagram kinked;
  CHECK(lr_diagram_add_kink(d.h, 1, &kinked.h) == LR_OK);
  CHECK(lr_diagram_arc_count(kinked.h) == 4);
  Diagram moved;
  CHECK(lr_diagram_omega2(d.h, 1, 2, &moved.h) == LR_OK);
  CHECK(lr_diagram_arc_count(moved.h) == 5);
  lr_diagram* bad = nullptr;
  CHECK(lr_diagram_add_kink(d.h, 9, &bad) == LR_ERR_ARGUMENT);

  CStr text;
  CHECK(lr_diagram_serialize(d.h, &text.s) == LR_OK);
  Diagram again;
  CHECK(lr_diagram_parse(text.s, &again.h) == LR_OK);
  CStr text2;
  CHECK(lr_diagram_serialize(again.h, &text2.s) == LR_OK);
  CHECK(text.str() == text2.str());
}

TEST_CASE("diagram validation errors surface through the status") {
  lr_diagram* h = nullptr;
  CHECK(lr_diagram_parse("p 2\narcs 2\ncomponent 1: 1 2\nstrand in=1 out=2 eps=+1\n", &h) ==
        LR_ERR_VALIDATION);
  CHECK(lr_diagram_parse("p x\n", &h) == LR_ERR_SYNTAX);
}

TEST_CASE("homomorphism counting and listing") {
  Rack r;
  Diagram d;
  REQUIRE(lr_rack_parse(fixture_text("x3.rack").c_str(), 0, &r.h) == LR_OK);
  REQUIRE(lr_diagram_parse(fixture_text("unknot_p2.diag").c_str(), &d.h) == LR_OK);

  long long count = 0;
  CHECK(lr_hom_count(d.h, r.h, 0, LR_KERNEL_CLOSURE, &count) == LR_OK);
  CHECK(count == 5);
  CHECK(lr_hom_count(d.h, r.h, 0, LR_KERNEL_PAIRS, &count) == LR_OK);
  CHECK(count == 9);
  CHECK(lr_hom_count(d.h, r.h, 0, 42, &count) == LR_ERR_ARGUMENT);

  CStr listing, oracle_listing;
  CHECK(lr_hom_list(d.h, r.h, 0, LR_KERNEL_CLOSURE, 1, &listing.s) == LR_OK);
  CHECK(listing.str() == "count 5\nhom 1 | 1\nhom 2 | 2\nhom 2 | 3\nhom 3 | 2\nhom 3 | 3\n");
  CHECK(lr_hom_list(d.h, r.h, 1, LR_KERNEL_CLOSURE, 1, &oracle_listing.s) == LR_OK);
  CHECK(listing.str() == oracle_listing.str());
}

TEST_CASE("oracle budget surfaces as a budget status") {
  Rack r;
  Diagram d;
  REQUIRE(lr_rack_parse(fixture_text("m6.rack").c_str(), 0, &r.h) == LR_OK);
  REQUIRE(lr_diagram_parse(fixture_text("trefoil_p3.diag").c_str(), &d.h) == LR_OK);
  long long count = 0;
  CHECK(lr_hom_count(d.h, r.h, 1, LR_KERNEL_CLOSURE, &count) == LR_ERR_BUDGET);
}

TEST_CASE("invariants in both text forms") {
  Rack r;
  Diagram d;
  REQUIRE(lr_rack_parse(fixture_text("qs4.rack").c_str(), 0, &r.h) == LR_OK);
  REQUIRE(lr_diagram_parse(fixture_text("trefoil_f1_p2.diag").c_str(), &d.h) == LR_OK);

  CStr z, sym, w, wsym, machine;
  CHECK(lr_invariant(d.h, r.h, "z", 0, LR_KERNEL_CLOSURE, 0, &z.s) == LR_OK);
  CHECK(z.str() == "phi_Z = 16\n");
  CHECK(lr_invariant(d.h, r.h, "sym", 0, LR_KERNEL_CLOSURE, 0, &sym.s) == LR_OK);
  CHECK(sym.str() == "phi_Sym = 4 + 12*x^2\n");
  CHECK(lr_invariant(d.h, r.h, "w", 0, LR_KERNEL_CLOSURE, 0, &w.s) == LR_OK);
  CHECK(w.str() == "phi_W = 16\n");
  CHECK(lr_invariant(d.h, r.h, "wsym", 0, LR_KERNEL_CLOSURE, 0, &wsym.s) == LR_OK);
  CHECK(wsym.str() == "phi_WSym = 4 + 12*x^2\n");
  CHECK(lr_invariant(d.h, r.h, "sym", 0, LR_KERNEL_CLOSURE, 1, &machine.s) == LR_OK);
  CHECK(machine.str() == "phi_Sym x\n0\t4\n2\t12\n");

  CStr bad;
  CHECK(lr_invariant(d.h, r.h, "zz", 0, LR_KERNEL_CLOSURE, 0, &bad.s) == LR_ERR_ARGUMENT);
}
