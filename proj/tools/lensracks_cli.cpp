// Command-line surface over the lensracks C API. Exit codes: 0 success,
// 1 domain error (message on stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lensracks.h"

namespace {

struct DomainError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError{"cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check(lr_status st) {
  if (st != LR_OK) throw DomainError{lr_last_error()};
}

// RAII for the C handles and strings.
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
};

void load_rack(const std::string& path, bool transposed, Rack& r) {
  check(lr_rack_parse(read_file(path).c_str(), transposed ? 1 : 0, &r.h));
}

void load_diagram(const std::string& path, Diagram& d) {
  check(lr_diagram_parse(read_file(path).c_str(), &d.h));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rack counting invariants of framed links in L(p,1)"};
  app.require_subcommand(1);

  bool transposed = false;
  std::string kernel = "closure";
  app.add_flag("--transposed", transposed,
               "read rack matrices as table(i,j) = j |> i (reproduction studies)");
  app.add_option("--kernel", kernel, "kernel condition: closure (default) or pairs")
      ->check(CLI::IsMember({"closure", "pairs"}));

  std::string rack_path, diagram_path, kind = "z";
  bool up_to_iso = false, listing = false, oracle = false, machine = false;
  int order = 0;

  auto* validate = app.add_subcommand("validate-rack", "validate a rack file");
  validate->add_option("-r,--rack", rack_path, "rack file")->required();

  auto* info = app.add_subcommand("rack-info", "order, rank, quandle flag, operator classes");
  info->add_option("-r,--rack", rack_path, "rack file")->required();

  auto* enumr = app.add_subcommand("enum-racks", "enumerate all racks of a given order");
  enumr->add_option("-n", order, "rack order (<= 6)")->required();
  enumr->add_flag("--up-to-iso", up_to_iso, "one representative per relabeling class");

  auto* homs = app.add_subcommand("homs", "enumerate homomorphisms to a finite rack");
  homs->add_option("-r,--rack", rack_path, "rack file")->required();
  homs->add_option("-d,--diagram", diagram_path, "diagram file")->required();
  homs->add_flag("--list", listing, "list each homomorphism");
  homs->add_flag("--oracle", oracle, "use the exhaustive verifier");

  auto* inv = app.add_subcommand("invariant", "compute a counting invariant");
  inv->add_option("-r,--rack", rack_path, "rack file")->required();
  inv->add_option("-d,--diagram", diagram_path, "diagram file")->required();
  inv->add_option("--kind", kind, "z | w | sym | wsym")
      ->required()
      ->check(CLI::IsMember({"z", "w", "sym", "wsym"}));
  inv->add_flag("--oracle", oracle, "use the exhaustive verifier");
  inv->add_flag("--machine", machine, "tabular exponent/coefficient output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const int kmode = kernel == "pairs" ? LR_KERNEL_PAIRS : LR_KERNEL_CLOSURE;

  try {
    if (validate->parsed()) {
      Rack r;
      load_rack(rack_path, transposed, r);
      std::cout << "ok\n";
    } else if (info->parsed()) {
      Rack r;
      load_rack(rack_path, transposed, r);
      std::cout << "order " << lr_rack_order(r.h) << "\n";
      std::cout << "rank " << lr_rack_rank(r.h) << "\n";
      std::cout << "quandle " << (lr_rack_is_quandle(r.h) ? "yes" : "no") << "\n";
      CStr classes;
      check(lr_rack_op_classes(r.h, &classes.s));
      std::istringstream cls(classes.s);
      std::string line;
      while (std::getline(cls, line)) std::cout << "class " << line << "\n";
    } else if (enumr->parsed()) {
      long long count = 0;
      CStr text;
      check(lr_enum_racks(order, up_to_iso ? 1 : 0, &count, &text.s));
      std::cout << "count " << count << "\n";
      if (count > 0) std::cout << "\n" << text.s;
    } else if (homs->parsed()) {
      Rack r;
      Diagram d;
      load_rack(rack_path, transposed, r);
      load_diagram(diagram_path, d);
      CStr text;
      check(lr_hom_list(d.h, r.h, oracle ? 1 : 0, kmode, listing ? 1 : 0, &text.s));
      std::cout << text.s;
    } else if (inv->parsed()) {
      Rack r;
      Diagram d;
      load_rack(rack_path, transposed, r);
      load_diagram(diagram_path, d);
      CStr text;
      check(lr_invariant(d.h, r.h, kind.c_str(), oracle ? 1 : 0, kmode, machine ? 1 : 0, &text.s));
      std::cout << text.s;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return 0;
}
