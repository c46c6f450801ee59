#include "lensracks.h"

#include <cstring>
#include <sstream>
#include <string>

#include "lensracks/invariants.hpp"

using namespace lensracks;

struct lr_rack {
  RackTable t;
};
struct lr_diagram {
  LensDiagram d;
};

namespace {

thread_local std::string g_last_error;

lr_status status_of(const Error& e) {
  switch (e.kind()) {
    case Err::SyntaxError:
      return LR_ERR_SYNTAX;
    case Err::NotSquare:
    case Err::EntryOutOfRange:
    case Err::ColumnNotPermutation:
    case Err::SelfDistributivityFailure:
    case Err::ValidationError:
      return LR_ERR_VALIDATION;
    case Err::OrderTooLarge:
    case Err::SearchSpaceTooLarge:
      return LR_ERR_BUDGET;
    case Err::ClosureConflict:
      return LR_ERR_CONFLICT;
    case Err::UnresolvedReference:
    case Err::ComponentOutOfRange:
    case Err::ArcOutOfRange:
    case Err::IndexOutOfRange:
    case Err::BadArgument:
      return LR_ERR_ARGUMENT;
  }
  return LR_ERR_INTERNAL;
}

template <typename Fn>
lr_status guarded(Fn&& fn) {
  try {
    fn();
    return LR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LR_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

KernelMode mode_of(int kernel_mode) {
  if (kernel_mode == LR_KERNEL_CLOSURE) return KernelMode::Closure;
  if (kernel_mode == LR_KERNEL_PAIRS) return KernelMode::GeneratorPairs;
  fail(Err::BadArgument, "unknown kernel mode " + std::to_string(kernel_mode));
}

}  // namespace

extern "C" {

const char* lr_last_error(void) { return g_last_error.c_str(); }

void lr_string_free(char* s) { std::free(s); }

lr_status lr_rack_parse(const char* text, int transposed, lr_rack** out) {
  return guarded([&] {
    if (!text || !out) fail(Err::BadArgument, "null argument");
    *out = new lr_rack{RackTable::parse(text, transposed != 0)};
  });
}

void lr_rack_free(lr_rack* r) { delete r; }

lr_status lr_rack_serialize(const lr_rack* r, char** out_text) {
  return guarded([&] {
    if (!r || !out_text) fail(Err::BadArgument, "null argument");
    *out_text = dup_string(r->t.serialize());
  });
}

int lr_rack_order(const lr_rack* r) { return r ? r->t.order() : 0; }
int lr_rack_rank(const lr_rack* r) { return r ? r->t.rank() : 0; }
int lr_rack_is_quandle(const lr_rack* r) { return r && r->t.is_quandle() ? 1 : 0; }

lr_status lr_rack_op(const lr_rack* r, int i, int j, int* out) {
  return guarded([&] {
    if (!r || !out) fail(Err::BadArgument, "null argument");
    *out = r->t.op(i, j);
  });
}

lr_status lr_rack_inv_op(const lr_rack* r, int i, int j, int* out) {
  return guarded([&] {
    if (!r || !out) fail(Err::BadArgument, "null argument");
    *out = r->t.inv_op(i, j);
  });
}

lr_status lr_rack_op_classes(const lr_rack* r, char** out_text) {
  return guarded([&] {
    if (!r || !out_text) fail(Err::BadArgument, "null argument");
    std::ostringstream s;
    for (const auto& cls : r->t.operator_classes()) {
      for (size_t i = 0; i < cls.size(); ++i) s << (i ? " " : "") << cls[i];
      s << "\n";
    }
    *out_text = dup_string(s.str());
  });
}

lr_status lr_enum_racks(int n, int up_to_iso, long long* out_count, char** out_text) {
  return guarded([&] {
    auto racks = enumerate_racks(n, up_to_iso != 0);
    if (out_count) *out_count = static_cast<long long>(racks.size());
    if (out_text) {
      std::ostringstream s;
      for (size_t i = 0; i < racks.size(); ++i) {
        if (i) s << "\n";
        s << racks[i].serialize();
      }
      *out_text = dup_string(s.str());
    }
  });
}

lr_status lr_diagram_parse(const char* text, lr_diagram** out) {
  return guarded([&] {
    if (!text || !out) fail(Err::BadArgument, "null argument");
    *out = new lr_diagram{LensDiagram::parse(text)};
  });
}

void lr_diagram_free(lr_diagram* d) { delete d; }

lr_status lr_diagram_serialize(const lr_diagram* d, char** out_text) {
  return guarded([&] {
    if (!d || !out_text) fail(Err::BadArgument, "null argument");
    *out_text = dup_string(d->d.serialize());
  });
}

int lr_diagram_p(const lr_diagram* d) { return d ? d->d.p() : 0; }
int lr_diagram_arc_count(const lr_diagram* d) { return d ? d->d.arc_count() : 0; }
int lr_diagram_component_count(const lr_diagram* d) { return d ? d->d.component_count() : 0; }
int lr_diagram_disk_degree(const lr_diagram* d) { return d ? d->d.disk_degree() : 0; }

lr_status lr_diagram_writhe(const lr_diagram* d, int* out, int capacity) {
  return guarded([&] {
    if (!d || !out) fail(Err::BadArgument, "null argument");
    auto w = d->d.writhe_vector();
    if (capacity < static_cast<int>(w.size())) fail(Err::BadArgument, "capacity too small");
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i];
  });
}

lr_status lr_diagram_add_kink(const lr_diagram* d, int component, lr_diagram** out) {
  return guarded([&] {
    if (!d || !out) fail(Err::BadArgument, "null argument");
    *out = new lr_diagram{d->d.add_positive_kink(component)};
  });
}

lr_status lr_diagram_omega2(const lr_diagram* d, int moving_arc, int over_arc, lr_diagram** out) {
  return guarded([&] {
    if (!d || !out) fail(Err::BadArgument, "null argument");
    *out = new lr_diagram{d->d.apply_omega2(moving_arc, over_arc)};
  });
}

lr_status lr_hom_count(const lr_diagram* d, const lr_rack* r, int use_oracle, int kernel_mode,
                       long long* out) {
  return guarded([&] {
    if (!d || !r || !out) fail(Err::BadArgument, "null argument");
    auto mode = mode_of(kernel_mode);
    auto homs = use_oracle ? oracle_enumerate_homomorphisms(d->d, r->t, mode)
                           : enumerate_homomorphisms(d->d, r->t, mode);
    *out = static_cast<long long>(homs.size());
  });
}

lr_status lr_hom_list(const lr_diagram* d, const lr_rack* r, int use_oracle, int kernel_mode,
                      int listing, char** out_text) {
  return guarded([&] {
    if (!d || !r || !out_text) fail(Err::BadArgument, "null argument");
    auto mode = mode_of(kernel_mode);
    auto homs = use_oracle ? oracle_enumerate_homomorphisms(d->d, r->t, mode)
                           : enumerate_homomorphisms(d->d, r->t, mode);
    std::ostringstream s;
    s << "count " << homs.size() << "\n";
    if (listing) {
      for (const auto& f : homs) {
        s << "hom";
        for (size_t lvl = 0; lvl < f.levels.size(); ++lvl) {
          if (lvl) s << " |";
          for (int c : f.levels[lvl]) s << ' ' << c;
        }
        s << "\n";
      }
    }
    *out_text = dup_string(s.str());
  });
}

lr_status lr_invariant(const lr_diagram* d, const lr_rack* r, const char* kind, int use_oracle,
                       int kernel_mode, int machine, char** out_text) {
  return guarded([&] {
    if (!d || !r || !kind || !out_text) fail(Err::BadArgument, "null argument");
    auto mode = mode_of(kernel_mode);
    auto b = compute_invariants(d->d, r->t, mode, use_oracle != 0);
    std::string k(kind);
    std::ostringstream s;
    if (k == "z") {
      if (machine)
        s << "phi_Z\n" << b.phi_z << "\n";
      else
        s << "phi_Z = " << b.phi_z << "\n";
    } else if (k == "w") {
      if (machine)
        s << b.phi_w.machine_text("phi_W");
      else
        s << "phi_W = " << b.phi_w.text() << "\n";
    } else if (k == "sym") {
      if (machine)
        s << b.phi_sym.machine_text("phi_Sym");
      else
        s << "phi_Sym = " << b.phi_sym.text() << "\n";
    } else if (k == "wsym") {
      if (machine)
        s << b.phi_wsym.machine_text("phi_WSym");
      else
        s << "phi_WSym = " << b.phi_wsym.text() << "\n";
    } else {
      fail(Err::BadArgument, "unknown invariant kind '" + k + "'");
    }
    *out_text = dup_string(s.str());
  });
}

}  // extern "C"
