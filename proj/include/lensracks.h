/* C interface to the lensracks library: rack validation, framed-link
 * diagrams in L(p,1), homomorphism enumeration, and the counting
 * invariants. Objects are opaque handles; every fallible call returns a
 * status code and leaves a message readable via lr_last_error(). Strings
 * returned through char** are heap-allocated and released with
 * lr_string_free(). Handles are immutable and safe to share across
 * threads; the error message is thread-local. */

#ifndef LENSRACKS_H
#define LENSRACKS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lr_rack lr_rack;
typedef struct lr_diagram lr_diagram;

typedef enum {
  LR_OK = 0,
  LR_ERR_SYNTAX = 1,     /* unreadable input text */
  LR_ERR_VALIDATION = 2, /* structural invariant violated */
  LR_ERR_BUDGET = 3,     /* search budget exceeded */
  LR_ERR_ARGUMENT = 4,   /* bad argument or index */
  LR_ERR_CONFLICT = 5,   /* induced-map closure conflict */
  LR_ERR_INTERNAL = 6
} lr_status;

/* Kernel-condition modes for the homomorphism search. */
#define LR_KERNEL_CLOSURE 0
#define LR_KERNEL_PAIRS 1

const char* lr_last_error(void);
void lr_string_free(char* s);

/* ---- racks ---- */
lr_status lr_rack_parse(const char* text, int transposed, lr_rack** out);
void lr_rack_free(lr_rack* r);
lr_status lr_rack_serialize(const lr_rack* r, char** out_text);
int lr_rack_order(const lr_rack* r);
int lr_rack_rank(const lr_rack* r);
int lr_rack_is_quandle(const lr_rack* r);
lr_status lr_rack_op(const lr_rack* r, int i, int j, int* out);
lr_status lr_rack_inv_op(const lr_rack* r, int i, int j, int* out);
/* one line per class: elements separated by spaces, classes by newlines */
lr_status lr_rack_op_classes(const lr_rack* r, char** out_text);
/* racks in file format separated by blank lines; out_count optional */
lr_status lr_enum_racks(int n, int up_to_iso, long long* out_count, char** out_text);

/* ---- diagrams ---- */
lr_status lr_diagram_parse(const char* text, lr_diagram** out);
void lr_diagram_free(lr_diagram* d);
lr_status lr_diagram_serialize(const lr_diagram* d, char** out_text);
int lr_diagram_p(const lr_diagram* d);
int lr_diagram_arc_count(const lr_diagram* d);
int lr_diagram_component_count(const lr_diagram* d);
int lr_diagram_disk_degree(const lr_diagram* d);
/* writes component_count entries into out */
lr_status lr_diagram_writhe(const lr_diagram* d, int* out, int capacity);
lr_status lr_diagram_add_kink(const lr_diagram* d, int component, lr_diagram** out);
lr_status lr_diagram_omega2(const lr_diagram* d, int moving_arc, int over_arc, lr_diagram** out);

/* ---- homomorphisms and invariants ---- */
lr_status lr_hom_count(const lr_diagram* d, const lr_rack* r, int use_oracle, int kernel_mode,
                       long long* out);
/* "count N" line, then with listing!=0 one "hom c .. c | c .. c" line per
 * homomorphism in canonical order */
lr_status lr_hom_list(const lr_diagram* d, const lr_rack* r, int use_oracle, int kernel_mode,
                      int listing, char** out_text);
/* kind: "z", "w", "sym" or "wsym"; machine!=0 emits the tabular format */
lr_status lr_invariant(const lr_diagram* d, const lr_rack* r, const char* kind, int use_oracle,
                       int kernel_mode, int machine, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* LENSRACKS_H */
