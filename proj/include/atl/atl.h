#ifndef ATL_ATL_H
#define ATL_ATL_H
/* Exact representation theory of the affine Temperley-Lieb algebra: cellular modules, the
 * periodic XXZ chain, the quantum group at roots of unity and the structure of chain sectors.
 *
 * Every call returns an atl_status; on failure atl_last_error() describes the cause for the
 * calling thread. Strings returned through char** are JSON (or DOT) owned by the caller and
 * released with atl_free_string. Twists and q are given as strings: "zeta8", "zeta8^3",
 * "-1", "generic" for q; "1", "q", "-q", "q^(1/2)", "zeta4*q", "2*q" ... for z. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ATL_API __declspec(dllexport)
#else
#define ATL_API __attribute__((visibility("default")))
#endif

typedef enum atl_status {
    ATL_OK = 0,
    ATL_ERR_INVALID_ARGUMENT = 1,
    ATL_ERR_PARSE = 2,
    ATL_ERR_UNSUPPORTED = 3,
    ATL_ERR_CONDITION = 4,  /* the succession condition of a map is not met */
    ATL_ERR_HYPOTHESIS = 5, /* a hypothesis of an exact sequence or k/m map fails */
    ATL_ERR_BUDGET = 6,     /* an exact solve exceeds its configured size */
    ATL_ERR_POLE = 7,
    ATL_ERR_INTERNAL = 8
} atl_status;

typedef struct atl_ctx atl_ctx;
typedef struct atl_rep atl_rep;

ATL_API const char* atl_last_error(void);
ATL_API const char* atl_status_name(atl_status s);
ATL_API void atl_free_string(char* s);
ATL_API const char* atl_version(void);

/* contexts */
ATL_API atl_status atl_ctx_create(const char* q, const char* z, atl_ctx** out);
ATL_API void atl_ctx_destroy(atl_ctx* ctx);
ATL_API atl_status atl_ctx_json(const atl_ctx* ctx, char** out);

/* q-arithmetic; op is "qnum" (m), "qfact" (m), "qbin" (m, n), "lucas" (m, n) or "limit" ([m]/[n]) */
ATL_API atl_status atl_qarith(const atl_ctx* ctx, const char* op, long m, long n, char** out);

/* diagrams; a generator name is "id", "omega", "omega^-1" or "e<i>" */
ATL_API atl_status atl_diagram_generator(int N, const char* name, char** out);
ATL_API atl_status atl_diagram_compose(const char* a_json, const char* b_json, char** out);
ATL_API atl_status atl_diagram_check_relations(int N, char** out);

/* representations */
ATL_API atl_status atl_rep_cell(const atl_ctx* ctx, int N, int d, atl_rep** out);
/* has_sector = 0 builds the whole chain */
ATL_API atl_status atl_rep_chain(const atl_ctx* ctx, int N, int sign, int has_sector, int d, atl_rep** out);
ATL_API void atl_rep_destroy(atl_rep* rep);
ATL_API int atl_rep_dim(const atl_rep* rep);
ATL_API atl_status atl_rep_json(const atl_rep* rep, char** out);
ATL_API atl_status atl_rep_check_relations(const atl_rep* rep, char** out);
ATL_API atl_status atl_hom_dim(const atl_rep* a, const atl_rep* b, int* out);
/* checks that the identity matrix intertwines a and b; names the first failing generator */
ATL_API atl_status atl_identity_intertwines(const atl_rep* a, const atl_rep* b, char** out);

/* cellular modules */
ATL_API atl_status atl_cell_basis(int N, int d, char** out);
ATL_API atl_status atl_cell_gram(const atl_ctx* ctx, int N, int d, char** out);

/* chain */
ATL_API atl_status atl_chain_mdsa(const atl_ctx* ctx, int N, int d, char** out);

/* quantum group */
ATL_API atl_status atl_luq_fusion(const atl_ctx* ctx, int i, char** out);
ATL_API atl_status atl_luq_projective(const atl_ctx* ctx, int i, int dump, char** out);
ATL_API atl_status atl_luq_sequence(const atl_ctx* ctx, int N, int d, char** out);

/* structure; side is "cell" or "chain" */
ATL_API atl_status atl_structure_predict(const atl_ctx* ctx, int N, int d, const char* side, int sign, char** json_out,
                                         char** dot_out);
ATL_API atl_status atl_structure_verify(const atl_ctx* ctx, int N, int d, int sign, char** out, int* passed);
ATL_API atl_status atl_structure_sweep(const char* config_json, void (*progress)(const char* line, void* user),
                                       void* user, char** out, int* passed);

/* the acceptance suite; config_json may be NULL. progress receives one line per criterion */
ATL_API atl_status atl_acceptance_run(const char* config_json, void (*progress)(const char* line, void* user),
                                      void* user, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
