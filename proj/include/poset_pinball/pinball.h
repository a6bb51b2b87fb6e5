#ifndef POSET_PINBALL_PINBALL_H
#define POSET_PINBALL_PINBALL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PP_BUILDING_LIBRARY)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On failure pp_last_error() and
   pp_last_error_kind() describe the problem for the calling thread.
   Strings handed out through char** are owned by the caller and released
   with pp_string_free. Documents are UTF-8 JSON. */
typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_INVALID_ARGUMENT = 1, /* null pointer, malformed JSON, bad parameter */
  PP_ERR_UNKNOWN_ID = 2,
  PP_ERR_DOMAIN = 3,           /* a mathematical precondition failed */
  PP_ERR_ILLEGAL_MOVE = 4,
  PP_ERR_GAME_OVER = 5,
  PP_ERR_BUDGET = 6,           /* enumeration ran out of nodes; output is partial */
  PP_ERR_INTERNAL = 7
} pp_status;

typedef struct pp_poset pp_poset;
typedef struct pp_weyl pp_weyl;
typedef struct pp_game pp_game;

PP_API const char* pp_version(void);
PP_API const char* pp_last_error(void);
PP_API const char* pp_last_error_kind(void);
PP_API void pp_string_free(char* s);

/* Posets. request_json for pp_poset_query:
   {"op":"leq","a":..,"b":..} | {"op":"ideal","id":..} | {"op":"filter","id":..}
   | {"op":"linear_extension","subset":[..]} | {"op":"union_of_ideals","subset":[..]} */
PP_API pp_status pp_poset_from_json(const char* json, pp_poset** out);
PP_API pp_status pp_poset_to_json(const pp_poset* p, char** out);
PP_API pp_status pp_poset_size(const pp_poset* p, size_t* out);
PP_API pp_status pp_poset_leq(const pp_poset* p, const char* a, const char* b, int* out);
PP_API pp_status pp_poset_query(const pp_poset* p, const char* request_json, char** out);
PP_API void pp_poset_free(pp_poset* p);

/* Weyl groups; type is "A", "B", "C" or "D", rank is the Lie rank. */
PP_API pp_status pp_weyl_create(const char* type, int rank, pp_weyl** out);
PP_API pp_status pp_weyl_describe(const pp_weyl* g, char** out);
PP_API pp_status pp_weyl_element(const pp_weyl* g, const char* element, char** out);
PP_API pp_status pp_weyl_bruhat_leq(const pp_weyl* g, const char* u, const char* w, int* out);
PP_API pp_status pp_weyl_max_parabolic(const pp_weyl* g, const int* J, size_t count, char** out);
/* root has g's ambient dimension; the image is written to out_root. */
PP_API pp_status pp_weyl_act(const pp_weyl* g, const char* element, const int* root, size_t dim, int* out_root);
PP_API pp_status pp_weyl_poset(const pp_weyl* g, pp_poset** out);
PP_API void pp_weyl_free(pp_weyl* g);

/* sigma_v(w) as a polynomial in the simple roots, or in t when specialize != 0. */
PP_API pp_status pp_billey(const pp_weyl* g, const char* v, const char* w, int specialize, char** out);

/* {"type":"A","rank":3,"family":"peterson"|"springer"|"hessenberg",
    "lambda":[2,2] | "h":[3,3,4,4] | "mh":"-a1,-a2"} */
PP_API pp_status pp_fixed_points(const char* request_json, char** out);

/* Games. Configs and transcripts use the same documents as the server. */
PP_API pp_status pp_game_new(const char* config_json, pp_game** out);
PP_API pp_status pp_game_replay(const char* transcript_json, pp_game** out);
PP_API pp_status pp_game_state(const pp_game* game, char** out);
PP_API pp_status pp_game_moves(const pp_game* game, char** out);
/* On PP_ERR_ILLEGAL_MOVE the reason ("wall", "betti-rank-full", ...) is
   available through pp_last_error_kind(). */
PP_API pp_status pp_game_move(pp_game* game, const char* upper, const char* lower);
PP_API pp_status pp_game_finalize(pp_game* game);
PP_API pp_status pp_game_transcript(const pp_game* game, char** out);
PP_API void pp_game_free(pp_game* game);

/* budget 0 uses PINBALL_NODE_BUDGET or the default. The outcome document is
   written even when PP_ERR_BUDGET is returned. */
PP_API pp_status pp_enumerate(const char* config_json, unsigned long long budget, int threads, char** out);

/* Candidate basis document; see README. */
PP_API pp_status pp_basis_verify(const char* candidates_json, char** out);

PP_API pp_status pp_springer_characters(int n, char** out);
PP_API pp_status pp_kk_matrix(int n, const char* element, char** out);

/* target is "fig1".."fig4"; *passed is set to 1 when every check holds. */
PP_API pp_status pp_reproduce(const char* target, int threads, char** out, int* passed);
PP_API pp_status pp_reproduce_text(const char* target, int threads, char** out, int* passed);

/* Blocks serving the game protocol until the process ends. */
PP_API pp_status pp_server_run(const char* host, int port);

#ifdef __cplusplus
}
#endif

#endif
