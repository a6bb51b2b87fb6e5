/* Exercises the shared library through its C header only. */
#include <poset_pinball/pinball.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_poset(void) {
  const char* doc =
      "{\"elements\":[{\"id\":\"0\",\"rank\":0},{\"id\":\"a\",\"rank\":1},{\"id\":\"b\",\"rank\":1}],"
      "\"covers\":[[\"a\",\"0\"],[\"b\",\"0\"]]}";
  pp_poset* p = NULL;
  EXPECT(pp_poset_from_json(doc, &p) == PP_OK);
  size_t n = 0;
  EXPECT(pp_poset_size(p, &n) == PP_OK && n == 3);
  int leq = -1;
  EXPECT(pp_poset_leq(p, "0", "a", &leq) == PP_OK && leq == 1);
  EXPECT(pp_poset_leq(p, "a", "b", &leq) == PP_OK && leq == 0);
  EXPECT(pp_poset_leq(p, "a", "zz", &leq) == PP_ERR_UNKNOWN_ID);
  EXPECT(strlen(pp_last_error()) > 0);
  char* out = NULL;
  EXPECT(pp_poset_query(p, "{\"op\":\"ideal\",\"id\":\"a\"}", &out) == PP_OK);
  EXPECT(contains(out, "\"0\""));
  pp_string_free(out);
  out = NULL;
  EXPECT(pp_poset_query(p, "{\"op\":\"union_of_ideals\",\"subset\":[\"a\"]}", &out) == PP_OK);
  EXPECT(contains(out, "false"));
  pp_string_free(out);
  EXPECT(pp_poset_query(p, "{\"op\":\"dance\"}", &out) == PP_ERR_INVALID_ARGUMENT);
  pp_poset_free(p);

  EXPECT(pp_poset_from_json("{\"elements\":[{\"id\":\"x\",\"rank\":0},{\"id\":\"x\",\"rank\":0}]}", &p) == PP_ERR_DOMAIN);
  EXPECT(strcmp(pp_last_error_kind(), "DuplicateId") == 0);
  EXPECT(pp_poset_from_json("not json", &p) == PP_ERR_INVALID_ARGUMENT);
  EXPECT(pp_poset_size(NULL, &n) == PP_ERR_INVALID_ARGUMENT);
}

static void test_weyl(void) {
  pp_weyl* g = NULL;
  EXPECT(pp_weyl_create("A", 3, &g) == PP_OK);
  int leq = 0;
  EXPECT(pp_weyl_bruhat_leq(g, "s1", "s2.s1", &leq) == PP_OK && leq == 1);
  char* out = NULL;
  EXPECT(pp_billey(g, "s1.s2", "s2.s1.s3.s2", 1, &out) == PP_OK);
  EXPECT(out && strcmp(out, "6*t^2") == 0);
  pp_string_free(out);
  EXPECT(pp_billey(g, "s1", "s1", 0, &out) == PP_OK);
  EXPECT(out && strcmp(out, "a1") == 0);
  pp_string_free(out);
  int J[2] = {1, 2};
  EXPECT(pp_weyl_max_parabolic(g, J, 2, &out) == PP_OK);
  EXPECT(contains(out, "s1.s2.s1"));
  pp_string_free(out);
  int root[4] = {1, -1, 0, 0}, image[4] = {0};
  EXPECT(pp_weyl_act(g, "s1", root, 4, image) == PP_OK);
  EXPECT(image[0] == -1 && image[1] == 1);
  EXPECT(pp_weyl_element(g, "s9", &out) == PP_ERR_DOMAIN || pp_last_error_kind()[0] != '\0');
  pp_poset* bruhat = NULL;
  EXPECT(pp_weyl_poset(g, &bruhat) == PP_OK);
  size_t n = 0;
  EXPECT(pp_poset_size(bruhat, &n) == PP_OK && n == 24);
  pp_poset_free(bruhat);
  pp_weyl_free(g);
  EXPECT(pp_weyl_create("E", 6, &g) != PP_OK);
}

static void test_game(void) {
  pp_game* game = NULL;
  EXPECT(pp_game_new("{\"builtin\":\"fig2\"}", &game) == PP_OK);
  EXPECT(pp_game_finalize(game) == PP_OK); /* e and s3 have nowhere to go */
  EXPECT(pp_game_finalize(game) == PP_OK);
  EXPECT(pp_game_move(game, "s3.s2", "e") == PP_ERR_ILLEGAL_MOVE);
  EXPECT(strcmp(pp_last_error_kind(), "not-a-cover") == 0);
  EXPECT(pp_game_finalize(game) != PP_OK);
  EXPECT(pp_game_move(game, "s3.s2", "s2") == PP_OK);
  while (pp_game_finalize(game) == PP_OK) {
  }
  char* moves = NULL;
  EXPECT(pp_game_moves(game, &moves) == PP_OK);
  pp_string_free(moves);
  char* transcript = NULL;
  EXPECT(pp_game_transcript(game, &transcript) == PP_OK);
  pp_game* again = NULL;
  EXPECT(pp_game_replay(transcript, &again) == PP_OK);
  char *a = NULL, *b = NULL;
  EXPECT(pp_game_state(game, &a) == PP_OK && pp_game_state(again, &b) == PP_OK);
  EXPECT(a && b && strcmp(a, b) == 0);
  pp_string_free(a);
  pp_string_free(b);
  pp_string_free(transcript);
  pp_game_free(again);
  pp_game_free(game);

  EXPECT(pp_game_new("{\"builtin\":\"springer\",\"n\":4,\"lambda\":[2,2],\"variant\":\"betti\"}", &game) == PP_ERR_DOMAIN);
  EXPECT(strcmp(pp_last_error_kind(), "MissingTargets") == 0);

  char* out = NULL;
  EXPECT(pp_enumerate("{\"builtin\":\"fig2\"}", 0, 2, &out) == PP_OK);
  EXPECT(contains(out, "\"count\""));
  pp_string_free(out);
  EXPECT(pp_enumerate("{\"builtin\":\"springer\",\"n\":4,\"lambda\":[2,1,1]}", 3, 1, &out) == PP_ERR_BUDGET);
  EXPECT(contains(out, "\"exhausted\": true") || contains(out, "\"exhausted\":true"));
  pp_string_free(out);
}

static void test_misc(void) {
  char* out = NULL;
  int passed = 0;
  EXPECT(pp_reproduce_text("fig3", 1, &out, &passed) == PP_OK);
  EXPECT(passed == 1);
  EXPECT(contains(out, "PASS fig3"));
  pp_string_free(out);
  EXPECT(pp_reproduce("fig9", 1, &out, &passed) != PP_OK);
  EXPECT(pp_springer_characters(4, &out) == PP_OK);
  pp_string_free(out);
  EXPECT(pp_kk_matrix(3, "s1", &out) == PP_OK);
  pp_string_free(out);
  EXPECT(pp_fixed_points("{\"type\":\"A\",\"rank\":3,\"family\":\"springer\",\"lambda\":[2,2]}", &out) == PP_OK);
  EXPECT(contains(out, "s2.s3.s1.s2"));
  pp_string_free(out);
  EXPECT(strlen(pp_version()) > 0);
  pp_string_free(NULL);
}

int main(void) {
  test_poset();
  test_weyl();
  test_game();
  test_misc();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
