#pragma once

#include <string>
#include <vector>

#include "vgx/source.hpp"

namespace fixtures {

// Unchecked-copy example: an allocation guarded by a NULL check (lines 5-6)
// and a bounds check (lines 7-8) ahead of a strcpy. Deleting the bounds check
// re-introduces an overflow; deleting the NULL check a null dereference.
inline const char* kBoundsCheckFn =
    "int store(char *password)\n"
    "{\n"
    "    char *buf = malloc(BUFSIZE);\n"
    "\n"
    "    if (buf == NULL) {\n"
    "        return -ENOMEM; }\n"
    "    if (strlen(password) >= BUFSIZE) {\n"
    "        return -EINVAL; }\n"
    "    strcpy(buf, password);\n"
    "    return 0;\n"
    "}\n";

inline vgx::SourceUnit bounds_check_unit() {
  return vgx::SourceUnit{"demo", "store.c", "store", kBoundsCheckFn};
}

// Small well-formed functions for round-trip and fuzz-style checks.
inline std::vector<std::string> sample_functions() {
  return {
      "int f(){return 0;}",
      "int add(int a, int b) { int c; c = a + b; return c; }",
      "void g(int n) { int i; for (i = 0; i < n; i++) { n = n - 1; } }",
      "int h(int x) { if (x > 0) { x = x * 2; } else { x = -x; } return x; }",
      "void w(char *p) { while (p) { p = next(p); } }",
      "int s(int v) { switch (v) { case 1: v = 2; break; default: v = 0; } return v; }",
      "int idx(int *a, int i) { a[i] = a[i + 1]; return a[i]; }",
      "void ptr(char *dst, char *src, int n) { memcpy(dst, src, n); }",
      "int cond(int a, int b) { return a > b ? a : b; }",
      "long cast_it(int x) { return (long)x; }",
      "int bits(unsigned m) { m = m << 2; m = m | 1; return m ^ 3; }",
      "void fields(struct point *p) { p->x = p->y; }",
      "int strs(void) { char *s = \"hi\\n\"; return s[0] == 'h'; }",
      "int dowhile(int n) { do { n--; } while (n > 0); return n; }",
      "int chain(int a) { int b = a, c = b; return c; }",
      kBoundsCheckFn,
  };
}

}  // namespace fixtures
