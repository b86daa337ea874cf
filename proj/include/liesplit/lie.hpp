#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liesplit/sigma_module.hpp"
#include "liesplit/tensor.hpp"

namespace liesplit {

Tensor bracket(const Tensor& t, const Tensor& u);
// word a_1..a_n -> [[a_1, a_2], ..., a_n], extended linearly
Tensor left_normed(const Tensor& t);

struct LyndonWord {
  Word letters;
  // right factor is the longest proper Lyndon suffix; empty for length 1
  std::pair<Word, Word> standard_factorization;
};

bool is_lyndon(const Word& w);
std::pair<Word, Word> standard_factorization(const Word& w);
// lexicographic order
std::vector<LyndonWord> lyndon_words(int n, int m);
// bracketing along the standard factorization
Tensor bracketed(const Word& lyndon, int m, FieldPtr f);

Subspace lyndon_basis(int n, int m, FieldPtr f);
std::int64_t witt_dim(int n, std::int64_t m);

struct LieModule {
  SigmaModule module;
  Subspace span;  // inside T_n of an n-dimensional space, dense word coordinates
  std::vector<Tensor> basis;  // [[x_1, x_s(2)], ..., x_s(n)] in lex order of s
};
LieModule lie_module(int n, FieldPtr f);

Subspace restricted_lie_power(int n, int m, FieldPtr f);

}  // namespace liesplit
