#include <benchmark/benchmark.h>

#include "vngeom/block_decomposition.hpp"
#include "vngeom/channels.hpp"
#include "vngeom/characters.hpp"
#include "vngeom/sampling.hpp"
#include "vngeom/vn_structure.hpp"

using namespace vngeom;

namespace {

const char* kKinds[] = {"quaternion8", "symmetric:4", "dihedral:12", "cyclic:2*symmetric:4", "symmetric:5"};

FiniteGroup group_arg(const benchmark::State& state) {
  return build_named(GroupKind::parse(kKinds[state.range(0)]));
}

void BM_CharacterTable(benchmark::State& state) {
  const FiniteGroup g = group_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
  state.SetLabel(kKinds[state.range(0)]);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 4);

void BM_BlockDecompose(benchmark::State& state) {
  const FiniteGroup g = group_arg(state);
  const CharacterTable t = character_table(g);
  for (auto _ : state) benchmark::DoNotOptimize(block_decompose(g, t));
  state.SetLabel(kKinds[state.range(0)]);
}
BENCHMARK(BM_BlockDecompose)->DenseRange(0, 3);

void BM_IsPositiveDefinite(benchmark::State& state) {
  const FiniteGroup g = group_arg(state);
  Rng rng(1);
  const GroupFunction phi = random_hermitian_symmetric(g, rng, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(is_positive_definite(phi));
  state.SetLabel(kKinds[state.range(0)]);
}
BENCHMARK(BM_IsPositiveDefinite)->DenseRange(0, 4);

void BM_GramMatrix(benchmark::State& state) {
  const FiniteGroup g = group_arg(state);
  Rng rng(1);
  const GroupFunction phi = random_hermitian_symmetric(g, rng, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(phi));
  state.SetLabel(kKinds[state.range(0)]);
}
BENCHMARK(BM_GramMatrix)->DenseRange(0, 4);

void BM_CompletePositivity(benchmark::State& state) {
  const FiniteGroup g = group_arg(state);
  Rng rng(1);
  const FourierMultiplierChannel ch = build_channel(random_hermitian_symmetric(g, rng, 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_positive(ch));
  state.SetLabel(kKinds[state.range(0)]);
}
BENCHMARK(BM_CompletePositivity)->DenseRange(0, 2);

void BM_AffineHomeomorphism(benchmark::State& state) {
  const FiniteGroup q8 = build_named(GroupKind::quaternion8());
  const FiniteGroup d4 = build_named(GroupKind::dihedral(4));
  for (auto _ : state) benchmark::DoNotOptimize(construct_affine_homeomorphism(q8, d4));
}
BENCHMARK(BM_AffineHomeomorphism);

}  // namespace

BENCHMARK_MAIN();
