// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnas/config.hpp"
#include "qnas/rng.hpp"

namespace qnas {

// One inverted-bottleneck stage of the block-structured search space. Each
// stage has independent choice lists for kernel size k, width multiplier
// alpha, expansion factor e and repetition count n, plus the seed index into
// each list.
struct BlockSpec {
  std::vector<int> kernel_sizes;
  std::vector<double> width_multipliers;
  std::vector<int> expansions;
  std::vector<int> repetitions;
  int seed_kernel = 0;
  int seed_width = 0;
  int seed_expansion = 0;
  int seed_repetition = 0;
  int base_width = 0;  // unscaled output channel count of this stage
};

struct SearchSpaceSpec {
  std::vector<BlockSpec> blocks;
  std::vector<int> conv2_filter_choices;
  int seed_conv2_filters = 0;  // index into conv2_filter_choices
  std::vector<int> bitwidth_choices;
  int seed_bitwidth = 0;  // index into bitwidth_choices
  std::vector<int> stride_after_blocks;  // 1-based block indices
  int input_height = 32;
  int input_width = 32;
  int input_channels = 3;
  int num_classes = 10;
  int stem_width = 32;  // unscaled stem channel count

  // Throws std::invalid_argument on any violated invariant (empty or
  // duplicated choice lists, seed index out of range, bad stride index, ...).
  void validate() const;
};

// Built-in default: the MobileNetV2-style space (7 bottleneck stages, base
// widths 16/24/32/64/96/160/320, strided convolutions after stages 4 and 6,
// weight bitwidths 4..8).
SearchSpaceSpec default_space();

// Variant with CIFAR-100-style width multipliers [0.25 0.50 0.75 1.00 1.30].
SearchSpaceSpec default_space_wide();

SearchSpaceSpec space_from_config(const KeyValueConfig& cfg);
SearchSpaceSpec load_space(const std::string& path);

struct GenomeBlock {
  int kernel_size = 3;
  double width_multiplier = 1.0;
  int expansion = 1;
  int repetitions = 1;
  bool operator==(const GenomeBlock&) const = default;
};

struct ArchitectureGenome {
  std::vector<GenomeBlock> blocks;
  int conv2_filters = 0;
  bool operator==(const ArchitectureGenome&) const = default;
};

// Per-quantizable-layer weight bitwidths. Activations are always 8-bit
// asymmetric per-tensor, biases 32-bit; neither is searchable.
struct QuantizationPolicy {
  std::vector<int> weight_bits;
  static constexpr int kActivationBits = 8;
  static constexpr int kBiasBits = 32;
  bool empty() const { return weight_bits.empty(); }
  bool operator==(const QuantizationPolicy&) const = default;
};

enum class LayerKind {
  kConv,
  kDepthwiseConv,
  kPointwiseConv,
  kDense,
  kBatchNorm,
  kReLU6,
  kGlobalPool,
  kResidualAdd,
};

const char* layer_kind_name(LayerKind k);
bool is_weighted(LayerKind k);  // carries quantizable weights

// One node of a materialized architecture. `id` is stable across batch-norm
// folding; `residual_src` indexes the layer list entry whose output feeds the
// skip connection.
struct LayerSpec {
  LayerKind kind = LayerKind::kConv;
  int id = 0;
  int kernel = 1;
  int stride = 1;
  int in_channels = 0;
  int out_channels = 0;
  int in_height = 0;
  int in_width = 0;
  int out_height = 0;
  int out_width = 0;
  bool quantizable = false;
  bool has_bias = false;
  int residual_src = -1;
};

// round-half-away-from-zero of alpha * base, clamped to >= 1.
int scaled_channels(double alpha, int base_width);

bool genome_valid(const ArchitectureGenome& g, const SearchSpaceSpec& space);
ArchitectureGenome seed_genome(const SearchSpaceSpec& space);
ArchitectureGenome sample_genome(const SearchSpaceSpec& space, Rng& rng);
QuantizationPolicy sample_policy(const SearchSpaceSpec& space,
                                 const ArchitectureGenome& g, Rng& rng);
// All layers at the same bitwidth (fixed-precision modes).
QuantizationPolicy uniform_policy(const SearchSpaceSpec& space,
                                  const ArchitectureGenome& g, int bits);

// Expands a genome into the concrete layer chain: stem conv, inverted
// bottlenecks (expand omitted when e == 1), final 1x1 conv, global pooling,
// dense classifier. Every conv is followed by batch norm, with ReLU6 after
// all but the bottleneck projections. Throws if the genome is invalid in the
// space or a spatial dimension collapses below 1.
std::vector<LayerSpec> materialize(const ArchitectureGenome& g,
                                   const SearchSpaceSpec& space);

int quantizable_layer_count(const std::vector<LayerSpec>& layers);

// Fixed-length featurization for the surrogate: one ordinal slot per gene
// (index / (len-1), 0 for singleton lists) plus per-block (mean, min)
// bitwidth summaries normalized over the bitwidth choice range. Blocks with
// n == 0 contribute zeros. Policy may be empty (float-only runs).
std::vector<double> encode(const ArchitectureGenome& g,
                           const QuantizationPolicy& policy,
                           const SearchSpaceSpec& space);
std::size_t encoding_length(const SearchSpaceSpec& space);

// Euclidean distance between encodings. Throws on length mismatch.
double distance(const std::vector<double>& a, const std::vector<double>& b);

// Exact counts as decimal strings (they exceed any machine integer).
struct Cardinality {
  std::string architectures;
  std::string seed_policies;          // |bitwidths| ^ L(seed genome)
  std::string mp_product;             // architectures x seed_policies
  std::string repetition_aware_total; // sum over genomes of |bitwidths|^L(g)
  int seed_quantizable_layers = 0;
};

Cardinality cardinality(const SearchSpaceSpec& space);

// "39671858073600000000" -> "3.967186e19" (round-half-even on the mantissa).
std::string to_scientific(const std::string& decimal_integer,
                          int significant_digits);

}  // namespace qnas
