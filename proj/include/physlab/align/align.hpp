#pragma once

#include "physlab/core/rng.hpp"
#include "physlab/core/tensor.hpp"

#include <array>
#include <cstdint>
#include <vector>

// Relational feature-alignment kernels: token projection, parameter-free
// trilinear grid adaptation, spatio-temporal Gram matrices, and the
// margin-L1 relational loss with analytic gradients.
namespace physlab::align {

// Student/teacher feature volumes are rank-5 tensors with axes
// (batch, time, height, width, channel). Tokens flatten time-major:
// token index = (t * H + y) * W + x.
using FeatureGrid = Tensor;

// Flattened token view (batch, token, channel) plus the grid the tokens came
// from. token count must equal t_f * h_p * w_p when grid-shaped.
struct TokenSequence {
    Tensor data;  // rank 3: (B, N, C)
    int64_t t_f = 1;
    int64_t h_p = 1;
    int64_t w_p = 1;
};

// Two affine layers with a GELU between them. When `has_hidden` is false the
// second layer is absent and the map is a single affine transform, which
// makes exact identity configurations possible.
class Projector {
public:
    static Projector affine(int64_t in_dim, int64_t out_dim);
    static Projector mlp(int64_t in_dim, int64_t hidden_dim, int64_t out_dim);
    static Projector identity(int64_t dim);
    static Projector random(int64_t in_dim, int64_t hidden_dim, int64_t out_dim, uint64_t seed);

    int64_t in_dim() const { return in_dim_; }
    int64_t out_dim() const { return out_dim_; }
    bool has_hidden() const { return has_hidden_; }

    // Row-major weight access for tests and initialization.
    std::vector<float>& w1() { return w1_; }
    std::vector<float>& b1() { return b1_; }
    std::vector<float>& w2() { return w2_; }
    std::vector<float>& b2() { return b2_; }
    const std::vector<float>& w1() const { return w1_; }
    const std::vector<float>& b1() const { return b1_; }
    const std::vector<float>& w2() const { return w2_; }
    const std::vector<float>& b2() const { return b2_; }

    void apply_token(const float* in, float* out) const;

private:
    Projector() = default;
    int64_t in_dim_ = 0;
    int64_t hidden_dim_ = 0;
    int64_t out_dim_ = 0;
    bool has_hidden_ = false;
    std::vector<float> w1_, b1_;  // w1: hidden x in (or out x in when affine)
    std::vector<float> w2_, b2_;  // w2: out x hidden
};

// Applies the projector per token; output channel dimension becomes D.
TokenSequence project_tokens(const TokenSequence& tokens, const Projector& proj);

// Reshapes tokens to (B, t_f, h_p, w_p, C) and trilinearly resamples to the
// target grid with align-corners coordinates. Axes of size 1 broadcast.
FeatureGrid grid_adapt(const TokenSequence& tokens, int64_t t_g, int64_t h_g, int64_t w_g);

struct GramResult {
    Tensor gram;               // (B, N_v, N_v), symmetric, unit diagonal
    int64_t clamped_tokens = 0;  // tokens whose norm hit the eps floor
};

inline constexpr double kNormEps = 1e-8;

// Pairwise cosine similarity between all spatio-temporal tokens, per batch.
GramResult gram(const FeatureGrid& features);

struct PhysLossResult {
    double loss = 0.0;
    Tensor grad;  // dLoss/dStudent, same shape as the student grid
    int64_t clamped_tokens = 0;
};

// Margin-L1 penalty between the student and teacher relation matrices,
// mean over batches of (1/N_v^2) sum_ij max(0, |G_S - G_T| - margin).
PhysLossResult phys_loss(const FeatureGrid& student, const FeatureGrid& teacher, double margin);

// Forward value only (shared by phys_loss and the CLI eval path).
double phys_loss_value(const FeatureGrid& student, const FeatureGrid& teacher, double margin);

inline constexpr double kDefaultMargin = 0.1;

}  // namespace physlab::align
