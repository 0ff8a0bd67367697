#pragma once

// Reverse-mode differentiation over Tensor-valued nodes.
//
// A Graph records every op applied to its Vars in creation order; backward()
// walks that tape in reverse. Graphs are single-use: build one per forward
// pass. With recording disabled, ops only compute values, which is what
// evaluation paths use.

#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "supportlab/tensor.hpp"

namespace supportlab::ag {

class Graph;

struct Var {
    Graph* graph = nullptr;
    int id = -1;

    const Tensor& value() const;
    const std::vector<int>& shape() const { return value().shape(); }
    int dim(int i) const { return value().dim(i); }
};

class Graph {
public:
    explicit Graph(bool recording = true) : recording_(recording) {}
    Graph(const Graph&) = delete;
    Graph& operator=(const Graph&) = delete;

    bool recording() const { return recording_; }

    Var constant(Tensor value);
    // Leaf whose value lives outside the graph (model parameters). The
    // tensor must outlive the graph.
    Var parameter(const Tensor& value);

    const Tensor& value(Var v) const;
    // Gradient accumulated at `v` by backward(); zeros if nothing flowed in.
    const Tensor& grad(Var v);
    bool needs_grad(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].needs_grad; }

    // Seeds d(out)/d(out) = 1 for a single-element `out`.
    void backward(Var out);

    std::size_t node_count() const { return nodes_.size(); }

    // Hash of the sign pattern of every leaky_relu input seen so far. Two
    // evaluations with equal signatures lie on the same linear piece of
    // every activation. Off unless enabled.
    void track_kinks(bool on) { track_kinks_ = on; }
    bool tracking_kinks() const { return track_kinks_; }
    std::uint64_t kink_signature() const { return kink_signature_; }
    void mix_kink_bit(bool bit) {
        kink_signature_ = (kink_signature_ ^ (bit ? 0x9eULL : 0x3bULL)) * 0x100000001b3ULL;
    }

    // Op plumbing. `backward` receives the graph and reads/accumulates
    // through grad_ref(); it is dropped when recording is off or no input
    // needs a gradient.
    Var record(Tensor value, std::vector<Var> inputs, std::function<void(Graph&, int)> backward);
    Tensor& grad_ref(int id);
    Tensor& grad_ref(Var v) { return grad_ref(v.id); }

private:
    struct Node {
        Tensor value;
        const Tensor* external = nullptr;
        Tensor grad;
        bool needs_grad = false;
        std::function<void(Graph&, int)> backward;
    };

    bool recording_;
    bool track_kinks_ = false;
    std::uint64_t kink_signature_ = 0xcbf29ce484222325ULL;
    std::deque<Node> nodes_;
};

// Elementwise.
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double c);
Var add_scalar(Var a, double c);
Var sigmoid(Var a);
Var tanh(Var a);
Var softplus(Var a);
Var leaky_relu(Var a, double slope);
Var exp(Var a);
Var log(Var a);
Var square(Var a);
// 1 - a
Var one_minus(Var a);

// Shape plumbing.
Var reshape(Var a, std::vector<int> shape);
// Concatenate two [N, A] and [N, B] matrices along columns.
Var concat_cols(Var a, Var b);
// Rows [begin, begin + count) along the leading dimension.
Var slice_rows(Var a, int begin, int count);
// Stack along the leading dimension; trailing shapes must agree.
Var concat_rows(const std::vector<Var>& parts);

// Reductions.
Var sum(Var a);
// Sum of all entries of each leading-dimension slice: [N, ...] -> [N].
Var sum_rows(Var a);

// Dense layers. x: [N, in], weight: [out, in], bias: [out].
Var linear(Var x, Var weight, Var bias);
// Like linear() without bias.
Var matmul_t(Var x, Var weight);

// x: [N, C, H, W], weight: [O, C, k, k], bias: [O]. Square kernels only.
Var conv2d(Var x, Var weight, Var bias, int stride, int pad);
// 2×2 average pooling, stride 2. H and W must be even.
Var avg_pool2(Var x);
// Nearest-neighbour ×2 upsampling.
Var upsample2(Var x);

// Per-row unit-variance Gaussian negative log-likelihood of `target` under
// mean `pred`, normalising constant included: [N, ...] -> [N].
Var gaussian_nll_rows(Var pred, const Tensor& target);
// KL(N(mq, sq²) || N(mp, sp²)) summed over the trailing dimension: [N, D] -> [N].
Var diag_gaussian_kl(Var mq, Var sq, Var mp, Var sp);

}  // namespace supportlab::ag
