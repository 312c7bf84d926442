#pragma once

#include "rsdqn/params.hpp"
#include "rsdqn/types.hpp"

#include <deque>
#include <functional>
#include <utility>
#include <vector>

namespace rsdqn {

class Graph;

namespace detail {

struct GraphNode {
  Mat value;
  Mat grad;
  bool requires_grad = false;
  bool has_grad = false;
  // Pushes this node's accumulated gradient into its inputs.
  std::function<void(const Mat&)> backprop;

  void accumulate(const Mat& g) {
    if (!has_grad) {
      grad = g;
      has_grad = true;
    } else {
      grad += g;
    }
  }
};

}  // namespace detail

// Handle into a Graph-owned node. Valid until the graph is cleared.
class Expr {
 public:
  Expr() = default;
  bool valid() const { return node_ != nullptr; }
  const Mat& value() const { return node_->value; }
  // Leaf gradient, valid after Graph::backward.
  const Mat& grad() const { return node_->grad; }
  bool has_grad() const { return node_->has_grad; }
  bool requires_grad() const { return node_->requires_grad; }
  Graph& graph() const { return *graph_; }
  detail::GraphNode* node() const { return node_; }

 private:
  Expr(Graph* g, detail::GraphNode* n) : graph_(g), node_(n) {}
  Graph* graph_ = nullptr;
  detail::GraphNode* node_ = nullptr;
  friend class Graph;
};

// Single-use reverse-mode computation record. Nodes are created in forward
// (topological) order; backward walks them in reverse. Values are dense
// matrices with batch items in columns; scalars are 1x1.
class Graph {
 public:
  Expr constant(Mat value) { return make(std::move(value), false, nullptr); }

  // Differentiable leaf; gradient is left on the node for the caller to read.
  Expr input(Mat value) { return make(std::move(value), true, nullptr); }

  // Leaf tied to a stored parameter; backward accumulates into param.grad.
  // The referenced Param must outlive the graph.
  Expr param(Param& p) {
    return make(p.value, true, [&p](const Mat& g) { p.grad += g; });
  }

  Expr make(Mat value, bool requires_grad,
            std::function<void(const Mat&)> backprop) {
    nodes_.emplace_back();
    detail::GraphNode& n = nodes_.back();
    n.value = std::move(value);
    n.requires_grad = requires_grad;
    n.backprop = std::move(backprop);
    return Expr(this, &n);
  }

  // Seeds d(loss)/d(loss) = 1 and runs the reverse sweep.
  void backward(Expr loss);

  void clear() { nodes_.clear(); }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::deque<detail::GraphNode> nodes_;
};

// --- operations -------------------------------------------------------------
// All ops check shapes and throw std::invalid_argument on mismatch.

Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr cmul(Expr a, Expr b);           // elementwise product
Expr scale(Expr a, double c);
Expr matmul(Expr a, Expr b);
Expr affine(Expr w, Expr bias, Expr x);  // w*x + bias per column
Expr relu(Expr x);
Expr cwise_abs(Expr x);

// Q = V + (A - mean_a A), broadcast over the action rows (value_row is 1xB).
Expr dueling_combine(Expr value_row, Expr advantages);

// Picks entry rows[j] from column j; result is 1xB.
Expr gather_rows(Expr m, std::vector<int> rows);

// Per-column -log softmax(col)[target]; result is 1xB.
Expr softmax_cross_entropy(Expr logits, std::vector<int> targets);

// Adversarial logit vector for an interval: row targets[j] takes the lower
// bound, every other row the upper bound.
Expr worst_case_logits(Expr lower, Expr upper, std::vector<int> targets);

Expr colwise_mean(Expr m);           // 1xB column means
Expr mean_all(Expr m);               // 1x1
Expr sum_all(Expr m);                // 1x1

}  // namespace rsdqn
