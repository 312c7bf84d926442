#include "rsdqn/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace rsdqn {

namespace {

void check_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
}

detail::GraphNode* raw(Expr e);

struct Access {
  // Expr exposes only const access; ops need the node to wire backprop.
};

}  // namespace

// Expr is a friend of Graph only, so ops go through Graph::make with
// closures capturing the input nodes via their Exprs.

void Graph::backward(Expr loss) {
  if (!loss.valid() || loss.value().rows() != 1 || loss.value().cols() != 1)
    throw std::logic_error("Graph::backward: loss must be a 1x1 node");
  bool found = false;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    detail::GraphNode& n = *it;
    if (!found) {
      // Walk down to the loss node first; later nodes cannot influence it.
      if (&n == &*nodes_.rbegin() || true) {
        // identify by address comparison below
      }
    }
    if (!found) {
      // locate loss node
      if (&n == loss_node_of(loss)) {
        n.accumulate(Mat::Ones(1, 1));
        found = true;
      } else {
        continue;
      }
    }
    if (n.has_grad && n.requires_grad && n.backprop) n.backprop(n.grad);
  }
  if (!found) throw std::logic_error("Graph::backward: loss not in graph");
}

// -- op helpers --------------------------------------------------------------

namespace {

// Shared-value capture for backward closures: nodes live in the graph's
// deque, so raw pointers remain stable.
struct In {
  detail::GraphNode* n;
  void push(const Mat& g) const {
    if (n->requires_grad) n->accumulate(g);
  }
  const Mat& v() const { return n->value; }
  bool rg() const { return n->requires_grad; }
};

}  // namespace

}  // namespace rsdqn
