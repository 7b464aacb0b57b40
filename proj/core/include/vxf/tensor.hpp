#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "vxf/common.hpp"
#include "vxf/rng.hpp"

namespace vxf {

template <class T>
class Tape;

template <class T>
struct TensorNode {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;  // empty until first accumulation
  bool requires_grad = false;
  Tape<T>* producer = nullptr;  // tape that recorded the op producing this node

  int64_t numel() const { return static_cast<int64_t>(value.size()); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), T(0));
  }
};

// Dense row-major N-d array with optional gradient tracking. Value-semantic
// handle sharing an underlying node; all math lives in free functions that
// record adjoints on the active Tape.
template <class T>
class Tensor {
 public:
  using Node = TensorNode<T>;

  Tensor() = default;

  static Tensor from_data(Shape shape, std::vector<T> data,
                          bool requires_grad = false) {
    check(numel_of(shape) == static_cast<int64_t>(data.size()),
          "tensor data length ", data.size(), " does not match shape ",
          shape_str(shape));
    auto n = std::make_shared<Node>();
    n->shape = std::move(shape);
    n->value = std::move(data);
    n->requires_grad = requires_grad;
    return Tensor(std::move(n));
  }

  static Tensor full(Shape shape, T v, bool requires_grad = false) {
    std::vector<T> d(static_cast<size_t>(numel_of(shape)), v);
    return from_data(std::move(shape), std::move(d), requires_grad);
  }

  static Tensor zeros(Shape shape, bool requires_grad = false) {
    return full(std::move(shape), T(0), requires_grad);
  }

  static Tensor scalar(T v, bool requires_grad = false) {
    return from_data({1}, {v}, requires_grad);
  }

  static Tensor randn(Shape shape, Rng& rng, T stddev = T(1),
                      bool requires_grad = false) {
    auto d = randn_vec<T>(rng, numel_of(shape), stddev);
    return from_data(std::move(shape), std::move(d), requires_grad);
  }

  static Tensor trunc_normal(Shape shape, Rng& rng, T stddev,
                             bool requires_grad = false) {
    auto d = trunc_normal_vec<T>(rng, numel_of(shape), stddev);
    return from_data(std::move(shape), std::move(d), requires_grad);
  }

  bool defined() const { return static_cast<bool>(n_); }
  const Shape& shape() const { return n_->shape; }
  int64_t numel() const { return n_->numel(); }
  int64_t extent(size_t axis) const { return n_->shape.at(axis); }
  size_t rank() const { return n_->shape.size(); }
  bool requires_grad() const { return n_->requires_grad; }

  std::span<const T> data() const { return {n_->value.data(), n_->value.size()}; }
  // Direct mutation is for parameter init and optimizer updates only; never
  // mutate a tensor that already participates in a live tape.
  std::span<T> mutable_data() { return {n_->value.data(), n_->value.size()}; }

  bool has_grad() const { return !n_->grad.empty(); }
  std::span<const T> grad() const { return {n_->grad.data(), n_->grad.size()}; }
  void zero_grad() { n_->grad.clear(); }

  T item() const {
    check(numel() == 1, "item() requires a single-element tensor, got shape ",
          shape_str(shape()));
    return n_->value[0];
  }

  bool all_finite() const {
    for (T v : n_->value)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  std::shared_ptr<Node> node() const { return n_; }

  explicit Tensor(std::shared_ptr<Node> n) : n_(std::move(n)) {}

 private:
  std::shared_ptr<Node> n_;
};

// Ordered record of executed ops. Constructing a Tape makes it the active
// recorder on this thread (stack discipline); ops append a backward closure
// when any input requires a gradient. A tape is confined to one thread and
// replays adjoints exactly once.
template <class T>
class Tape {
 public:
  Tape() : prev_(active_ref()) { active_ref() = this; }
  ~Tape() { active_ref() = prev_; }
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  static Tape* active() { return active_ref(); }

  void record(const std::shared_ptr<TensorNode<T>>& out,
              std::function<void()> backward) {
    out->producer = this;
    entries_.push_back(Entry{out, std::move(backward)});
  }

  size_t size() const { return entries_.size(); }

  // Seeds d(loss)/d(loss) = 1 and replays all recorded ops in reverse,
  // accumulating additively into every requires_grad leaf.
  void backward(const Tensor<T>& loss) {
    check(loss.defined() && loss.numel() == 1,
          "backward() requires a scalar loss");
    check(loss.node()->producer == this,
          "backward() loss was not produced on this tape (detached graph)");
    check(!consumed_, "backward() called twice on the same tape");
    consumed_ = true;
    loss.node()->ensure_grad();
    loss.node()->grad[0] += T(1);
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it->out->grad.empty()) continue;  // never influenced the loss
      it->backward();
    }
  }

  bool consumed() const { return consumed_; }

 private:
  struct Entry {
    std::shared_ptr<TensorNode<T>> out;
    std::function<void()> backward;
  };

  static Tape*& active_ref() {
    thread_local Tape* t = nullptr;
    return t;
  }

  std::vector<Entry> entries_;
  bool consumed_ = false;
  Tape* prev_ = nullptr;
};

namespace detail {

// Shared op plumbing: make the output node, propagate requires_grad, and
// record the adjoint closure if a tape is active.
template <class T>
Tensor<T> make_op_output(Shape shape, std::vector<T> value, bool any_parent_grad,
                         const std::function<void()>& backward_builder_marker,
                         std::function<void()> backward) {
  (void)backward_builder_marker;
  auto node = std::make_shared<TensorNode<T>>();
  node->shape = std::move(shape);
  node->value = std::move(value);
  Tape<T>* tape = Tape<T>::active();
  node->requires_grad = any_parent_grad && tape != nullptr;
  Tensor<T> out(node);
  if (node->requires_grad) tape->record(node, std::move(backward));
  return out;
}

template <class T>
void accumulate(const std::shared_ptr<TensorNode<T>>& node,
                std::span<const T> g) {
  node->ensure_grad();
  T* dst = node->grad.data();
  for (size_t i = 0; i < g.size(); ++i) dst[i] += g[i];
}

}  // namespace detail

using Tensor32 = Tensor<float>;
using Tensor64 = Tensor<double>;

}  // namespace vxf
