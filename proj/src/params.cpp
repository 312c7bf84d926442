#include "rsdqn/params.hpp"

#include <stdexcept>

namespace rsdqn {

ParamStore& ParamStore::operator=(const ParamStore& other) {
  if (this == &other) return *this;
  storage_.clear();
  order_.clear();
  index_.clear();
  for (const auto& [name, p] : other.order_) {
    add(name, p->value).grad = p->grad;
  }
  return *this;
}

Param& ParamStore::add(const std::string& name, Mat value) {
  if (contains(name))
    throw std::invalid_argument("ParamStore: duplicate parameter '" + name +
                                "'");
  storage_.emplace_back();
  Param& p = storage_.back();
  p.grad = Mat::Zero(value.rows(), value.cols());
  p.value = std::move(value);
  order_.emplace_back(name, &p);
  index_.emplace(name, &p);
  return p;
}

Param& ParamStore::at(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::out_of_range("ParamStore: unknown parameter '" + name + "'");
  return *it->second;
}

const Param& ParamStore::at(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::out_of_range("ParamStore: unknown parameter '" + name + "'");
  return *it->second;
}

std::vector<std::pair<std::string, const Param*>> ParamStore::items() const {
  std::vector<std::pair<std::string, const Param*>> out;
  out.reserve(order_.size());
  for (const auto& [name, p] : order_) out.emplace_back(name, p);
  return out;
}

void ParamStore::zero_grads() {
  for (auto& [name, p] : order_) p->grad.setZero();
}

void ParamStore::copy_values_from(const ParamStore& other) {
  if (other.order_.size() != order_.size())
    throw std::invalid_argument("ParamStore: layout mismatch in copy");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const auto& [oname, op] = other.order_[i];
    auto& [name, p] = order_[i];
    if (name != oname || p->value.rows() != op->value.rows() ||
        p->value.cols() != op->value.cols())
      throw std::invalid_argument("ParamStore: layout mismatch in copy");
    p->value = op->value;
  }
}

Adam::Adam(ParamStore& store, Options opts) : opts_(opts) {
  if (opts_.lr <= 0) throw std::invalid_argument("Adam: lr must be positive");
  moments_.reserve(store.size());
  for (auto& [name, p] : store.items()) {
    Moments m;
    m.m = Mat::Zero(p->value.rows(), p->value.cols());
    m.v = Mat::Zero(p->value.rows(), p->value.cols());
    moments_.push_back(std::move(m));
  }
}

void Adam::step(ParamStore& store) {
  if (store.size() != moments_.size())
    throw std::invalid_argument("Adam: store layout changed after init");
  ++step_count_;
  const double bc1 = 1.0 - std::pow(opts_.beta1, step_count_);
  const double bc2 = 1.0 - std::pow(opts_.beta2, step_count_);
  std::size_t i = 0;
  for (auto& [name, p] : store.items()) {
    Moments& mo = moments_[i++];
    mo.m = opts_.beta1 * mo.m + (1.0 - opts_.beta1) * p->grad;
    mo.v =
        opts_.beta2 * mo.v + (1.0 - opts_.beta2) * p->grad.cwiseProduct(p->grad);
    const Mat m_hat = mo.m / bc1;
    const Mat v_hat = mo.v / bc2;
    p->value.array() -=
        opts_.lr * m_hat.array() / (v_hat.array().sqrt() + opts_.eps);
    p->grad.setZero();
  }
}

}  // namespace rsdqn
