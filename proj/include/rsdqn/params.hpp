#pragma once

#include "rsdqn/types.hpp"

#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rsdqn {

// One named tensor with its gradient accumulator. value and grad always
// share a shape.
struct Param {
  Mat value;
  Mat grad;
};

// Insertion-ordered collection of named parameters. Pointers to contained
// Params stay valid for the lifetime of the store.
class ParamStore {
 public:
  ParamStore() = default;
  ParamStore(const ParamStore& other) { *this = other; }
  ParamStore& operator=(const ParamStore& other);
  ParamStore(ParamStore&&) = default;
  ParamStore& operator=(ParamStore&&) = default;

  Param& add(const std::string& name, Mat value);
  Param& at(const std::string& name);
  const Param& at(const std::string& name) const;
  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }
  std::size_t size() const { return order_.size(); }

  const std::vector<std::pair<std::string, Param*>>& items() {
    return order_;
  }
  std::vector<std::pair<std::string, const Param*>> items() const;

  void zero_grads();

  // Copies values (not gradients) from a store with identical layout.
  void copy_values_from(const ParamStore& other);

 private:
  std::deque<Param> storage_;
  std::vector<std::pair<std::string, Param*>> order_;
  std::unordered_map<std::string, Param*> index_;
};

// Standard Adam with bias correction. step() consumes and zeroes gradients.
class Adam {
 public:
  struct Options {
    double lr = 1e-4;
    double beta1 = 0.9;    // not stated by the source method; common default
    double beta2 = 0.999;  // common default
    double eps = 0.00015;
  };

  Adam(ParamStore& store, Options opts);

  void step(ParamStore& store);

  long step_count() const { return step_count_; }
  const Options& options() const { return opts_; }

 private:
  struct Moments {
    Mat m;
    Mat v;
  };
  Options opts_;
  std::vector<Moments> moments_;
  long step_count_ = 0;
};

}  // namespace rsdqn
