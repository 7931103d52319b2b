#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lamseq/ints.hpp"

namespace lamseq {

// A validated, sorted, duplicate-free set of generator bases: 2 and/or odd
// integers >= 3.
class BaseSet {
 public:
  BaseSet() = default;
  BaseSet(std::initializer_list<Int> bases);
  explicit BaseSet(std::vector<Int> bases);

  const std::vector<Int>& bases() const { return bases_; }
  bool contains(Int b) const;
  std::size_t size() const { return bases_.size(); }

  // The {2, g} view used by the equation-certificate machinery; g == 0 when
  // the set is not of that shape.
  Int odd_companion_of_two() const;

  std::string to_string() const;  // "2,5"
  bool operator==(const BaseSet&) const = default;

 private:
  std::vector<Int> bases_;
};

}  // namespace lamseq
