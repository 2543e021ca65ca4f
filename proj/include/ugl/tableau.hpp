#pragma once

#include <string>
#include <vector>

#include "ugl/element.hpp"

namespace ugl {

// "1,2,3" -> {1,2,3}
std::vector<int> parse_int_list(const std::string& comma_separated);

// partition: weakly decreasing positive parts
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);
  static Shape rectangular(int width, int rows);
  static Shape parse(const std::string& comma_separated);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }   // 0-based
  int last_part() const { return parts_.back(); }
  int weight() const;
  Shape conjugate() const;
  std::string str() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
};

// Young tableau given by its row words over symbols
struct Tableau {
  std::vector<std::vector<Symbol>> rows;

  Shape shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Shape(parts);
  }
  std::string str() const;
};

// ordered supply of distinct virtual symbols within one context
struct VirtualPool {
  ContextPtr ctx;
  std::vector<int> indices;  // virtual symbol indices, all distinct

  static VirtualPool make(const ContextPtr& ctx, int count, int first_index = 1);
  int size() const { return static_cast<int>(indices.size()); }
  Symbol at(int i) const { return Symbol::virt(indices[i]); }
};

// row i = 1 2 ... lambda_i
Tableau deruyts(const Shape& lambda, int n);
// row i = lambda_i ... 2 1
Tableau reverse_deruyts(const Shape& lambda, int n);
// row i = alpha_i repeated lambda_i times
Tableau coderuyts(const Shape& lambda, const VirtualPool& pool);

}  // namespace ugl
