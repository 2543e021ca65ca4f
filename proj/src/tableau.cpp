#include "ugl/tableau.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ugl {

std::vector<int> parse_int_list(const std::string& comma_separated) {
  std::vector<int> out;
  std::stringstream ss(comma_separated);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Shape: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Shape: parts must be weakly decreasing");
  }
}

Shape Shape::rectangular(int width, int rows) {
  return Shape(std::vector<int>(rows, width));
}

Shape Shape::parse(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Shape(parts);
}

int Shape::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Shape Shape::conjugate() const {
  if (parts_.empty()) return Shape();
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Shape(conj);
}

std::string Shape::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += " ";
      s += rows[i][j].str();
    }
  }
  return s;
}

VirtualPool VirtualPool::make(const ContextPtr& ctx, int count, int first_index) {
  if (first_index + count - 1 > ctx->m())
    throw std::invalid_argument("VirtualPool: context has too few virtual symbols");
  VirtualPool p;
  p.ctx = ctx;
  for (int i = 0; i < count; ++i) p.indices.push_back(first_index + i);
  return p;
}

Tableau deruyts(const Shape& lambda, int n) {
  if (lambda.rows() && lambda.part(0) > n)
    throw std::invalid_argument("deruyts: lambda_1 exceeds n");
  Tableau t;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<Symbol> row;
    for (int j = 1; j <= lambda.part(i); ++j) row.push_back(Symbol::proper(j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Tableau reverse_deruyts(const Shape& lambda, int n) {
  if (lambda.rows() && lambda.part(0) > n)
    throw std::invalid_argument("reverse_deruyts: lambda_1 exceeds n");
  Tableau t;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<Symbol> row;
    for (int j = lambda.part(i); j >= 1; --j) row.push_back(Symbol::proper(j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Tableau coderuyts(const Shape& lambda, const VirtualPool& pool) {
  if (lambda.rows() > pool.size())
    throw std::invalid_argument("coderuyts: virtual pool exhausted");
  Tableau t;
  for (int i = 0; i < lambda.rows(); ++i)
    t.rows.emplace_back(lambda.part(i), pool.at(i));
  return t;
}

}  // namespace ugl
