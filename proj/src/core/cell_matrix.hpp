// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCMI_CORE_CELL_MATRIX_HPP_
#define GCMI_CORE_CELL_MATRIX_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace gcmi {

// Square matrix with a dense backing up to `kDenseLimit` rows and an ordered
// sparse map above it. Both backings iterate non-zero cells in row-major
// order, so reductions over cells are bit-identical between them.
template <typename T>
class CellMatrix {
 public:
  static constexpr std::size_t kDenseLimit = 1024;

  CellMatrix() = default;
  explicit CellMatrix(std::size_t dim, std::size_t dense_limit = kDenseLimit)
      : dim_(dim), dense_(dim <= dense_limit) {
    if (dense_) cells_.assign(dim * dim, T{});
  }

  std::size_t dim() const { return dim_; }
  bool is_dense() const { return dense_; }

  T at(std::size_t r, std::size_t c) const {
    if (dense_) return cells_[r * dim_ + c];
    auto it = sparse_.find({r, c});
    return it == sparse_.end() ? T{} : it->second;
  }

  void Add(std::size_t r, std::size_t c, T delta) {
    if (dense_) {
      cells_[r * dim_ + c] += delta;
    } else {
      auto it = sparse_.try_emplace({r, c}, T{}).first;
      it->second += delta;
      if (it->second == T{}) sparse_.erase(it);
    }
  }

  void Set(std::size_t r, std::size_t c, T value) {
    if (dense_) {
      cells_[r * dim_ + c] = value;
    } else if (value == T{}) {
      sparse_.erase({r, c});
    } else {
      sparse_[{r, c}] = value;
    }
  }

  // fn(row, col, value) for every non-zero cell, row-major.
  template <typename Fn>
  void ForEachNonzero(Fn&& fn) const {
    if (dense_) {
      for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
          const T v = cells_[r * dim_ + c];
          if (v != T{}) fn(r, c, v);
        }
      }
    } else {
      for (const auto& [rc, v] : sparse_) fn(rc.first, rc.second, v);
    }
  }

  friend bool operator==(const CellMatrix& a, const CellMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    bool equal = true;
    a.ForEachNonzero([&](std::size_t r, std::size_t c, T v) {
      if (b.at(r, c) != v) equal = false;
    });
    b.ForEachNonzero([&](std::size_t r, std::size_t c, T v) {
      if (a.at(r, c) != v) equal = false;
    });
    return equal;
  }

 private:
  std::size_t dim_ = 0;
  bool dense_ = true;
  std::vector<T> cells_;
  std::map<std::pair<std::size_t, std::size_t>, T> sparse_;
};

}  // namespace gcmi

#endif  // GCMI_CORE_CELL_MATRIX_HPP_
