// Copyright 2026 The TwinOpt Authors.
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

#ifndef TWINOPT_ELEMENT_SET_H_
#define TWINOPT_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinopt {

// Elements of a ground set are dense ids 0..n-1.
using Element = int;

// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The ground set N. Only its size matters to the algorithms; labels are
// carried for reports.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Element e) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
};

// A subset of {0..n-1} with bitset semantics. The universe size is fixed at
// construction; all binary operations require matching universes.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  ElementSet(int universe, std::initializer_list<Element> members);
  ElementSet(int universe, std::span<const Element> members);

  static ElementSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Element e) const {
    return (words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }
  // Returns true if e was not already present.
  bool insert(Element e);
  bool erase(Element e);
  void clear();

  // Ascending member ids.
  std::vector<Element> members() const;
  std::optional<Element> first() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  // Orders by the ascending member lists, compared lexicographically.
  bool lex_less(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_element(Element e) const;
  void check_universe(const ElementSet& other) const;
  void recount();

  int universe_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

ElementSet operator|(ElementSet a, const ElementSet& b);
ElementSet operator&(ElementSet a, const ElementSet& b);
ElementSet operator-(ElementSet a, const ElementSet& b);

// Copy of s with e added.
ElementSet with(ElementSet s, Element e);

}  // namespace twinopt

#endif  // TWINOPT_ELEMENT_SET_H_
