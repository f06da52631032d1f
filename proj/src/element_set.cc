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

#include "twinopt/element_set.h"

#include <algorithm>
#include <bit>

namespace twinopt {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 0) throw ContractViolation("ground set size must be >= 0");
}

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : GroundSet(n) {
  if (static_cast<int>(labels.size()) != n) {
    throw ContractViolation("labels must cover every element id");
  }
  labels_ = std::move(labels);
}

const std::string& GroundSet::label(Element e) const {
  if (e < 0 || e >= n_ || labels_.empty()) {
    throw ContractViolation("no label for element " + std::to_string(e));
  }
  return labels_[static_cast<std::size_t>(e)];
}

ElementSet::ElementSet(int universe)
    : universe_(universe),
      words_((static_cast<std::size_t>(std::max(universe, 0)) + 63) / 64, 0) {
  if (universe < 0) throw ContractViolation("universe size must be >= 0");
}

ElementSet::ElementSet(int universe, std::initializer_list<Element> members)
    : ElementSet(universe) {
  for (Element e : members) insert(e);
}

ElementSet::ElementSet(int universe, std::span<const Element> members)
    : ElementSet(universe) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (Element e = 0; e < universe; ++e) s.insert(e);
  return s;
}

void ElementSet::check_element(Element e) const {
  if (e < 0 || e >= universe_) {
    throw ContractViolation("element " + std::to_string(e) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
}

void ElementSet::check_universe(const ElementSet& other) const {
  if (other.universe_ != universe_) {
    throw ContractViolation("element sets over different universes");
  }
}

void ElementSet::recount() {
  size_ = 0;
  for (std::uint64_t w : words_) size_ += std::popcount(w);
}

bool ElementSet::insert(Element e) {
  check_element(e);
  std::uint64_t& word = words_[static_cast<std::size_t>(e) >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (e & 63);
  if (word & mask) return false;
  word |= mask;
  ++size_;
  return true;
}

bool ElementSet::erase(Element e) {
  check_element(e);
  std::uint64_t& word = words_[static_cast<std::size_t>(e) >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (e & 63);
  if (!(word & mask)) return false;
  word &= ~mask;
  --size_;
  return true;
}

void ElementSet::clear() {
  std::fill(words_.begin(), words_.end(), 0);
  size_ = 0;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size_));
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::optional<Element> ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  recount();
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  recount();
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Element e) {
    if (!first_member) out += ",";
    out += std::to_string(e);
    first_member = false;
  });
  out += "}";
  return out;
}

ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

ElementSet with(ElementSet s, Element e) {
  s.insert(e);
  return s;
}

}  // namespace twinopt
