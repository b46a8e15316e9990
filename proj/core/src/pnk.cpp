// Copyright 2026 The Authors.
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

#include "msarr/pnk.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace msarr {

bool tuple_less(Mask a, Mask b) {
  const auto ea = mask_elements(a), eb = mask_elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

SetFamily::SetFamily(std::size_t n, std::size_t k, std::vector<Mask> members)
    : n_(n), k_(k), members_(std::move(members)) {
  if (n_ > 32) throw std::invalid_argument("set families need n <= 32");
  for (Mask m : members_) {
    if (m & ~full_mask(n_)) throw std::invalid_argument("member leaves [n]");
  }
  std::sort(members_.begin(), members_.end(), tuple_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_lists(std::size_t n, std::size_t k,
                                const std::vector<std::vector<std::size_t>>& lists) {
  std::vector<Mask> members;
  for (const auto& l : lists) {
    Mask m = 0;
    for (auto e : l) {
      if (e < 1 || e > n) throw std::invalid_argument("element outside [n]");
      m |= bit(e - 1);
    }
    members.push_back(m);
  }
  return SetFamily(n, k, std::move(members));
}

SetFamily SetFamily::parse(std::size_t n, std::size_t k, const std::string& text) {
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  bool open = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (n > 9) throw std::invalid_argument("digit shorthand needs n <= 9");
      cur.push_back(static_cast<std::size_t>(c - '0'));
      open = true;
    } else if (c == ',' || c == ';' || c == ' ') {
      if (open) lists.push_back(cur);
      cur.clear();
      open = false;
    } else if (c != '{' && c != '}') {
      throw std::invalid_argument("unexpected character in family text");
    }
  }
  if (open) lists.push_back(cur);
  return from_lists(n, k, lists);
}

Mask SetFamily::union_mask() const {
  Mask u = 0;
  for (Mask m : members_) u |= m;
  return u;
}

bool SetFamily::is_antichain() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = 0; j < members_.size(); ++j)
      if (i != j && (members_[i] & members_[j]) == members_[i]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> SetFamily::lists() const {
  std::vector<std::vector<std::size_t>> out;
  for (Mask m : members_) {
    std::vector<std::size_t> l;
    for (auto e : mask_elements(m)) l.push_back(e + 1);
    out.push_back(std::move(l));
  }
  return out;
}

std::string SetFamily::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += subset_label(members_[i], n_);
  }
  return s + "}";
}

bool operator<(const SetFamily& a, const SetFamily& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.k_ != b.k_) return a.k_ < b.k_;
  return std::lexicographical_compare(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                      b.members_.end(), tuple_less);
}

namespace {

std::size_t excess(Mask t, std::size_t k) { return popcount(t) - k; }

// Condition (iii) for the sub-collections of cur + {t} that contain t.
bool union_condition_with(const std::vector<Mask>& cur, Mask t, std::size_t k,
                          std::vector<Mask>* witness) {
  const std::size_t c = cur.size();
  for (Mask sel = 1; sel < (Mask{1} << c); ++sel) {
    Mask u = t;
    std::size_t sum = excess(t, k);
    for (auto i : mask_elements(sel)) {
      u |= cur[i];
      sum += excess(cur[i], k);
    }
    if (!(static_cast<std::size_t>(popcount(u)) > k + sum)) {
      if (witness) {
        witness->clear();
        for (auto i : mask_elements(sel)) witness->push_back(cur[i]);
        witness->push_back(t);
      }
      return false;
    }
  }
  return true;
}

}  // namespace

PnkCheck is_pnk_element(const SetFamily& f) {
  PnkCheck out;
  const auto& mem = f.members();
  for (Mask t : mem) {
    if (static_cast<std::size_t>(popcount(t)) < f.k() + 1) {
      out.member = false;
      out.condition = "i";
      out.witness = {t};
      return out;
    }
  }
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j)
      if (i != j && (mem[i] & mem[j]) == mem[i]) {
        out.member = false;
        out.condition = "ii";
        out.witness = {mem[i], mem[j]};
        return out;
      }
  if (mem.size() > 20) throw std::invalid_argument("family too large for condition (iii)");
  std::vector<Mask> cur;
  for (Mask t : mem) {
    if (!union_condition_with(cur, t, f.k(), &out.witness)) {
      out.member = false;
      out.condition = "iii";
      std::sort(out.witness.begin(), out.witness.end(), tuple_less);
      return out;
    }
    cur.push_back(t);
  }
  return out;
}

std::size_t pnk_rank(const SetFamily& f) {
  const auto chk = is_pnk_element(f);
  if (!chk.member) {
    throw std::invalid_argument("family " + f.str() + " is not in P(n,k), condition (" +
                                chk.condition + ")");
  }
  std::size_t r = 0;
  for (Mask t : f.members()) r += excess(t, f.k());
  return r;
}

namespace {

void backtrack(std::size_t n, std::size_t k, std::size_t max_rank, const std::vector<Mask>& cand,
               std::size_t start, std::vector<Mask>& cur, std::size_t rank,
               std::vector<std::vector<SetFamily>>& out) {
  out[rank].emplace_back(n, k, cur);
  for (std::size_t i = start; i < cand.size(); ++i) {
    const Mask t = cand[i];
    const std::size_t r = rank + excess(t, k);
    if (r > max_rank) continue;
    bool ok = true;
    for (Mask c : cur) {
      if ((c & t) == c || (c & t) == t) {
        ok = false;
        break;
      }
    }
    if (!ok || !union_condition_with(cur, t, k, nullptr)) continue;
    cur.push_back(t);
    backtrack(n, k, max_rank, cand, i + 1, cur, r, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<SetFamily>> enumerate_pnk(std::size_t n, std::size_t k,
                                                  std::size_t max_rank) {
  if (n > 8) throw GuardExceeded("P(n,k) enumeration is limited to n <= 8");
  if (k + 1 > n) throw std::invalid_argument("P(n,k) needs n >= k+1");
  std::vector<Mask> cand;
  for (std::size_t s = k + 1; s <= n && s - k <= max_rank; ++s)
    for (Mask t : k_subsets(n, s)) cand.push_back(t);
  std::sort(cand.begin(), cand.end(), tuple_less);
  std::vector<std::vector<SetFamily>> out(max_rank + 1);
  std::vector<Mask> cur;
  backtrack(n, k, max_rank, cand, 0, cur, 0, out);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

bool pnk_leq(const SetFamily& a, const SetFamily& b) {
  for (Mask t : a.members()) {
    bool inside = false;
    for (Mask u : b.members())
      if ((t & u) == t) inside = true;
    if (!inside) return false;
  }
  return true;
}

}  // namespace msarr
