#include "harmonic/partitions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace harmonic {

std::vector<int> maskElements(Mask m) {
  std::vector<int> out;
  for (int e = 1; m; ++e, m >>= 1)
    if (m & 1u) out.push_back(e);
  return out;
}

std::string blockToString(const std::vector<int>& block, bool commas) {
  std::string s;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (commas && i > 0) s += ',';
    s += std::to_string(block[i]);
  }
  return s;
}

std::vector<int> parseBlock(const std::string& text, int n) {
  if (text.empty()) throw DomainError("partition: empty block");
  std::vector<int> out;
  if (n >= 10 || text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw DomainError("partition: empty element in '" + text + "'");
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw DomainError("partition: bad element '" + tok + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw DomainError("partition: bad element '" + std::string(1, c) + "'");
      out.push_back(c - '0');
    }
  }
  for (int e : out)
    if (e < 1 || e > n)
      throw DomainError("partition: element " + std::to_string(e) +
                        " outside [1," + std::to_string(n) + "]");
  return out;
}

namespace {

void canonicalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Mask checkDisjointUnion(const std::vector<std::vector<int>>& blocks, int n) {
  Mask seen = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("partition: empty block");
    for (int e : b) {
      if (e < 1 || e > 31 || (n > 0 && e > n))
        throw DomainError("partition: element out of range");
      Mask bit = Mask(1) << (e - 1);
      if (seen & bit)
        throw DomainError("partition: repeated element " + std::to_string(e));
      seen |= bit;
    }
  }
  return seen;
}

std::vector<std::string> splitPipes(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

} // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1 || n_ > 31) throw DomainError("partition: n out of range");
  Mask covered = checkDisjointUnion(blocks_, n_);
  if (covered != fullMask(n_))
    throw DomainError("partition: blocks do not cover [n]");
  canonicalize(blocks_);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int e = 1; e <= n; ++e) b.push_back({e});
  return SetPartition(n, std::move(b));
}

SetPartition SetPartition::oneBlock(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

int SetPartition::blockIndexOf(int element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int e : blocks_[i])
      if (e == element) return static_cast<int>(i);
  throw DomainError("partition: element not present");
}

std::vector<Mask> SetPartition::blockMasks() const {
  std::vector<Mask> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(maskOf(b));
  return out;
}

std::string SetPartition::toString() const {
  bool commas = n_ >= 10;
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += '|';
    s += blockToString(blocks_[i], commas);
  }
  return s;
}

SetPartition SetPartition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  for (const auto& part : splitPipes(text)) blocks.push_back(parseBlock(part, n));
  return SetPartition(n, std::move(blocks));
}

SetPartition joinPartitions(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) throw DomainError("join: partitions of different [n]");
  int n = a.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks())
      for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
  std::vector<std::vector<int>> groups(n + 1);
  for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(n, std::move(blocks));
}

bool isRefinementOf(const SetPartition& fine, const SetPartition& coarse) {
  if (fine.n() != coarse.n()) throw DomainError("refinement: size mismatch");
  auto masks = coarse.blockMasks();
  for (const auto& b : fine.blocks()) {
    Mask bm = maskOf(b);
    bool inside = false;
    for (Mask cm : masks)
      if ((bm & cm) == bm) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

void forEachSetPartition(int n,
                         const std::function<bool(const SetPartition&)>& visit) {
  if (n < 1 || n > 31) throw CapError("set partitions: n out of range");
  // Restricted-growth strings: a[0]=0, a[i] <= 1+max(a[0..i-1]).
  std::vector<int> a(n, 0), maxp(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == n) {
      int k = maxp[n - 1] + 1;
      std::vector<std::vector<int>> blocks(k);
      for (int e = 0; e < n; ++e) blocks[a[e]].push_back(e + 1);
      if (!visit(SetPartition(n, std::move(blocks)))) stop = true;
      return;
    }
    int hi = (i == 0) ? 0 : maxp[i - 1] + 1;
    for (int v = 0; v <= hi && !stop; ++v) {
      a[i] = v;
      maxp[i] = (i == 0) ? v : std::max(maxp[i - 1], v);
      rec(i + 1);
    }
  };
  rec(0);
}

void enumerateSetPartitions(int n, const Caps& caps,
                            const std::function<bool(const SetPartition&)>& visit) {
  requireCap(n, caps.partitionN, "enumerateSetPartitions");
  forEachSetPartition(n, visit);
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  ground_ = checkDisjointUnion(blocks_, 0);
  if (blocks_.empty()) throw DomainError("osp: no blocks");
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
}

int OrderedSetPartition::positionOf(int element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int e : blocks_[i])
      if (e == element) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<int> OrderedSetPartition::positions(int n) const {
  std::vector<int> pos(n + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int e : blocks_[i])
      if (e <= n) pos[e] = static_cast<int>(i) + 1;
  return pos;
}

std::string OrderedSetPartition::toString() const {
  bool commas = false;
  for (const auto& b : blocks_)
    for (int e : b)
      if (e >= 10) commas = true;
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += '|';
    s += blockToString(blocks_[i], commas);
  }
  return s;
}

OrderedSetPartition OrderedSetPartition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  for (const auto& part : splitPipes(text)) blocks.push_back(parseBlock(part, n));
  return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition reverseOSP(const OrderedSetPartition& pi) {
  std::vector<std::vector<int>> blocks(pi.blocks().rbegin(), pi.blocks().rend());
  return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition restrictOSP(const OrderedSetPartition& pi, Mask k) {
  if (k == 0) throw DomainError("restrict: empty K");
  if ((k & pi.groundMask()) != k)
    throw DomainError("restrict: K not contained in ground set");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : pi.blocks()) {
    std::vector<int> cut;
    for (int e : b)
      if (maskHas(k, e)) cut.push_back(e);
    if (!cut.empty()) blocks.push_back(std::move(cut));
  }
  return OrderedSetPartition(std::move(blocks));
}

bool isAdjacentRefinement(const OrderedSetPartition& pi,
                          const OrderedSetPartition& piCoarse) {
  if (pi.groundMask() != piCoarse.groundMask())
    throw DomainError("adjacent refinement: ground sets differ");
  std::size_t i = 0;
  for (const auto& coarseBlock : piCoarse.blocks()) {
    Mask want = maskOf(coarseBlock);
    Mask got = 0;
    while (got != want) {
      if (i >= pi.blocks().size()) return false;
      got |= maskOf(pi.blocks()[i]);
      ++i;
      if (got & ~want) return false;
    }
  }
  return i == pi.blocks().size();
}

void forEachOrderedSetPartition(
    const std::vector<int>& ground,
    const std::function<bool(const OrderedSetPartition&)>& visit) {
  if (ground.empty()) throw DomainError("ordered set partitions: empty ground set");
  int m = static_cast<int>(ground.size());
  // Surjection words [m] -> [len] in lexicographic order, len = 1..m;
  // block b is the preimage of b, so F(m) words yield F(m) distinct OSPs.
  std::vector<int> word(m, 0);
  bool stop = false;
  for (int len = 1; len <= m && !stop; ++len) {
    std::function<void(int, int)> rec = [&](int i, int missing) {
      if (stop || m - i < missing) return; // cannot reach surjectivity
      if (i == m) {
        std::vector<std::vector<int>> blocks(len);
        for (int j = 0; j < m; ++j) blocks[word[j]].push_back(ground[j]);
        if (!visit(OrderedSetPartition(std::move(blocks)))) stop = true;
        return;
      }
      for (int b = 0; b < len && !stop; ++b) {
        word[i] = b;
        bool firstUse = true;
        for (int j = 0; j < i; ++j)
          if (word[j] == b) {
            firstUse = false;
            break;
          }
        rec(i + 1, missing - (firstUse ? 1 : 0));
      }
    };
    rec(0, len);
  }
}

} // namespace harmonic
