#include "wgo/combinatorics.hpp"

#include <algorithm>

namespace wgo {

void check_parameters(int k, int n) {
  if (k < 1 || n <= k || n > 62) {
    throw ParameterError("invalid (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + ")");
  }
}

SchubertSymbol::SchubertSymbol(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  check_parameters(k(), n);
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    if (entries_[s] < 1 || entries_[s] > n || (s > 0 && entries_[s - 1] >= entries_[s])) {
      throw ParameterError("symbol entries must be strictly increasing in [1, n]");
    }
  }
}

SchubertSymbol SchubertSymbol::from_word(std::string_view word) {
  std::vector<int> entries;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == '1') {
      entries.push_back(static_cast<int>(i) + 1);
    } else if (word[i] != '0') {
      throw ParameterError("word must consist of 0 and 1");
    }
  }
  return SchubertSymbol(std::move(entries), static_cast<int>(word.size()));
}

bool SchubertSymbol::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

uint64_t SchubertSymbol::mask() const {
  uint64_t m = 0;
  for (int e : entries_) m |= uint64_t{1} << e;
  return m;
}

std::string SchubertSymbol::word() const {
  std::string w(static_cast<std::size_t>(n_), '0');
  for (int e : entries_) w[static_cast<std::size_t>(e - 1)] = '1';
  return w;
}

std::string SchubertSymbol::to_string() const {
  std::string out = "(";
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    if (s) out += ",";
    out += std::to_string(entries_[s]);
  }
  return out + ")";
}

int SchubertSymbol::dim() const {
  int d = 0;
  for (std::size_t s = 0; s < entries_.size(); ++s) d += entries_[s] - static_cast<int>(s) - 1;
  return d;
}

SchubertSymbol SchubertSymbol::replaced(int from, int to) const {
  if (!contains(from) || contains(to) || to < 1 || to > n_) {
    throw ParameterError("invalid entry replacement");
  }
  std::vector<int> e = entries_;
  *std::find(e.begin(), e.end(), from) = to;
  std::sort(e.begin(), e.end());
  return SchubertSymbol(std::move(e), n_);
}

SchubertSymbol SchubertSymbol::sigma_r() const {
  std::vector<int> e;
  e.reserve(entries_.size());
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) e.push_back(n_ + 1 - *it);
  return SchubertSymbol(std::move(e), n_);
}

bool SchubertSymbol::precedes_eq(const SchubertSymbol& other) const {
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    if (entries_[s] > other.entries_[s]) return false;
  }
  return true;
}

int SchubertSymbol::intersection_size(const SchubertSymbol& other) const {
  return __builtin_popcountll(mask() & other.mask());
}

int dim(const SchubertSymbol& symbol) { return symbol.dim(); }

std::vector<SchubertSymbol> enumerate_symbols(int k, int n) {
  check_parameters(k, n);
  std::vector<SchubertSymbol> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) cur[static_cast<std::size_t>(s)] = s + 1;
  while (true) {
    out.emplace_back(cur, n);
    if (out.size() > SymbolLattice::kMaxSize) throw CapacityError("too many Schubert symbols");
    int s = k - 1;
    while (s >= 0 && cur[static_cast<std::size_t>(s)] == n - k + s + 1) --s;
    if (s < 0) break;
    ++cur[static_cast<std::size_t>(s)];
    for (int t = s + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::string sigma_r_word(std::string_view word) { return std::string(word.rbegin(), word.rend()); }

SymbolLattice::SymbolLattice(int k, int n) : k_(k), n_(n), symbols_(enumerate_symbols(k, n)) {
  const std::size_t m = symbols_.size();
  dims_.resize(m);
  reversal_.resize(m);
  inversion_.resize(m);
  reversal_covers_.resize(m);
  inversion_covers_.resize(m);
  sigma_r_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    index_.emplace(symbols_[i].mask(), i);
    dims_[i] = symbols_[i].dim();
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& lam = symbols_[i];
    for (int s : lam.entries()) {
      for (int r = 1; r <= n; ++r) {
        if (lam.contains(r)) continue;
        std::size_t j = index_of(lam.replaced(s, r));
        (r < s ? reversal_[i] : inversion_[i]).push_back(j);
      }
    }
    std::sort(reversal_[i].begin(), reversal_[i].end());
    std::sort(inversion_[i].begin(), inversion_[i].end());
    for (std::size_t j : reversal_[i]) {
      if (dims_[j] + 1 == dims_[i]) reversal_covers_[i].push_back(j);
    }
    for (std::size_t j : inversion_[i]) {
      if (dims_[j] == dims_[i] + 1) inversion_covers_[i].push_back(j);
    }
    sigma_r_[i] = index_of(lam.sigma_r());
  }
}

std::size_t SymbolLattice::index_of(const SchubertSymbol& symbol) const {
  auto it = index_.find(symbol.mask());
  if (symbol.n() != n_ || symbol.k() != k_ || it == index_.end()) {
    throw ParameterError("symbol " + symbol.to_string() + " not in lattice");
  }
  return it->second;
}

bool SymbolLattice::precedes_eq(std::size_t i, std::size_t j) const {
  return symbols_[i].precedes_eq(symbols_[j]);
}

std::vector<std::size_t> SymbolLattice::adjacent_set(std::size_t i) const {
  std::vector<std::size_t> out = reversal_[i];
  out.insert(out.end(), inversion_[i].begin(), inversion_[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> SymbolLattice::poincare() const {
  std::vector<long long> p(static_cast<std::size_t>(top_dim()) + 1, 0);
  for (int d : dims_) ++p[static_cast<std::size_t>(d)];
  return p;
}

}  // namespace wgo
