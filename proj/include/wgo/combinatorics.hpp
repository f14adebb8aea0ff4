#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wgo {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strictly increasing k-tuple in [1, n].
class SchubertSymbol {
 public:
  SchubertSymbol(std::vector<int> entries, int n);

  static SchubertSymbol from_word(std::string_view word);

  int k() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t s) const { return entries_[s]; }

  bool contains(int value) const;
  uint64_t mask() const;
  std::string word() const;
  std::string to_string() const;

  int dim() const;
  int codim() const { return k() * (n_ - k()) - dim(); }

  // Replace entry `from` (must be present) by `to` (must be absent).
  SchubertSymbol replaced(int from, int to) const;
  SchubertSymbol sigma_r() const;

  // Componentwise order on sorted entries.
  bool precedes_eq(const SchubertSymbol& other) const;
  int intersection_size(const SchubertSymbol& other) const;

  friend bool operator==(const SchubertSymbol&, const SchubertSymbol&) = default;
  friend std::strong_ordering operator<=>(const SchubertSymbol& a, const SchubertSymbol& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int n_;
};

int dim(const SchubertSymbol& symbol);
std::vector<SchubertSymbol> enumerate_symbols(int k, int n);
std::string sigma_r_word(std::string_view word);
void check_parameters(int k, int n);

// All symbols of (k, n) in lexicographic order with their order relations.
class SymbolLattice {
 public:
  static constexpr std::size_t kMaxSize = 200000;

  SymbolLattice(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return symbols_.size(); }
  int top_dim() const { return k_ * (n_ - k_); }

  const SchubertSymbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<SchubertSymbol>& symbols() const { return symbols_; }
  std::size_t index_of(const SchubertSymbol& symbol) const;

  int dim(std::size_t i) const { return dims_[i]; }
  int codim(std::size_t i) const { return top_dim() - dims_[i]; }
  bool precedes_eq(std::size_t i, std::size_t j) const;

  const std::vector<std::size_t>& reversal_set(std::size_t i) const { return reversal_[i]; }
  const std::vector<std::size_t>& inversion_set(std::size_t i) const { return inversion_[i]; }
  std::vector<std::size_t> adjacent_set(std::size_t i) const;
  // {j : lambda^i <= lambda^j, d(j) = d(i) + 1}
  const std::vector<std::size_t>& arrows(std::size_t i) const { return inversion_covers_[i]; }
  // {j : lambda^j <= lambda^i, d(j) = d(i) - 1}
  const std::vector<std::size_t>& arrows_down(std::size_t i) const { return reversal_covers_[i]; }
  std::size_t sigma_r(std::size_t i) const { return sigma_r_[i]; }

  // Coefficients of t^0, t^1, ..., t^{k(n-k)} in sum_i t^{d(i)}.
  std::vector<long long> poincare() const;

 private:
  int k_, n_;
  std::vector<SchubertSymbol> symbols_;
  std::unordered_map<uint64_t, std::size_t> index_;
  std::vector<int> dims_;
  std::vector<std::vector<std::size_t>> reversal_, inversion_;
  std::vector<std::vector<std::size_t>> reversal_covers_, inversion_covers_;
  std::vector<std::size_t> sigma_r_;
};

}  // namespace wgo
