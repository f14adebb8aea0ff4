#include "wgo/puzzle.hpp"

#include <algorithm>

#include "wgo/parallel.hpp"

namespace wgo {

namespace {

// Unit edges of the size-n triangle. Up-triangle (r, c), 1 <= c <= r <= n, has left edge L(r,c),
// right edge R(r,c) and bottom edge H(r,c). Down-triangle (r, c), 1 <= c < r, has top H(r-1,c),
// left R(r,c) and right L(r,c+1).
class Grid {
 public:
  explicit Grid(int n) : n_(n), per_type_(n * (n + 1) / 2) {}

  int n() const { return n_; }
  int edge_count() const { return 3 * per_type_; }
  int H(int r, int c) const { return idx(r, c); }
  int L(int r, int c) const { return per_type_ + idx(r, c); }
  int R(int r, int c) const { return 2 * per_type_ + idx(r, c); }
  int triangle_count() const { return n_ * n_; }
  static int up_pos(int r, int c) { return (r - 1) * (r - 1) + 2 * (c - 1); }
  static int down_pos(int r, int c) { return up_pos(r, c) + 1; }

 private:
  static int idx(int r, int c) { return r * (r - 1) / 2 + c - 1; }
  int n_, per_type_;
};

constexpr int8_t kUnset = -1;
constexpr int8_t kInterior = 2;

class Solver {
 public:
  Solver(const Grid& grid, std::vector<int8_t> labels, Puzzle base)
      : g_(grid), labels_(std::move(labels)), cells_(static_cast<std::size_t>(grid.triangle_count()), '.'),
        base_(std::move(base)) {}

  std::vector<Puzzle> run() {
    dfs(0);
    return std::move(out_);
  }

 private:
  struct Tri {
    bool up;
    int r, c;
  };

  Tri triangle_at(int pos) const {
    int r = 1;
    while (r * r <= pos) ++r;
    int offset = pos - (r - 1) * (r - 1);
    return {offset % 2 == 0, r, offset / 2 + 1};
  }

  bool assign(int edge, int8_t value) {
    int8_t& slot = labels_[static_cast<std::size_t>(edge)];
    if (slot == kUnset) {
      slot = value;
      trail_.push_back(edge);
      return true;
    }
    return slot == value;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      labels_[static_cast<std::size_t>(trail_.back())] = kUnset;
      trail_.pop_back();
    }
  }

  template <typename Place>
  void attempt(int pos, Place&& place) {
    std::size_t mark = trail_.size();
    auto equiv = equivariant_.size();
    std::string saved = cells_;
    if (place()) dfs(pos + 1);
    undo(mark);
    equivariant_.resize(equiv);
    cells_ = std::move(saved);
  }

  void dfs(int pos) {
    while (pos < g_.triangle_count() && cells_[static_cast<std::size_t>(pos)] != '.') ++pos;
    if (pos == g_.triangle_count()) {
      Puzzle p = base_;
      p.cells = cells_;
      p.equivariant = equivariant_;
      out_.push_back(std::move(p));
      return;
    }
    const Tri t = triangle_at(pos);
    const int n = g_.n();
    auto mark = [&](int p, char ch) { cells_[static_cast<std::size_t>(p)] = ch; };
    if (t.up) {
      const int eL = g_.L(t.r, t.c), eR = g_.R(t.r, t.c), eH = g_.H(t.r, t.c);
      for (int8_t x : {0, 1}) {
        attempt(pos, [&] {
          mark(pos, static_cast<char>('0' + x));
          return assign(eL, x) && assign(eR, x) && assign(eH, x);
        });
      }
      if (t.c < t.r) {
        const int d = Grid::down_pos(t.r, t.c);
        if (cells_[static_cast<std::size_t>(d)] == '.') {
          attempt(pos, [&] {
            mark(pos, 'a');
            mark(d, 'a');
            return assign(eL, 1) && assign(eH, 0) && assign(eR, kInterior) && assign(g_.H(t.r - 1, t.c), 0) &&
                   assign(g_.L(t.r, t.c + 1), 1);
          });
        }
      }
      if (t.r < n) {
        const int d = Grid::down_pos(t.r + 1, t.c);
        const int dl = g_.R(t.r + 1, t.c), dr = g_.L(t.r + 1, t.c + 1);
        attempt(pos, [&] {
          mark(pos, 't');
          mark(d, 't');
          return assign(eL, 0) && assign(eR, 1) && assign(eH, kInterior) && assign(dl, 1) && assign(dr, 0);
        });
        attempt(pos, [&] {
          mark(pos, 'e');
          mark(d, 'e');
          equivariant_.push_back({t.r, t.c, n - t.r + t.c, t.c});
          return assign(eL, 1) && assign(eR, 0) && assign(eH, kInterior) && assign(dl, 0) && assign(dr, 1);
        });
      }
    } else {
      const int eT = g_.H(t.r - 1, t.c), eLeft = g_.R(t.r, t.c), eRight = g_.L(t.r, t.c + 1);
      for (int8_t x : {0, 1}) {
        attempt(pos, [&] {
          mark(pos, static_cast<char>('0' + x));
          return assign(eT, x) && assign(eLeft, x) && assign(eRight, x);
        });
      }
      const int u = Grid::up_pos(t.r, t.c + 1);
      attempt(pos, [&] {
        mark(pos, 'b');
        mark(u, 'b');
        return assign(eT, 1) && assign(eLeft, 0) && assign(eRight, kInterior) && assign(g_.R(t.r, t.c + 1), 0) &&
               assign(g_.H(t.r, t.c + 1), 1);
      });
    }
  }

  const Grid& g_;
  std::vector<int8_t> labels_;
  std::string cells_;
  Puzzle base_;
  std::vector<int> trail_;
  std::vector<EquivariantPiece> equivariant_;
  std::vector<Puzzle> out_;
};

void check_word(std::string_view w, std::size_t n) {
  if (w.size() != n || n == 0) throw ParameterError("boundary words must have equal positive length");
  for (char ch : w) {
    if (ch != '0' && ch != '1') throw ParameterError("boundary words must consist of 0 and 1");
  }
}

}  // namespace

std::vector<Puzzle> enumerate_puzzles(std::string_view lambda, std::string_view mu, std::string_view nu,
                                      const PuzzleConvention& conv) {
  const std::size_t n = lambda.size();
  check_word(lambda, n);
  check_word(mu, n);
  check_word(nu, n);
  auto ones = [](std::string_view w) { return std::count(w.begin(), w.end(), '1'); };
  if (ones(lambda) != ones(mu) || ones(mu) != ones(nu)) return {};
  const int nn = static_cast<int>(n);
  Grid grid(nn);
  std::vector<int8_t> labels(static_cast<std::size_t>(grid.edge_count()), kUnset);
  auto bit = [&](char ch) { return static_cast<int8_t>((ch == '1') != conv.complement); };
  for (int w = 0; w < nn; ++w) {
    auto ws = static_cast<std::size_t>(w);
    int rl = conv.left_bottom_up ? nn - w : w + 1;
    int rr = conv.right_bottom_up ? nn - w : w + 1;
    int cb = conv.bottom_right_left ? nn - w : w + 1;
    labels[static_cast<std::size_t>(grid.L(rl, 1))] = bit(lambda[ws]);
    labels[static_cast<std::size_t>(grid.R(rr, rr))] = bit(mu[ws]);
    labels[static_cast<std::size_t>(grid.H(nn, cb))] = bit(nu[ws]);
  }
  Puzzle base;
  base.n = nn;
  base.left = lambda;
  base.right = mu;
  base.bottom = nu;
  return Solver(grid, std::move(labels), std::move(base)).run();
}

std::vector<std::pair<int, int>> weight_pairs(const Puzzle& puzzle, const PuzzleConvention& conv) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : puzzle.equivariant) {
    if (conv.mirror_columns) {
      out.emplace_back(puzzle.n + 1 - p.c, puzzle.n + 1 - p.a);
    } else {
      out.emplace_back(p.a, p.c);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> reflected_weight_pairs(const Puzzle& puzzle, const PuzzleConvention& conv) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, c] : weight_pairs(puzzle, conv)) out.emplace_back(puzzle.n + 1 - a, puzzle.n + 1 - c);
  return out;
}

std::vector<Polynomial> weight_factors(const Puzzle& puzzle, const PuzzleConvention& conv) {
  std::vector<Polynomial> out;
  for (auto [a, c] : weight_pairs(puzzle, conv)) out.push_back(Polynomial::y(a) - Polynomial::y(c));
  return out;
}

Polynomial weight(const Puzzle& puzzle, const PuzzleConvention& conv) {
  Polynomial p(1);
  for (const auto& f : weight_factors(puzzle, conv)) p *= f;
  return p;
}

std::string Puzzle::render() const {
  std::string out;
  for (int r = 1; r <= n; ++r) {
    out += std::string(static_cast<std::size_t>(n - r), ' ');
    for (int p = (r - 1) * (r - 1); p < r * r; ++p) out += cells[static_cast<std::size_t>(p)];
    out += '\n';
  }
  return out;
}

namespace {

StructureTable puzzle_table(const SymbolLattice& lattice, int jobs, const PuzzleConvention& conv, bool conjugate) {
  const std::size_t m = lattice.size();
  if (m > kPuzzleTableLimit) throw CapacityError("puzzle tables limited to C(n,k) <= 15");
  StructureTable table(m);
  parallel_for(m * m, jobs, [&](std::size_t cell) {
    const std::size_t i = cell / m, j = cell % m;
    auto& row = table.at(i, j);
    for (std::size_t l = 0; l < m; ++l) {
      auto deg = [&](std::size_t x) { return conjugate ? lattice.dim(x) : lattice.codim(x); };
      if (deg(l) > deg(i) + deg(j)) continue;
      auto word = [&](std::size_t x) { return conjugate ? lattice[lattice.sigma_r(x)].word() : lattice[x].word(); };
      Polynomial total;
      for (const auto& p : enumerate_puzzles(word(i), word(j), word(l), conv)) {
        Polynomial w(1);
        auto pairs = conjugate ? reflected_weight_pairs(p, conv) : weight_pairs(p, conv);
        for (auto [u, v] : pairs) w *= Polynomial::y(u) - Polynomial::y(v);
        total += w;
      }
      if (!total.is_zero()) row.emplace(l, std::move(total));
    }
  });
  return table;
}

}  // namespace

StructureTable kt_constants(const SymbolLattice& lattice, int jobs, const PuzzleConvention& conv) {
  return puzzle_table(lattice, jobs, conv, false);
}

StructureTable conjugated_constants(const SymbolLattice& lattice, int jobs, const PuzzleConvention& conv) {
  return puzzle_table(lattice, jobs, conv, true);
}

}  // namespace wgo
