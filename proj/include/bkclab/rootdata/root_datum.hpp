#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkclab/errors.hpp"
#include "bkclab/exactalg/linear_algebra.hpp"

namespace bkclab::rootdata {

using exactalg::Integer;
using exactalg::MatrixQ;
using exactalg::Rational;

using Weight = std::vector<std::int64_t>;
using Coweight = std::vector<std::int64_t>;

inline std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Weight add(Weight a, const Weight& b, std::int64_t scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

enum class Family { GL, A, B, C, D, G };

struct GroupSpec {
  Family family = Family::GL;
  int n = 2;  // matrix size for GL, rank otherwise
  std::uint64_t p = 0;  // 0 means characteristic zero

  std::string name() const {
    switch (family) {
      case Family::GL: return "GL" + std::to_string(n);
      case Family::A: return "A" + std::to_string(n) + "sc";
      case Family::B: return "B" + std::to_string(n);
      case Family::C: return "C" + std::to_string(n);
      case Family::D: return "D" + std::to_string(n);
      case Family::G: return "G2";
    }
    return "?";
  }

  /// Accepts GL2, GL(3), A1, A1sc, B3, C2, D4, G2 (case-insensitive).
  static GroupSpec parse(const std::string& text, std::uint64_t p = 0) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '_')
        s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s.size() > 2 && s.substr(s.size() - 2) == "SC") s.resize(s.size() - 2);
    GroupSpec g;
    g.p = p;
    std::string digits;
    if (s.rfind("GL", 0) == 0) {
      g.family = Family::GL;
      digits = s.substr(2);
    } else if (!s.empty()) {
      switch (s[0]) {
        case 'A': g.family = Family::A; break;
        case 'B': g.family = Family::B; break;
        case 'C': g.family = Family::C; break;
        case 'D': g.family = Family::D; break;
        case 'G': g.family = Family::G; break;
        default: throw InvalidArgument("unknown group '" + text + "'");
      }
      digits = s.substr(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InvalidArgument("unknown group '" + text + "'");
    g.n = std::stoi(digits);
    g.validate();
    return g;
  }

  void validate() const {
    auto bad = [&] { throw Unsupported("unsupported group " + name()); };
    switch (family) {
      case Family::GL: if (n < 2) bad(); break;
      case Family::A: if (n < 1 || n > 4) bad(); break;
      case Family::B: if (n < 2 || n > 4) bad(); break;
      case Family::C: if (n < 2 || n > 4) bad(); break;
      case Family::D: if (n < 3 || n > 4) bad(); break;
      case Family::G: if (n != 2) bad(); break;
    }
    if (p != 0 && !exactalg::is_prime(p)) throw InvalidArgument("p must be prime or 0, got " + std::to_string(p));
  }
};

struct PositiveRoot {
  std::vector<std::int64_t> simple;  // expansion in simple roots
  Weight weight;                     // lattice coordinates
  Coweight coroot;                   // pairing functional: <mu, beta^vee> = dot(coroot, mu)
  int height = 0;
};

struct WeylElement {
  std::vector<std::int64_t> matrix;  // row-major, acts on weight coordinates
  std::size_t dim = 0;
  int length = 0;
  int sign = 1;
  std::vector<int> word;  // reduced word, applied right to left

  Weight apply(const Weight& w) const {
    Weight r(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) r[i] += matrix[i * dim + j] * w[j];
    return r;
  }
};

/// Root datum of a single split reductive factor.
struct RootDatum {
  GroupSpec spec;
  int rank = 0;          // semisimple rank
  int lattice_dim = 0;   // number of weight coordinates
  std::vector<std::vector<std::int64_t>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<std::vector<std::int64_t>> bsym;    // symmetrized Gram matrix of simple roots
  std::vector<Weight> simple_roots;
  std::vector<Coweight> simple_coroots;
  std::vector<PositiveRoot> positive_roots;  // by height, then lexicographic in simple coordinates
  std::vector<Weight> fundamental_weights;
  Weight rho;              // integral representative of rho (differs from rho by a W-fixed vector)
  Coweight two_rho_check;  // sum of positive coroots
  int coxeter_number = 0;
  MatrixQ form;            // W-invariant inner product on weight coordinates
  MatrixQ cartan_inverse;

  std::size_t num_positive() const { return positive_roots.size(); }
  std::size_t dim_g() const { return static_cast<std::size_t>(lattice_dim) + 2 * positive_roots.size(); }
  bool is_gl() const { return spec.family == Family::GL; }

  Weight zero() const { return Weight(lattice_dim, 0); }

  std::int64_t pair(const Weight& mu, int simple_index) const { return dot(simple_coroots[simple_index], mu); }

  bool is_dominant(const Weight& mu) const {
    for (int i = 0; i < rank; ++i)
      if (pair(mu, i) < 0) return false;
    return true;
  }

  void check_weight(const Weight& mu) const {
    if (mu.size() != static_cast<std::size_t>(lattice_dim))
      throw InvalidArgument("weight " + to_string(mu) + " has wrong length for " + spec.name());
  }

  /// Expansion in simple roots, if mu lies in the root lattice.
  std::optional<std::vector<std::int64_t>> simple_coordinates(const Weight& mu) const {
    std::vector<std::int64_t> k(rank, 0);
    if (is_gl()) {
      std::int64_t s = 0;
      for (int i = 0; i < rank; ++i) {
        s += mu[i];
        k[i] = s;
      }
      if (s + mu[rank] != 0) return std::nullopt;
    } else {
      for (int i = 0; i < rank; ++i) {
        Rational acc = 0;
        for (int j = 0; j < rank; ++j) acc += cartan_inverse(i, j) * mu[j];
        if (acc.get_den() != 1) return std::nullopt;
        k[i] = acc.get_num().get_si();
      }
    }
    return k;
  }

  Weight from_simple(const std::vector<std::int64_t>& k) const {
    Weight w = zero();
    for (int i = 0; i < rank; ++i) w = add(w, simple_roots[i], k[i]);
    return w;
  }

  /// Whether mu is a nonnegative integral combination of simple roots.
  bool in_root_cone(const Weight& mu) const {
    auto k = simple_coordinates(mu);
    return k && std::all_of(k->begin(), k->end(), [](std::int64_t x) { return x >= 0; });
  }

  std::optional<std::int64_t> height(const Weight& mu) const {
    auto k = simple_coordinates(mu);
    if (!k) return std::nullopt;
    std::int64_t h = 0;
    for (auto x : *k) h += x;
    return h;
  }

  /// mu <= lambda in the dominance order.
  bool dominated_by(const Weight& mu, const Weight& lambda) const { return in_root_cone(add(lambda, mu, -1)); }

  Weight reflect(int i, const Weight& mu) const { return add(mu, simple_roots[i], -pair(mu, i)); }

  Weight dominant_conjugate(Weight mu) const {
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < rank; ++i)
        if (pair(mu, i) < 0) {
          mu = reflect(i, mu);
          moved = true;
        }
    }
    return mu;
  }

  Rational inner(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int i = 0; i < lattice_dim; ++i)
      for (int j = 0; j < lattice_dim; ++j)
        if (a[i] != 0 && b[j] != 0) s += form(i, j) * a[i] * b[j];
    return s;
  }

  /// Positive root index from simple coordinates.
  std::optional<std::size_t> root_index(const std::vector<std::int64_t>& k) const {
    for (std::size_t r = 0; r < positive_roots.size(); ++r)
      if (positive_roots[r].simple == k) return r;
    return std::nullopt;
  }

  /// All dominant weights nu with nu <= lambda, highest first (by height of lambda - nu, then lexicographic).
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const {
    std::vector<Weight> out{lambda};
    std::map<Weight, bool> seen{{lambda, true}};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (const auto& beta : positive_roots) {
        Weight nu = add(out[k], beta.weight, -1);
        if (is_dominant(nu) && !seen.count(nu)) {
          seen[nu] = true;
          out.push_back(nu);
        }
      }
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
      auto ha = *height(add(lambda, a, -1)), hb = *height(add(lambda, b, -1));
      if (ha != hb) return ha < hb;
      return a > b;
    });
    return out;
  }
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> symmetrized_gram(Family f, int r) {
  std::vector<std::vector<std::int64_t>> b(r, std::vector<std::int64_t>(r, 0));
  auto chain = [&](std::int64_t diag, std::int64_t off) {
    for (int i = 0; i < r; ++i) b[i][i] = diag;
    for (int i = 0; i + 1 < r; ++i) b[i][i + 1] = b[i + 1][i] = off;
  };
  switch (f) {
    case Family::GL:
    case Family::A: chain(2, -1); break;
    case Family::B:
      chain(4, -2);
      b[r - 1][r - 1] = 2;
      break;
    case Family::C:
      chain(2, -1);
      b[r - 1][r - 1] = 4;
      b[r - 2][r - 1] = b[r - 1][r - 2] = -2;
      break;
    case Family::D:
      chain(2, -1);
      b[r - 2][r - 1] = b[r - 1][r - 2] = 0;
      b[r - 3][r - 1] = b[r - 1][r - 3] = -1;
      break;
    case Family::G: b = {{2, -3}, {-3, 6}}; break;
  }
  return b;
}

}  // namespace detail

/// Root datum for a supported group.
inline RootDatum build_root_datum(const GroupSpec& spec) {
  spec.validate();
  RootDatum d;
  d.spec = spec;
  const bool gl = spec.family == Family::GL;
  const int r = gl ? spec.n - 1 : spec.n;
  d.rank = r;
  d.lattice_dim = gl ? spec.n : r;
  d.bsym = detail::symmetrized_gram(spec.family, r);
  d.cartan.assign(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) d.cartan[i][j] = 2 * d.bsym[i][j] / d.bsym[i][i];

  const int n = d.lattice_dim;
  for (int i = 0; i < r; ++i) {
    Weight a(n, 0);
    Coweight c(n, 0);
    if (gl) {
      a[i] = 1;
      a[i + 1] = -1;
      c = a;
    } else {
      for (int k = 0; k < r; ++k) a[k] = d.cartan[k][i];
      c[i] = 1;
    }
    d.simple_roots.push_back(a);
    d.simple_coroots.push_back(c);
  }
  MatrixQ cq(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cq(i, j) = d.cartan[i][j];
  d.cartan_inverse = exactalg::inverse(cq);

  // Positive roots by the root-string algorithm, generated height by height.
  std::vector<std::vector<std::int64_t>> roots;
  std::map<std::vector<std::int64_t>, bool> is_root;
  for (int i = 0; i < r; ++i) {
    std::vector<std::int64_t> k(r, 0);
    k[i] = 1;
    roots.push_back(k);
    is_root[k] = true;
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const auto beta = roots[idx];
    for (int i = 0; i < r; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < r; ++j) pairing += beta[j] * d.cartan[i][j];
      int q = 0;
      for (auto down = beta;;) {
        down[i] -= 1;
        if (!is_root.count(down)) break;
        ++q;
      }
      if (q - pairing > 0) {
        auto up = beta;
        up[i] += 1;
        if (!is_root.count(up)) {
          is_root[up] = true;
          roots.push_back(up);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    std::int64_t ha = 0, hb = 0;
    for (auto x : a) ha += x;
    for (auto x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& k : roots) {
    PositiveRoot pr;
    pr.simple = k;
    pr.weight = d.from_simple(k);
    for (auto x : k) pr.height += static_cast<int>(x);
    std::int64_t norm2 = 0;  // (beta, beta)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm2 += k[i] * d.bsym[i][j] * k[j];
    pr.coroot.assign(n, 0);
    for (int j = 0; j < r; ++j) {
      const std::int64_t num = 2 * k[j] * (d.bsym[j][j] / 2);
      require(num % norm2 == 0, "coroot expansion not integral");
      const std::int64_t c = num / norm2;
      for (int t = 0; t < n; ++t) pr.coroot[t] += c * d.simple_coroots[j][t];
    }
    d.positive_roots.push_back(std::move(pr));
  }

  d.two_rho_check.assign(n, 0);
  for (const auto& pr : d.positive_roots)
    for (int t = 0; t < n; ++t) d.two_rho_check[t] += pr.coroot[t];

  d.rho.assign(n, 0);
  for (int i = 0; i < n; ++i) d.rho[i] = gl ? n - 1 - i : 1;

  for (int i = 0; i < r; ++i) {
    Weight w(n, 0);
    if (gl)
      for (int t = 0; t <= i; ++t) w[t] = 1;
    else
      w[i] = 1;
    d.fundamental_weights.push_back(w);
  }

  d.coxeter_number = r == 0 ? 1 : static_cast<int>(2 * d.positive_roots.size() / r);

  d.form = MatrixQ(n, n);
  if (gl) {
    d.form = MatrixQ::identity(n);
  } else {
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) d.form(i, k) = d.cartan_inverse(i, k) * (d.bsym[i][i] / 2);
  }
  return d;
}

/// All Weyl group elements by breadth-first search over simple reflections.
inline std::vector<WeylElement> weyl_elements(const RootDatum& d, std::size_t cap = 10000) {
  const auto n = static_cast<std::size_t>(d.lattice_dim);
  std::vector<std::vector<std::int64_t>> gens;
  for (int i = 0; i < d.rank; ++i) {
    std::vector<std::int64_t> m(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      m[a * n + a] = 1;
      for (std::size_t b = 0; b < n; ++b) m[a * n + b] -= d.simple_roots[i][a] * d.simple_coroots[i][b];
    }
    gens.push_back(std::move(m));
  }
  WeylElement id;
  id.dim = n;
  id.matrix.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) id.matrix[a * n + a] = 1;
  std::vector<WeylElement> out{id};
  std::map<Weight, bool> seen{{d.rho, true}};
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (int i = 0; i < d.rank; ++i) {
      WeylElement w;
      w.dim = n;
      w.matrix.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k)
          if (gens[i][a * n + k])
            for (std::size_t b = 0; b < n; ++b) w.matrix[a * n + b] += gens[i][a * n + k] * out[idx].matrix[k * n + b];
      Weight key = w.apply(d.rho);
      if (seen.count(key)) continue;
      seen[key] = true;
      w.length = out[idx].length + 1;
      w.sign = -out[idx].sign;
      w.word = out[idx].word;
      w.word.insert(w.word.begin(), i);
      out.push_back(std::move(w));
      if (out.size() > cap) throw CapExceeded("Weyl group of " + d.spec.name() + " exceeds cap " + std::to_string(cap));
    }
  }
  return out;
}

inline WeylElement longest_element(const RootDatum& d, std::size_t cap = 10000) {
  auto all = weyl_elements(d, cap);
  return *std::max_element(all.begin(), all.end(),
                           [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
}

/// <mu, 2 rho^vee> for dominant mu.
inline std::int64_t dim_gr(const RootDatum& d, const Weight& mu) {
  d.check_weight(mu);
  if (!d.is_dominant(mu)) throw InvalidArgument("dim_gr needs a dominant weight, got " + to_string(mu));
  return dot(d.two_rho_check, mu);
}

/// Bad primes of the root system (GL and type A have none).
inline std::vector<std::uint64_t> bad_primes(Family f) {
  switch (f) {
    case Family::GL:
    case Family::A: return {};
    case Family::B:
    case Family::C:
    case Family::D: return {2};
    case Family::G: return {2, 3};
  }
  return {};
}

/// Writes lambda as sum c_i varpi_i (plus det^c_n for GL); coefficient list has lattice_dim entries for GL.
inline std::vector<std::int64_t> fundamental_coordinates(const RootDatum& d, const Weight& lambda) {
  std::vector<std::int64_t> c;
  for (int i = 0; i < d.rank; ++i) c.push_back(d.pair(lambda, i));
  if (d.is_gl()) c.push_back(lambda.back());
  return c;
}

}  // namespace bkclab::rootdata
