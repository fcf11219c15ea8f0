#include "seaweed/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace seaweed {

namespace {

// Sparse n x n matrix keyed by (row, col). Coefficients of commutators of
// basis elements stay tiny, so long long is ample.
using SparseInt = std::map<std::pair<int, int>, long long>;

SparseInt basis_sparse(const BasisElement& b) {
  if (b.kind == BasisElement::Kind::OffDiagonal) {
    return {{{b.i, b.j}, 1}};
  }
  return {{{b.i, b.i}, 1}, {{b.i + 1, b.i + 1}, -1}};
}

SparseInt sparse_mul(const SparseInt& a, const SparseInt& b) {
  SparseInt out;
  for (const auto& [pa, va] : a) {
    for (const auto& [pb, vb] : b) {
      if (pa.second != pb.first) continue;
      long long& acc = out[{pa.first, pb.second}];
      acc += va * vb;
      if (acc == 0) out.erase({pa.first, pb.second});
    }
  }
  return out;
}

SparseInt sparse_commutator(const SparseInt& a, const SparseInt& b) {
  SparseInt out = sparse_mul(a, b);
  for (const auto& [p, v] : sparse_mul(b, a)) {
    long long& acc = out[p];
    acc -= v;
    if (acc == 0) out.erase(p);
  }
  return out;
}

long long evaluate(const WeightedFunctional& f, const SparseInt& x) {
  long long total = 0;
  for (const auto& [p, w] : f) {
    auto it = x.find(p);
    if (it != x.end()) total += w * it->second;
  }
  return total;
}

WeightedFunctional to_weighted(const FunctionalSupport& f) {
  WeightedFunctional out;
  for (const auto& p : f.support) out[p] = 1;
  return out;
}

}  // namespace

std::vector<BasisElement> canonical_basis(const SeaweedShape& shape) {
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<size_t>(shape.dimension()));
  std::vector<std::pair<int, int>> sorted = shape.admissible;
  std::sort(sorted.begin(), sorted.end());
  for (auto [i, j] : sorted) basis.push_back(BasisElement{BasisElement::Kind::OffDiagonal, i, j});
  for (int k = 1; k < shape.n; ++k) basis.push_back(BasisElement{BasisElement::Kind::Cartan, k, 0});
  return basis;
}

FunctionalSupport dk_functional(const DirectedMeander& dm) {
  FunctionalSupport f;
  for (auto e : dm.all_edges()) f.support.insert(e);
  return f;
}

KirillovMatrix kirillov_matrix(const SeaweedType& t, const WeightedFunctional& f) {
  const SeaweedShape shape = seaweed_shape(t);
  std::vector<BasisElement> basis = canonical_basis(shape);
  const int dim = static_cast<int>(basis.size());

  std::vector<SparseInt> mats;
  mats.reserve(basis.size());
  for (const BasisElement& b : basis) mats.push_back(basis_sparse(b));

  KirillovMatrix km{std::move(basis), IntMatrix(dim, dim)};
  for (int x = 0; x < dim; ++x) {
    for (int y = x + 1; y < dim; ++y) {
      const long long v = evaluate(f, sparse_commutator(mats[static_cast<size_t>(x)],
                                                        mats[static_cast<size_t>(y)]));
      km.entries.at(x, y) = v;
      km.entries.at(y, x) = -v;
    }
  }
  return km;
}

KirillovMatrix kirillov_matrix(const SeaweedType& t, const FunctionalSupport& f) {
  return kirillov_matrix(t, to_weighted(f));
}

int kernel_dimension(const KirillovMatrix& km) {
  return km.dim() - rank_bareiss(km.entries);
}

namespace {

// Deterministic per-type stream for the generic functional draws.
std::uint64_t type_seed(const SeaweedType& t, std::uint64_t salt) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : format_type(t)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ (salt * 0x9e3779b97f4a7c15ULL);
}

}  // namespace

int oracle_index(const SeaweedType& t) {
  const DirectedMeander dm = directed_meander(t);
  // The meander functional alone is not regular when the meander has two or
  // more cycles (parallel cycles need distinct weights), so the index is the
  // kernel minimum over it and a few generically weighted functionals. Each
  // kernel bounds the index from above; a generic draw attains it.
  int best = kernel_dimension(kirillov_matrix(t, dk_functional(dm)));
  const SeaweedShape shape = seaweed_shape(t);
  for (std::uint64_t trial = 1; trial <= 3 && best > 0; ++trial) {
    std::mt19937_64 rng(type_seed(t, trial));
    WeightedFunctional f;
    for (auto [i, j] : shape.admissible) f[{i, j}] = 1 + static_cast<long long>(rng() % 65536);
    for (int i = 1; i <= t.n(); ++i) f[{i, i}] = 1 + static_cast<long long>(rng() % 65536);
    best = std::min(best, kernel_dimension(kirillov_matrix(t, f)));
  }
  return best;
}

namespace {

struct PrincipalSolve {
  KirillovMatrix km;
  WeightedFunctional functional;
  std::vector<Int> rhs;            // F(b_y)
  std::vector<Rational> coords;    // coefficients on the canonical basis
  std::vector<Rational> diagonal;  // n diagonal entries
};

PrincipalSolve solve_principal(const SeaweedType& t) {
  const DirectedMeander dm = directed_meander(t);
  PrincipalSolve s{kirillov_matrix(t, dk_functional(dm)), to_weighted(dk_functional(dm)), {}, {}, {}};
  const int dim = s.km.dim();
  const int n = t.n();

  s.rhs.resize(static_cast<size_t>(dim));
  for (int y = 0; y < dim; ++y) {
    s.rhs[static_cast<size_t>(y)] = evaluate(s.functional, basis_sparse(s.km.basis[static_cast<size_t>(y)]));
  }

  // sum_x c_x F([b_x, b_y]) = F(b_y) for every y, i.e. entries^T c = rhs.
  auto solution = solve_exact(s.km.entries.transposed(), s.rhs);
  if (!solution) throw NotFrobeniusError("Kirillov form is degenerate");
  s.coords = std::move(*solution);

  // The principal element of a meander functional is diagonal.
  for (int x = 0; x < dim; ++x) {
    if (s.km.basis[static_cast<size_t>(x)].kind == BasisElement::Kind::OffDiagonal &&
        s.coords[static_cast<size_t>(x)] != 0) {
      throw NonDiagonalError("principal element has off-diagonal support");
    }
  }

  // Cartan coordinates to diagonal entries: entry i picks +c_i and -c_{i-1}.
  const int cartan_offset = dim - (n - 1);
  auto cartan = [&s, cartan_offset, n](int k) -> Rational {
    if (k < 1 || k > n - 1) return Rational(0);
    return s.coords[static_cast<size_t>(cartan_offset + k - 1)];
  };
  Rational trace = 0;
  s.diagonal.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    s.diagonal.push_back(cartan(i) - cartan(i - 1));
    trace += s.diagonal.back();
  }
  if (trace != 0) throw InternalError("oracle principal element has nonzero trace");

  // Defining property, re-verified after the solve.
  for (int y = 0; y < dim; ++y) {
    Rational acc = 0;
    for (int x = 0; x < dim; ++x) {
      if (s.coords[static_cast<size_t>(x)] == 0) continue;
      acc += s.coords[static_cast<size_t>(x)] * Rational(s.km.entries.at(x, y));
    }
    if (acc != Rational(s.rhs[static_cast<size_t>(y)])) {
      throw InternalError("principal element fails its defining property");
    }
  }
  return s;
}

}  // namespace

PrincipalElement oracle_principal(const SeaweedType& t) {
  PrincipalSolve s = solve_principal(t);
  PrincipalElement out;
  out.diag = std::move(s.diagonal);
  out.reference_vertex = 0;
  return out;
}

SpectrumMultiset oracle_spectrum(const SeaweedType& t) {
  PrincipalSolve s = solve_principal(t);
  const int dim = s.km.dim();

  // Sparse rational matrices for ad(principal) against each basis element.
  using SparseRat = std::map<std::pair<int, int>, Rational>;
  SparseRat principal;
  for (int i = 1; i <= t.n(); ++i) {
    const Rational& d = s.diagonal[static_cast<size_t>(i - 1)];
    if (d != 0) principal[{i, i}] = d;
  }
  auto mul = [](const SparseRat& a, const SparseRat& b) {
    SparseRat out;
    for (const auto& [pa, va] : a) {
      for (const auto& [pb, vb] : b) {
        if (pa.second != pb.first) continue;
        Rational& acc = out[{pa.first, pb.second}];
        acc += va * vb;
        if (acc == 0) out.erase({pa.first, pb.second});
      }
    }
    return out;
  };

  const SeaweedShape shape = seaweed_shape(t);
  std::set<std::pair<int, int>> admissible(shape.admissible.begin(), shape.admissible.end());

  // Column y of the ad matrix is [principal, b_y] written in the basis.
  std::vector<Rational> ad_diag(static_cast<size_t>(dim));
  for (int y = 0; y < dim; ++y) {
    SparseRat b;
    for (const auto& [p, v] : basis_sparse(s.km.basis[static_cast<size_t>(y)])) b[p] = v;
    SparseRat comm = mul(principal, b);
    for (const auto& [p, v] : mul(b, principal)) {
      Rational& acc = comm[p];
      acc -= v;
      if (acc == 0) comm.erase(p);
    }

    // Decompose into basis coordinates. ad of a diagonal matrix never
    // produces diagonal terms from off-diagonal input, so the result is a
    // multiple of b_y itself.
    for (const auto& [p, v] : comm) {
      if (p.first == p.second) throw InternalError("ad matrix has a Cartan component");
      if (!admissible.contains(p)) throw InternalError("ad matrix leaves the seaweed");
      const BasisElement& own = s.km.basis[static_cast<size_t>(y)];
      if (own.kind != BasisElement::Kind::OffDiagonal || p.first != own.i || p.second != own.j) {
        throw InternalError("ad matrix is not diagonal");
      }
      ad_diag[static_cast<size_t>(y)] = v;
    }
  }

  SpectrumMultiset out;
  for (const Rational& v : ad_diag) {
    if (denominator(v) != 1) throw InternalError("adjoint eigenvalue is not an integer");
    out.add(numerator(v).convert_to<long long>());
  }
  return out;
}

}  // namespace seaweed
