#ifndef SLN_CONSTRUCT_HPP
#define SLN_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sln/closure.hpp"
#include "sln/matrices.hpp"
#include "sln/random.hpp"

namespace sln {

// --- consistent sets --------------------------------------------------------

/// n field elements satisfying
///   (1) they sum to zero,
///   (2) each is nonzero,
///   (3) they are pairwise distinct,
///   (4) differences a_i - a_j coincide only when forced (i=j, k=l or i=k, j=l).
template <class S>
struct ConsistentSet {
  FieldSpec field = FieldSpec::rationals();
  std::vector<S> values;
};

template <class S>
bool verify_consistent(const ConsistentSet<S>& s) {
  const auto& a = s.values;
  const std::size_t n = a.size();
  if (n == 0) return false;

  S sum(0);
  for (const auto& v : a) sum += v;
  if (!is_zero(sum)) return false;

  for (const auto& v : a)
    if (is_zero(v)) return false;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i] == a[j]) return false;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if ((i == j && k == l) || (i == k && j == l)) continue;
          if (S(a[i] - a[j]) == S(a[k] - a[l])) return false;
        }
  return true;
}

namespace detail {

inline constexpr int kConsistentSearchAttempts = 4096;

}  // namespace detail

/// Over the rationals: the deterministic powers-of-two set 1, 2, ..., 2^{n-2},
/// 1 - 2^{n-1}. Over F_p: seeded rejection sampling, each candidate verified.
template <class S>
ConsistentSet<S> consistent_set(Index n, const FieldSpec& field, std::uint64_t seed = 0);

template <>
inline ConsistentSet<Rational> consistent_set<Rational>(Index n, const FieldSpec& field,
                                                        std::uint64_t) {
  if (field.kind() != FieldKind::Rationals)
    throw FieldMismatch("rational consistent set requested for a prime field");
  if (n < 2) throw Error("consistent sets need n >= 2");
  ConsistentSet<Rational> s;
  s.field = field;
  Rational power(1);
  for (Index i = 0; i + 1 < n; ++i) {
    s.values.push_back(power);
    power *= 2;
  }
  s.values.push_back(Rational(1) - power);
  return s;
}

template <>
inline ConsistentSet<Fp> consistent_set<Fp>(Index n, const FieldSpec& field,
                                            std::uint64_t seed) {
  if (field.kind() != FieldKind::PrimeField)
    throw FieldMismatch("prime-field consistent set requested for the rationals");
  if (n < 2) throw Error("consistent sets need n >= 2");
  if (field.characteristic() == 2) throw CharacteristicTwo();

  Rng rng(seed);
  for (int attempt = 0; attempt < detail::kConsistentSearchAttempts; ++attempt) {
    ConsistentSet<Fp> s;
    s.field = field;
    Fp sum(0, field.modulus());
    for (Index i = 0; i + 1 < n; ++i) {
      Fp v = sample_unit<Fp>(rng, field);
      s.values.push_back(v);
      sum += v;
    }
    s.values.push_back(-sum);
    if (verify_consistent(s)) return s;
  }
  throw NoConsistentSet("no consistent set of size " + std::to_string(n) + " found over " +
                        field.name() + " within the sampling budget");
}

// --- diagonal splitting ------------------------------------------------------

/// Splits a traceless diagonal matrix with pairwise distinct nonzero entries
/// as c = a + b where a is rank one with every entry nonzero, b is nilpotent,
/// and (because tr a = tr c = 0) a is nilpotent too.
///
/// Construction: in the basis v_i = sum_j e_j / c_jj^{i-1} (a Vandermonde
/// basis, hence a basis), b shifts v_{i+1} -> v_i and kills v_1; a = c - b
/// then annihilates v_2, ..., v_n.
template <class S>
std::pair<MatrixOf<S>, MatrixOf<S>> split_diagonal(const MatrixOf<S>& c) {
  detail::require_square(c);
  const Index n = c.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && !is_zero(S(c(i, j)))) throw NotDiagonal();
  for (Index i = 0; i < n; ++i) {
    if (is_zero(S(c(i, i)))) throw RepeatedOrZeroDiagonal();
    for (Index j = i + 1; j < n; ++j)
      if (c(i, i) == c(j, j)) throw RepeatedOrZeroDiagonal();
  }
  if (!is_zero(trace(c))) throw NonzeroTrace();

  // column i of v holds the coordinates of v_{i+1}
  MatrixOf<S> v(n, n);
  for (Index j = 0; j < n; ++j) {
    const S inv = inverse_of(S(c(j, j)));
    S entry(1);
    for (Index i = 0; i < n; ++i) {
      v(j, i) = entry;
      entry = S(entry * inv);
    }
  }

  MatrixOf<S> shift = zero_matrix<S>(n);
  for (Index i = 0; i + 1 < n; ++i) shift(i, i + 1) = S(1);

  MatrixOf<S> b = v * shift * invert(v);
  MatrixOf<S> a = c - b;
  return {std::move(a), std::move(b)};
}

// --- rank-one canonical form ---------------------------------------------

namespace detail {

template <class S>
void require_rank_one_nilpotent(const MatrixOf<S>& m) {
  require_square(m);
  if (rank(m) != 1 || !is_nilpotent(m)) throw NotRankOneNilpotent();
}

/// Invertible p with m = p E_12 p^{-1}: columns are (mv, v, kernel completion)
/// for any v outside the kernel.
template <class S>
MatrixOf<S> rank_one_canonicalizer(const MatrixOf<S>& m) {
  const Index n = m.rows();
  Index vcol = -1;
  for (Index j = 0; j < n && vcol < 0; ++j)
    for (Index i = 0; i < n; ++i)
      if (!is_zero(S(m(i, j)))) {
        vcol = j;
        break;
      }
  VectorOf<S> v = VectorOf<S>::Constant(n, S(0));
  v(vcol) = S(1);
  VectorOf<S> u = m * v;

  MatrixOf<S> p(n, n);
  p.col(0) = u;
  p.col(1) = v;
  RrefAccumulator<S> acc(n);
  acc.insert(u.transpose());
  Index filled = 2;
  for (const auto& k : kernel_basis(m)) {
    if (filled == n) break;
    if (acc.insert(k.transpose())) p.col(filled++) = k;
  }
  return p;
}

}  // namespace detail

/// Explicit conjugation between two rank-one nilpotents ("all nilpotent
/// matrices of rank 1 are conjugate"): canonicalize both to E_12 and compose.
template <class S>
SimilarityWitness<S> similarity_rank1(const MatrixOf<S>& p, const MatrixOf<S>& q) {
  detail::require_rank_one_nilpotent(p);
  detail::require_rank_one_nilpotent(q);
  if (p.rows() != q.rows()) throw DimensionMismatch();
  MatrixOf<S> cp = detail::rank_one_canonicalizer(p);
  MatrixOf<S> cq = detail::rank_one_canonicalizer(q);
  // q = (cq cp^{-1}) p (cq cp^{-1})^{-1}
  MatrixOf<S> c = cq * invert(cp);
  MatrixOf<S> c_inv = cp * invert(cq);
  return {std::move(c), std::move(c_inv)};
}

/// Nilpotent m such that {n_mat, m} generate sl_n: split a consistent
/// diagonal as a + b, transport b through the conjugation taking a to n_mat.
template <class S>
MatrixOf<S> rank_one_partner(const MatrixOf<S>& n_mat, std::uint64_t seed = 0) {
  detail::require_rank_one_nilpotent(n_mat);
  const Index n = n_mat.rows();
  const FieldSpec field = field_of(n_mat);
  if (field.characteristic() == 2) throw CharacteristicTwo();

  const ConsistentSet<S> cs = consistent_set<S>(n, field, seed);
  const MatrixOf<S> t = diagonal_matrix(cs.values);
  auto [a, b] = split_diagonal(t);
  SimilarityWitness<S> w = similarity_rank1(a, n_mat);  // n_mat = w a w^{-1}
  return conjugate(w, b);
}

// --- nilpotent normal form -------------------------------------------------

/// Superdiagonal pattern (a_1, ..., a_{n-1}) with a_1 = 1 and the witness
/// carrying x to sum a_i E_{i,i+1}. The constructor emits 0/1 Jordan data
/// with blocks ordered by decreasing size.
template <class S>
struct SuperdiagonalForm {
  std::vector<S> a;
  SimilarityWitness<S> witness;
  std::vector<Index> block_sizes;
};

template <class S>
SuperdiagonalForm<S> nilpotent_superdiagonal_form(const MatrixOf<S>& x) {
  detail::require_square(x);
  if (is_zero_matrix(x)) throw ZeroMatrix();
  if (!is_nilpotent(x)) throw NotNilpotent();
  const Index n = x.rows();

  // kernel filtration ker x ⊂ ker x^2 ⊂ ... ⊂ ker x^d = K^n
  std::vector<MatrixOf<S>> powers{identity_matrix<S>(n)};
  while (!is_zero_matrix(powers.back())) powers.push_back(MatrixOf<S>(powers.back() * x));
  const std::size_t depth = powers.size() - 1;  // nilpotency index

  std::vector<std::vector<VectorOf<S>>> kernels(depth + 1);
  for (std::size_t k = 1; k <= depth; ++k) kernels[k] = kernel_basis(powers[k]);

  // chain heads, found top level first; images of higher heads are taken
  // before any fresh head at the same level
  struct Chain {
    VectorOf<S> head;
    std::size_t length;
  };
  std::vector<Chain> chains;
  std::vector<VectorOf<S>> carried;  // x-images of heads from the level above
  for (std::size_t k = depth; k >= 1; --k) {
    RrefAccumulator<S> acc(n);
    if (k >= 2)
      for (const auto& v : kernels[k - 1]) acc.insert(v.transpose());
    std::vector<VectorOf<S>> level = std::move(carried);
    carried.clear();
    for (const auto& v : level) acc.insert(v.transpose());
    for (const auto& v : kernels[k]) {
      if (acc.insert(v.transpose())) {
        chains.push_back({v, k});
        level.push_back(v);
      }
    }
    if (k > 1)
      for (const auto& v : level) carried.push_back(VectorOf<S>(x * v));
  }

  // chains were discovered in decreasing length order; lay out each chain as
  // x^{len-1} h, ..., x h, h so every block becomes E_{i,i+1}-shaped
  MatrixOf<S> basis(n, n);
  SuperdiagonalForm<S> out;
  Index col = 0;
  for (const auto& chain : chains) {
    std::vector<VectorOf<S>> tail;
    VectorOf<S> cur = chain.head;
    tail.push_back(cur);
    for (std::size_t i = 1; i < chain.length; ++i) {
      cur = VectorOf<S>(x * cur);
      tail.push_back(cur);
    }
    for (std::size_t i = 0; i < chain.length; ++i)
      basis.col(col++) = tail[chain.length - 1 - i];
    out.block_sizes.push_back(static_cast<Index>(chain.length));
  }
  if (col != n) throw Error("internal: chain basis does not span");

  out.a.assign(static_cast<std::size_t>(n - 1), S(0));
  Index pos = 0;
  for (Index size : out.block_sizes) {
    for (Index i = 0; i + 1 < size; ++i) out.a[static_cast<std::size_t>(pos + i)] = S(1);
    pos += size;
  }

  out.witness = SimilarityWitness<S>{invert(basis), basis};
  return out;
}

// --- randomized partner for a scaled pattern --------------------------------

template <class S>
struct ScaledPartner {
  MatrixOf<S> x0;           // sum alpha_i a_i E_{i,i+1}
  MatrixOf<S> b0;           // fixed partner of E_12
  std::vector<S> alphas;    // nonzero scaling factors, one per superdiagonal slot
  int attempts = 0;         // accepted on this attempt (1-based)
};

/// Replaces the existence polynomial of the openness argument with seeded
/// rejection sampling: the failure locus is a proper closed set, so nonzero
/// samples succeed quickly, and every accepted sample is certified by an
/// actual closure computation.
template <class S>
ScaledPartner<S> scaled_partner(const std::vector<S>& pattern, const FieldSpec& field,
                                std::uint64_t seed, int budget, bool audit = false) {
  if (pattern.empty()) throw Error("superdiagonal pattern must be nonempty");
  if (pattern.front() != S(1)) throw Error("superdiagonal pattern must start with 1");
  if (field.characteristic() == 2) throw CharacteristicTwo();
  if (budget < 1) throw Error("budget must be at least 1");
  const Index n = static_cast<Index>(pattern.size()) + 1;

  MatrixOf<S> e12 = unit_matrix<S>(n, 0, 1);
  if (field.kind() == FieldKind::PrimeField)
    if constexpr (std::is_same_v<S, Fp>) e12 = bind_matrix(e12, field.modulus());
  const MatrixOf<S> b0 = rank_one_partner(e12, seed);

  Rng rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::vector<S> alphas;
    alphas.reserve(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i)
      alphas.push_back(sample_unit<S>(rng, field));

    MatrixOf<S> x0 = zero_matrix<S>(n);
    for (Index i = 0; i + 1 < n; ++i)
      x0(i, i + 1) = S(alphas[static_cast<std::size_t>(i)] * pattern[static_cast<std::size_t>(i)]);

    ClosureBasis<S> cb = generated_subalgebra<S>({x0, b0});
    if (audit && !audit_bracket_closure(cb))
      throw Error("bracket-closure audit failed inside the sampling loop");
    if (cb.spans_sln()) return {std::move(x0), b0, std::move(alphas), attempt};
  }
  throw BudgetExhausted("no generating scaling found in " + std::to_string(budget) +
                        " attempts over " + field.name() +
                        (field.kind() == FieldKind::Rationals
                             ? " (unexpected over the rationals)"
                             : " (may be genuine over a small prime field)"));
}

/// Diagonal witness carrying sum alpha_i a_i E_{i,i+1} back to
/// sum a_i E_{i,i+1}: d_1 = 1, d_{i+1} = alpha_i d_i wherever a_i is nonzero.
template <class S>
SimilarityWitness<S> diagonal_rescaling(const std::vector<S>& alphas,
                                        const std::vector<S>& pattern) {
  if (alphas.size() != pattern.size())
    throw DimensionMismatch("one scaling factor per superdiagonal slot required");
  for (const auto& a : alphas)
    if (is_zero(a)) throw ZeroScalingFactor();

  const Index n = static_cast<Index>(pattern.size()) + 1;
  std::vector<S> d;
  d.reserve(static_cast<std::size_t>(n));
  d.push_back(S(1));
  for (std::size_t i = 0; i < pattern.size(); ++i)
    d.push_back(is_zero(pattern[i]) ? d.back() : S(alphas[i] * d.back()));

  std::vector<S> d_inv;
  d_inv.reserve(d.size());
  for (const auto& v : d) d_inv.push_back(inverse_of(v));
  return {diagonal_matrix(d), diagonal_matrix(d_inv)};
}

// --- the full pipeline -------------------------------------------------------

template <class S>
struct CertificateProvenance {
  std::uint64_t seed = 0;
  int budget = 0;
  int attempts = 0;
  std::vector<S> alphas;
  std::vector<S> pattern;
  SimilarityWitness<S> form_witness;       // carries x to the superdiagonal form
  SimilarityWitness<S> rescaling_witness;  // carries x0 to the superdiagonal form
  bool outside_theorem_hypotheses = false;  // prime-field run; the theorem assumes an infinite field
};

/// Pair (x, y) of nilpotents with the re-verified facts about them: both
/// nilpotency flags and the closure dimension are recomputed from scratch on
/// the output matrices, independent of how they were built.
template <class S>
struct GeneratorCertificate {
  MatrixOf<S> x;
  MatrixOf<S> y;
  Index n = 0;
  Index closure_dim = 0;
  bool x_nilpotent = false;
  bool y_nilpotent = false;
  bool verified = false;
  CertificateProvenance<S> provenance;
};

/// For a nonzero nilpotent x, a nilpotent y with {x, y} generating sl_n:
/// normal form, randomized scaled partner, diagonal rescaling, then transport
/// of the fixed partner back through both conjugations.
template <class S>
GeneratorCertificate<S> nilpotent_partner(const MatrixOf<S>& x, std::uint64_t seed = 0,
                                          int budget = 64, bool audit = false) {
  detail::require_square(x);
  const Index n = x.rows();
  if (n < 2) throw Error("n >= 2 required (sl_1 has no nonzero nilpotent)");
  if (is_zero_matrix(x)) throw ZeroMatrix();
  if (!is_nilpotent(x)) throw NotNilpotent();
  const FieldSpec field = field_of(x);
  if (field.characteristic() == 2) throw CharacteristicTwo();

  SuperdiagonalForm<S> form = nilpotent_superdiagonal_form(x);
  ScaledPartner<S> sp = scaled_partner<S>(form.a, field, seed, budget, audit);
  SimilarityWitness<S> d = diagonal_rescaling(sp.alphas, form.a);

  // w.c x w.c_inv = A and d.c x0 d.c_inv = A, so m -> w.c_inv d.c m d.c_inv w.c
  // carries x0 to x; the same map carries b0 to the partner.
  const auto& w = form.witness;
  MatrixOf<S> y = w.c_inv * d.c * sp.b0 * d.c_inv * w.c;

  GeneratorCertificate<S> cert;
  cert.x = x;
  cert.y = std::move(y);
  cert.n = n;
  cert.x_nilpotent = is_nilpotent(cert.x);
  cert.y_nilpotent = is_nilpotent(cert.y);
  ClosureBasis<S> cb = generated_subalgebra<S>({cert.x, cert.y});
  if (audit && !audit_bracket_closure(cb))
    throw Error("bracket-closure audit failed on the final verification");
  cert.closure_dim = cb.dim;
  cert.verified = cert.x_nilpotent && cert.y_nilpotent && cb.spans_sln();

  cert.provenance.seed = seed;
  cert.provenance.budget = budget;
  cert.provenance.attempts = sp.attempts;
  cert.provenance.alphas = sp.alphas;
  cert.provenance.pattern = form.a;
  cert.provenance.form_witness = form.witness;
  cert.provenance.rescaling_witness = d;
  cert.provenance.outside_theorem_hypotheses = field.kind() == FieldKind::PrimeField;
  return cert;
}

}  // namespace sln

#endif  // SLN_CONSTRUCT_HPP
