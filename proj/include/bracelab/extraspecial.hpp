#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracelab/linalg.hpp"
#include "bracelab/series.hpp"

namespace bracelab {

enum class Family { E0, E1, E2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::E0: return "E0";
    case Family::E1: return "E1";
    default: return "E2";
  }
}

/// A family member E0(m,p), E1(m,p) or E2(m,p). E0 requires 0 < m < p,
/// the three-dimensional families allow 0 <= m < p.
struct FamilySpec {
  Family family;
  int m;
  int p;

  std::string display() const {
    return family_name(family) + "(" + std::to_string(m) + "," +
           std::to_string(p) + ")";
  }
};

inline void check_family_spec(const FamilySpec& spec) {
  if (!is_prime(spec.p))
    throw std::invalid_argument("family parameter p = " +
                                std::to_string(spec.p) + " is not prime");
  int lo = spec.family == Family::E0 ? 1 : 0;
  if (spec.m < lo || spec.m >= spec.p)
    throw std::invalid_argument("family parameter m = " +
                                std::to_string(spec.m) + " out of range for " +
                                family_name(spec.family));
}

/// Brace on V + C_p with product (x,k)(y,t) = (x+y, k+t+phi(x,y)). Element
/// ids encode (x_1..x_d, k) in mixed radix, first coordinate most
/// significant. Valid for every bilinear phi; extraspecial iff phi != 0 and
/// strong iff phi has no nonzero isotropic vector.
inline FiniteBrace brace_from_form(const BilinearForm& phi,
                                   int max_order = kDefaultMaxOrder) {
  if (phi.dim() < 1)
    throw std::invalid_argument("form brace needs dimension >= 1");
  int p = phi.p();
  int d = phi.dim();
  long long vcount = vector_count(p, d);
  long long n = vcount * p;
  if (n > max_order)
    throw cap_exceeded("form brace order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(max_order));
  int nn = static_cast<int>(n);
  PrimeField field(p);

  std::vector<FpVector> vecs;
  vecs.reserve(vcount);
  for (long long i = 0; i < vcount; ++i) vecs.push_back(vector_at(p, d, i));
  std::vector<int> vec_sum(static_cast<size_t>(vcount) * vcount);
  std::vector<int> gram(static_cast<size_t>(vcount) * vcount);
  for (long long i = 0; i < vcount; ++i)
    for (long long j = 0; j < vcount; ++j) {
      std::vector<int> s(d);
      for (int k = 0; k < d; ++k)
        s[k] = field.add(vecs[i].coords[k], vecs[j].coords[k]);
      long long id = 0;
      for (int k = 0; k < d; ++k) id = id * p + s[k];
      vec_sum[i * vcount + j] = static_cast<int>(id);
      gram[i * vcount + j] = phi.eval(vecs[i], vecs[j]);
    }

  std::vector<int> add_table(static_cast<size_t>(nn) * nn);
  std::vector<int> mul_table(static_cast<size_t>(nn) * nn);
  for (long long xi = 0; xi < vcount; ++xi)
    for (int k = 0; k < p; ++k) {
      long long u = xi * p + k;
      for (long long yi = 0; yi < vcount; ++yi)
        for (int t = 0; t < p; ++t) {
          long long v = yi * p + t;
          long long sumv = vec_sum[xi * vcount + yi];
          add_table[u * nn + v] =
              static_cast<int>(sumv * p + field.add(k, t));
          mul_table[u * nn + v] = static_cast<int>(
              sumv * p + field.add(field.add(k, t), gram[xi * vcount + yi]));
        }
    }
  FiniteBrace out =
      FiniteBrace::unchecked(nn, std::move(add_table), std::move(mul_table));
  out.codec.radices.assign(d + 1, p);
  return out;
}

inline BilinearForm family_form(const FamilySpec& spec) {
  check_family_spec(spec);
  switch (spec.family) {
    case Family::E0:
      return BilinearForm(spec.p, {{spec.m}});
    case Family::E1:
      return BilinearForm(spec.p, {{spec.m, 0}, {0, 1}});
    default:
      return BilinearForm(spec.p, {{spec.m, 1}, {0, 1}});
  }
}

/// E0(m,p) on F_p^2 and E1/E2(m,p) on F_p^3, with the star products
/// (0, m k1 t1), (0, 0, m k1 t1 + k2 t2) and (0, 0, m k1 t1 + k1 t2 + k2 t2).
inline FiniteBrace family_brace(const FamilySpec& spec) {
  return brace_from_form(family_form(spec));
}

/// Central element c whose additive line C has a nonzero abelian quotient;
/// strong when a * a != 0 off C.
struct ExtraspecialCertificate {
  int c;
  SubsetMask C;
  bool strong;
};

/// None when the brace is abelian or the additive group is not elementary
/// abelian; otherwise the certificate with the least viable c.
inline std::optional<ExtraspecialCertificate> recognize_extraspecial(
    const FiniteBrace& br) {
  int n = br.order();
  if (n <= 1 || br.is_abelian()) return std::nullopt;
  int p = br.add_order(1);
  if (!is_prime(p)) return std::nullopt;
  for (int a = 1; a < n; ++a)
    if (br.add_order(a) != p) return std::nullopt;

  SocFixCentre sfc = socle_fix_centre(br);
  std::vector<int> centre = sfc.centre.elements();
  for (int c : centre) {
    if (c == 0) continue;
    SubsetMask line = additive_span(br, std::vector<int>{c});
    if (line.count() == n) continue;  // quotient must be nonzero
    bool abelian_quotient = true;
    for (int x = 0; x < n && abelian_quotient; ++x)
      for (int y = 0; y < n; ++y)
        if (!line.test(br.star(x, y))) {
          abelian_quotient = false;
          break;
        }
    if (!abelian_quotient) continue;
    bool strong = true;
    for (int a = 0; a < n && strong; ++a)
      if (!line.test(a) && br.star(a, a) == 0) strong = false;
    return ExtraspecialCertificate{c, line, strong};
  }
  return std::nullopt;
}

/// The bilinear form carried by an extraspecial brace: on cosets modulo C,
/// (xC, yC) evaluates to the scalar k with x * y = k c. Coset representatives
/// are chosen greedily by ascending id, so the matrix is reproducible. The
/// certificate is re-checked; star values escaping C or depending on the
/// representative raise an error.
inline BilinearForm extract_form(const FiniteBrace& br,
                                 const ExtraspecialCertificate& cert) {
  int n = br.order();
  int p = cert.C.count();
  if (cert.C.universe() != n || !is_prime(p) || cert.c >= n ||
      !cert.C.test(cert.c))
    throw std::invalid_argument("stale extraspecial certificate");
  // scalar of each multiple of c
  std::vector<int> scalar_of(n, -1);
  {
    int x = 0;
    for (int k = 0; k < p; ++k) {
      scalar_of[x] = k;
      x = br.add(x, cert.c);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = br.star(x, y);
      if (!cert.C.test(s))
        throw std::invalid_argument(
            "stale extraspecial certificate: star product escapes C");
      if (br.star(br.add(x, cert.c), y) != s || br.star(x, br.add(y, cert.c)) != s)
        throw std::invalid_argument(
            "stale extraspecial certificate: star is not constant on cosets");
    }

  std::vector<int> reps;
  SubsetMask span = cert.C;
  for (int a = 0; a < n; ++a) {
    if (span.test(a)) continue;
    reps.push_back(a);
    SubsetMask seed = span;
    seed.set(a);
    span = additive_span(br, seed);
  }
  int d = static_cast<int>(reps.size());
  std::vector<std::vector<int>> matrix(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      matrix[i][j] = scalar_of[br.star(reps[i], reps[j])];
  return BilinearForm(p, std::move(matrix));
}

struct Classification {
  FamilySpec spec;
  FiniteBrace representative;
  BraceHom witness;  // isomorphism from the input onto the representative
};

/// Scans family specs in fixed order (E0 with m ascending, then E1, then E2)
/// and returns the first with a verified isomorphism. Distinct parameters can
/// name isomorphic braces, so the returned m is the least that matches.
/// Exhausting the scan without a match is an engine error: the input was
/// certified strong extraspecial and must land in a family.
inline Classification classify_strong(const FiniteBrace& br) {
  std::optional<ExtraspecialCertificate> cert = recognize_extraspecial(br);
  if (!cert || !cert->strong)
    throw std::invalid_argument(
        "classification requires a strong extraspecial brace");
  int p = br.add_order(1);
  long long n = br.order();
  if (n != static_cast<long long>(p) * p &&
      n != static_cast<long long>(p) * p * p)
    throw internal_error("strong extraspecial brace of order " +
                         std::to_string(n) + " outside p^2..p^3");

  std::vector<FamilySpec> scan;
  for (int m = 1; m < p; ++m) scan.push_back({Family::E0, m, p});
  for (int m = 0; m < p; ++m) scan.push_back({Family::E1, m, p});
  for (int m = 0; m < p; ++m) scan.push_back({Family::E2, m, p});
  for (const FamilySpec& spec : scan) {
    FiniteBrace cand = family_brace(spec);
    if (cand.order() != br.order()) continue;
    IsoResult r = isomorphism_search(br, cand);
    if (r.outcome == SearchOutcome::found)
      return {spec, std::move(cand), *r.hom};
  }
  std::string dump = "add:";
  for (int v : br.add_table()) dump += " " + std::to_string(v);
  dump += " mul:";
  for (int v : br.mul_table()) dump += " " + std::to_string(v);
  throw internal_error("strong extraspecial brace of order " +
                       std::to_string(n) +
                       " matched no family; classification is falsified; " +
                       dump);
}

/// E0 members are always Dedekind; E1/E2 members are Dedekind exactly when
/// m X^2 + 1 (resp. m X^2 + X + 1) has no roots in F_p. At m = 0 the root
/// test settles both edges on its own: E1(0,p) splits off a central C_p
/// factor from E0(1,p) and is Dedekind (constant polynomial 1, rootless),
/// while X + 1 always has a root, ruling out E2(0,p).
inline bool dedekind_criterion(const FamilySpec& spec) {
  check_family_spec(spec);
  switch (spec.family) {
    case Family::E0:
      return true;
    case Family::E1:
      return poly_roots(FpPoly::make(spec.p, {1, 0, spec.m})).empty();
    default:
      return poly_roots(FpPoly::make(spec.p, {1, 1, spec.m})).empty();
  }
}

}  // namespace bracelab
