#include "gandg/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gandg/matrix.hpp"

namespace gandg {

char type_char(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return 'A';
    case TypeLabel::B: return 'B';
    case TypeLabel::C: return 'C';
    case TypeLabel::D: return 'D';
    case TypeLabel::E: return 'E';
    case TypeLabel::F: return 'F';
    case TypeLabel::G: return 'G';
  }
  throw std::logic_error("type_char: bad label");
}

TypeLabel type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return TypeLabel::A;
    case 'B': case 'b': return TypeLabel::B;
    case 'C': case 'c': return TypeLabel::C;
    case 'D': case 'd': return TypeLabel::D;
    case 'E': case 'e': return TypeLabel::E;
    case 'F': case 'f': return TypeLabel::F;
    case 'G': case 'g': return TypeLabel::G;
  }
  throw std::invalid_argument(std::string("unknown type letter '") + c + "'");
}

namespace {

RatVec unit(int dim, int i) {
  RatVec v(dim);
  v[i] = Rational(1);
  return v;
}

std::vector<RatVec> simple_roots_table(TypeLabel t, int r) {
  std::vector<RatVec> s;
  switch (t) {
    case TypeLabel::A: {
      int d = r + 1;
      for (int i = 0; i < r; ++i) s.push_back(vec_sub(unit(d, i), unit(d, i + 1)));
      break;
    }
    case TypeLabel::B: {
      for (int i = 0; i + 1 < r; ++i) s.push_back(vec_sub(unit(r, i), unit(r, i + 1)));
      s.push_back(unit(r, r - 1));
      break;
    }
    case TypeLabel::C: {
      for (int i = 0; i + 1 < r; ++i) s.push_back(vec_sub(unit(r, i), unit(r, i + 1)));
      s.push_back(vec_scale(Rational(2), unit(r, r - 1)));
      break;
    }
    case TypeLabel::D: {
      for (int i = 0; i + 1 < r; ++i) s.push_back(vec_sub(unit(r, i), unit(r, i + 1)));
      s.push_back(vec_add(unit(r, r - 2), unit(r, r - 1)));
      break;
    }
    case TypeLabel::E: {
      // E6 and E7 are the subsystems on the first 6 resp. 7 simple roots of
      // E8; all three live in R^8.
      RatVec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      s.push_back(vec_add(unit(8, 0), unit(8, 1)));
      for (int i = 0; i + 3 < r + 1; ++i) s.push_back(vec_sub(unit(8, i + 1), unit(8, i)));
      break;
    }
    case TypeLabel::F: {
      s.push_back(vec_sub(unit(4, 1), unit(4, 2)));
      s.push_back(vec_sub(unit(4, 2), unit(4, 3)));
      s.push_back(unit(4, 3));
      s.push_back(RatVec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    }
    case TypeLabel::G: {
      s.push_back(RatVec{Rational(1), Rational(-1), Rational(0)});
      s.push_back(RatVec{Rational(-2), Rational(1), Rational(1)});
      break;
    }
  }
  return s;
}

long positive_root_count(TypeLabel t, int r) {
  switch (t) {
    case TypeLabel::A: return long(r) * (r + 1) / 2;
    case TypeLabel::B: return long(r) * r;
    case TypeLabel::C: return long(r) * r;
    case TypeLabel::D: return long(r) * (r - 1);
    case TypeLabel::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case TypeLabel::F: return 24;
    case TypeLabel::G: return 6;
  }
  throw std::logic_error("positive_root_count: bad label");
}

std::vector<std::vector<long>> expected_cartan(TypeLabel t, int r) {
  std::vector<std::vector<long>> c(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case TypeLabel::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case TypeLabel::B:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      c[r - 2][r - 1] = -2;
      break;
    case TypeLabel::C:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      c[r - 1][r - 2] = -2;
      break;
    case TypeLabel::D:
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case TypeLabel::E:
      edge(0, 2);
      for (int i = 2; i + 1 < r; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case TypeLabel::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c[1][2] = -2;
      break;
    case TypeLabel::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

void validate_rank(TypeLabel t, int r) {
  bool ok = false;
  switch (t) {
    case TypeLabel::A: ok = r >= 1; break;
    case TypeLabel::B: ok = r >= 2; break;
    case TypeLabel::C: ok = r >= 2; break;
    case TypeLabel::D: ok = r >= 3; break;
    case TypeLabel::E: ok = r >= 6 && r <= 8; break;
    case TypeLabel::F: ok = r == 4; break;
    case TypeLabel::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string(1, type_char(t)) + std::to_string(r) + " is not a valid simple type");
}

// Coefficients of v in the simple-root basis; null when v is outside the span.
std::optional<RatVec> root_coeffs(const RootSystem& rs, const RatVec& v) {
  return solve(RatMatrix::from_cols(rs.simple_roots), v);
}

}  // namespace

Rational pairing(const RootSystem& rs, const RatVec& a, const RatVec& b) {
  return rs.gram_scale * dot(a, b);
}

RatVec coroot(const RootSystem& rs, const RatVec& root) {
  Rational n = pairing(rs, root, root);
  if (n.is_zero()) throw std::invalid_argument("coroot: zero vector");
  return vec_scale(Rational(2) / n, root);
}

RatVec reflect(const RootSystem& rs, const RatVec& v, const RatVec& root) {
  Rational k = pairing(rs, v, coroot(rs, root));
  return vec_sub(v, vec_scale(k, root));
}

bool is_dominant(const RootSystem& rs, const RatVec& v) {
  for (const auto& a : rs.simple_roots) {
    Rational p = pairing(rs, v, coroot(rs, a));
    if (p.sign() < 0) return false;
  }
  return true;
}

bool is_root(const RootSystem& rs, const RatVec& v) {
  for (const auto& b : rs.positive_roots)
    if (b == v || vec_neg(b) == v) return true;
  return false;
}

RootSystem build_root_system(TypeLabel t, int rank) {
  validate_rank(t, rank);
  RootSystem rs;
  rs.type = t;
  rs.rank = rank;
  rs.gram_scale = Rational(1);
  rs.simple_roots = simple_roots_table(t, rank);
  if (int(rs.simple_roots.size()) != rank) throw std::logic_error("simple root table size mismatch");
  rs.ambient_dim = int(rs.simple_roots[0].size());

  // All roots = closure of the simple roots under simple reflections.
  std::set<RatVec, decltype(&vec_lex_less)> all(&vec_lex_less);
  std::vector<RatVec> queue = rs.simple_roots;
  for (const auto& a : queue) all.insert(a);
  while (!queue.empty()) {
    RatVec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : rs.simple_roots) {
      RatVec w = reflect(rs, v, a);
      if (all.insert(w).second) queue.push_back(w);
    }
  }

  // Split by the sign of the simple-root coordinates.
  for (const auto& v : all) {
    auto c = root_coeffs(rs, v);
    if (!c) throw std::logic_error("root outside simple-root span");
    int pos = 0, neg = 0;
    for (const auto& x : *c) {
      if (!x.is_integer()) throw std::logic_error("non-integral root coefficient");
      if (x.sign() > 0) ++pos;
      if (x.sign() < 0) ++neg;
    }
    if (pos && neg) throw std::logic_error("root with mixed-sign coefficients");
    if (pos) rs.positive_roots.push_back(v);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), &vec_lex_greater);
  if (long(rs.positive_roots.size()) != positive_root_count(t, rank))
    throw std::logic_error(rs.name() + ": wrong number of positive roots");

  // Cartan matrix against the Dynkin-diagram table.
  rs.cartan.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.cartan[i][j] = pairing(rs, rs.simple_roots[i], coroot(rs, rs.simple_roots[j])).to_long();
  if (rs.cartan != expected_cartan(t, rank)) throw std::logic_error(rs.name() + ": Cartan matrix mismatch");

  // Fundamental weights: w_i = sum_k c_k alpha_k with C^T c = e_i.
  RatMatrix ct(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ct.at(i, j) = Rational(rs.cartan[j][i]);
  for (int i = 0; i < rank; ++i) {
    RatVec e(rank);
    e[i] = Rational(1);
    auto c = solve(ct, e);
    if (!c) throw std::logic_error("fundamental weight solve failed");
    RatVec w(rs.ambient_dim);
    for (int k = 0; k < rank; ++k) w = vec_add(w, vec_scale((*c)[k], rs.simple_roots[k]));
    rs.fundamental_weights.push_back(std::move(w));
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational p = pairing(rs, rs.fundamental_weights[i], coroot(rs, rs.simple_roots[j]));
      if (p != Rational(i == j ? 1 : 0)) throw std::logic_error("fundamental weight pairing check failed");
    }
  return rs;
}

RatVec weight_from_coeffs(const RootSystem& rs, const std::vector<long>& coeffs) {
  if (int(coeffs.size()) != rs.rank) throw std::invalid_argument("weight_from_coeffs: need one coefficient per node");
  RatVec w(rs.ambient_dim);
  for (int i = 0; i < rs.rank; ++i)
    w = vec_add(w, vec_scale(Rational(coeffs[i]), rs.fundamental_weights[i]));
  return w;
}

std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& v) {
  if (int(v.size()) != rs.ambient_dim) throw std::invalid_argument("weyl_orbit: wrong dimension");
  std::set<RatVec, decltype(&vec_lex_less)> seen(&vec_lex_less);
  std::vector<RatVec> queue{v};
  seen.insert(v);
  while (!queue.empty()) {
    RatVec w = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : rs.simple_roots) {
      RatVec u = reflect(rs, w, a);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return std::vector<RatVec>(seen.rbegin(), seen.rend());
}

namespace {

// Heights of the given roots in the given simple basis; throws unless all
// coordinates are integers of one sign.
RatVec heights(const std::vector<RatVec>& simple, const std::vector<RatVec>& roots) {
  RatMatrix s = RatMatrix::from_cols(simple);
  RatVec h;
  h.reserve(roots.size());
  for (const auto& b : roots) {
    auto c = solve(s, b);
    if (!c) throw std::logic_error("heights: root outside span");
    Rational sum;
    for (const auto& x : *c) sum += x;
    h.push_back(sum);
  }
  return h;
}

RatVec unique_highest(const std::vector<RatVec>& simple, const std::vector<RatVec>& roots, const char* what) {
  RatVec h = heights(simple, roots);
  size_t best = 0;
  for (size_t i = 1; i < roots.size(); ++i)
    if (h[i] > h[best]) best = i;
  for (size_t i = 0; i < roots.size(); ++i)
    if (i != best && h[i] == h[best]) throw std::logic_error(std::string(what) + ": highest element not unique");
  return roots[best];
}

}  // namespace

RatVec highest_root(const RootSystem& rs) {
  return unique_highest(rs.simple_roots, rs.positive_roots, "highest_root");
}

RatVec highest_root_dual(const RootSystem& rs) {
  std::vector<RatVec> simple_co, pos_co;
  for (const auto& a : rs.simple_roots) simple_co.push_back(coroot(rs, a));
  for (const auto& b : rs.positive_roots) pos_co.push_back(coroot(rs, b));
  return unique_highest(simple_co, pos_co, "highest_root_dual");
}

long string_length(const RootSystem& rs, const RatVec& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("string_length: weight is not dominant");
  return pairing(rs, lambda, highest_root_dual(rs)).to_long();
}

mpz_class weyl_dim(const RootSystem& rs, const RatVec& lambda) {
  RatVec rho(rs.ambient_dim);
  for (const auto& w : rs.fundamental_weights) rho = vec_add(rho, w);
  Rational num(1), den(1);
  RatVec lam_rho = vec_add(lambda, rho);
  for (const auto& a : rs.positive_roots) {
    RatVec av = coroot(rs, a);
    num *= pairing(rs, lam_rho, av);
    den *= pairing(rs, rho, av);
  }
  return (num / den).to_mpz();
}

bool is_minuscule(const RootSystem& rs, const std::vector<long>& coeffs) {
  for (long a : coeffs)
    if (a < 0) throw std::invalid_argument("is_minuscule: weight is not dominant");
  RatVec lambda = weight_from_coeffs(rs, coeffs);
  if (is_zero_vec(lambda)) return false;
  if (string_length(rs, lambda) != 1) return false;
  // Weight system of a minuscule representation is a single orbit; the orbit
  // size must match the Weyl dimension exactly.
  mpz_class dim = weyl_dim(rs, lambda);
  size_t orbit = weyl_orbit(rs, lambda).size();
  if (mpz_class(orbit) != dim) throw std::logic_error("is_minuscule: orbit size disagrees with Weyl dimension");
  return true;
}

WeightSystem weight_system(std::shared_ptr<const RootSystem> rs, const std::vector<long>& coeffs) {
  if (!is_minuscule(*rs, coeffs))
    throw std::invalid_argument("weight_system: weight is not minuscule for " + rs->name());
  WeightSystem ws;
  ws.rs = std::move(rs);
  ws.lambda_coeffs = coeffs;
  ws.highest_weight = weight_from_coeffs(*ws.rs, coeffs);
  ws.weights = weyl_orbit(*ws.rs, ws.highest_weight);
  return ws;
}

WeightSystem weight_system(TypeLabel t, int rank, const std::vector<long>& coeffs) {
  return weight_system(std::make_shared<RootSystem>(build_root_system(t, rank)), coeffs);
}

ShortRootCertificate short_roots_generate(const RootSystem& rs) {
  ShortRootCertificate cert;
  Rational min_norm = pairing(rs, rs.positive_roots[0], rs.positive_roots[0]);
  Rational max_norm = min_norm;
  for (const auto& b : rs.positive_roots) {
    Rational n = pairing(rs, b, b);
    if (n < min_norm) min_norm = n;
    if (n > max_norm) max_norm = n;
  }
  cert.all_roots_short = (min_norm == max_norm);
  for (const auto& b : rs.positive_roots)
    if (pairing(rs, b, b) == min_norm) cert.short_roots.push_back(b);

  // Integer solve against the short-root column matrix, denominators cleared.
  mpz_class lcm_den(1);
  for (const auto& b : cert.short_roots)
    for (const auto& x : b) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  for (const auto& a : rs.simple_roots)
    for (const auto& x : a) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  IntMatrix m(rs.ambient_dim, int(cert.short_roots.size()));
  for (int j = 0; j < int(cert.short_roots.size()); ++j)
    for (int i = 0; i < rs.ambient_dim; ++i)
      m.at(i, j) = (cert.short_roots[j][i] * Rational(lcm_den)).to_mpz();

  cert.verified = true;
  for (const auto& a : rs.simple_roots) {
    IntVec b(rs.ambient_dim);
    for (int i = 0; i < rs.ambient_dim; ++i) b[i] = (a[i] * Rational(lcm_den)).to_mpz();
    auto x = int_solve(m, b);
    if (!x) throw std::logic_error("short_roots_generate: simple root not in short-root lattice");
    ShortRootCombination combo;
    combo.target = a;
    RatVec recon(rs.ambient_dim);
    for (size_t j = 0; j < x->size(); ++j) {
      if ((*x)[j] == 0) continue;
      combo.terms.push_back({(*x)[j], int(j)});
      recon = vec_add(recon, vec_scale(Rational((*x)[j]), cert.short_roots[j]));
    }
    if (recon != a) cert.verified = false;
    cert.combos.push_back(std::move(combo));
  }
  return cert;
}

}  // namespace gandg
