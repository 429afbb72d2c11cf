#include "knspec/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knspec/parallel.hpp"

namespace knspec {

namespace {

// proportionality over the field: a == c * b for some scalar c
bool proportional(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  auto it1 = a.terms().begin(), it2 = b.terms().begin();
  if (it1->first != it2->first) return false;
  FieldElement c = it1->second * it2->second.inverse();
  return a == b.scaled(c);
}

int elem_index(const std::vector<ToralElement>& elems, const PSymbol& s) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].label == s) return static_cast<int>(i);
  return -1;
}

// ordered product of basis powers (skipping non-positive exponents)
NCPoly basis_power_product(const ToralBasis& basis, const std::vector<long long>& e,
                           int sign) {
  NCPoly acc = NCPoly::one(basis.qctx);
  for (std::size_t b = 0; b < basis.elems.size(); ++b) {
    long long k = sign * e[b];
    for (long long j = 0; j < k; ++j) acc = acc * basis.elems[b].value;
  }
  return acc;
}

} // namespace

ToralBasis toral_basis(const std::shared_ptr<const ParamGroup>& params,
                       const AdmissibleSet& t) {
  ToralBasis out{t, AlgebraContext::quotient(params, t), {}, {}};
  const int n = t.n();

  auto omega_redundant = [&](int i) {
    // image is the single monomial (q_i - p_i) y_i x_i
    return out.qctx->pair_alive(i) &&
           (i == 1 || t.contains(PKind::Om, i - 1));
  };

  for (const PSymbol& s : n_set(t)) {
    if (s.kind == PKind::Om && omega_redundant(s.index)) continue;
    NCPoly v = psymbol_image(out.qctx, s);
    if (v.is_zero())
      throw std::runtime_error("toral basis: zero element " + symbol_name(s));
    if (!is_normal(v))
      throw std::runtime_error("toral basis: non-normal element " + symbol_name(s));
    out.elems.push_back({s, std::move(v)});
  }

  // pairwise scalar commutation (normality only covers generators)
  for (std::size_t i = 0; i < out.elems.size(); ++i)
    for (std::size_t j = i + 1; j < out.elems.size(); ++j)
      if (!scalar_commutes(out.elems[i].value, out.elems[j].value))
        throw std::runtime_error("toral basis: elements do not scalar-commute");

  // kept Omega images have >= 2 monomials, so proportionality between
  // distinct elements can only arise through collapsed levels
  for (std::size_t i = 0; i < out.elems.size(); ++i)
    for (std::size_t j = i + 1; j < out.elems.size(); ++j)
      if (proportional(out.elems[i].value, out.elems[j].value))
        throw std::runtime_error("toral basis: proportional elements");

  // dependency rows: at a collapsed level i, x_i y_i is a scalar multiple of
  // the image of Omega_{i-1}, itself a basis element or (when redundant) the
  // monomial y_{i-1} x_{i-1}
  for (int i = 2; i <= n; ++i) {
    if (!out.qctx->collapsed(i)) continue;
    IVec d(out.elems.size(), 0);
    int xi = elem_index(out.elems, {PKind::X, i});
    int yi = elem_index(out.elems, {PKind::Y, i});
    if (xi < 0 || yi < 0)
      throw std::runtime_error("toral basis: collapsed level misses a generator");
    d[static_cast<std::size_t>(xi)] += 1;
    d[static_cast<std::size_t>(yi)] += 1;
    if (omega_redundant(i - 1)) {
      int xl = elem_index(out.elems, {PKind::X, i - 1});
      int yl = elem_index(out.elems, {PKind::Y, i - 1});
      if (xl < 0 || yl < 0)
        throw std::runtime_error("toral basis: missing lower generators");
      d[static_cast<std::size_t>(xl)] -= 1;
      d[static_cast<std::size_t>(yl)] -= 1;
    } else {
      int om = elem_index(out.elems, {PKind::Om, i - 1});
      if (om < 0) throw std::runtime_error("toral basis: missing lower Omega");
      d[static_cast<std::size_t>(om)] -= 1;
    }
    // engine check: positive side proportional to negative side
    std::vector<long long> e(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) e[k] = static_cast<long long>(d[k]);
    NCPoly pos = basis_power_product(out, e, +1);
    NCPoly neg = basis_power_product(out, e, -1);
    if (!proportional(pos, neg))
      throw std::runtime_error("toral basis: dependency row fails verification");
    out.dependencies.push_back(std::move(d));
  }
  return out;
}

CommutationMatrix commutation_matrix(const ToralBasis& basis) {
  CommutationMatrix m;
  m.survivors = basis.qctx->survivors();
  for (const auto& el : basis.elems) {
    std::vector<UnitScalar> row;
    for (const Generator& g : m.survivors) {
      auto c = scalar_commutes(el.value, NCPoly::generator(basis.qctx, g));
      if (!c)
        throw std::runtime_error("commutation matrix: missing scalar for " +
                                 symbol_name(el.label) + " vs " + generator_name(g));
      row.push_back(*c);
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

namespace {

IMat reversed_cols(const IMat& m) {
  IMat out = m;
  for (auto& r : out) std::reverse(r.begin(), r.end());
  return out;
}

std::string render_word(const ToralBasis& basis, const std::vector<long long>& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t b = 0; b < e.size(); ++b) {
    if (e[b] == 0) continue;
    if (!first) os << "*";
    os << symbol_name(basis.elems[b].label);
    if (e[b] != 1) os << "^" << e[b];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

// direct multiply-level centrality: u g == c_neg(g) * (g u) where u is the
// positive part and c_neg the commutation scalar of the inverted part
void verify_central(const ToralBasis& basis, const CommutationMatrix& comm,
                    const std::vector<long long>& e) {
  const auto& g = *basis.qctx->params();
  NCPoly pos = basis_power_product(basis, e, +1);
  for (std::size_t gi = 0; gi < comm.survivors.size(); ++gi) {
    UnitScalar c_neg = g.identity();
    for (std::size_t b = 0; b < e.size(); ++b)
      if (e[b] < 0) c_neg = g.mul(c_neg, g.power(comm.entries[b][gi], -e[b]));
    NCPoly gp = NCPoly::generator(basis.qctx, comm.survivors[gi]);
    NCPoly lhs = pos * gp;
    NCPoly rhs = (gp * pos).scaled_unit(c_neg);
    if (!(lhs == rhs))
      throw std::runtime_error("center: generator fails direct centrality check");
  }
}

} // namespace

CenterLattice center_lattice(const ToralBasis& basis, const CommutationMatrix& comm) {
  CenterLattice out;
  const std::size_t nb = basis.elems.size();
  const auto& params = *basis.qctx->params();
  const std::size_t m = params.symbol_count();
  const auto& rel = params.relation_rows();
  const std::size_t nrel = rel.size();
  const std::size_t ng = comm.survivors.size();

  if (nb == 0) {
    out.rank = 0;
    return out;
  }

  // solve sum_b e_b log c(b,g) in the relation lattice, for every survivor g
  const std::size_t rows = ng * m;
  const std::size_t cols = nb + ng * nrel;
  IMat a(rows, IVec(cols, 0));
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t cm = 0; cm < m; ++cm) {
      const std::size_t row = gi * m + cm;
      for (std::size_t b = 0; b < nb; ++b)
        a[row][b] = comm.entries[b][gi].exp[cm];
      for (std::size_t j = 0; j < nrel; ++j)
        a[row][nb + gi * nrel + j] = -BigInt(rel[j][cm]);
    }

  IMat kernel = right_kernel(a, rows, cols);
  IMat l_rows;
  for (const auto& k : kernel) l_rows.push_back(IVec(k.begin(), k.begin() + nb));
  out.kernel_hnf = hnf_rows(l_rows);
  out.dependency_hnf = hnf_rows(basis.dependencies);

  for (const auto& d : out.dependency_hnf)
    if (!in_rowspace(out.kernel_hnf, d))
      throw std::runtime_error("center: dependency outside the kernel lattice");

  // quotient by the dependencies; reversed coordinates make the reduction
  // prefer low-index basis elements in the representatives
  QuotientBasis qb = lattice_quotient(reversed_cols(out.kernel_hnf),
                                      reversed_cols(out.dependency_hnf), nb);
  out.rank = qb.rank;
  if (out.rank > static_cast<std::size_t>(basis.qctx->n()) + 1)
    throw std::runtime_error("center: rank exceeds the n+1 bound");

  IMat reps = reversed_cols(qb.reps);
  for (auto& e : reps) {
    std::size_t first = 0;
    while (first < e.size() && e[first] == 0) ++first;
    if (first < e.size() && e[first] < 0)
      for (auto& x : e) x = -x;
  }
  std::sort(reps.begin(), reps.end(), std::greater<IVec>());

  for (const auto& e : reps) {
    CenterGenerator cg;
    cg.exponents.resize(nb);
    for (std::size_t b = 0; b < nb; ++b)
      cg.exponents[b] = static_cast<long long>(e[b]);
    cg.word = render_word(basis, cg.exponents);
    cg.scalar = params.identity();
    verify_central(basis, comm, cg.exponents);
    out.generators.push_back(std::move(cg));
  }
  return out;
}

PrimitiveFamily primitive_family(const ToralBasis& basis, const CenterLattice& center) {
  PrimitiveFamily fam;
  fam.center_rank = center.rank;
  for (const PSymbol& s : minimal_ideal_generators(basis.t))
    fam.ideal_generators.push_back(symbol_name(s));

  // items interleave by the position of their leading symbol; the formal
  // parameters are named in display order
  static const char* const kParamNames[] = {"alpha", "beta", "lambda", "mu", "nu"};
  struct Item {
    PSymbol key;
    std::string text;
    bool center;
  };
  std::vector<Item> keyed;
  for (const PSymbol& s : minimal_ideal_generators(basis.t))
    keyed.push_back({s, symbol_name(s), false});
  for (const auto& cg : center.generators) {
    PSymbol lead = basis.elems.front().label;
    for (std::size_t b = 0; b < cg.exponents.size(); ++b)
      if (cg.exponents[b] != 0) {
        lead = basis.elems[b].label;
        break;
      }
    keyed.push_back({lead, cg.word, true});
  }
  // plain Omega generators lead, everything else follows symbol position
  auto rank = [](const Item& it) {
    return (!it.center && it.key.kind == PKind::Om) ? 0 : 1;
  };
  std::stable_sort(keyed.begin(), keyed.end(), [&](const Item& a, const Item& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.key < b.key;
  });
  std::vector<std::string> items;
  std::size_t next_param = 0;
  for (auto& it : keyed) {
    if (it.center) {
      std::string p = next_param < 5 ? kParamNames[next_param]
                                     : "c" + std::to_string(next_param + 1);
      ++next_param;
      items.push_back(it.text + " - " + p);
    } else {
      items.push_back(it.text);
    }
  }
  std::ostringstream os;
  os << "<";
  if (items.empty()) {
    os << "0";
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) os << ", ";
      os << items[i];
    }
  }
  os << ">";
  fam.description = os.str();
  return fam;
}

StratumReport stratum_report(const std::shared_ptr<const ParamGroup>& params,
                             const AdmissibleSet& t) {
  StratumReport r{t, n_set(t), {}, {}, {}, {}};
  ToralBasis basis = toral_basis(params, t);
  for (const auto& el : basis.elems) r.basis_labels.push_back(el.label);
  r.comm = commutation_matrix(basis);
  r.center = center_lattice(basis, r.comm);
  r.family = primitive_family(basis, r.center);
  return r;
}

std::vector<StratumReport> full_report(const std::shared_ptr<const ParamGroup>& params,
                                       int n, int threads) {
  std::vector<AdmissibleSet> sets = enumerate_admissible(n);
  std::vector<StratumReport> out(sets.size(),
                                 StratumReport{AdmissibleSet(n, 0), {}, {}, {}, {}, {}});
  parallel_for(sets.size(), threads,
               [&](std::size_t i) { out[i] = stratum_report(params, sets[i]); });
  return out;
}

} // namespace knspec
