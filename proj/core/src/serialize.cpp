#include "sra/serialize.hpp"

#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

json to_json(const Rational& r) { return r.short_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

json to_json(const CycloNum& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return json{{"order", c.order()}, {"coeffs", coeffs}, {"str", c.str()}};
}

CycloNum cyclo_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& q : j.at("coeffs")) coeffs.push_back(rational_from_json(q));
  return CycloNum::from_coeffs(j.at("order").get<int>(), coeffs);
}

json to_json(const AlgebraParams& p) {
  json j{{"n", p.n}, {"mu0", to_json(p.mu0)}};
  if (p.is_even()) {
    j["mu1"] = to_json(p.mu1);
    j["nu0"] = to_json(p.nu0());
    j["nu1"] = to_json(p.nu1());
  } else {
    j["nu"] = to_json(p.nu());
  }
  return j;
}

AlgebraParams params_from_json(const json& j) {
  int n = j.at("n").get<int>();
  Rational mu1 = j.contains("mu1") ? rational_from_json(j["mu1"]) : Rational();
  return AlgebraParams::from_mu(n, rational_from_json(j.at("mu0")), mu1);
}

json to_json(const Monomial& m, int n) {
  return json{{"e", {m.e[0], m.e[1], m.e[2], m.e[3]}}, {"g", GroupElem::from_code(n, m.g).str()}};
}

Monomial monomial_from_json(const json& j, int n) {
  Monomial m;
  const auto& e = j.at("e");
  if (e.size() != 4) throw std::invalid_argument("monomial exponent list must have 4 entries");
  for (int i = 0; i < 4; ++i) m.e[i] = static_cast<std::uint8_t>(e[i].get<int>());
  std::string g = j.at("g").get<std::string>();
  if (g.size() < 2 || (g[0] != 'S' && g[0] != 'R')) throw std::invalid_argument("bad group element: " + g);
  long k = std::stol(g.substr(1));
  m.g = static_cast<std::uint16_t>((g[0] == 'S' ? GroupElem::S(n, k) : GroupElem::R(n, k)).code());
  return m;
}

json to_json(const AlgElem& x) {
  json out = json::array();
  int n = x.algebra()->n();
  for (const auto& t : x.terms()) {
    json j = to_json(t.m, n);
    j["c"] = to_json(t.c);
    out.push_back(std::move(j));
  }
  return out;
}

AlgElem alg_elem_from_json(const json& j, const AlgebraPtr& alg) {
  AlgElem x = alg->zero();
  for (const auto& t : j) x += alg->monomial(monomial_from_json(t, alg->n()), cyclo_from_json(t.at("c")));
  return x;
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json{{"exp", e}, {"c", to_json(c)}});
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term(t.at("exp").get<long>(), cyclo_from_json(t.at("c")));
  return p;
}

json to_json(const ExpPolyFn& f) {
  return json{{"M", f.M()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}, {"str", f.str()}};
}

ExpPolyFn exppoly_from_json(const json& j) {
  return ExpPolyFn(j.at("M").get<long>(), laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const QuasiPolyForm& q) {
  json out = json::array();
  for (std::size_t i = 0; i < q.freqs.size(); ++i)
    out.push_back(json{{"omega", "i*" + q.freqs[i].str()}, {"coeff", to_json(q.coeffs[i])}});
  return out;
}

QuasiPolyForm quasipoly_from_json(const json& j) {
  QuasiPolyForm q;
  for (const auto& t : j) {
    std::string w = t.at("omega").get<std::string>();
    if (w.rfind("i*", 0) != 0) throw std::invalid_argument("omega must look like i*p/q: " + w);
    q.freqs.push_back(Rational::parse(w.substr(2)));
    q.coeffs.push_back(cyclo_from_json(t.at("coeff")));
  }
  return q;
}

json to_json(const GramReport& g, const AlgebraPtr& alg, bool with_matrix) {
  int n = alg->n();
  json basis = json::array();
  for (const auto& m : g.basis) basis.push_back(to_json(m, n));
  json kernel = json::array();
  for (const auto& k : g.kernel) kernel.push_back(to_json(k));
  json j{{"degree", g.degree}, {"basis_size", g.basis.size()}, {"rank", g.rank},
         {"kernel_dim", g.kernel.size()}, {"basis", basis}, {"kernel", kernel}};
  if (with_matrix) {
    // Sparse: only nonzero entries.
    json entries = json::array();
    for (int i = 0; i < g.matrix.rows(); ++i)
      for (int c = 0; c < g.matrix.cols(); ++c)
        if (!g.matrix.at(i, c).is_zero()) entries.push_back(json{{"i", i}, {"j", c}, {"v", to_json(g.matrix.at(i, c))}});
    j["matrix"] = entries;
  }
  return j;
}

GramReport gram_from_json(const json& j, const AlgebraPtr& alg) {
  GramReport g;
  g.degree = j.at("degree").get<int>();
  g.rank = j.at("rank").get<int>();
  for (const auto& m : j.at("basis")) g.basis.push_back(monomial_from_json(m, alg->n()));
  for (const auto& k : j.at("kernel")) g.kernel.push_back(alg_elem_from_json(k, alg));
  int nb = static_cast<int>(g.basis.size());
  g.matrix = CycloMatrix(nb, nb);
  if (j.contains("matrix"))
    for (const auto& e : j["matrix"]) g.matrix.at(e.at("i").get<int>(), e.at("j").get<int>()) = cyclo_from_json(e.at("v"));
  return g;
}

json to_json(const SingularVerdict& v) {
  json basis = json::array();
  for (const auto& b : v.basis) {
    json row = json::array();
    for (const auto& c : b) row.push_back(to_json(c));
    basis.push_back(std::move(row));
  }
  return json{{"params", to_json(v.params)},     {"kappa", v.kappa},
              {"solution_dim", v.solution_dim}, {"family", family_name(v.matched_family)},
              {"basis", basis}};
}

SingularVerdict verdict_from_json(const json& j) {
  SingularVerdict v;
  v.params = params_from_json(j.at("params"));
  v.kappa = j.at("kappa").get<int>();
  v.solution_dim = j.at("solution_dim").get<int>();
  v.matched_family = family_from_name(j.at("family").get<std::string>());
  for (const auto& row : j.at("basis")) {
    std::vector<CycloNum> b;
    for (const auto& c : row) b.push_back(cyclo_from_json(c));
    v.basis.push_back(std::move(b));
  }
  return v;
}

namespace {

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rational_list_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& r : j) out.push_back(rational_from_json(r));
  return out;
}

}  // namespace

json to_json(const IdealCompareReport& r) {
  json freqs = json::array();
  for (const auto& f : r.frequencies)
    freqs.push_back(json{{"p", f.p},
                         {"trace", rational_list(f.trace_freqs)},
                         {"supertrace", rational_list(f.supertrace_freqs)},
                         {"equal", f.equal}});
  json kernels = json::array();
  for (const auto& k : r.kernels)
    kernels.push_back(json{{"degree", k.degree},
                           {"trace_kernel_dim", k.trace_kernel_dim},
                           {"supertrace_kernel_dim", k.supertrace_kernel_dim},
                           {"joint_rank", k.joint_rank},
                           {"spans_equal", k.spans_equal}});
  return json{{"n", r.n},
              {"z", r.z},
              {"tau", to_json(r.tau)},
              {"max_degree", r.max_degree},
              {"frequency_sets_equal", r.frequency_sets_equal},
              {"frequencies", freqs},
              {"kernels", kernels}};
}

IdealCompareReport ideal_report_from_json(const json& j) {
  IdealCompareReport r;
  r.n = j.at("n").get<int>();
  r.z = j.at("z").get<long>();
  r.tau = cyclo_from_json(j.at("tau"));
  r.max_degree = j.at("max_degree").get<int>();
  r.frequency_sets_equal = j.at("frequency_sets_equal").get<bool>();
  for (const auto& f : j.at("frequencies"))
    r.frequencies.push_back(FrequencyComparison{f.at("p").get<int>(), rational_list_from(f.at("trace")),
                                                rational_list_from(f.at("supertrace")), f.at("equal").get<bool>()});
  for (const auto& k : j.at("kernels"))
    r.kernels.push_back(KernelComparison{k.at("degree").get<int>(), k.at("trace_kernel_dim").get<int>(),
                                         k.at("supertrace_kernel_dim").get<int>(), k.at("joint_rank").get<int>(),
                                         k.at("spans_equal").get<bool>()});
  return r;
}

json to_json(const NullVectorCandidate& c) {
  return json{{"p", c.p}, {"freqs", rational_list(c.freqs)}, {"element", to_json(c.element)}};
}

NullVectorCandidate null_candidate_from_json(const json& j, const AlgebraPtr& alg) {
  return NullVectorCandidate{j.at("p").get<int>(), rational_list_from(j.at("freqs")),
                             alg_elem_from_json(j.at("element"), alg)};
}

}  // namespace sra
