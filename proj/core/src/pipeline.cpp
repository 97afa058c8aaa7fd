#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

namespace {

// Used when the d1 = m branch has no non-empty regular factor to work with,
// or its connectivity repair gets stuck: search the realizations directly.
RealizationResult oracle_fallback(const DegreeSequence& pi, int k, const ConstructOptions& options) {
  const int n = static_cast<int>(pi.size());
  const int d1 = pi.max_degree();
  const bool want_connect = options.connect && pi.degree_sum() >= 2L * (n - 1);
  OracleBudget budget;
  budget.max_n = options.oracle_max_n;
  std::optional<RealizationResult> out;
  enumerate_realizations(
      pi,
      [&](const Graph& g) {
        if (want_connect && edge_connectivity(g).lambda < connect_target(g.min_degree()).target) return true;
        std::optional<Graph> factor;
        if (k > 0 && !(factor = find_k_factor(g, k, budget))) return true;
        ExactColoringOptions o;
        o.max_n = options.exact_coloring_max_n;
        if (auto c = equitable_exact(g, d1, o)) {
          RealizationResult r;
          r.graph = g;
          r.coloring = *c;
          if (factor) {
            const Graph fs[1] = {*factor};
            r.factors = FactorDecomposition(g, fs);
          } else {
            r.factors = FactorDecomposition::plain(g);
          }
          r.provenance = "oracle search over all realizations";
          out = std::move(r);
          return false;
        }
        return true;
      },
      budget);
  if (!out)
    throw Error(ErrorKind::TheoremViolation,
                "no realization of " + to_string(pi) + " is equitably " + std::to_string(d1) + "-colourable" +
                    (k > 0 ? " with a " + std::to_string(k) + "-factor" : std::string()) +
                    (want_connect ? " and meets the connectivity target" : std::string()));
  Requirements req;
  req.degrees = pi.vector();
  if (k > 0) req.factor_degrees = {k};
  req.colors = d1;
  req.connectivity = want_connect;
  certify(*out, req);
  return std::move(*out);
}

}  // namespace

RealizationResult thm4_pipeline(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options) {
  const int n = static_cast<int>(pi.size());
  if (n == 0 || !pi.is_positive()) throw Error(ErrorKind::InvalidInput, "sequence must be positive");
  if (spec.k < 0) throw Error(ErrorKind::InvalidInput, "k must be non-negative");
  const int d1 = pi.max_degree(), dn = pi.min_degree();
  if (dn == n - 1) throw Error(ErrorKind::ForbiddenSequence, "d_n = n - 1");
  if (d1 == 1) throw Error(ErrorKind::ForbiddenSequence, "d_1 = 1");
  if (d1 == 2 && dn == 2 && n % 2 == 1) throw Error(ErrorKind::ForbiddenSequence, "d_1 = d_n = 2 with n odd");
  if (!is_graphic(pi)) throw Error(ErrorKind::NotGraphic, "sequence " + to_string(pi) + " is not graphic");
  if (spec.k > dn) throw Error(ErrorKind::InvalidInput, "k exceeds d_n");
  if (!spec.parity_ok(n)) throw Error(ErrorKind::ParityError, "k*n is odd");

  const int m = strong_index(pi);
  if (m < d1) {
    const int bound = gamma_bound(pi);
    if (bound > d1)
      throw Error(ErrorKind::TheoremViolation, "gamma bound " + std::to_string(bound) + " exceeds d_1 with m < d_1");
    std::vector<FactorSpec> specs;
    if (spec.k > 0) specs.push_back(spec);
    auto r = thm2_construct(pi, specs, d1, options);
    r.provenance = "m < d_1: " + r.provenance;
    return r;
  }

  int k = spec.k;
  if (k == 0) k = n % 2 == 0 ? 1 : 2;
  if (k > dn) return oracle_fallback(pi, spec.k, options);
  if (!kfactor_condition(pi, {k}).holds)
    throw Error(ErrorKind::TheoremViolation, "k-factor criterion fails although d_1 = m(pi)");
  const auto base = thm3_construct(pi, {k}, options);
  try {
    auto r = thm1_construct(*base.factors, options);
    r.provenance = "d_1 = m: " + base.provenance + "; then " + r.provenance;
    return r;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PackingFailed && e.kind() != ErrorKind::RepairStuck) throw;
    if (n > options.oracle_max_n) throw;
  }
  return oracle_fallback(pi, spec.k, options);
}

}  // namespace degseq
