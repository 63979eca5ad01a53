#include "treespect/verify.hpp"

#include <algorithm>
#include <set>

#include "treespect/enumeration.hpp"
#include "treespect/oracles.hpp"

namespace treespect {

namespace {

constexpr int kMaxFailureSamples = 5;
constexpr int kClassCOracleLimit = 18;  // 2^n sign assignments

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void instance() { ++result_.instances; }

  void check(bool ok, const Forest& t, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (static_cast<int>(result_.failure_samples.size()) < kMaxFailureSamples) {
        std::string edges = t.serialize();
        std::replace(edges.begin(), edges.end(), '\n', ';');
        result_.failure_samples.push_back(what + " on [" + edges + "]");
      }
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

bool sign_entries_only(const SignVector& x) {
  for (int e : x) {
    if (e < -1 || e > 1) return false;
  }
  return true;
}

std::vector<RationalVector> to_rational_set(const std::vector<SignVector>& vs) {
  std::vector<RationalVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

bool zero_pattern_matches_components(const RationalVector& tree_vec,
                                     const RationalVector& skel_vec,
                                     const SkeletonForest& skel) {
  for (int v = 0; v < skel.forest.order(); ++v) {
    if (skel.kind[v] == SkeletonVertexKind::Boundary) {
      if (skel_vec[v] != 0) return false;
      continue;
    }
    bool comp_nonzero = tree_vec[skel.members[v].front()] != 0;
    if (comp_nonzero != (skel_vec[v] != 0)) return false;
  }
  return true;
}

struct Harness {
  Suite matching_nullity{"matching_nullity"};
  Suite kernel{"kernel_basis"};
  Suite nylen_like{"nullity_support_formula"};
  Suite symmetry{"bipartite_symmetry"};
  Suite rank_nullity{"rank_nullity"};
  Suite fiedler{"fiedler_multiplicity_guard"};
  Suite skeleton_mult{"skeleton_multiplicity"};
  Suite skeleton_inv{"skeleton_invariants"};
  Suite transfer{"transfer_roundtrip"};
  Suite class_c{"class_c_oracle"};
  Suite simply{"simply_structured"};
  Suite straighten{"straighten_basis"};

  void run_tree(const Forest& t);
  std::vector<SuiteResult> take();
};

void Harness::run_tree(const Forest& t) {
  const int n = t.order();
  TreePatternMatrix a = TreePatternMatrix::adjacency(t);
  MatchingClassification cls = classify_vertices(t);
  RationalBasis null_basis = eigenspace_basis(a, Rational(0));

  // Corollary: nullity equals the number of vertices missed by a maximum
  // matching.
  matching_nullity.instance();
  matching_nullity.check(null_basis.dimension() == n - 2 * cls.matching.size(), t,
                         "nullity != n - 2*matching");

  // Kernel basis: sign entries, exact null vectors, full rank, always-zero
  // set N, straightness with the missed vertices as witnesses, K independent.
  kernel.instance();
  std::vector<SignVector> kb = kernel_basis(t);
  bool kb_ok = static_cast<int>(kb.size()) == null_basis.dimension();
  for (const auto& x : kb) {
    kb_ok = kb_ok && sign_entries_only(x) && verify_eigenvector(a, Rational(0), to_rational(x));
  }
  kernel.check(kb_ok, t, "kernel basis vectors invalid");
  auto kb_rat = to_rational_set(kb);
  kernel.check(linearly_independent(kb_rat), t, "kernel basis dependent");
  kernel.check(always_zero_set(n, kb_rat) == cls.never_missed, t,
               "always-zero set differs from N");
  std::vector<std::vector<int>> km_witnesses;
  for (int v : cls.missed) km_witnesses.push_back({v});
  kernel.check(check_straight(kb_rat, km_witnesses), t, "kernel basis not straight");
  bool k_independent = true;
  for (std::size_t i = 0; i < cls.may_be_missed.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.may_be_missed.size(); ++j) {
      if (t.has_edge(cls.may_be_missed[i], cls.may_be_missed[j])) k_independent = false;
    }
  }
  kernel.check(k_independent, t, "K not independent");

  // Nullity from the support of the null space: components of R minus the
  // vertices adjacent to R, with R read from the matching classification.
  nylen_like.instance();
  Forest r_graph = t.without_vertices(cls.never_missed);
  int outside = 0;
  {
    std::vector<bool> in_r(n, false);
    for (int v : cls.may_be_missed) in_r[v] = true;
    for (int v : cls.never_missed) {
      for (int u : t.neighbors(v)) {
        if (in_r[u]) {
          ++outside;
          break;
        }
      }
    }
  }
  nylen_like.check(null_basis.dimension() == r_graph.component_count() - outside, t,
                   "support formula mismatch");

  std::map<long, int> spectrum = integer_spectrum(t);
  auto parts = bipartition(t);

  symmetry.instance();
  for (const auto& [k, mult] : spectrum) {
    auto it = spectrum.find(-k);
    symmetry.check(it != spectrum.end() && it->second == mult, t,
                   "multiplicity not symmetric");
    // Flip one bipartition class of a basis vector and re-verify for -k.
    RationalBasis basis = eigenspace_basis(a, Rational(k));
    if (!basis.empty()) {
      RationalVector flipped = basis.vectors.front();
      for (int v : parts.second) flipped[v] = -flipped[v];
      symmetry.check(verify_eigenvector(a, Rational(-k), flipped), t,
                     "sign flip is not a (-k)-eigenvector");
    }
  }

  rank_nullity.instance();
  for (const auto& [k, mult] : spectrum) {
    TreePatternMatrix shifted = a.shifted(Rational(k));
    rank_nullity.check(mult + rank(shifted.rows(), n) == n, t, "rank-nullity violated");
  }

  for (const auto& [k, mult] : spectrum) {
    RationalBasis basis = eigenspace_basis(a, Rational(k));
    fiedler.instance();
    for (const auto& vec : basis.vectors) {
      bool zero_free = true;
      for (const auto& e : vec) {
        if (e == 0) zero_free = false;
      }
      if (zero_free) {
        fiedler.check(basis.dimension() == 1, t, "zero-free vector in a big eigenspace");
      }
    }

    SupportReport report = support_report(a, Rational(k));
    SkeletonForest skel = skeleton(a, Rational(k));
    skeleton_mult.instance();
    skeleton_mult.check(multiplicity_via_matching(a, Rational(k)) == mult, t,
                        "matching multiplicity != eigenspace dimension");
    skeleton_mult.check(static_cast<int>(report.eigen_components.size()) >= mult, t,
                        "fewer eigen-components than multiplicity");

    skeleton_inv.instance();
    skeleton_inv.check(check_skeleton_invariants(skel).empty(), t, "skeleton invariants");
    skeleton_inv.check(skeleton_fixed_point_holds(skel), t, "skeleton fixed point");

    // Straightened bases, projection, lifting, x-skeletons.
    RationalBasis straight = straighten_basis(t, basis);
    straighten.instance();
    bool straight_ok = straight.straight_order.has_value() &&
                       linearly_independent(straight.vectors) &&
                       straight.dimension() == mult;
    std::vector<std::vector<int>> witnesses;
    if (straight.straight_order) {
      for (const auto& label : *straight.straight_order) {
        for (const auto& comp : report.eigen_components) {
          if (t.label(comp.front()) == label) witnesses.push_back(comp);
        }
      }
      straight_ok = straight_ok && witnesses.size() == straight.vectors.size() &&
                    check_straight(straight.vectors, witnesses);
    }
    for (const auto& vec : straight.vectors) {
      straight_ok = straight_ok && verify_eigenvector(a, Rational(k), vec);
    }
    straighten.check(straight_ok, t, "straightened basis invalid");

    transfer.instance();
    TreePatternMatrix skel_adj = TreePatternMatrix::adjacency(skel.forest);
    std::vector<RationalVector> projections;
    for (const auto& vec : straight.vectors) {
      RationalVector s = project_eigenvector(a, report, skel, vec);
      transfer.check(verify_eigenvector(skel_adj, Rational(0), s), t,
                     "projection not in skeleton null space");
      transfer.check(zero_pattern_matches_components(vec, s, skel), t,
                     "projection pattern mismatch");
      RationalVector lifted = lift_null_vector(a, report, skel, s);
      transfer.check(verify_eigenvector(a, Rational(k), lifted), t,
                     "lift of projection fails verification");
      transfer.check(zero_pattern_matches_components(lifted, s, skel), t,
                     "lift pattern mismatch");
      projections.push_back(std::move(s));
    }
    transfer.check(linearly_independent(projections), t,
                   "projections of a straight basis dependent");
    for (const SignVector& s : kernel_basis(skel.forest)) {
      RationalVector lifted = lift_null_vector(a, report, skel, to_rational(s));
      transfer.check(verify_eigenvector(a, Rational(k), lifted), t,
                     "lifted kernel vector fails verification");
      RationalVector back = project_eigenvector(a, report, skel, lifted);
      transfer.check(zero_pattern_matches_components(lifted, back, skel), t,
                     "project(lift) pattern mismatch");
    }

    // Per-eigenvector skeletons embed into the merged skeleton.
    for (const auto& vec : straight.vectors) {
      SkeletonForest xs = x_skeleton(a, vec, Rational(k));
      std::set<std::vector<int>> merged_components(report.eigen_components.begin(),
                                                   report.eigen_components.end());
      bool contained = true;
      for (int v = 0; v < xs.forest.order(); ++v) {
        if (xs.kind[v] == SkeletonVertexKind::Contracted &&
            !merged_components.count(xs.members[v])) {
          contained = false;
        }
      }
      transfer.check(contained, t, "x-skeleton component not a merged component");
    }
  }

  // Class-C reduction vs the exhaustive {1,-1} oracle.
  if (n <= kClassCOracleLimit) {
    class_c.instance();
    ClassCResult cc = is_class_c(t);
    auto oracle = exhaustive_pm1_eigenvector(t);
    class_c.check(cc.member == oracle.has_value(), t, "reduction disagrees with oracle");
    if (cc.member) {
      class_c.check(n % 4 == 2, t, "member order not 2 mod 4");
      class_c.check(verify_eigenvector(a, Rational(1), to_rational(*cc.certificate)), t,
                    "certificate fails verification");
      class_c.check(eigenspace_basis(a, Rational(1)).dimension() == 1, t,
                    "member eigenvalue 1 not simple");
    }
  }

  // Simply structured bases for eigenvalue one (and the flip for minus one).
  if (spectrum.count(1)) {
    simply.instance();
    SupportReport report = support_report(a, Rational(1));
    bool criterion = true;
    for (const auto& comp : report.eigen_components) {
      Forest sub = t.induced(comp);
      if (sub.order() > kClassCOracleLimit || !exhaustive_pm1_eigenvector(sub).has_value()) {
        criterion = false;
      }
    }
    bool answer = has_simply_structured_basis(t, Rational(1));
    simply.check(answer == criterion, t, "membership differs from component criterion");
    if (answer) {
      const int mult = spectrum.at(1);
      for (const Rational& lambda : {Rational(1), Rational(-1)}) {
        std::vector<SignVector> basis = simply_structured_basis(t, lambda);
        bool ok = static_cast<int>(basis.size()) == mult;
        for (const auto& x : basis) {
          ok = ok && sign_entries_only(x) && verify_eigenvector(a, lambda, to_rational(x));
        }
        ok = ok && linearly_independent(to_rational_set(basis));
        simply.check(ok, t, "simply structured basis invalid");
      }
    }
  }
}

std::vector<SuiteResult> Harness::take() {
  std::vector<SuiteResult> out;
  out.push_back(matching_nullity.take());
  out.push_back(kernel.take());
  out.push_back(nylen_like.take());
  out.push_back(symmetry.take());
  out.push_back(rank_nullity.take());
  out.push_back(fiedler.take());
  out.push_back(skeleton_mult.take());
  out.push_back(skeleton_inv.take());
  out.push_back(transfer.take());
  out.push_back(class_c.take());
  out.push_back(simply.take());
  out.push_back(straighten.take());
  return out;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  Harness harness;
  for (int n = 1; n <= options.exhaustive_n; ++n) {
    for_each_labeled_tree(n, [&](const Forest& t) { harness.run_tree(t); });
  }
  if (options.samples > 0) {
    std::mt19937_64 rng(options.seed);
    for (int n = options.exhaustive_n + 1; n <= options.sample_max_n; ++n) {
      for (int i = 0; i < options.samples; ++i) {
        harness.run_tree(random_tree(n, rng));
      }
    }
  }
  VerifyReport report;
  report.options = options;
  report.suites = harness.take();
  return report;
}

}  // namespace treespect
