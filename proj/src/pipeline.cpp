#include "sdres/pipeline.hpp"

#include <chrono>

#include "sdres/error.hpp"
#include "sdres/resultant.hpp"
#include "sdres/rng.hpp"

namespace sdres {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Check: return "check";
    case Stage::Super: return "super";
    case Stage::Bounds: return "bounds";
    case Stage::Resultant: return "resultant";
  }
  return "?";
}

bool PipelineReport::all_verified() const {
  for (const auto& [name, ok] : verification)
    if (!ok) return false;
  return true;
}

namespace {

template <typename F>
auto timed(PipelineReport& r, const std::string& stage, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    r.timing[stage] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto v = f();
      finish();
      return v;
    }
  } catch (const Error& e) {
    throw e.with_stage(stage);
  }
}

bool super_essential_verified(const std::vector<DiffPolynomial>& t, int n, const RankOptions& ro) {
  const SupportMatrix m = symbolic_support_matrix(t, n);
  const int size = static_cast<int>(t.size());
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < t.size(); ++i) all.push_back(i);
  if (symbolic_rank(m, ro).rank != size - 1) return false;
  for (std::size_t skip = 0; skip < t.size(); ++skip) {
    std::vector<std::size_t> rest;
    for (std::size_t i : all)
      if (i != skip) rest.push_back(i);
    if (symbolic_rank(m.select_rows(rest), ro).rank != size - 1) return false;
  }
  return true;
}

std::vector<AlgPolynomial> z_as_algebraic(const ZSystem& z) {
  std::vector<AlgPolynomial> out;
  for (const auto& p : z.polys) {
    AlgPolynomial a{p.poly, p.level, {}};
    for (const auto& t : p.terms) {
      std::map<VarRef, int> e;
      for (std::size_t j = 0; j < t.exps.size(); ++j)
        if (t.exps[j] != 0) e.emplace(VarRef{static_cast<int>(j) + 1, 0}, static_cast<int>(t.exps[j]));
      a.terms.push_back({t.coeff, LaurentMonomial(std::move(e))});
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool lattice_round_trip(const std::vector<AlgPolynomial>& sub, const StrongEssential& se) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t t = 0; t < sub[i].terms.size(); ++t)
      if (se.map.to_original(se.system.polys[i].terms[t].exps) !=
          sub[i].relative_exponents(t, se.map.vars))
        return false;
  return true;
}

}  // namespace

PipelineReport run_pipeline(const SystemSource& src, const PipelineOptions& opts) {
  PipelineReport r;
  r.seed = opts.seed;
  r.n = src.n;
  const RankOptions ro{derive_seed(opts.seed, 1), 3, opts.paranoid};

  r.stage = Stage::Check;
  timed(r, "check", [&] {
    if (static_cast<int>(src.polys.size()) != src.n + 1)
      throw Error(ErrorKind::DimensionMismatch, "expected n+1 polynomials");
    r.rank = symbolic_rank(symbolic_support_matrix(src.polys, src.n), ro).rank;
    r.essential = r.rank == src.n;
  });
  if (!r.essential || opts.stop_after == Stage::Check) return r;

  r.stage = Stage::Super;
  const std::vector<DiffPolynomial> system_t = timed(r, "super", [&] {
    std::vector<DiffPolynomial> t;
    for (int pos : find_super_essential(src.polys, src.n, ro)) {
      t.push_back(src.polys[static_cast<std::size_t>(pos)]);
      r.super_essential.push_back(src.polys[static_cast<std::size_t>(pos)].index());
    }
    r.verification["super_essential"] = super_essential_verified(t, src.n, ro);
    return t;
  });
  if (opts.stop_after == Stage::Super) return r;

  r.stage = Stage::Bounds;
  const Specialization spec = timed(r, "bounds", [&] {
    SpecializeOptions so;
    so.rank = ro;
    so.kept_vars = opts.kept_vars;
    Specialization s = select_and_specialize(system_t, src.n, so);
    r.kept_vars = s.kept_vars;
    r.dropped_vars = s.dropped_vars;
    r.order_matrix = order_matrix(s.polys, s.kept_vars);
    const JacobiBounds b = modified_jacobi_bounds(s);
    r.jacobi = b.jacobi;
    r.column_gcd_degrees = b.column_gcd_degrees;
    r.modified_jacobi = b.modified;
    r.verification["specialized_rank"] =
        symbolic_rank(symbolic_support_matrix(s.polys, s.kept_vars), ro).rank ==
        static_cast<int>(s.kept_vars.size());
    return s;
  });
  if (opts.stop_after == Stage::Bounds) return r;

  r.stage = Stage::Resultant;
  timed(r, "resultant", [&] {
    const std::vector<AlgPolynomial> alg = prolong(spec.polys, r.modified_jacobi);
    r.prolonged = static_cast<int>(alg.size());

    // A rank underestimate shows up as lost co-rank; redraw the specialization.
    RankOptions ao{derive_seed(opts.seed, 2), 3, false};
    std::optional<POffset> po;
    for (int attempt = 0; !po; ++attempt) {
      try {
        po = p_offset_reduce(alg, ao);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CorankLost || attempt >= opts.max_retries) throw;
        ao.seed = derive_seed(ao.seed, 0x200 + static_cast<std::uint64_t>(attempt));
      }
    }
    r.p_offset = po->p;

    const std::vector<AlgPolynomial> ess = find_minimal_essential(po->polys, ao);
    for (const auto& a : ess) r.alg_essential.emplace_back(a.poly, a.level);
    r.verification["alg_essential"] = is_alg_essential(ess, ao);

    const VariableReduction vr = variable_essential_reduce(ess, ao);
    r.z_kept = vr.kept;
    r.z_dropped = vr.dropped;
    r.verification["variable_reduction"] =
        is_alg_essential(vr.polys, ao) && alg_rank(vr.polys, ao) == static_cast<int>(vr.kept.size());

    const StrongEssential se = strong_essential_transform(vr.polys);
    r.lattice = se.map;
    r.z_system = se.system.to_string();
    r.verification["lattice_round_trip"] = lattice_round_trip(vr.polys, se);
    r.verification["z_essential"] = is_alg_essential(z_as_algebraic(se.system), ao);

    ResultantOptions reso;
    reso.seed = derive_seed(opts.seed, 3);
    reso.max_retries = opts.max_retries;
    const ResultantComputation rc = sparse_resultant(se.system, reso);
    r.m1_dim = rc.m1_dim;
    r.m2_dim = rc.m2_dim;
    r.lifting_attempts = rc.attempts;
    r.resultant = rc.resultant.poly;
    r.order_profile = rc.resultant.order_profile;
    r.verification["quotient_degrees"] = rc.degree_certified;
    r.verification["homogeneous"] = rc.resultant.homogeneous;

    bool bounded = true;
    for (std::size_t i = 0; i < spec.polys.size(); ++i) {
      auto it = r.order_profile.find(spec.polys[i].index());
      if (it != r.order_profile.end() && !(it->second <= r.modified_jacobi[i])) bounded = false;
    }
    r.verification["order_bound"] = bounded;
  });
  return r;
}

}  // namespace sdres
