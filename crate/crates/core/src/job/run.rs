//! Executes a job as a dependency-ordered pipeline of report sections.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::cartan::{algebraic_closure, cartan_subspace_with_cap, is_cartan_subspace, maximal_rank_conditions, CartanCertificate, CartanSubspace};
use crate::exactnum::{CycloScalar, ExactMatrix};
use crate::galois::{gamma_action_on_weyl, h1, real_orbit_count, GammaGroup, RealForm, RealStructure, REAL_ORBIT_ASSUMPTION};
use crate::grading::{grade_from_kac, GradedAlgebra};
use crate::liealg::LieAlgebra;
use crate::weights::{hyperplane_arrangement, weight_system, WeightSystem};
use crate::weyl::{
    circ_equals_reg, gamma_p, hypothesis, little_weyl, little_weyl_details, same_gc_family, same_w_family, strata,
    verify_central, verify_conjugation_equivalence, weyl_of_centralizer, MatrixGroup, StrataDecomposition,
};

use super::report::{Report, Section, Status};
use super::spec::{Analysis, JobSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Run independent late sections on separate threads.
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { parallel: true }
    }
}

type Outcome<T> = Result<(Value, T), String>;

fn scalars(v: &[CycloScalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn matrix(m: &ExactMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| scalars(r)).collect())
}

fn timed<T>(f: impl FnOnce() -> Outcome<T>) -> (Outcome<T>, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn algebra_section(job: &JobSpec) -> Outcome<LieAlgebra> {
    let alg = job.kac.cartan_type.algebra().map_err(|e| e.to_string())?;
    alg.check_antisymmetry().map_err(|e| e.to_string())?;
    alg.check_jacobi().map_err(|e| e.to_string())?;
    let roots = alg.chevalley().map_or(0, |c| c.index.roots.len());
    let data = json!({
        "type": job.kac.cartan_type.to_string(),
        "rank": job.kac.cartan_type.rank,
        "dimension": alg.dim(),
        "roots": roots,
        "antisymmetry": "verified on all basis pairs",
        "jacobi": "verified on all basis triples",
    });
    Ok((data, alg))
}

fn grade_section(job: &JobSpec) -> Outcome<GradedAlgebra> {
    let g = grade_from_kac(&job.kac).map_err(|e| e.to_string())?;
    g.check_closure().map_err(|e| e.to_string())?;
    let data = json!({
        "kac": job.kac.coords,
        "m": g.m(),
        "field": format!("Q(w_{})", g.field().order()),
        "dims": g.dims(),
        "closure": "[g_i, g_j] in g_(i+j) verified",
    });
    Ok((data, g))
}

fn certificate_text(c: &CartanCertificate) -> String {
    match c {
        CartanCertificate::Verified { engel_length } => format!("centralizer criterion, Engel chain of length {engel_length}"),
        CartanCertificate::VerifiedByGrid { points } => format!("centralizer criterion, nilpotency on a grid of {points} points"),
        CartanCertificate::CenterMismatch { center_dim, h_dim } => format!("fails: center of degree one has dimension {center_dim}, h has {h_dim}"),
        CartanCertificate::NonNilpotent(_) => "fails: non-nilpotent element in the derived part".into(),
        CartanCertificate::EngelInconclusive => "inconclusive".into(),
    }
}

fn cartan_section(job: &JobSpec, g: &GradedAlgebra) -> Outcome<CartanSubspace> {
    let h = cartan_subspace_with_cap(g, job.seed, job.caps.retries).map_err(|e| e.to_string())?;
    let check = is_cartan_subspace(g, &h.basis).map_err(|e| e.to_string())?;
    let closure = algebraic_closure(g, &h.basis).map_err(|e| e.to_string())?;
    let mr = maximal_rank_conditions(g, &h.basis).map_err(|e| e.to_string())?;
    let basis: Vec<Value> = h.basis.iter().map(|b| Value::String(g.algebra().format_element(b))).collect();
    let data = json!({
        "rank": h.rank(),
        "basis": basis,
        "certificate": certificate_text(&check.certificate),
        "closure": {
            "dimension": closure.space.dim(),
            "support": closure.support,
            "coprime_to_m": closure.coprime_support,
        },
        "maximal_rank": {
            "centralizer_is_cartan": mr.centralizer_is_cartan,
            "closure_is_cartan": mr.closure_is_cartan,
        },
        "hypothesis": hypothesis(g, &h).to_string(),
    });
    Ok((data, h))
}

fn weights_section(g: &GradedAlgebra, h: &CartanSubspace) -> Outcome<WeightSystem> {
    let sigma = weight_system(g.algebra(), &h.basis).map_err(|e| e.to_string())?;
    let list: Vec<Value> =
        sigma.weights.iter().map(|w| json!({"values": scalars(&w.functional), "multiplicity": w.multiplicity})).collect();
    let data = json!({
        "count": sigma.weights.len(),
        "nonzero": sigma.nonzero().count(),
        "zero_multiplicity": sigma.zero_weight().multiplicity,
        "hyperplanes": hyperplane_arrangement(&sigma).len(),
        "weights": list,
    });
    Ok((data, sigma))
}

fn weyl_section(job: &JobSpec, g: &GradedAlgebra, h: &CartanSubspace) -> Outcome<MatrixGroup> {
    let cap = job.caps.group_order;
    if h.rank() == 0 {
        let w = little_weyl(g, h, cap).map_err(|e| e.to_string())?;
        let data = json!({"order": 1, "construction": "rank zero", "generators": []});
        return Ok((data, w));
    }
    let d = little_weyl_details(g, h, cap).map_err(|e| e.to_string())?;
    let gens: Vec<Value> = d.group.generators().iter().map(matrix).collect();
    let data = json!({
        "order": d.group.order(),
        "construction": "maximal rank",
        "weyl_group_of_centralizer": d.big_weyl_order,
        "roots_of_centralizer": d.root_count,
        "reflections": d.reflections.reflections,
        "reflection_hyperplanes": d.reflections.hyperplanes,
        "generators": gens,
    });
    Ok((data, d.group))
}

fn strata_section(w: &MatrixGroup, sigma: &WeightSystem) -> Outcome<StrataDecomposition> {
    let dec = strata(w, sigma).map_err(|e| e.to_string())?;
    let check = verify_conjugation_equivalence(w, &dec).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (i, s) in dec.strata.iter().enumerate() {
        let circ = circ_equals_reg(w, sigma, s);
        if !circ.equal {
            failures.push(format!("stratum {i}: stabilizer loci and weight kernels differ"));
        }
        let gp = gamma_p(w, s).map_err(|e| e.to_string())?;
        rows.push(json!({
            "index": i,
            "fixed_dimension": s.fixed_space.dim(),
            "stabilizer_order": s.stabilizer.order(),
            "representative": scalars(&s.representative),
            "conjugate_flats": s.conjugates.len(),
            "sigma_regular": s.regularity.sigma_regular,
            "stabilizer_exact": s.regularity.stabilizer_exact,
            "circ_equals_reg": circ.equal,
            "gamma_order": gp.group.order(),
            "gamma_free_at_representative": gp.free_at_representative,
        }));
    }
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    let data = json!({
        "count": dec.strata.len(),
        "flats": dec.flats.len(),
        "conjugation_pairs_checked": check.pairs,
        "strata": rows,
    });
    Ok((data, dec))
}

fn families_section(g: &GradedAlgebra, h: &CartanSubspace, w: &MatrixGroup, dec: &StrataDecomposition) -> Outcome<()> {
    let hyp = hypothesis(g, h);
    let n = dec.strata.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (p, q) = (&dec.strata[i].representative, &dec.strata[j].representative);
            pairs.push(json!({
                "strata": [i, j],
                "same_w_family": same_w_family(w, p, q),
                "same_gc_family": same_gc_family(g, h, w, hyp, p, q).to_string(),
            }));
        }
    }
    Ok((json!({"hypothesis": hyp.to_string(), "pairs": pairs}), ()))
}

fn central_section(job: &JobSpec, g: &GradedAlgebra, h: &CartanSubspace, w: &MatrixGroup, dec: &StrataDecomposition) -> Outcome<()> {
    let report = verify_central(g, h, w, dec, job.seed).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for (v, s) in report.strata.iter().zip(&dec.strata) {
        let cw = weyl_of_centralizer(g, h, w, &s.representative, job.caps.group_order).map_err(|e| e.to_string())?;
        rows.push(json!({
            "index": v.stratum,
            "pairs": v.pairs,
            "centralizer_dimension": v.centralizer_dim,
            "weyl_group_of_centralizer": cw.from_centralizer.order(),
            "stabilizer_order": cw.stabilizer.order(),
        }));
    }
    Ok((json!({"hypothesis": report.hypothesis.to_string(), "result": "pass", "strata": rows}), ()))
}

fn h1_section(job: &JobSpec, g: &GradedAlgebra, h: &CartanSubspace, w: &MatrixGroup) -> Outcome<GammaGroup> {
    let r = match job.real_form {
        RealForm::Split => RealStructure::split(g),
        RealForm::Compact => RealStructure::compact(g),
    }
    .map_err(|e| e.to_string())?;
    let gw = gamma_action_on_weyl(w, &r, h).map_err(|e| e.to_string())?;
    let set = h1(&gw, job.caps.h1).map_err(|e| e.to_string())?;
    let data = json!({
        "real_form": job.real_form.to_string(),
        "group_order": gw.order(),
        "twist": if gw.is_twist_trivial() { "trivial" } else { "nontrivial" },
        "cocycles": set.cocycles.len(),
        "classes": set.len(),
        "representatives": set.representatives,
        "class_sizes": set.class_sizes,
    });
    Ok((data, gw))
}

fn real_orbits_section(job: &JobSpec, w: &MatrixGroup, gw: &GammaGroup, dec: &StrataDecomposition) -> Outcome<()> {
    let mut rows = Vec::new();
    for (i, s) in dec.strata.iter().enumerate() {
        let c = real_orbit_count(gw, &w.stabilizer_indices(&s.representative), job.caps.h1).map_err(|e| e.to_string())?;
        rows.push(json!({"index": i, "stabilizer_order": s.stabilizer.order(), "count": c.count}));
    }
    Ok((json!({"assumption": REAL_ORBIT_ASSUMPTION, "strata": rows}), ()))
}

struct Pipeline<'j> {
    job: &'j JobSpec,
    report: Report,
}

impl Pipeline<'_> {
    fn record<T>(&mut self, name: &str, outcome: (Outcome<T>, Duration)) -> Option<T> {
        let (result, elapsed) = outcome;
        self.report.timing.push((name.to_string(), elapsed));
        match result {
            Ok((data, value)) => {
                self.report.sections.push(Section { name: name.to_string(), status: Status::Ok, data });
                Some(value)
            }
            Err(message) => {
                self.report.sections.push(Section { name: name.to_string(), status: Status::Failed(message), data: Value::Null });
                None
            }
        }
    }

    fn skip(&mut self, a: Analysis) {
        let missing: Vec<&str> = a.dependencies().iter().map(|d| d.name()).collect();
        let reason = if missing.is_empty() { "requires algebra".to_string() } else { format!("requires {}", missing.join(", ")) };
        self.report.sections.push(Section { name: a.name().to_string(), status: Status::Skipped(reason), data: Value::Null });
    }

    fn wants(&self, a: Analysis) -> bool {
        self.job.analyses.contains(&a)
    }

    /// Runs `a` when requested and its inputs are present; records a skip when inputs are missing.
    fn step<T, I>(&mut self, a: Analysis, inputs: Option<I>, f: impl FnOnce(I) -> Outcome<T>) -> Option<T> {
        if !self.wants(a) {
            return None;
        }
        match inputs {
            Some(i) => self.record(a.name(), timed(|| f(i))),
            None => {
                self.skip(a);
                None
            }
        }
    }
}

/// Runs the job. Sections appear in pipeline order; a failed section makes its dependents
/// skipped while independent sections still run.
pub fn run(job: &JobSpec, opts: RunOptions) -> Report {
    let mut p = Pipeline { job, report: Report::new(job) };
    let algebra = p.record("algebra", timed(|| algebra_section(job)));
    let g = p.step(Analysis::Grade, algebra.map(|_| ()), |_| grade_section(job));
    let h = p.step(Analysis::Cartan, g.as_ref(), |g| cartan_section(job, g));
    let sigma = p.step(Analysis::Weights, g.as_ref().zip(h.as_ref()), |(g, h)| weights_section(g, h));
    let w = p.step(Analysis::Weyl, g.as_ref().zip(h.as_ref()).filter(|_| sigma.is_some()), |(g, h)| weyl_section(job, g, h));
    let dec = p.step(Analysis::Strata, w.as_ref().zip(sigma.as_ref()), |(w, s)| strata_section(w, s));

    let late = g.as_ref().zip(h.as_ref()).zip(w.as_ref());
    let with_strata = late.zip(dec.as_ref());
    let families_in = with_strata.filter(|_| p.wants(Analysis::Families));
    let central_in = with_strata.filter(|_| p.wants(Analysis::Central));
    let h1_in = late.filter(|_| p.wants(Analysis::H1));
    let run_families = || families_in.map(|(((g, h), w), d)| timed(|| families_section(g, h, w, d)));
    let run_central = || central_in.map(|(((g, h), w), d)| timed(|| central_section(job, g, h, w, d)));
    let run_h1 = || h1_in.map(|((g, h), w)| timed(|| h1_section(job, g, h, w)));
    let (families, central, h1_out) = if opts.parallel {
        std::thread::scope(|s| {
            let f = s.spawn(run_families);
            let c = s.spawn(run_central);
            let h = s.spawn(run_h1);
            (f.join().expect("families thread"), c.join().expect("central thread"), h.join().expect("h1 thread"))
        })
    } else {
        (run_families(), run_central(), run_h1())
    };
    for (a, out) in [(Analysis::Families, families), (Analysis::Central, central)] {
        if p.wants(a) {
            match out {
                Some(o) => {
                    p.record(a.name(), o);
                }
                None => p.skip(a),
            }
        }
    }
    let gw = if p.wants(Analysis::H1) {
        match h1_out {
            Some(o) => p.record(Analysis::H1.name(), o),
            None => {
                p.skip(Analysis::H1);
                None
            }
        }
    } else {
        None
    };
    p.step(Analysis::RealOrbits, w.as_ref().zip(gw.as_ref()).zip(dec.as_ref()), |((w, gw), d)| real_orbits_section(job, w, gw, d));
    p.report
}
