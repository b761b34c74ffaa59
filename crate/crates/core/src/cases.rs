//! Verification reports: every configured expectation is compared with an exact computation.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::archmult::{a1_inverse, pattern_check, vanishing_order, ArchError, MatrixRecipe, Pattern};
use crate::compalg::{
    freudenthal_r0, freudenthal_swap, triality_spot_check, triality_verify, we_projection, AlgError, Albert, CubicEtale,
    EtaleDescriptor, Flavor, Fp, OctAlgebra, Scalar, TrialityData,
};
use crate::config::{affine_of, rat_of, word, CaseCfg, Config, ConfigError, ElementSpec, EtaleCfg, SystemCfg};
use crate::eiscalc::{
    apply_word, convergence_verdict, fmt_vector, gk_cfunction, levi_modulus_pairing, lambda_with, lift_word, order_report,
    factor_order, rational_cfunction, shifted_exponent, ConvergenceStatus, EisError, OrderBound, ZetaProduct,
};
use crate::exactnum::{int, AffineForm, ExactError, Rational};
use crate::report::{Bundle, Report, Row, Status};
use crate::rootsys::{coroot_pairing, dot, CosetRep, Parabolic, RootError, RootSystem, WeylElem, WeylWord};

#[derive(Debug, Error)]
pub enum CaseError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Eis(#[from] EisError),
    #[error(transparent)]
    Arch(#[from] ArchError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("no configured {kind} for {id}")]
    Unconfigured { kind: &'static str, id: String },
    #[error("unknown algebra suite {0:?}; expected one of {1}")]
    UnknownSuite(String, String),
    #[error("unsupported prime {0}")]
    UnsupportedPrime(u64),
}

/// A rational system loaded from config together with its root data.
struct Sys<'a> {
    cfg: &'a SystemCfg,
    rs: RootSystem,
}

impl<'a> Sys<'a> {
    fn load(cfg: &'a Config, id: &str) -> Result<Self, CaseError> {
        let sc = cfg.system(id)?;
        Ok(Sys { cfg: sc, rs: sc.root_system()? })
    }

    fn lambda(&self) -> Result<Vec<AffineForm>, CaseError> {
        Ok(lambda_with(&self.rs, &self.cfg.nu()?, &self.cfg.nu_coeff()?))
    }

    fn parabolic(&self, label: &str) -> Result<Parabolic, CaseError> {
        Ok(self.cfg.parabolic(label, self.rs.rank())?)
    }

    fn owns(&self, cfg: &Config, id: &str) -> bool {
        cfg.system(id).is_ok_and(|s| s.id == self.cfg.id)
    }

    /// Labels naming the same parabolic, e.g. `P` and `M1` on a rank-one system.
    fn same_label(&self, a: &str, b: &str) -> bool {
        match (self.parabolic(a), self.parabolic(b)) {
            (Ok(x), Ok(y)) => x == y,
            _ => self.cfg.canonical_label(a) == self.cfg.canonical_label(b),
        }
    }
}

fn rats(v: &[String]) -> Result<Vec<Rational>, CaseError> {
    v.iter().map(|x| rat_of(x).map_err(CaseError::from)).collect()
}

fn affines(v: &[String]) -> Result<Vec<AffineForm>, CaseError> {
    v.iter().map(|x| affine_of(x).map_err(CaseError::from)).collect()
}

fn fmt_rats(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_affines(v: &[AffineForm]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    parts.join(", ")
}

fn fmt_set(v: &[usize]) -> String {
    WeylWord(v.to_vec()).to_string()
}

pub fn element(rs: &RootSystem, spec: &ElementSpec) -> Result<WeylElem, CaseError> {
    match spec {
        ElementSpec::Word(w) => Ok(rs.elem(&word(w))?),
        ElementSpec::Images { images } => {
            let imgs = images.iter().map(|v| rats(v)).collect::<Result<Vec<_>, _>>()?;
            Ok(rs.elem_from_images(&imgs)?)
        }
    }
}

fn spec_key(rs: &RootSystem, spec: &ElementSpec, w: Option<&WeylElem>) -> String {
    match (spec, w) {
        (ElementSpec::Word(v), _) => WeylWord(v.clone()).to_string(),
        (ElementSpec::Images { .. }, Some(w)) => rs.canonical_word(w).to_string(),
        (ElementSpec::Images { images }, None) => {
            let parts: Vec<String> = images.iter().map(|v| format!("({})", v.join(","))).collect();
            format!("images {}", parts.join(""))
        }
    }
}

fn images_of(w: &WeylElem, dim: usize) -> String {
    let parts: Vec<String> = (0..dim)
        .map(|j| {
            let mut e = vec![Rational::zero(); dim];
            e[j] = int(1);
            fmt_rats(&w.apply(&e))
        })
        .collect();
    parts.join(" ")
}

// ---------------------------------------------------------------- cosets

/// `[W_L \ W / W_M]` for `L = left`, `M = right`, compared with the configured census if any.
pub fn cosets_report(cfg: &Config, system: &str, left: &str, right: &str) -> Result<Report, CaseError> {
    let sys = Sys::load(cfg, system)?;
    let (lp, rp) = (sys.parabolic(left)?, sys.parabolic(right)?);
    let reps = sys.rs.coset_reps(&lp, &rp)?;
    let (lc, rc) = (sys.cfg.canonical_label(left), sys.cfg.canonical_label(right));
    let id = format!("{}/{lc}/{rc}", sys.cfg.id);
    let title = format!("Double cosets W_{lc} \\ W / W_{rc} in {}", sys.cfg.id);
    let entry = cfg.coset.iter().find(|c| sys.owns(cfg, &c.system) && sys.same_label(&c.left, left) && sys.same_label(&c.right, right));
    let assoc_of = |r: &CosetRep| -> Result<Vec<usize>, CaseError> {
        Ok(sys.rs.associated_simple_roots(&r.elem, &lp, &rp)?.into_iter().collect())
    };
    let Some(entry) = entry else {
        let mut rows = Vec::new();
        for r in &reps {
            rows.push(
                Row::with_status(r.word.to_string(), "", Status::Verified, None, format!("length {}", r.word.len()))
                    .detail("associated simple roots", fmt_set(&assoc_of(r)?)),
            );
        }
        rows.push(Row::with_status("count", "", Status::Verified, None, reps.len().to_string()).detail("expectation", "none configured"));
        return Ok(Report::new("cosets", &id, title, "", rows));
    };
    let mut matched = vec![false; reps.len()];
    let mut rows = Vec::new();
    for (k, spec) in entry.elements.iter().enumerate() {
        let w = match element(&sys.rs, spec) {
            Ok(w) => w,
            Err(e) => {
                rows.push(Row::with_status(spec_key(&sys.rs, spec, None), &entry.quote, Status::Mismatch, Some("valid Weyl element".into()), e.to_string()));
                continue;
            }
        };
        let key = spec_key(&sys.rs, spec, Some(&w));
        let Some(p) = reps.iter().position(|r| r.elem == w) else {
            rows.push(Row::with_status(key, &entry.quote, Status::Mismatch, Some("representative".into()), "not a minimal double coset representative"));
            continue;
        };
        matched[p] = true;
        let rep = &reps[p];
        let assoc = assoc_of(rep)?;
        let mut row = Row::with_status(key, &entry.quote, Status::Verified, Some("representative".into()), "representative")
            .detail("canonical word", rep.word.to_string())
            .detail("length", rep.word.len().to_string())
            .detail("associated simple roots", fmt_set(&assoc));
        if let ElementSpec::Word(v) = spec {
            let reduced = sys.rs.is_reduced(&word(v))?;
            row = row.detail("printed word reduced", if reduced { "yes" } else { "no" });
        } else {
            row = row.detail("images of coordinate vectors", images_of(&w, sys.rs.dim));
        }
        if let Some(expected) = entry.assoc.get(k) {
            let mut e = expected.clone();
            e.sort();
            if e != assoc {
                row.status = Status::Mismatch;
                row.expected = Some(format!("associated simple roots {}", fmt_set(&e)));
                row.computed = format!("associated simple roots {}", fmt_set(&assoc));
            }
        }
        rows.push(row);
    }
    for (r, m) in reps.iter().zip(&matched) {
        if !m {
            rows.push(Row::with_status(r.word.to_string(), &entry.quote, Status::Mismatch, Some("absent".into()), "unlisted representative"));
        }
    }
    rows.push(Row::compare("count", &entry.quote, entry.elements.len().to_string(), reps.len().to_string()));
    Ok(Report::new("cosets", &id, title, &entry.quote, rows))
}

// ---------------------------------------------------------------- constant terms

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contribution {
    Contributes,
    DoesNotContribute,
    NeedsExternalInput,
}

impl Contribution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Contribution::Contributes => "contributes",
            Contribution::DoesNotContribute => "does-not-contribute",
            Contribution::NeedsExternalInput => "needs-external-input",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "contributes" => Contribution::Contributes,
            "does-not-contribute" => Contribution::DoesNotContribute,
            "needs-external-input" => Contribution::NeedsExternalInput,
            _ => return None,
        })
    }
}

/// Classification of one term `E^w` of a constant term, with its witnesses.
#[derive(Clone, Debug)]
pub struct TermAnalysis {
    pub word: WeylWord,
    pub class: Contribution,
    pub reason: String,
    pub details: Vec<(String, String)>,
    /// Internal inconsistencies, e.g. a derived threshold that disagrees with the computation.
    pub problems: Vec<String>,
}

struct CaseInputs<'a> {
    cfg: &'a Config,
    case: &'a CaseCfg,
    sys: &'a Sys<'a>,
    source: Parabolic,
    target: Parabolic,
    lambda: Vec<AffineForm>,
    rules: Vec<crate::eiscalc::StepRule>,
    s0: Rational,
}

fn find_case<'a>(cfg: &'a Config, sys: &Sys, source: &str, target: &str) -> Result<&'a CaseCfg, CaseError> {
    cfg.case
        .iter()
        .find(|c| sys.owns(cfg, &c.system) && sys.same_label(&c.source, source) && sys.same_label(&c.target, target))
        .ok_or_else(|| CaseError::Unconfigured {
            kind: "constant-term case",
            id: format!("{} {} {}", sys.cfg.id, sys.cfg.canonical_label(source), sys.cfg.canonical_label(target)),
        })
}

fn fmt_value(f: &crate::eiscalc::ZetaFactor, s0: &Rational) -> String {
    format!("{}({})", f.kind.name(), f.arg.affine.eval(s0))
}

fn same_elem(rs: &RootSystem, w: &[usize], target: &WeylElem) -> bool {
    rs.elem(&word(w)).is_ok_and(|e| e == *target)
}

fn analyze(inp: &CaseInputs, rep: &CosetRep) -> Result<TermAnalysis, CaseError> {
    let rs = &inp.sys.rs;
    let s0 = &inp.s0;
    let mut details: Vec<(String, String)> = Vec::new();
    let mut problems = Vec::new();
    let shifted = shifted_exponent(rs, &inp.lambda, &rep.elem);
    details.push(("w(lambda)+rho".into(), fmt_vector(&shifted)));
    let delta: Vec<usize> = rs.associated_simple_roots(&rep.elem, &inp.target, &inp.source)?.into_iter().collect();
    details.push(("associated simple roots".into(), fmt_set(&delta)));
    let levi_t = inp.target.levi(rs.rank());

    let mut levi = ConvergenceStatus::AbsolutelyConvergent;
    for &b in &delta {
        let raw = coroot_pairing(&shifted, rs.alpha(b));
        let modulus = levi_modulus_pairing(rs, &levi_t, &delta, b);
        let thr = inp.cfg.threshold.iter().find(|t| {
            t.case == inp.case.id
                && t.root == b
                && t.delta.as_ref().is_none_or(|d| {
                    let mut d = d.clone();
                    d.sort();
                    d == delta
                })
        });
        let (scale, value, source) = match thr {
            Some(t) => (rat_of(&t.scale)?, rat_of(&t.value)?, t.source.as_str()),
            None => (int(1), modulus.clone(), "computed"),
        };
        let scaled_modulus = &modulus * &scale;
        if source == "derived" && value != scaled_modulus {
            problems.push(format!("derived threshold {value} for root {b} differs from modulus pairing {scaled_modulus}"));
        }
        let pairing = raw.scale(&scale);
        let v = convergence_verdict(&pairing, s0, &value);
        levi = levi.max(v.status);
        details.push((
            format!("levi root {b}"),
            format!("{pairing} = {} vs threshold {value} ({source}; modulus pairing {scaled_modulus}): {}", v.value, v.status),
        ));
    }

    let c = rational_cfunction(rs, &inp.lambda, &rep.word, &inp.rules)?;
    let convergent = c.converges_at(s0);
    let c_order = order_report(&c.product, s0)?;
    details.push(("c-function".into(), c.product.expand_theta().to_string()));
    details.push(("intertwiner".into(), if convergent { "absolutely convergent" } else { "not absolutely convergent" }.into()));
    details.push(("c-function order".into(), c_order.total.to_string()));

    let sys_id = &inp.sys.cfg.id;
    let arch = inp.cfg.arch.iter().find(|a| inp.sys.owns(inp.cfg, &a.system) && same_elem(rs, &a.word, &rep.elem));
    // Some(None): the multiplier vanishes identically
    let printed: Option<Option<i64>> = match arch {
        Some(a) => {
            let v = parse_recipe(inp.cfg, sys_id, a)?.evaluate()?;
            let k = vanishing_order(&v, &rat_of(&a.s0)?)?;
            details.push(("archimedean multiplier".into(), format!("{} vanishes to order {}", a.name, k.map_or("infinity".into(), |k| k.to_string()))));
            Some(k)
        }
        None => None,
    };
    let claim = inp.cfg.arch_claim.iter().find(|a| inp.sys.owns(inp.cfg, &a.system) && same_elem(rs, &a.word, &rep.elem));
    if let Some(cl) = claim {
        details.push(("archimedean claim".into(), format!("order >= {} asserted without a printed recipe", cl.order_at_least)));
    }
    let gamma = inp.cfg.arch_gamma.iter().find(|g| g.case == inp.case.id && same_elem(rs, &g.word, &rep.elem));
    let printed_vanishes = printed.is_some_and(|k| k.is_none_or(|k| k >= 1));

    let (class, reason) = if levi != ConvergenceStatus::AbsolutelyConvergent {
        (Contribution::NeedsExternalInput, format!("Levi Eisenstein series is {levi} at s = {s0}"))
    } else if inp.case.mode == "value" {
        if printed_vanishes {
            (Contribution::DoesNotContribute, "printed archimedean multiplier vanishes".into())
        } else if claim.is_some() {
            (Contribution::NeedsExternalInput, "vanishing rests on an unprinted archimedean computation".into())
        } else if convergent {
            (Contribution::Contributes, "intertwiner and Levi series converge absolutely".into())
        } else {
            let k = printed.flatten().unwrap_or(0);
            let total = c_order.total.add(&OrderBound::exact(k));
            details.push(("total order".into(), total.to_string()));
            match (total.lower, total.upper) {
                (Some(l), _) if l >= 1 => (Contribution::DoesNotContribute, format!("term vanishes to order {total}")),
                (Some(0), Some(0)) => (Contribution::Contributes, "term is finite and nonzero".into()),
                _ => (Contribution::NeedsExternalInput, format!("order {total} does not decide the term")),
            }
        }
    } else if claim.is_some() {
        (Contribution::NeedsExternalInput, "rests on an unprinted archimedean computation".into())
    } else if convergent {
        (Contribution::DoesNotContribute, "holomorphic: intertwiner and Levi series converge absolutely".into())
    } else {
        let full = match gamma {
            Some(g) => {
                details.push(("archimedean factor".into(), g.product.clone()));
                c.product.mul(&ZetaProduct::parse(&g.product)?)
            }
            None => c.product.clone(),
        };
        let full = full.expand_theta();
        let rep = order_report(&full, s0)?;
        for e in &rep.ledger {
            details.push((format!("ledger {}", e.factor), format!("{} order {}", e.value_at, e.order)));
        }
        details.push(("total order".into(), rep.total.to_string()));
        // Trivial zeros of the finite zetas pair with archimedean poles; without the
        // archimedean factor their count says nothing about the full intertwiner.
        let mut trivial = Vec::new();
        if gamma.is_none() {
            for f in full.factors() {
                if f.arg.symbol.is_none() && f.arg.affine.eval(s0) <= int(0) && factor_order(f.kind, &f.arg, s0)? != OrderBound::exact(0) {
                    trivial.push(fmt_value(&f, s0));
                }
            }
        }
        match (rep.total.lower, rep.total.upper) {
            _ if !trivial.is_empty() => (
                Contribution::NeedsExternalInput,
                format!("finite order {} involves trivial zeros {} and no archimedean factor is configured", rep.total, trivial.join(", ")),
            ),
            (Some(l), _) if l >= 0 => (Contribution::DoesNotContribute, "term is regular at the point".into()),
            (_, Some(u)) if u <= -1 => (Contribution::Contributes, format!("term has a pole of order {}", -u)),
            _ => (Contribution::NeedsExternalInput, format!("order {} does not decide the residue", rep.total)),
        }
    };
    Ok(TermAnalysis { word: rep.word.clone(), class, reason, details, problems })
}

/// All terms of the constant term along `target` of the series induced from `source`.
pub fn constant_term_analysis(
    cfg: &Config,
    system: &str,
    source: &str,
    target: &str,
    s0: Option<&Rational>,
) -> Result<(String, Vec<(WeylElem, TermAnalysis)>), CaseError> {
    let sys = Sys::load(cfg, system)?;
    let case = find_case(cfg, &sys, source, target)?;
    let inp = CaseInputs {
        cfg,
        case,
        sys: &sys,
        source: sys.parabolic(&case.source)?,
        target: sys.parabolic(&case.target)?,
        lambda: sys.lambda()?,
        rules: sys.cfg.rules()?,
        s0: match s0 {
            Some(v) => v.clone(),
            None => rat_of(&case.s0)?,
        },
    };
    if !matches!(case.mode.as_str(), "value" | "residue") {
        return Err(ConfigError::Unknown { kind: "case mode", id: case.mode.clone() }.into());
    }
    let reps = sys.rs.coset_reps(&inp.target, &inp.source)?;
    let mut out = Vec::new();
    for r in &reps {
        out.push((r.elem.clone(), analyze(&inp, r)?));
    }
    Ok((case.id.clone(), out))
}

pub fn constant_term_report(cfg: &Config, system: &str, source: &str, target: &str, s0: Option<&Rational>) -> Result<Report, CaseError> {
    let sys = Sys::load(cfg, system)?;
    if sys.parabolic(source)?.radical.is_empty() && sys.parabolic(target)?.radical.is_empty() {
        // induced from G itself: the inducing section is the whole constant term
        let row = Row::with_status("[]", "", Status::Verified, Some("contributes".into()), "contributes").detail("reason", "the series is induced from the whole group");
        let id = format!("{}/G/G", sys.cfg.id);
        return Ok(Report::new("constant-term", &id, format!("Constant term of the {} series from G along G", sys.cfg.id), "", vec![row]));
    }
    let case = find_case(cfg, &sys, source, target)?;
    let (_, terms) = constant_term_analysis(cfg, system, source, target, s0)?;
    let s0v = match s0 {
        Some(v) => v.clone(),
        None => rat_of(&case.s0)?,
    };
    let mut used = vec![false; terms.len()];
    let mut rows = Vec::new();
    for r in &case.rows {
        let expected = Contribution::parse(&r.expected)
            .ok_or_else(|| ConfigError::Unknown { kind: "contribution", id: r.expected.clone() })?;
        let w = match element(&sys.rs, &r.element) {
            Ok(w) => w,
            Err(e) => {
                rows.push(Row::with_status(spec_key(&sys.rs, &r.element, None), &r.quote, Status::Mismatch, Some(r.expected.clone()), e.to_string()));
                continue;
            }
        };
        let key = spec_key(&sys.rs, &r.element, Some(&w));
        let Some(p) = terms.iter().position(|(e, _)| *e == w) else {
            rows.push(Row::with_status(key, &r.quote, Status::Mismatch, Some(r.expected.clone()), "not a double coset representative"));
            continue;
        };
        used[p] = true;
        let t = &terms[p].1;
        let status = if !t.problems.is_empty() || t.class != expected {
            Status::Mismatch
        } else if expected == Contribution::NeedsExternalInput {
            Status::UnverifiedExternal
        } else {
            Status::Verified
        };
        let mut row = Row::with_status(key, &r.quote, status, Some(r.expected.clone()), t.class.as_str()).detail("reason", t.reason.clone());
        for (k, v) in &t.details {
            row = row.detail(k, v.clone());
        }
        for p in &t.problems {
            row = row.detail("problem", p.clone());
        }
        rows.push(row);
    }
    for ((_, t), u) in terms.iter().zip(&used) {
        if !u {
            rows.push(Row::with_status(t.word.to_string(), "", Status::Mismatch, None, t.class.as_str()).detail("reason", "representative without a configured row"));
        }
    }
    let title = format!("Constant term of the {} series from {} along {} at s = {s0v} ({})", sys.cfg.id, case.source, case.target, case.mode);
    Ok(Report::new("constant-term", &case.id, title, &case.quote, rows))
}

// ---------------------------------------------------------------- traces, pairings, c-functions

fn display_pairings(sys: &Sys, lambda: &[AffineForm], w: &[usize]) -> Result<(Vec<AffineForm>, Vec<AffineForm>), CaseError> {
    let tr = apply_word(&sys.rs, lambda, &word(w))?;
    let mut out = Vec::new();
    for st in &tr.steps {
        let a = sys.rs.alpha(st.index);
        out.push(st.pairing.scale(&sys.cfg.display_scale(&dot(a, a))?));
    }
    Ok((out, tr.result))
}

pub fn trace_report(cfg: &Config) -> Result<Report, CaseError> {
    let mut rows = Vec::new();
    for t in &cfg.trace {
        let sys = Sys::load(cfg, &t.system)?;
        let lambda = sys.lambda()?;
        let key = format!("{} {}", sys.cfg.id, WeylWord(t.word.clone()));
        let (pairings, result) = display_pairings(&sys, &lambda, &t.word)?;
        let expected = affines(&t.pairings)?;
        rows.push(Row::with_status(
            format!("{key} pairings"),
            &t.quote,
            Status::of(expected == pairings),
            Some(fmt_affines(&expected)),
            fmt_affines(&pairings),
        ));
        if !t.result.is_empty() {
            let e = affines(&t.result)?;
            rows.push(Row::with_status(format!("{key} w(lambda)"), &t.quote, Status::of(e == result), Some(fmt_vector(&e)), fmt_vector(&result)));
        }
        if !t.shifted.is_empty() {
            let e = affines(&t.shifted)?;
            let got = shifted_exponent(&sys.rs, &lambda, &sys.rs.elem(&word(&t.word))?);
            rows.push(Row::with_status(format!("{key} w(lambda)+rho"), &t.quote, Status::of(e == got), Some(fmt_vector(&e)), fmt_vector(&got)));
        }
    }
    Ok(Report::new("trace", "traces", "Exponent traces along Weyl words", "", rows))
}

pub fn pairing_report(cfg: &Config) -> Result<Report, CaseError> {
    let mut rows = Vec::new();
    for p in &cfg.pairing {
        let sys = Sys::load(cfg, &p.system)?;
        let lambda = sys.lambda()?;
        let w = sys.rs.elem(&word(&p.word))?;
        let v = if p.unshifted { apply_word(&sys.rs, &lambda, &word(&p.word))?.result } else { shifted_exponent(&sys.rs, &lambda, &w) };
        let got = coroot_pairing(&v, sys.rs.alpha(p.root)).scale(&rat_of(&p.scale)?);
        let e = affine_of(&p.expected)?;
        let target = if p.unshifted { "w(lambda)" } else { "w(lambda)+rho" };
        let key = format!("{} {} {target} root {} scale {}", sys.cfg.id, WeylWord(p.word.clone()), p.root, p.scale);
        rows.push(Row::with_status(key, &p.quote, Status::of(e == got), Some(e.to_string()), got.to_string()));
    }
    Ok(Report::new("pairing", "pairings", "Pairings of w(lambda)+rho with scaled coroots", "", rows))
}

/// Rows `<id> product`, `<id> min-numerator` and `<id> order`.
pub fn cfunction_report(cfg: &Config) -> Result<Report, CaseError> {
    let mut rows = Vec::new();
    for c in &cfg.cfunction {
        let sys = Sys::load(cfg, &c.system)?;
        let cf = rational_cfunction(&sys.rs, &sys.lambda()?, &word(&c.word), &sys.cfg.rules()?)?;
        let expanded = cf.product.expand_theta();
        if let Some(e) = &c.expected {
            let ep = ZetaProduct::parse(e)?.expand_theta();
            let mut row = Row::with_status(format!("{} product", c.id), &c.quote, Status::of(ep == expanded), Some(ep.to_string()), expanded.to_string());
            for (k, st) in cf.steps.iter().enumerate() {
                row = row.detail(&format!("step {} (root {})", k + 1, st.index), format!("pairing {}: {}", st.pairing, st.block));
            }
            rows.push(row);
        }
        if let Some(m) = &c.min_numerator {
            let s0 = rat_of(c.s0.as_deref().unwrap_or("0"))?;
            let least = expanded
                .factors()
                .into_iter()
                .filter(|f| f.exponent > 0 && f.arg.symbol.is_none())
                .map(|f| f.arg.affine)
                .min_by(|a, b| a.eval(&s0).cmp(&b.eval(&s0)));
            let got = least.map_or("none".to_string(), |a| a.to_string());
            let e = affine_of(m)?;
            rows.push(
                Row::with_status(format!("{} least numerator argument", c.id), &c.quote, Status::of(got == e.to_string()), Some(e.to_string()), got)
                    .detail("converges", cf.converges_at(&s0).to_string()),
            );
        }
        if c.order.is_some() || c.claim.is_some() {
            let s0 = rat_of(c.s0.as_deref().ok_or_else(|| ConfigError::Unknown { kind: "s0 for order check", id: c.id.clone() })?)?;
            let full = match &c.arch {
                Some(a) => cf.product.mul(&ZetaProduct::parse(a)?),
                None => cf.product.clone(),
            };
            let rep = order_report(&full, &s0)?;
            let (k, expected) = match (c.order, c.claim.as_deref()) {
                (Some(k), _) => (k, k.to_string()),
                (None, Some("regular")) => (0, "regular".to_string()),
                (None, Some(other)) => return Err(ConfigError::Unknown { kind: "c-function claim", id: other.into() }.into()),
                (None, None) => unreachable!(),
            };
            // opaque factors can leave the order undetermined without contradicting the claim
            let regular_claim = c.order.is_none();
            let status = if rep.total.exact_value() == Some(k) || (regular_claim && rep.is_regular()) {
                Status::Verified
            } else if rep.total.admits(k) || (regular_claim && rep.total.upper.is_none_or(|u| u >= 0)) {
                Status::UnverifiedExternal
            } else {
                Status::Mismatch
            };
            let computed = if regular_claim && rep.is_regular() { "regular".to_string() } else { rep.total.to_string() };
            let mut row = Row::with_status(format!("{} order at {s0}", c.id), &c.quote, status, Some(expected), computed)
                .detail("class", rep.class.to_string());
            for e in &rep.ledger {
                row = row.detail(&e.factor, format!("{} order {}", e.value_at, e.order));
            }
            rows.push(row);
        }
    }
    Ok(Report::new("cfunction", "cfunctions", "Intertwining c-functions and their orders", "", rows))
}

pub fn gk_report(cfg: &Config) -> Result<Report, CaseError> {
    let mut cache: BTreeMap<String, RootSystem> = BTreeMap::new();
    let mut rows = Vec::new();
    for g in &cfg.gk {
        let a = cfg.absolute(&g.absolute)?;
        if !cache.contains_key(&a.id) {
            cache.insert(a.id.clone(), RootSystem::cartan(&a.cartan_type)?);
        }
        let rs = &cache[&a.id];
        let lambda = lambda_with(rs, &rats(&a.weight)?, &affine_of(&a.coeff)?);
        let w = match &g.word {
            Some(v) => lift_word(rs, &a.kernel, &a.nodes, &word(v)),
            None => rs.longest_rep(&Parabolic::from_radical(a.parabolic.iter().copied()))?.elem,
        };
        let got = gk_cfunction(rs, &lambda, &w).product.expand_theta();
        let e = ZetaProduct::parse(&g.expected)?.expand_theta();
        rows.push(
            Row::with_status(g.id.clone(), &g.quote, Status::of(e == got), Some(e.to_string()), got.to_string())
                .detail("absolute system", format!("{} ({} roots)", a.cartan_type, rs.roots.len()))
                .detail("length", rs.length(&w).to_string()),
        );
    }
    Ok(Report::new("gk", "gindikin-karpelevich", "Gindikin-Karpelevich products on absolute systems", "", rows))
}

pub fn modulus_report(cfg: &Config) -> Result<Report, CaseError> {
    let mut rows = Vec::new();
    for m in &cfg.modulus {
        let got = if let Ok(sc) = cfg.system(&m.system) {
            let sys = Sys { cfg: sc, rs: sc.root_system()? };
            sys.rs.modulus_exponent(&sys.parabolic(&m.parabolic)?, &sc.nu()?)?
        } else {
            let a = cfg.absolute(&m.system)?;
            let rs = RootSystem::cartan(&a.cartan_type)?;
            rs.modulus_exponent(&Parabolic::from_radical(a.parabolic.iter().copied()), &rats(&a.weight)?)?
        };
        let e = rat_of(&m.expected)?;
        rows.push(Row::with_status(format!("{} {}", m.system, m.parabolic), &m.quote, Status::of(e == got), Some(e.to_string()), got.to_string()));
    }
    Ok(Report::new("modulus", "modulus", "Modulus exponents of maximal parabolics", "", rows))
}

// ---------------------------------------------------------------- archimedean multipliers

fn parse_recipe(cfg: &Config, system: &str, entry: &crate::config::ArchCfg) -> Result<MatrixRecipe, CaseError> {
    let lookup = |tok: &str| -> Option<MatrixRecipe> {
        let prior = cfg.arch.iter().find(|a| {
            cfg.system(&a.system).is_ok_and(|s| s.id == system) && {
                let parts: Vec<String> = a.word.iter().map(|i| i.to_string()).collect();
                format!("v[{}]", parts.join(",")) == tok
            }
        })?;
        if std::ptr::eq(prior, entry) {
            return None;
        }
        parse_recipe(cfg, system, prior).ok()
    };
    Ok(MatrixRecipe::parse_with(&entry.recipe, &lookup)?)
}

pub fn arch_report(cfg: &Config, system: &str) -> Result<Report, CaseError> {
    let sc = cfg.system(system)?;
    let mut rows = Vec::new();
    for a in cfg.arch.iter().filter(|a| cfg.system(&a.system).is_ok_and(|s| s.id == sc.id)) {
        let recipe = parse_recipe(cfg, &sc.id, a)?;
        let v = recipe.evaluate()?;
        let s0 = rat_of(&a.s0)?;
        let vp = Pattern::parse(&a.value)?;
        let dp = a.derivative.as_deref().map(Pattern::parse).transpose()?;
        let check = pattern_check(&v, &s0, &vp, dp.as_ref())?;
        let expected = match &dp {
            Some(d) => format!("value {vp}, derivative {d}"),
            None => format!("value {vp}"),
        };
        let computed = match &dp {
            Some(_) => format!("value {}, derivative {}", fmt_rats(&check.value), fmt_rats(&check.derivative)),
            None => format!("value {}", fmt_rats(&check.value)),
        };
        let order = vanishing_order(&v, &s0)?;
        rows.push(
            Row::with_status(format!("{} at s = {s0}", a.name), &a.quote, Status::of(check.ok), Some(expected), computed)
                .detail("recipe", recipe.to_string())
                .detail("vanishing order", order.map_or("infinity".into(), |k| k.to_string())),
        );
        if let (Some(win), Some(wout)) = (&a.witness_in, &a.witness_out) {
            let k = recipe.tokens.iter().position(|t| *t == crate::archmult::Token::A1Inv).ok_or(ArchError::Malformed {
                input: a.recipe.clone(),
                reason: "witness needs an A1^-1 factor".into(),
            })?;
            let tail = MatrixRecipe { tokens: recipe.tokens[k + 1..].to_vec() }.evaluate()?.eval_at(&s0)?;
            let m = a1_inverse();
            let image: Vec<Rational> = (0..3).map(|i| (0..3).map(|j| &m[i][j] * &tail[j]).sum()).collect();
            let (ein, eout) = (rats(win)?, rats(wout)?);
            rows.push(Row::with_status(
                format!("{} witness", a.name),
                &a.quote,
                Status::of(tail == ein && image == eout),
                Some(format!("A1^-1 {} = {}", fmt_rats(&ein), fmt_rats(&eout))),
                format!("A1^-1 {} = {}", fmt_rats(&tail), fmt_rats(&image)),
            ));
        }
    }
    for c in cfg.arch_claim.iter().filter(|a| cfg.system(&a.system).is_ok_and(|s| s.id == sc.id)) {
        rows.push(Row::with_status(
            format!("claim {}", WeylWord(c.word.clone())),
            &c.quote,
            Status::UnverifiedExternal,
            Some(format!("vanishing order >= {}", c.order_at_least)),
            "no recipe printed",
        ));
    }
    Ok(Report::new("arch", &sc.id, format!("Archimedean multipliers for {}", sc.id), "", rows))
}

// ---------------------------------------------------------------- algebra suites

pub const SUITES: &[&str] = &[
    "composition",
    "adjoint",
    "trace-identity",
    "positive-definite",
    "rank-one",
    "etale",
    "claim-c1",
    "claim-orthogonal",
    "freudenthal",
    "triality",
];

fn oct_with<S: Scalar>(flavor: Flavor, d: [i64; 3]) -> OctAlgebra<S> {
    OctAlgebra::with_doubling(flavor, d.map(S::from_i64))
}

fn albert_with<S: Scalar>(flavor: Flavor, d: [i64; 3]) -> Albert<S> {
    Albert { oct: oct_with(flavor, d) }
}

fn tally(key: String, quote: &str, passed: usize, total: usize) -> Row {
    Row::with_status(key, quote, Status::of(passed == total && total > 0), Some(format!("{total}/{total}")), format!("{passed}/{total}"))
}

fn composition_count<S: Scalar>(o: &OctAlgebra<S>, rng: &mut ChaCha8Rng, count: usize, h: i64) -> usize {
    (0..count)
        .filter(|_| {
            let (x, y) = (o.random(rng, h), o.random(rng, h));
            o.norm(&o.mul(&x, &y)) == o.norm(&x) * o.norm(&y)
        })
        .count()
}

fn triality_count<S: Scalar>(o: &OctAlgebra<S>, rng: &mut ChaCha8Rng, count: usize, h: i64) -> (usize, bool) {
    let mut passed = 0;
    let mut full = true;
    for k in 0..count {
        let data = TrialityData::random(o, rng, 2, h);
        if triality_spot_check(o, &data, rng, 1).ok() {
            passed += 1;
        }
        if k < 2 {
            full &= data.triple(o).is_ok_and(|t| triality_verify(o, &t).ok());
        }
    }
    (passed, full)
}

macro_rules! over_prime {
    ($p:expr, $f:ident ( $($arg:expr),* )) => {
        match $p {
            3 => Ok($f::<Fp<3>>($($arg),*)),
            5 => Ok($f::<Fp<5>>($($arg),*)),
            7 => Ok($f::<Fp<7>>($($arg),*)),
            11 => Ok($f::<Fp<11>>($($arg),*)),
            13 => Ok($f::<Fp<13>>($($arg),*)),
            17 => Ok($f::<Fp<17>>($($arg),*)),
            19 => Ok($f::<Fp<19>>($($arg),*)),
            23 => Ok($f::<Fp<23>>($($arg),*)),
            p => Err(CaseError::UnsupportedPrime(p)),
        }
    };
}

fn prime_composition<S: Scalar>(d: [i64; 3], rng: &mut ChaCha8Rng, count: usize, h: i64) -> usize {
    composition_count(&oct_with::<S>(Flavor::Split, d), rng, count, h)
}

fn prime_triality<S: Scalar>(d: [i64; 3], rng: &mut ChaCha8Rng, count: usize, h: i64) -> (usize, bool) {
    triality_count(&oct_with::<S>(Flavor::Split, d), rng, count, h)
}

fn etale_descriptor(e: &EtaleCfg) -> Result<EtaleDescriptor, CaseError> {
    let missing = |what: &str| ConfigError::Unknown { kind: "etale field", id: format!("{}.{what}", e.kind) };
    Ok(match e.kind.as_str() {
        "split" => EtaleDescriptor::Split3,
        "qxf" => EtaleDescriptor::QtimesF { d: e.d.ok_or_else(|| missing("d"))?, a: e.a.ok_or_else(|| missing("a"))?, b: e.b.ok_or_else(|| missing("b"))? },
        "field" => EtaleDescriptor::Field { min_poly: e.min_poly.ok_or_else(|| missing("min_poly"))?, matrix: e.matrix.ok_or_else(|| missing("matrix"))? },
        other => return Err(ConfigError::Unknown { kind: "etale kind", id: other.into() }.into()),
    })
}

type Q = Rational;

fn suite_rows(cfg: &Config, suite: &str, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<Row>, CaseError> {
    let al = &cfg.algebra;
    let h = al.height;
    let quote = al.quotes.get(suite).map(String::as_str).unwrap_or("");
    let flavors = [(Flavor::Definite, "definite", al.definite_doubling), (Flavor::Split, "split", al.split_doubling)];
    let definite = albert_with::<Q>(Flavor::Definite, al.definite_doubling);
    let mut rows = Vec::new();
    match suite {
        "composition" => {
            for (f, name, d) in flavors {
                let n = composition_count(&oct_with::<Q>(f, d), rng, count, h);
                rows.push(tally(format!("N(xy) = N(x)N(y), {name} over Q"), quote, n, count));
            }
            for &p in &al.primes {
                let n = over_prime!(p, prime_composition(al.split_doubling, rng, count, h))?;
                rows.push(tally(format!("N(xy) = N(x)N(y) over F_{p}"), quote, n, count));
            }
        }
        "adjoint" => {
            for (f, name, d) in flavors {
                let j = albert_with::<Q>(f, d);
                let (mut a, mut b) = (0, 0);
                for _ in 0..count {
                    let x = j.random(rng, h);
                    let xs = j.sharp(&x);
                    let n = j.norm(&x);
                    a += usize::from(j.jordan_product(&x, &xs) == j.scale(&n, &j.identity()));
                    b += usize::from(j.sharp(&xs) == j.scale(&n, &x));
                }
                rows.push(tally(format!("X X# = N(X) I, {name}"), quote, a, count));
                rows.push(tally(format!("(X#)# = N(X) X, {name}"), quote, b, count));
            }
        }
        "trace-identity" => {
            for (f, name, d) in flavors {
                let j = albert_with::<Q>(f, d);
                let n = (0..count)
                    .filter(|_| {
                        let v = j.random(rng, h);
                        let t = j.trace(&v);
                        &t * &t - j.trace(&j.square(&v)) == int(2) * j.trace(&j.sharp(&v))
                    })
                    .count();
                rows.push(tally(format!("tr(V)^2 - tr(V^2) = 2 tr(V#), {name}"), quote, n, count));
            }
        }
        "positive-definite" => {
            let mut n = 0;
            let mut tested = 0;
            while tested < count {
                let x = definite.random(rng, h);
                if definite.is_zero(&x) {
                    continue;
                }
                tested += 1;
                n += usize::from(definite.pairing(&x, &x).is_positive() == Some(true));
            }
            rows.push(tally("tr(X X) > 0 for X != 0, definite".into(), quote, n, count));
            let split = albert_with::<Q>(Flavor::Split, al.split_doubling);
            let found = (0..count).any(|_| {
                let x = split.random(rng, h);
                !split.is_zero(&x) && split.pairing(&x, &x).is_positive() != Some(true)
            });
            rows.push(Row::with_status(
                "split flavor has a non-positive vector",
                quote,
                Status::of(found),
                Some("found".into()),
                if found { "found" } else { "none found" },
            ));
        }
        "rank-one" => {
            for (f, name, d) in flavors {
                let j = albert_with::<Q>(f, d);
                let mut n = 0;
                for _ in 0..count {
                    let z = j.rank_one_sample(rng, h)?;
                    n += usize::from(!j.is_zero(&z) && j.is_zero(&j.sharp(&z)) && j.rank(&z) == 1);
                }
                rows.push(tally(format!("sampler output has Z# = 0 and Z != 0, {name}"), quote, n, count));
            }
        }
        "etale" => {
            let samples: Vec<_> = (0..count).map(|_| definite.rank_one_sample(rng, h)).collect::<Result<_, _>>()?;
            for e in &al.etale {
                let desc = etale_descriptor(e)?;
                let et = CubicEtale::build(&definite, &desc)?;
                let outside = samples.iter().filter(|z| !et.is_in_ve(&definite, z)).count();
                rows.push(tally(format!("rank-one samples avoid V_E, {}", desc.name()), quote, outside, count));
                let mut n = 0;
                let mut tested = 0;
                while tested < count {
                    let x = et.ve_basis.iter().fold(definite.zero(), |acc, b| {
                        let k = Q::from_i64(rng.random_range(-1..=1));
                        definite.add(&acc, &definite.scale(&k, b))
                    });
                    if definite.is_zero(&x) {
                        continue;
                    }
                    tested += 1;
                    n += usize::from(definite.rank(&x) >= 2);
                }
                rows.push(tally(format!("nonzero elements of V_E have rank >= 2, {}", desc.name()), quote, n, count));
                let dim_ok = et.ve_basis.len() == 24 && et.embed(&definite, &et.unit.map(Q::from_i64)) == definite.identity();
                rows.push(Row::with_status(
                    format!("dim V_E and unit embedding, {}", desc.name()),
                    al.quotes.get("etale").map(String::as_str).unwrap_or(quote),
                    Status::of(dim_ok),
                    Some("24, 1 -> I".into()),
                    format!("{}, 1 -> {}", et.ve_basis.len(), if et.embed(&definite, &et.unit.map(Q::from_i64)) == definite.identity() { "I" } else { "other" }),
                ));
            }
        }
        "claim-c1" => {
            let all = definite.small_height_elements(1, &[0, 1, 4]);
            let hits: Vec<_> = all.iter().filter(|v| v.c[0].is_zero() && definite.rank(v) == 1).collect();
            let ok = hits.iter().filter(|v| definite.oct.is_zero(&v.x[1]) && definite.oct.is_zero(&v.x[2])).count();
            rows.push(
                tally("rank one with c1 = 0 implies x2 = x3 = 0".into(), quote, ok, hits.len())
                    .detail("enumerated", format!("{} elements of height 1", all.len())),
            );
        }
        "claim-orthogonal" => {
            let e = al.etale.iter().find(|e| e.kind == "qxf").ok_or(CaseError::Unconfigured { kind: "etale", id: "qxf".into() })?;
            let et = CubicEtale::build(&definite, &etale_descriptor(e)?)?;
            let all = definite.small_height_elements(1, &[0, 1, 4]);
            let hits: Vec<_> = all
                .iter()
                .filter(|v| definite.rank(v) == 1 && definite.pairing(v, &et.images[1]).is_zero() && definite.pairing(v, &et.images[2]).is_zero())
                .collect();
            let ok = hits
                .iter()
                .filter(|v| v.c[1].is_zero() && v.c[2].is_zero() && v.x.iter().all(|x| definite.oct.is_zero(x)))
                .count();
            rows.push(
                tally("rank one and orthogonal to F implies a multiple of e11".into(), quote, ok, hits.len())
                    .detail("enumerated", format!("{} elements of height 1", all.len())),
            );
        }
        "freudenthal" => {
            let ets = al
                .etale
                .iter()
                .map(|e| CubicEtale::build(&definite, &etale_descriptor(e)?).map_err(CaseError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let mut direct = vec![0; ets.len()];
            let mut swapped = vec![0; ets.len()];
            for _ in 0..count {
                let z = definite.rank_one_sample(rng, h)?;
                let lam = loop {
                    let l = Q::from_i64(rng.random_range(-5..=5));
                    if !l.is_zero() {
                        break l;
                    }
                };
                let r = freudenthal_r0(&definite, &z, &lam);
                let s = freudenthal_swap(&definite, &r);
                for (k, et) in ets.iter().enumerate() {
                    direct[k] += usize::from(!we_projection(&definite, et, &r).we_is_zero(&definite));
                    swapped[k] += usize::from(!we_projection(&definite, et, &s).we_is_zero(&definite));
                }
            }
            for (k, et) in ets.iter().enumerate() {
                let name = et.descriptor.name();
                rows.push(tally(format!("lambda r0(Z) has nonzero W_E part, {name}"), quote, direct[k], count));
                rows.push(tally(format!("swapped lambda r0(Z) has nonzero W_E part, {name}"), quote, swapped[k], count));
            }
        }
        "triality" => {
            let o = oct_with::<Q>(Flavor::Definite, al.definite_doubling);
            let (n, full) = triality_count(&o, rng, count, 2);
            rows.push(tally("t1(xy) = t2(x) t3(y) and form invariance over Q".into(), quote, n, count).detail("basis check on first tuples", full.to_string()));
            if !full {
                rows.push(Row::with_status("basis check over Q", quote, Status::Mismatch, Some("true".into()), "false"));
            }
            for &p in &al.primes {
                let (n, full) = over_prime!(p, prime_triality(al.split_doubling, rng, count, 3))?;
                rows.push(tally(format!("t1(xy) = t2(x) t3(y) and form invariance over F_{p}"), quote, n, count).detail("basis check on first tuples", full.to_string()));
                if !full {
                    rows.push(Row::with_status(format!("basis check over F_{p}"), quote, Status::Mismatch, Some("true".into()), "false"));
                }
            }
        }
        other => return Err(CaseError::UnknownSuite(other.into(), SUITES.join(", "))),
    }
    Ok(rows)
}

/// Seeded property suite; `count` defaults to the configured sample count.
pub fn algebra_report(cfg: &Config, suite: &str, seed: u64, count: Option<usize>) -> Result<Report, CaseError> {
    let idx = SUITES.iter().position(|s| *s == suite).ok_or_else(|| CaseError::UnknownSuite(suite.into(), SUITES.join(", ")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    let rows = suite_rows(cfg, suite, &mut rng, count.unwrap_or(cfg.algebra.count))?;
    let quote = cfg.algebra.quotes.get(suite).cloned().unwrap_or_default();
    Ok(Report::new("algebra", suite, format!("Algebra suite {suite} (seed {seed})"), &quote, rows))
}

// ---------------------------------------------------------------- everything

fn or_failed(kind: &str, id: &str, r: Result<Report, CaseError>) -> Report {
    r.unwrap_or_else(|e| Report::failed(kind, id, "", &e))
}

/// Every configured check, in config order.
/// Seed used by the CLI and the acceptance suite when none is given.
pub const DEFAULT_SEED: u64 = 7;

pub fn all_reports(cfg: &Config, seed: u64) -> Vec<Report> {
    let mut out = Vec::new();
    for c in &cfg.coset {
        out.push(or_failed("cosets", &format!("{}/{}/{}", c.system, c.left, c.right), cosets_report(cfg, &c.system, &c.left, &c.right)));
    }
    for c in &cfg.case {
        out.push(or_failed("constant-term", &c.id, constant_term_report(cfg, &c.system, &c.source, &c.target, None)));
    }
    out.push(or_failed("trace", "traces", trace_report(cfg)));
    out.push(or_failed("pairing", "pairings", pairing_report(cfg)));
    out.push(or_failed("cfunction", "cfunctions", cfunction_report(cfg)));
    out.push(or_failed("gk", "gindikin-karpelevich", gk_report(cfg)));
    out.push(or_failed("modulus", "modulus", modulus_report(cfg)));
    let mut systems: Vec<String> = Vec::new();
    for a in &cfg.arch {
        let id = cfg.system(&a.system).map(|s| s.id.clone()).unwrap_or_else(|_| a.system.clone());
        if !systems.contains(&id) {
            systems.push(id);
        }
    }
    for s in &systems {
        out.push(or_failed("arch", s, arch_report(cfg, s)));
    }
    for s in SUITES {
        out.push(or_failed("algebra", s, algebra_report(cfg, s, seed, None)));
    }
    out
}

pub fn all_bundle(cfg: &Config, seed: u64) -> Bundle {
    Bundle::new(seed, all_reports(cfg, seed))
}
