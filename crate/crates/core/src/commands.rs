//! The operations behind the command line: each returns a [`ResultDocument`] and a human
//! rendering of it.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bracket::{self, Cochain, ClassComparison};
use crate::checks::{self, CheckOutcome};
use crate::demo;
use crate::error::{Error, Result};
use crate::resolutions::koszul::ContractionOrder;
use crate::session::{cochain_to_raw, SelfcheckBounds, Session};
use crate::twisted::TwistedResolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub args: Vec<String>,
    pub verdict: Verdict,
    pub outputs: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }
}

/// A document plus its human rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub doc: ResultDocument,
    pub pretty: String,
}

/// Options shared by all commands.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub order: ContractionOrder,
    pub timing: bool,
}

fn finish(mut doc: ResultDocument, pretty: String, start: Instant, opts: Options) -> Report {
    if opts.timing {
        doc.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Report { doc, pretty }
}

fn resolution(session: &Session, opts: Options) -> TwistedResolution {
    TwistedResolution::new(session.ring_arc(), opts.order)
}

/// Looks up a cochain; `zero` names the zero cochain of `fallback_degree` unless defined.
fn lookup(session: &Session, name: &str, fallback_degree: Option<usize>) -> Result<Cochain> {
    match (session.cochain(name), fallback_degree) {
        (Ok(f), _) => Ok(f.clone()),
        (Err(_), Some(n)) if name == "zero" => Ok(Cochain::zero(n)),
        (Err(e), _) => Err(e),
    }
}

fn table(session: &Session, f: &Cochain) -> Value {
    serde_json::to_value(cochain_to_raw(session.ring(), f, f.internal_degree())).expect("cochain serializes")
}

/// One line per nonzero value: `(g0, g0^2 | v∧w) ↦ value`.
pub fn render_cochain(session: &Session, f: &Cochain) -> String {
    let ring = session.ring();
    if f.is_zero() {
        return format!("  zero cochain of degree {}\n", f.degree());
    }
    let mut s = String::new();
    for (e, v) in f.values() {
        let bar: Vec<String> = e.bar.iter().map(|&g| ring.group_label(g)).collect();
        let wedge = session.wedge_names(e.wedge);
        let wedge = if wedge.is_empty() { "1".to_string() } else { wedge.join("∧") };
        let _ = writeln!(s, "  ({} | {}) ↦ {}", bar.join(", "), wedge, ring.display(v));
    }
    s
}

fn comparison_value(session: &Session, c: &ClassComparison) -> Value {
    json!({
        "equal": c.equal,
        "witness": c.witness.as_ref().map(|w| table(session, w)),
        "obstructed_internal_degrees": c.obstructions,
    })
}

fn render_comparison(session: &Session, c: &ClassComparison, what: &str) -> String {
    let mut s = String::new();
    if c.equal {
        let _ = writeln!(s, "{what}: equal in cohomology");
        if let Some(w) = &c.witness {
            let _ = writeln!(s, "witness η with ∂*η = difference:");
            s.push_str(&render_cochain(session, w));
        }
    } else {
        let _ = writeln!(s, "{what}: NOT equal in cohomology (obstructed in internal degrees {:?})", c.obstructions);
    }
    s
}

pub fn check(session: &Session, name: &str, opts: Options) -> Result<Report> {
    let start = Instant::now();
    let res = resolution(session, opts);
    let f = lookup(session, name, None)?;
    let df = bracket::coboundary(&res, &f);
    let ok = df.is_zero();
    let doc = ResultDocument {
        command: "check".into(),
        args: vec![name.into()],
        verdict: Verdict::from_bool(ok),
        outputs: json!({
            "cochain": name,
            "degree": f.degree(),
            "internal_degrees": f.internal_degrees(),
            "cocycle": ok,
            "coboundary": table(session, &df),
        }),
        timing_ms: None,
    };
    let mut pretty = format!("{name}: degree {} cochain\n", f.degree());
    pretty.push_str(&render_cochain(session, &f));
    let _ = writeln!(pretty, "∂*{name}:");
    pretty.push_str(&render_cochain(session, &df));
    let _ = writeln!(pretty, "verdict: {}", if ok { "cocycle" } else { "not a cocycle" });
    Ok(finish(doc, pretty, start, opts))
}

pub fn bracket(session: &Session, left: &str, right: &str, compare: Option<&str>, opts: Options) -> Result<Report> {
    let start = Instant::now();
    let res = resolution(session, opts);
    let f = lookup(session, left, None)?;
    let g = lookup(session, right, None)?;
    if f.degree() + g.degree() == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    let b = bracket::bracket(&res, &f, &g)?;
    let mut warnings = Vec::new();
    for (n, c) in [(left, &f), (right, &g)] {
        if !bracket::is_cocycle(&res, c) {
            warnings.push(format!("{n} is not a cocycle"));
        }
    }
    let mut args = vec![left.to_string(), right.to_string()];
    let mut outputs = json!({
        "left": left,
        "right": right,
        "degree": b.degree(),
        "internal_degrees": b.internal_degrees(),
        "bracket": table(session, &b),
        "warnings": warnings,
    });
    let mut pretty = format!("[{left}, {right}] (degree {}):\n", b.degree());
    pretty.push_str(&render_cochain(session, &b));
    for w in &warnings {
        let _ = writeln!(pretty, "warning: {w}");
    }
    let mut ok = true;
    if let Some(other) = compare {
        args.push(format!("--class-compare-with={other}"));
        let z = lookup(session, other, Some(b.degree()))?;
        let c = bracket::class_equal(&res, &b, &z)?;
        ok = c.equal;
        outputs["compare_with"] = json!(other);
        outputs["chain_equal"] = json!(b == z);
        outputs["class_comparison"] = comparison_value(session, &c);
        pretty.push_str(&render_comparison(session, &c, &format!("[{left}, {right}] vs {other}")));
    }
    let doc = ResultDocument { command: "bracket".into(), args, verdict: Verdict::from_bool(ok), outputs, timing_ms: None };
    Ok(finish(doc, pretty, start, opts))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Claim {
    claim: String,
    pass: bool,
    detail: String,
}

pub fn demo_transvection(p: u64, opts: Options) -> Result<Report> {
    let start = Instant::now();
    let session = demo::transvection_session(p)?;
    let res = resolution(&session, opts);
    let ring = session.ring();
    let fp = ring.fp();
    let (l, k, d) = (session.cochain("lambda")?, session.cochain("kappa")?, session.cochain("delta")?);
    let mut claims = Vec::new();
    let mut claim = |c: &str, pass: bool, detail: String| claims.push(Claim { claim: c.into(), pass, detail });

    for (name, f) in [("lambda", l), ("kappa", k), ("delta", d)] {
        let df = bracket::coboundary(&res, f);
        claim(&format!("{name} is a cocycle"), df.is_zero(), format!("∂*{name} has {} nonzero values", df.len()));
    }
    let dk = bracket::bracket(&res, d, k)?;
    let relation = if dk == *k {
        "κ".to_string()
    } else if dk == k.scaled(fp.neg(1), fp) {
        "−κ".to_string()
    } else {
        "neither κ nor −κ".to_string()
    };
    claim("[delta, kappa] = kappa at chain level", dk == *k, format!("computed [δ,κ] = {relation}"));
    let n_unknown = bracket::unknowns(&res, 1, demo::KAPPA_INTERNAL).len();
    claim(
        "no nonzero 1-cochains of internal degree -2",
        n_unknown == 0,
        format!("{n_unknown} unknowns"),
    );
    let kappa_class = bracket::solve_any(&res, k)?;
    claim("kappa is not a coboundary", !kappa_class.equal, String::new());
    let report = bracket::pbw_check(&res, l, k)?;
    claim(
        "[lambda, lambda] = 0 in cohomology",
        report.lambda_lambda_class.equal,
        format!("chain level zero: {}", report.lambda_lambda.is_zero()),
    );
    claim(
        "[lambda, kappa] = 0 in cohomology",
        report.lambda_kappa_class.equal,
        format!("chain level zero: {}", report.lambda_kappa.is_zero()),
    );
    let all = claims.iter().all(|c| c.pass);

    let mut pretty = format!("transvection example, p = {p}, |G| = {}\n", ring.group().order());
    for c in &claims {
        let _ = writeln!(
            pretty,
            "[{}] {}{}",
            if c.pass { "pass" } else { "FAIL" },
            c.claim,
            if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }
        );
    }
    let _ = writeln!(pretty, "[δ, κ]:");
    pretty.push_str(&render_cochain(&session, &dk));
    let _ = writeln!(pretty, "[λ, λ]:");
    pretty.push_str(&render_cochain(&session, &report.lambda_lambda));

    let doc = ResultDocument {
        command: "demo transvection".into(),
        args: vec![format!("-p={p}")],
        verdict: Verdict::from_bool(all),
        outputs: json!({
            "p": p,
            "group_order": ring.group().order(),
            "claims": claims,
            "delta_kappa": table(&session, &dk),
            "pbw": {
                "lambda_is_cocycle": report.lambda_is_cocycle,
                "kappa_is_cocycle": report.kappa_is_cocycle,
                "lambda_lambda": table(&session, &report.lambda_lambda),
                "lambda_kappa": table(&session, &report.lambda_kappa),
                "lambda_lambda_minus_2_dkappa": table(&session, &report.lambda_lambda_minus_2_dkappa),
                "lambda_lambda_class": comparison_value(&session, &report.lambda_lambda_class),
                "lambda_kappa_class": comparison_value(&session, &report.lambda_kappa_class),
                "necessary_conditions_hold": report.necessary_conditions_hold(),
            },
        }),
        timing_ms: None,
    };
    Ok(finish(doc, pretty, start, opts))
}

/// Every invariant suite, in a fixed order.
pub fn run_suites(session: &Session, bounds: SelfcheckBounds, order: ContractionOrder) -> Vec<CheckOutcome> {
    let res = TwistedResolution::new(session.ring_arc(), order);
    let (h, q) = (bounds.hdeg, bounds.ideg);
    let mut rng = rand::rngs::StdRng::seed_from_u64(bounds.seed);
    let mut out = vec![
        checks::d_squared(&res, h + 1, q + 1),
        checks::decompose_round_trip(&res, h, q),
        checks::phi_c_homotopy(&res, h),
        checks::phi_d_homotopy(&res, h, q),
        checks::phi_x_homotopy(&res, h, q),
        checks::mux_identity(&res, h, q),
        checks::delta_chain_map(&res, h, q),
        checks::coassociativity(&res, h, q),
        checks::counit(&res, h, q),
        checks::exactness(&res, h, q),
        checks::augmentation_cokernel(&res, q),
    ];
    out.extend(checks::bimodule_laws(&res, h, bounds.trials, &mut rng));
    out.push(checks::cochain_linearity(&res, bounds.trials, &mut rng));
    out.push(checks::coboundary_squared(&res, bounds.trials, &mut rng));
    let named: Vec<(String, Cochain)> = session.cochains().map(|(n, f)| (n.clone(), f.clone())).collect();
    out.extend(checks::bracket_laws(&res, &named));
    out
}

pub fn selfcheck(session: &Session, bounds: SelfcheckBounds, opts: Options) -> Result<Report> {
    let start = Instant::now();
    if bounds.hdeg == 0 || bounds.trials == 0 {
        return Err(Error::Validation("selfcheck bounds must be positive".into()));
    }
    let outcomes = run_suites(session, bounds, opts.order);
    let ok = outcomes.iter().all(CheckOutcome::passed);
    let mut pretty = String::new();
    for o in &outcomes {
        let _ = writeln!(
            pretty,
            "[{}] {} ({} cases{})",
            if o.passed() { "pass" } else { "FAIL" },
            o.name,
            o.cases,
            if o.passed() { String::new() } else { format!(", {} failures", o.failures) }
        );
        for e in &o.examples {
            let _ = writeln!(pretty, "    {e}");
        }
    }
    let doc = ResultDocument {
        command: "selfcheck".into(),
        args: vec![
            format!("--hdeg={}", bounds.hdeg),
            format!("--ideg={}", bounds.ideg),
            format!("--trials={}", bounds.trials),
            format!("--seed={}", bounds.seed),
        ],
        verdict: Verdict::from_bool(ok),
        outputs: json!({ "checks": outcomes }),
        timing_ms: None,
    };
    Ok(finish(doc, pretty, start, opts))
}
