//! Command implementations behind the `tameweights` binary. Each command
//! returns its complete output so that it can be tested without spawning
//! a process.

pub mod spec;

use serde_json::{json, Value};
use tameweights::adequacy::{is_adequate, AdequacyReport};
use tameweights::char_arith::{FieldParams, InertialChar};
use tameweights::verify::{run_all, Check, VerifyConfig};
use tameweights::weights::{
    bdj_set, det_char, det_weight_set, explicit_set, find_witness, ghs_inertial_set, schein_set,
    solve_niveau1_big_e, solve_niveau2_big_e, weight_class, weights_equivalent,
    LocalModRep, SerreWeight, Shape, WeightClass, WeightSet, WitnessJD,
};

pub use spec::{DetSpec, EquivSpec, GroupSpec, RepSpec};

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input (exit 1).
    Parse(String),
    /// Error raised by an engine (exit 2 for the element cap, else 1).
    Engine(tameweights::Error),
}

impl CliError {
    pub fn engine(e: tameweights::Error) -> Self {
        Self::Engine(e)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Engine(tameweights::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Parse(msg) => write!(f, "parse error: {msg}"),
            Self::Engine(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<tameweights::Error> for CliError {
    fn from(e: tameweights::Error) -> Self {
        Self::Engine(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    Bdj,
    Sch,
    Explicit,
    Ghs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    JsonLines,
}

/// Output of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit: 0 }
    }
}

fn witness_json(w: &WitnessJD) -> Value {
    let niveau = w.j.niveau();
    json!({ "niveau": niveau, "j": w.j.bits(), "delta": w.delta })
}

fn witness_text(w: &WitnessJD) -> String {
    let bits: String = w.j.bits().iter().map(|b| if *b { '1' } else { '0' }).collect();
    let delta: Vec<String> = w.delta.iter().map(|d| d.to_string()).collect();
    format!("J{}={bits} delta=({})", w.j.niveau(), delta.join(","))
}

fn pairs_json(a: &SerreWeight) -> Value {
    json!(a.pairs().iter().map(|(x, y)| [*x, *y]).collect::<Vec<_>>())
}

fn row(c: &WeightClass, l: u64, witness: Option<&WitnessJD>, superset: bool, format: Format) -> String {
    let rep = c.representative(l);
    let flags: Vec<&str> = if superset { vec!["superset"] } else { vec![] };
    match format {
        Format::JsonLines => json!({
            "d": c.d,
            "t": c.t,
            "representative": pairs_json(&rep),
            "witness": witness.map(witness_json),
            "flags": flags,
        })
        .to_string(),
        Format::Table => {
            let d: Vec<String> = c.d.iter().map(|x| x.to_string()).collect();
            format!(
                "d=({})\tt={}\t{}\t{}\t{}",
                d.join(","),
                c.t,
                rep,
                witness.map(witness_text).unwrap_or_else(|| "-".into()),
                if superset { "superset" } else { "-" }
            )
        }
    }
}

fn lines(rows: impl IntoIterator<Item = String>) -> String {
    rows.into_iter().map(|r| r + "\n").collect()
}

fn weight_set(rho: &LocalModRep, which: Which) -> Result<WeightSet, CliError> {
    Ok(match which {
        Which::Bdj => bdj_set(rho)?,
        Which::Sch => schein_set(rho)?,
        Which::Explicit => explicit_set(rho),
        Which::Ghs => ghs_inertial_set(rho)?,
    })
}

/// `weights`: the chosen set, or membership of the spec's query weight.
pub fn cmd_weights(spec: &RepSpec, which: Which, format: Format) -> Result<Outcome, CliError> {
    let rho = spec.rep()?;
    let set = weight_set(&rho, which)?;
    if let Some(a) = spec.query()? {
        let present = set.contains(&weight_class(&a)?);
        let out = match format {
            Format::JsonLines => json!({
                "weight": pairs_json(&a),
                "present": present,
                "flags": if set.superset { vec!["superset"] } else { vec![] },
            })
            .to_string(),
            Format::Table => (if present { "present" } else { "absent" }).to_string(),
        };
        return Ok(Outcome::ok(out + "\n"));
    }
    let mut rows = Vec::with_capacity(set.len());
    for c in &set.classes {
        let w = find_witness(&rho, &c.representative(rho.l()))?;
        rows.push(row(c, rho.l(), w.as_ref(), set.superset, format));
    }
    Ok(Outcome::ok(lines(rows)))
}

pub fn cmd_detset(spec: &DetSpec, format: Format) -> Result<Outcome, CliError> {
    let params = FieldParams::new(spec.l, spec.f as u32)?;
    let chi = InertialChar::from_exponents(params, &spec.character)
        .map_err(|e| CliError::Parse(format!("field `character`: {e}")))?;
    let set = det_weight_set(&chi, spec.e);
    Ok(Outcome::ok(lines(set.classes.iter().map(|c| row(c, spec.l, None, false, format)))))
}

/// A witness for the query weight: the constructive solvers when `e ≥ l`
/// and the determinant condition holds, otherwise exhaustive search.
pub fn witness_for(rho: &LocalModRep, a: &SerreWeight) -> Result<(Option<WitnessJD>, &'static str), CliError> {
    if rho.e() >= rho.l() && rho.det() == det_char(a, rho.e())? {
        let constructed = match rho.shape() {
            Shape::Split(x, y) => solve_niveau1_big_e(x, y, a, rho.e()).ok(),
            Shape::Irreducible(psi) => solve_niveau2_big_e(psi, a, rho.e()).ok(),
            Shape::NonSplit { .. } => None,
        };
        if let Some(w) = constructed {
            return Ok((Some(w), "constructive"));
        }
    }
    Ok((find_witness(rho, a)?, "search"))
}

pub fn cmd_witness(spec: &RepSpec, format: Format) -> Result<Outcome, CliError> {
    let rho = spec.rep()?;
    let a = spec.query()?.ok_or_else(|| CliError::Parse("field `weight`: missing".into()))?;
    let (w, method) = witness_for(&rho, &a)?;
    let out = match format {
        Format::JsonLines => json!({ "witness": w.as_ref().map(witness_json), "method": method }).to_string(),
        Format::Table => w.as_ref().map(witness_text).unwrap_or_else(|| "none".into()),
    };
    Ok(Outcome::ok(out + "\n"))
}

pub fn cmd_equiv(spec: &EquivSpec, format: Format) -> Result<Outcome, CliError> {
    let a = SerreWeight::new(spec.l, spec.a.clone())?;
    let b = SerreWeight::new(spec.l, spec.b.clone())?;
    let eq = weights_equivalent(&a, &b)?;
    let out = match format {
        Format::JsonLines => json!({ "equivalent": eq }).to_string(),
        Format::Table => eq.to_string(),
    };
    Ok(Outcome::ok(out + "\n"))
}

fn report_table(r: &AdequacyReport) -> String {
    let mark = |p: bool| if p { "pass" } else { "fail" };
    let value = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    format!(
        "order\t{}\ncond1\t{}\tl-part={}\ncond2\t{}\ncond3\t{}\tspan-rank={}\ncond4\t{}\th1={}\nverdict\t{}\n",
        r.order,
        mark(r.cond1.pass),
        value(r.cond1.value),
        mark(r.cond2.pass),
        mark(r.cond3.pass),
        value(r.cond3.value),
        mark(r.cond4.pass),
        value(r.cond4.value),
        if r.verdict { "adequate" } else { "not adequate" }
    )
}

pub fn cmd_adequacy(spec: &GroupSpec, cap: usize, format: Format) -> Result<Outcome, CliError> {
    let g = spec.group(cap)?;
    let r = is_adequate(&g, spec.l()?)?;
    let out = match format {
        Format::JsonLines => serde_json::to_string(&r).expect("report serialises") + "\n",
        Format::Table => report_table(&r),
    };
    Ok(Outcome::ok(out))
}

fn check_line(c: &Check, format: Format) -> String {
    match format {
        Format::JsonLines => json!({
            "check": c.name,
            "pass": c.pass,
            "detail": c.detail,
            "millis": c.millis as u64,
        })
        .to_string(),
        Format::Table => c.to_string(),
    }
}

/// Runs every regression check; exit 1 if any fails.
pub fn cmd_verify_paper(cfg: &VerifyConfig, format: Format) -> Outcome {
    let checks = run_all(cfg);
    let failed = checks.iter().filter(|c| !c.pass).count();
    let mut out = lines(checks.iter().map(|c| check_line(c, format)));
    if format == Format::Table {
        out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    }
    Outcome { stdout: out, exit: i32::from(failed > 0) }
}

