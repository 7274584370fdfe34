use std::fmt::{self, Write as _};

use relbgg::grading::subalgebra_profile;
use relbgg::{
    bigrade, block_structure_from_pair, commutator_audit, filtration, leaf_space_check,
    p_plus_action_audit, parse_label, parse_node_set, relative_bgg_sequence, tangent_ranks,
    verify_bracket_additivity, CartanType, Catalog, Error, ParabolicPair, RootSystem,
    TorsionSupport,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::PairArgs;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum CliError {
    User(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::User(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::User(m) => write!(f, "{m}"),
            CliError::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => CliError::Internal(m),
            other => CliError::User(other.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: &'static str,
}

pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub invariant_failure: bool,
}

impl Outcome {
    fn new(command: &str, inputs: Value, result: Value, text: String) -> Self {
        Outcome {
            report: Report {
                command: command.into(),
                inputs,
                result,
                version: VERSION,
            },
            text,
            invariant_failure: false,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("report serializes")
    }
}

fn to_value(x: impl Serialize) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(|e| CliError::Internal(e.to_string()))
}

fn build_pair(ty: &str, sq: &str, sp: &str) -> Result<ParabolicPair, CliError> {
    let ty: CartanType = ty.parse()?;
    let pair = ParabolicPair::new(
        RootSystem::new(ty),
        parse_node_set(sq)?,
        parse_node_set(sp)?,
    )?;
    Ok(pair)
}

fn pair_inputs(pair: &ParabolicPair) -> Value {
    json!({
        "type": pair.root_system().cartan_type().to_string(),
        "sigma_q": pair.sigma_q(),
        "sigma_p": pair.sigma_p(),
    })
}

pub fn run_bigrade(args: &PairArgs) -> Result<Outcome, CliError> {
    let pair = build_pair(&args.cartan_type, &args.sigma_q, &args.sigma_p)?;
    let bg = bigrade(&pair);
    let profile = subalgebra_profile(&bg);
    let blocks = block_structure_from_pair(&pair).ok();

    let mut text = format!("{pair}\n");
    for c in bg.components().values() {
        writeln!(text, "{}: dim {}", c.degree, c.dim).unwrap();
    }
    writeln!(text, "subalgebras:").unwrap();
    for (s, info) in &profile {
        writeln!(text, "  {}: dim {}", s.name(), info.dim).unwrap();
    }
    if let Some(bs) = &blocks {
        writeln!(text, "block pattern:").unwrap();
        for line in bs.render().lines() {
            writeln!(text, "  {line}").unwrap();
        }
    }

    let components: Vec<&relbgg::grading::BigradedComponent> = bg.components().values().collect();
    let profile_json: serde_json::Map<String, Value> = profile
        .iter()
        .map(|(s, info)| Ok((s.name().to_string(), to_value(info)?)))
        .collect::<Result<_, CliError>>()?;
    let result = json!({
        "components": to_value(components)?,
        "total_dim": bg.total_dim(),
        "subalgebras": profile_json,
        "block_pattern": blocks.map(|bs| bs.render()),
    });
    Ok(Outcome::new("bigrade", pair_inputs(&pair), result, text))
}

pub fn run_filtration(args: &PairArgs) -> Result<Outcome, CliError> {
    let pair = build_pair(&args.cartan_type, &args.sigma_q, &args.sigma_p)?;
    let rep = filtration(&bigrade(&pair));
    let mut text = format!("{pair}\n");
    for (ip, comps) in &rep.components {
        let list: Vec<String> = comps.iter().map(|d| d.to_string()).collect();
        writeln!(text, "g^({ip},*) = {}", list.join(" + ")).unwrap();
    }
    for m in rep.modules.values() {
        let steps: Vec<String> = m
            .filtration_steps
            .iter()
            .map(|(i, d)| format!("{i}:{d}"))
            .collect();
        writeln!(
            text,
            "V_{}: dim {}, steps {}",
            m.i_prime,
            m.dim,
            steps.join(" ")
        )
        .unwrap();
    }
    Ok(Outcome::new(
        "filtration",
        pair_inputs(&pair),
        to_value(&rep)?,
        text,
    ))
}

pub fn run_ranks(args: &PairArgs) -> Result<Outcome, CliError> {
    let pair = build_pair(&args.cartan_type, &args.sigma_q, &args.sigma_p)?;
    let rep = tangent_ranks(&bigrade(&pair));
    let mut parts = vec![
        format!("dim M = {}", rep.dim_m),
        format!("rank T_rho = {}", rep.rank_t_rho),
    ];
    parts.extend(
        rep.ranks_v
            .iter()
            .rev()
            .map(|(ip, r)| format!("rank V_{ip} = {r}")),
    );
    let text = format!("{}\n", parts.join(", "));
    Ok(Outcome::new(
        "ranks",
        pair_inputs(&pair),
        to_value(&rep)?,
        text,
    ))
}

pub fn run_audit(args: &PairArgs) -> Result<Outcome, CliError> {
    let pair = build_pair(&args.cartan_type, &args.sigma_q, &args.sigma_p)?;
    let bg = bigrade(&pair);
    let roots = verify_bracket_additivity(&bg);
    let mut violations: Vec<String> = roots.violations.iter().map(|v| v.to_string()).collect();
    let mut checked = roots.pairs_checked;
    let matrix = match block_structure_from_pair(&pair) {
        Ok(bs) => {
            let rep = commutator_audit(&bs, &bg);
            checked += rep.pairs_checked;
            violations.extend(rep.violations.iter().map(|v| v.to_string()));
            let (lo, hi) = bg.i_prime_bounds();
            for ip in lo..=hi {
                let rep = p_plus_action_audit(&bs, ip);
                checked += rep.pairs_checked;
                violations.extend(rep.violations.iter().map(|v| v.to_string()));
            }
            true
        }
        Err(Error::RequiresTypeA(_)) => false,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("{pair}\n");
    if !matrix {
        writeln!(text, "matrix model only for type A; root-level checks only").unwrap();
    }
    for v in &violations {
        writeln!(text, "{v}").unwrap();
    }
    writeln!(text, "{} checks, {} violations", checked, violations.len()).unwrap();
    let result = json!({
        "checks": checked,
        "matrix_model": matrix,
        "violations": violations,
    });
    let mut out = Outcome::new("audit", pair_inputs(&pair), result, text);
    out.invariant_failure = !violations.is_empty();
    Ok(out)
}

pub fn run_bgg(label: &str, sq: &str, sp: &str) -> Result<Outcome, CliError> {
    let src = parse_label(label)?;
    let pair = ParabolicPair::new(
        RootSystem::new(src.cartan_type),
        parse_node_set(sq)?,
        parse_node_set(sp)?,
    )?;
    let seq = relative_bgg_sequence(&src, &pair)?;
    let mut text = String::new();
    for e in &seq.entries {
        match e.order_to_next {
            Some(k) => writeln!(text, "{} --[order {k}]-->", e.label).unwrap(),
            None => writeln!(text, "{}", e.label).unwrap(),
        }
    }
    let off_chain: Vec<_> = seq.arrows.iter().filter(|a| a.to != a.from + 1).collect();
    if !off_chain.is_empty() {
        writeln!(text, "further arrows:").unwrap();
        for a in off_chain {
            writeln!(text, "  {} -> {} (order {})", a.from, a.to, a.order).unwrap();
        }
    }
    let mut inputs = pair_inputs(&pair);
    inputs["source"] = Value::String(src.to_string());
    Ok(Outcome::new("bgg", inputs, to_value(&seq)?, text))
}

fn torsion_outcome(
    inputs: Value,
    pair: &ParabolicPair,
    ts: &TorsionSupport,
) -> Result<Outcome, CliError> {
    let bg = bigrade(pair);
    ts.validate_against(&bg)?;
    let v = leaf_space_check(ts, &bg);
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    let mut text = format!("{} on {pair}\n", ts.geometry);
    writeln!(text, "involutive T_rho: {}", verdict(v.involutive)).unwrap();
    for c in &v.violators {
        writeln!(text, "  violator {c}").unwrap();
    }
    if let Some(k) = ts.curvature_vanishes_on_relative {
        writeln!(
            text,
            "curvature vanishes on T_rho x T_rho: {k} (asserted by catalog)"
        )
        .unwrap();
    }
    writeln!(
        text,
        "part1: {} part2: {}",
        verdict(v.part1),
        verdict(v.part2)
    )
    .unwrap();
    let result = json!({
        "support": to_value(ts)?,
        "verdict": to_value(&v)?,
    });
    Ok(Outcome::new("check-torsion", inputs, result, text))
}

pub fn torsion_catalog(name: &str, involutive_f: bool) -> Result<Outcome, CliError> {
    let cat: Catalog = name.parse()?;
    let pair = cat.pair()?;
    let ts = cat.support(involutive_f)?;
    let mut inputs = pair_inputs(&pair);
    inputs["catalog"] = Value::String(cat.to_string());
    inputs["assume_involutive_f"] = Value::Bool(involutive_f);
    torsion_outcome(inputs, &pair, &ts)
}

pub fn torsion_custom(args: &PairArgs, support: &str, file: &str) -> Result<Outcome, CliError> {
    let pair = build_pair(&args.cartan_type, &args.sigma_q, &args.sigma_p)?;
    let ts = TorsionSupport::from_json(support)?;
    let mut inputs = pair_inputs(&pair);
    inputs["support_file"] = Value::String(file.into());
    torsion_outcome(inputs, &pair, &ts)
}
