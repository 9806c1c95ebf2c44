//! Job files: a ring header followed by `key: value` payload lines.
//!
//! ```text
//! # three-node quartic
//! ring: x,y,z | order: grevlex
//! curve: x^2*y^2 + x^2*z^2 + y^2*z^2
//! ```
//!
//! Payload keys: `ideal`, `other`, `eliminate`, `gens`, `row` (repeatable), `size`, `I`, `J`,
//! `component` (repeatable, over `R[T1..Tn]`), `curve`, `family`, `constraints`, `member`,
//! `fixture`. Blank lines and lines starting with `#` are skipped.

use aluffi_core::parse::{parse_polynomial_at, parse_polynomial_list_at, parse_ring_header_at};
use aluffi_core::parse_polynomial_list;
use aluffi_core::ring::{FIBER, GEOM, PARAM};
use aluffi_core::{Error, Homogeneity, MonomialOrder, Polynomial, Rational, Result, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Intersect,
    Quotient,
    Saturate,
    Eliminate,
    Dim,
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AluffiOp {
    Present,
    Torsion,
    LinearType,
    ArNumber,
    RelType,
    Spread,
    Dim,
    VerifyComponents,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    Ideal(IdealOp),
    Syz,
    Minors,
    Aluffi(AluffiOp),
    CurveCert,
    FamilyAnalyze,
    FamilyMember,
    Fixture(String),
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Gb => "gb".into(),
            Command::Ideal(op) => format!("ideal {}", ideal_op_name(*op)),
            Command::Syz => "syz".into(),
            Command::Minors => "minors".into(),
            Command::Aluffi(op) => format!("aluffi {}", aluffi_op_name(*op)),
            Command::CurveCert => "curve cert".into(),
            Command::FamilyAnalyze => "family analyze".into(),
            Command::FamilyMember => "family member".into(),
            Command::Fixture(name) => format!("fixtures run {}", name),
        }
    }
}

pub fn ideal_op_name(op: IdealOp) -> &'static str {
    match op {
        IdealOp::Intersect => "intersect",
        IdealOp::Quotient => "quotient",
        IdealOp::Saturate => "saturate",
        IdealOp::Eliminate => "eliminate",
        IdealOp::Dim => "dim",
        IdealOp::Equal => "equal",
    }
}

pub fn aluffi_op_name(op: AluffiOp) -> &'static str {
    match op {
        AluffiOp::Present => "present",
        AluffiOp::Torsion => "torsion",
        AluffiOp::LinearType => "linear-type",
        AluffiOp::ArNumber => "ar-number",
        AluffiOp::RelType => "reltype",
        AluffiOp::Spread => "spread",
        AluffiOp::Dim => "dim",
        AluffiOp::VerifyComponents => "verify-components",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Degree bound `B` for torsion, Artin–Rees and relation-type searches.
    pub bound: u32,
    pub seed: u64,
    pub samples: usize,
    pub work_limit: Option<u64>,
    /// Include wall-clock timing in machine output (breaks byte-identical reruns).
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { bound: 4, seed: 1, samples: 2, work_limit: None, timing: false }
    }
}

/// Parsed payload. Every list keeps the file order.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub ideal: Vec<Polynomial>,
    pub other: Vec<Polynomial>,
    pub eliminate: Vec<usize>,
    pub gens: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
    pub size: Option<usize>,
    pub i_gens: Vec<Polynomial>,
    pub j_gens: Vec<Polynomial>,
    pub components: Vec<Vec<Polynomial>>,
    pub curve: Option<Polynomial>,
    pub family: Option<Polynomial>,
    pub constraints: Vec<Polynomial>,
    pub member: Option<Vec<Rational>>,
    pub fixture: Option<String>,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub header: String,
    pub ring: RingContext,
    pub inputs: Inputs,
    /// `(key, raw value)` for every payload line, echoed into the report.
    pub echo: Vec<(String, String)>,
    pub options: Options,
}

impl JobSpec {
    /// A job with no file behind it, such as `fixtures run <name>`.
    pub fn fixture(name: &str, options: Options) -> Self {
        JobSpec {
            command: Command::Fixture(name.to_string()),
            header: String::new(),
            ring: RingContext::geometric(&["x"]).expect("ring"),
            inputs: Inputs { fixture: Some(name.to_string()), ..Inputs::default() },
            echo: vec![("fixture".into(), name.to_string())],
            options,
        }
    }

    /// Replaces the inferred command after checking its required inputs.
    pub fn with_command(mut self, command: Command) -> Result<Self> {
        check_required(&command, &self.inputs)?;
        self.command = command;
        Ok(self)
    }

    /// Sets the member parameters from comma-separated rationals, replacing any `member:` line.
    pub fn with_alpha(mut self, text: &str) -> Result<Self> {
        let mut alpha = Vec::new();
        for p in parse_polynomial_list(&self.ring, text)? {
            if !p.is_constant() {
                return Err(Error::InvalidArgument(format!("`--alpha` value `{}` is not a rational number", p)));
            }
            alpha.push(p.constant_term());
        }
        self.inputs.member = Some(alpha);
        self.echo.retain(|(k, _)| k != "member");
        self.echo.push(("member".into(), text.trim().to_string()));
        Ok(self)
    }

    pub fn with_options(mut self, options: Options) -> Result<Self> {
        if options.bound == 0 {
            return Err(Error::InvalidArgument("the bound B must be positive".into()));
        }
        self.options = options;
        Ok(self)
    }
}

pub fn parse_input(text: &str) -> Result<JobSpec> {
    parse_input_with(text, None)
}

/// Parses a job file; `order` overrides the order named in the header.
pub fn parse_input_with(text: &str, order: Option<MonomialOrder>) -> Result<JobSpec> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (hline, htext) = lines.next().ok_or_else(|| perr(1, 1, "empty input"))?;
    if !htext.trim_start().starts_with("ring:") {
        return Err(perr(hline, 1, "the first line must be a `ring:` header"));
    }
    let mut ring = parse_ring_header_at(htext, hline)?;
    if let Some(o) = order {
        ring = ring.with_order(o)?;
    }
    let mut inputs = Inputs::default();
    let mut echo = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    let mut i_count = 0usize;
    let mut pending_components = Vec::new();

    for (line, raw) in lines {
        let (key, value, col) = split_key(raw).ok_or_else(|| perr(line, 1, "expected `key: value`"))?;
        let repeatable = matches!(key, "row" | "component");
        if !repeatable && seen.contains(&key) {
            return Err(perr(line, 1, &format!("duplicate key `{}`", key)));
        }
        echo.push((key.to_string(), value.trim().to_string()));
        let list = |r: &RingContext| parse_polynomial_list_at(r, value, line, col);
        let single = |r: &RingContext| parse_polynomial_at(r, value, line, col);
        match key {
            "ideal" => inputs.ideal = list(&ring)?,
            "other" => inputs.other = list(&ring)?,
            "gens" => inputs.gens = list(&ring)?,
            "row" => inputs.rows.push(list(&ring)?),
            "I" => {
                inputs.i_gens = list(&ring)?;
                i_count = inputs.i_gens.len();
            }
            "J" => inputs.j_gens = list(&ring)?,
            "constraints" => inputs.constraints = list(&ring)?,
            "component" => pending_components.push((line, col, value.to_string())),
            "eliminate" => {
                for name in value.split(',').map(str::trim) {
                    let idx = ring.var_index(name).ok_or_else(|| {
                        perr(line, col + value.find(name).unwrap_or(0), &format!("unknown variable `{}`", name))
                    })?;
                    inputs.eliminate.push(idx);
                }
            }
            "size" => {
                let n = value.trim().parse::<usize>().ok().filter(|&n| n > 0);
                inputs.size = Some(n.ok_or_else(|| perr(line, col, "`size` must be a positive integer"))?);
            }
            "curve" => {
                let f = single(&ring)?;
                require_homogeneous(&f, &ring, line, col)?;
                inputs.curve = Some(f);
            }
            "family" => {
                let f = single(&ring)?;
                require_homogeneous(&f, &ring, line, col)?;
                inputs.family = Some(f);
            }
            "member" => {
                let mut alpha = Vec::new();
                for p in list(&ring)? {
                    if !p.is_constant() {
                        return Err(perr(line, col, "`member` values must be rational numbers"));
                    }
                    alpha.push(p.constant_term());
                }
                inputs.member = Some(alpha);
            }
            "fixture" => inputs.fixture = Some(value.trim().to_string()),
            other => return Err(perr(line, 1, &format!("unknown key `{}`", other))),
        }
        seen.push(key);
    }

    if !pending_components.is_empty() {
        if i_count == 0 {
            let (line, _, _) = pending_components[0];
            return Err(perr(line, 1, "`component` needs an `I:` line to fix the fiber variables"));
        }
        let names: Vec<String> = (1..=i_count).map(|i| format!("T{}", i)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ext = ring.extend(FIBER, &refs)?;
        for (line, col, value) in pending_components {
            inputs.components.push(parse_polynomial_list_at(&ext, &value, line, col)?);
        }
    }

    let command = infer_command(&inputs).ok_or_else(|| perr(hline, 1, "no payload line determines a command"))?;
    Ok(JobSpec { command, header: htext.trim().to_string(), ring, inputs, echo, options: Options::default() })
}

fn split_key(raw: &str) -> Option<(&str, &str, usize)> {
    let (k, v) = raw.split_once(':')?;
    let key = k.trim();
    if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return None;
    }
    let lead = v.len() - v.trim_start().len();
    Some((key, v.trim_start(), k.len() + 2 + lead))
}

fn perr(line: usize, column: usize, message: &str) -> Error {
    Error::Parse { line, column, message: message.to_string() }
}

fn require_homogeneous(f: &Polynomial, ring: &RingContext, line: usize, col: usize) -> Result<()> {
    let geom = ring.block_indices(GEOM);
    match f.homogeneity_in(&geom) {
        Homogeneity::Homogeneous(_) => Ok(()),
        _ => Err(perr(line, col, "polynomial must be homogeneous in the ring variables")),
    }
}

fn infer_command(inputs: &Inputs) -> Option<Command> {
    let c = if let Some(name) = &inputs.fixture {
        Command::Fixture(name.clone())
    } else if inputs.curve.is_some() {
        Command::CurveCert
    } else if inputs.family.is_some() {
        if inputs.member.is_some() {
            Command::FamilyMember
        } else {
            Command::FamilyAnalyze
        }
    } else if !inputs.i_gens.is_empty() {
        if inputs.components.is_empty() {
            Command::Aluffi(AluffiOp::Present)
        } else {
            Command::Aluffi(AluffiOp::VerifyComponents)
        }
    } else if !inputs.rows.is_empty() {
        Command::Minors
    } else if !inputs.gens.is_empty() {
        Command::Syz
    } else if !inputs.ideal.is_empty() {
        if !inputs.other.is_empty() {
            Command::Ideal(IdealOp::Intersect)
        } else if !inputs.eliminate.is_empty() {
            Command::Ideal(IdealOp::Eliminate)
        } else {
            Command::Gb
        }
    } else {
        return None;
    };
    Some(c)
}

fn missing(command: &Command, what: &str) -> Error {
    Error::InvalidArgument(format!("`{}` needs {}", command.name(), what))
}

fn check_required(command: &Command, inputs: &Inputs) -> Result<()> {
    match command {
        Command::Gb | Command::Ideal(IdealOp::Dim) if inputs.ideal.is_empty() => Err(missing(command, "an `ideal:` line")),
        Command::Ideal(IdealOp::Eliminate) if inputs.ideal.is_empty() || inputs.eliminate.is_empty() => {
            Err(missing(command, "`ideal:` and `eliminate:` lines"))
        }
        Command::Ideal(IdealOp::Intersect | IdealOp::Quotient | IdealOp::Saturate | IdealOp::Equal)
            if inputs.ideal.is_empty() || inputs.other.is_empty() =>
        {
            Err(missing(command, "`ideal:` and `other:` lines"))
        }
        Command::Syz if inputs.gens.is_empty() => Err(missing(command, "a `gens:` line")),
        Command::Minors if inputs.rows.is_empty() || inputs.size.is_none() => {
            Err(missing(command, "`row:` lines and a `size:` line"))
        }
        Command::Minors if inputs.rows.iter().any(|r| r.len() != inputs.rows[0].len()) => {
            Err(Error::InvalidArgument("matrix rows have different lengths".into()))
        }
        Command::Aluffi(op) if inputs.i_gens.is_empty() || inputs.j_gens.is_empty() => {
            let _ = op;
            Err(missing(command, "`I:` and `J:` lines"))
        }
        Command::Aluffi(AluffiOp::VerifyComponents) if inputs.components.is_empty() => {
            Err(missing(command, "`component:` lines"))
        }
        Command::CurveCert if inputs.curve.is_none() => Err(missing(command, "a `curve:` line")),
        Command::FamilyAnalyze if inputs.family.is_none() => Err(missing(command, "a `family:` line")),
        Command::FamilyMember if inputs.family.is_none() || inputs.member.is_none() => {
            Err(missing(command, "`family:` and `member:` lines"))
        }
        _ => Ok(()),
    }
}

/// Parameter names of the ring, for echoing.
pub fn param_names(ring: &RingContext) -> Vec<String> {
    ring.block_indices(PARAM).iter().map(|&i| ring.name(i).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_job() {
        let job = parse_input("ring: x,y,z\ncurve: x^2*y^2+x^2*z^2+y^2*z^2\n").unwrap();
        assert_eq!(job.command, Command::CurveCert);
        assert_eq!(job.inputs.curve.unwrap().to_string(), "x^2*y^2 + x^2*z^2 + y^2*z^2");
    }

    #[test]
    fn malformed_power_has_position() {
        let err = parse_input("ring: x,y\n\ncurve: x^^2\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 10);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn family_job() {
        let text = "ring: x,y,z | params: u4,u5,u6\n\
                    family: y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y*z*(u4*x + u5*y + u6*z)\n";
        let job = parse_input(text).unwrap();
        assert_eq!(job.command, Command::FamilyAnalyze);
        assert_eq!(param_names(&job.ring), ["u4", "u5", "u6"]);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(parse_input("ring: x,y\ncurve: x + w\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_input("ring: x,y\ncurve: x^2 + y\n"), Err(Error::Parse { line: 2, column: 8, .. })));
        assert!(matches!(parse_input("curve: x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_input("ring: x\nbogus: x\n"), Err(Error::Parse { line: 2, .. })));
        let job = parse_input("ring: x,y\nideal: x + y, x - y\n").unwrap();
        assert_eq!(job.command, Command::Gb);
        assert!(job.clone().with_command(Command::Syz).is_err());
        assert!(job.with_options(Options { bound: 0, ..Options::default() }).is_err());
    }

    #[test]
    fn components_live_over_the_fiber_ring() {
        let text = "ring: x,y\nI: x, y\nJ: x\ncomponent: x, T1\n";
        let job = parse_input(text).unwrap();
        assert_eq!(job.command, Command::Aluffi(AluffiOp::VerifyComponents));
        assert_eq!(job.inputs.components[0][1].ring().arity(), 4);
    }
}
