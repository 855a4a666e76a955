//! Dispatch and rendering. Machine output is a TOML document per command.

use std::fmt::{self, Write as _};
use std::path::Path;

use quasimap::algebra::scalar::parse_rational;
use quasimap::config::{parse_config, to_toml};
use quasimap::effective::{age, degree, enumerate, is_i_nonnegative, Classifier, SectorLabel, TruncationSpec};
use quasimap::iseries::{format_q, i_series, mirror_map, ISeries, SeriesTerm};
use quasimap::period::{
    classical_period, del_pezzo_mirror, del_pezzo_truncation, quantum_period, quantum_period_from_series, regularize,
    PeriodSeries,
};
use quasimap::presentation::{extend_by_sector, extend_e_weights, GEffective, Presentation};
use quasimap::{fixtures, Rational};
use serde::Serialize;

use crate::args::{Cli, Command, Expand, ExtendArgs, Format, Input, PeriodArgs, Source, Truncated};

#[derive(Debug)]
pub enum CliError {
    Core(quasimap::Error),
    Input(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => e.exit_code() as u8,
            CliError::Input(_) => 1,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) | CliError::Mismatch(s) => write!(f, "{s}"),
        }
    }
}

impl From<quasimap::Error> for CliError {
    fn from(e: quasimap::Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<String> {
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Validate(i) => validate(i, machine),
        Command::Anticones(i) => anticones(i, machine),
        Command::Effective(t) => effective(t, machine),
        Command::Ifunction(e) => ifunction(e, machine),
        Command::MirrorMap(t) => mirror(t, machine),
        Command::Extend(e) => extend(e, machine),
        Command::Period(p) => period(p, machine),
    }
}

fn load(input: &Input) -> Result<Presentation> {
    let name = &input.presentation;
    let path = Path::new(name);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{name}: {e}")))?
    } else if let Some(t) = fixtures::text(name) {
        t.to_string()
    } else {
        let known: Vec<&str> = fixtures::names().collect();
        return Err(CliError::Input(format!("{name}: no such file or fixture (fixtures: {})", known.join(", "))));
    };
    Ok(parse_config(&text)?)
}

fn rational(flag: &str, s: &str) -> Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| CliError::Input(format!("--{flag}: `{s}` is not a rational number")))
}

fn rationals(flag: &str, s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| rational(flag, x)).collect()
}

fn bounds(s: &str, rank: usize) -> Result<Vec<(Rational, Rational)>> {
    let pair = |part: &str| -> Result<(Rational, Rational)> {
        match part.split_once(':') {
            Some((lo, hi)) => Ok((rational("box", lo)?, rational("box", hi)?)),
            None => {
                let w = rational("box", part)?;
                Ok((-w.clone(), w))
            }
        }
    };
    let parts: Vec<&str> = s.split(',').collect();
    let out = match parts.len() {
        1 => vec![pair(parts[0])?; rank],
        n if n == rank => parts.into_iter().map(pair).collect::<Result<_>>()?,
        n => return Err(CliError::Input(format!("--box: {n} ranges given for rank {rank}"))),
    };
    if out.iter().any(|(lo, hi)| lo > hi) {
        return Err(CliError::Input(format!("--box: empty range in `{s}`")));
    }
    Ok(out)
}

fn truncation(t: &Truncated, rank: usize, h_needed: bool) -> Result<TruncationSpec> {
    let (z, h) = TruncationSpec::profile(&t.profile)
        .ok_or_else(|| CliError::Input(format!("unknown profile `{}` (quick, default, deep)", t.profile)))?;
    Ok(TruncationSpec {
        degree_max: rational("degree-max", &t.degree_max)?,
        coordinate_box: Some(bounds(&t.bounds, rank)?),
        z_min: t.z_min.unwrap_or(z),
        h_degree_max: if h_needed { t.h_degree_max.unwrap_or(h) } else { 0 },
    })
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn tuple(v: &[Rational]) -> String {
    format!("({})", strs(v).join(","))
}

fn sector_name(p: &Presentation, s: &SectorLabel) -> Option<String> {
    p.labels.sectors.iter().find(|(k, _)| SectorLabel::parse(k).as_ref() == Some(s)).map(|(_, v)| v.clone())
}

fn sector_text(p: &Presentation, s: &SectorLabel) -> String {
    match sector_name(p, s) {
        Some(n) => format!("1_{{{s}}} ({n})"),
        None => format!("1_{{{s}}}"),
    }
}

fn toml_out<T: Serialize>(v: &T) -> Result<String> {
    toml::to_string(v).map_err(|e| CliError::Input(format!("serialization failed: {e}")))
}

#[derive(Serialize)]
struct TruncationOut {
    degree_max: String,
    coordinate_box: Vec<[String; 2]>,
    z_min: i64,
    h_degree_max: u32,
}

impl From<&TruncationSpec> for TruncationOut {
    fn from(t: &TruncationSpec) -> Self {
        TruncationOut {
            degree_max: t.degree_max.to_string(),
            coordinate_box: t
                .coordinate_box
                .iter()
                .flatten()
                .map(|(lo, hi)| [lo.to_string(), hi.to_string()])
                .collect(),
            z_min: t.z_min,
            h_degree_max: t.h_degree_max,
        }
    }
}

fn validate(i: &Input, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        status: &'static str,
        rank: usize,
        weights: usize,
        e_weights: usize,
        roots: usize,
        weyl_generators: usize,
        torus: bool,
        extended: bool,
    }
    let p = load(i)?;
    let out = Out {
        command: "validate",
        status: "ok",
        rank: p.rank,
        weights: p.n(),
        e_weights: p.e_weights.len(),
        roots: p.roots.len(),
        weyl_generators: p.weyl_generators.len(),
        torus: p.g_effective == GEffective::Torus,
        extended: p.extended,
    };
    if machine {
        return toml_out(&out);
    }
    Ok(format!(
        "ok: rank {}, {} weights, {} E-weights, {} roots, {} Weyl generators{}\n",
        out.rank,
        out.weights,
        out.e_weights,
        out.roots,
        out.weyl_generators,
        if out.extended { ", extended" } else { "" }
    ))
}

fn anticones(i: &Input, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        torus_minimal: Vec<Vec<usize>>,
        g_effective_minimal: Vec<Vec<usize>>,
    }
    let p = load(i)?;
    let torus: Vec<Vec<usize>> = p.torus_minimal_anticones().iter().map(|a| a.one_based()).collect();
    let g: Vec<Vec<usize>> = p.minimal_g_effective_anticones()?.iter().map(|a| a.one_based()).collect();
    if machine {
        return toml_out(&Out { command: "anticones", torus_minimal: torus, g_effective_minimal: g });
    }
    let show = |v: &[Vec<usize>]| -> String {
        v.iter()
            .map(|a| format!("{{{}}}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(format!("torus minimal anticones: {}\nG-effective minimal anticones: {}\n", show(&torus), show(&g)))
}

fn effective(t: &Truncated, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Class {
        beta_tilde: Vec<String>,
        beta: Vec<String>,
        degree: String,
        sector: String,
        age: String,
        inertia_nonempty: bool,
        i_effective: bool,
        i_nonnegative: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        ci_effective: Option<bool>,
    }
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        count: usize,
        truncation: TruncationOut,
        class: Vec<Class>,
    }
    let p = load(&t.input)?;
    let trunc = truncation(t, p.rank, false)?;
    let cl = Classifier::new(&p)?;
    let classes: Vec<Class> = enumerate(&p, &trunc)?
        .iter()
        .map(|b| Class {
            beta_tilde: strs(b),
            beta: strs(&p.restrict(b)),
            degree: degree(b, &p).to_string(),
            sector: SectorLabel::of(b).to_string(),
            age: age(b, &p).to_string(),
            inertia_nonempty: cl.inertia_nonempty(b),
            i_effective: cl.is_i_effective(b),
            i_nonnegative: is_i_nonnegative(b, &p),
            ci_effective: cl.ci_effective(b).ok(),
        })
        .collect();
    if machine {
        return toml_out(&Out {
            command: "effective",
            count: classes.len(),
            truncation: (&trunc).into(),
            class: classes,
        });
    }
    let mut s = String::new();
    for c in &classes {
        let label = SectorLabel::parse(&c.sector).expect("rendered label");
        writeln!(
            s,
            "({}) -> ({})  deg {}  {}  age {}{}",
            c.beta_tilde.join(","),
            c.beta.join(","),
            c.degree,
            sector_text(&p, &label),
            c.age,
            if c.i_nonnegative { "" } else { "  not I-nonnegative" }
        )
        .unwrap();
    }
    writeln!(s, "{} classes", classes.len()).unwrap();
    Ok(s)
}

#[derive(Serialize)]
struct Coefficient {
    z: i64,
    h: Vec<u32>,
    c: String,
}

#[derive(Serialize)]
struct TermOut {
    beta: Vec<String>,
    sector: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sector_name: Option<String>,
    degree: String,
    age: String,
    codim: i64,
    coefficients: Vec<Coefficient>,
}

fn coefficients(t: &SeriesTerm, symbolic: bool) -> Vec<Coefficient> {
    let rank = t.value.nvars();
    if !symbolic {
        return t
            .value
            .substitute_h_zero()
            .into_iter()
            .rev()
            .map(|(z, c)| Coefficient { z, h: vec![0; rank], c: c.to_string() })
            .collect();
    }
    let mut out = Vec::new();
    for (z, poly) in t.value.terms().collect::<Vec<_>>().into_iter().rev() {
        for (mono, c) in poly.terms().collect::<Vec<_>>().into_iter().rev() {
            out.push(Coefficient { z: *z, h: mono.clone(), c: c.to_string() });
        }
    }
    out
}

fn term_out(p: &Presentation, t: &SeriesTerm, symbolic: bool) -> TermOut {
    TermOut {
        beta: strs(&t.beta),
        sector: t.sector.to_string(),
        sector_name: sector_name(p, &t.sector),
        degree: t.degree.to_string(),
        age: t.age.to_string(),
        codim: t.codim,
        coefficients: coefficients(t, symbolic),
    }
}

fn monomial(c: &Rational, z: i64, q: &str) -> String {
    let mut parts = Vec::new();
    let one = Rational::from_integer(1.into());
    if *c == -one.clone() {
        parts.push("-".to_string());
    } else if *c != one {
        parts.push(c.to_string());
    }
    if z != 0 {
        parts.push(format!("z^{z}"));
    }
    if q != "1" {
        parts.push(q.to_string());
    }
    if parts.is_empty() || parts == ["-"] {
        parts.push("1".into());
    }
    parts.join(" ").replacen("- ", "-", 1)
}

fn human_term(p: &Presentation, t: &SeriesTerm, symbolic: bool, s: &mut String) {
    let q = format_q(&t.beta);
    let sector = sector_text(p, &t.sector);
    if symbolic {
        writeln!(s, "{q} {sector}: {}", t.value).unwrap();
        return;
    }
    for (z, c) in t.value.substitute_h_zero().into_iter().rev() {
        writeln!(s, "{} {sector}", monomial(&c, z, &q)).unwrap();
    }
}

fn ifunction(e: &Expand, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        mode: &'static str,
        warnings: Vec<String>,
        truncation: TruncationOut,
        term: Vec<TermOut>,
        unresolved: Vec<TermOut>,
    }
    let p = load(&e.trunc.input)?;
    let trunc = truncation(&e.trunc, p.rank, e.symbolic)?;
    let s: ISeries = i_series(&p, &trunc)?;
    if machine {
        return toml_out(&Out {
            command: "ifunction",
            mode: if e.symbolic { "symbolic" } else { "h-zero" },
            warnings: s.warnings.clone(),
            truncation: (&trunc).into(),
            term: s.ordered().into_iter().map(|t| term_out(&p, t, e.symbolic)).collect(),
            unresolved: s.unresolved.iter().map(|t| term_out(&p, t, e.symbolic)).collect(),
        });
    }
    let mut out = String::new();
    for t in s.ordered() {
        human_term(&p, t, e.symbolic, &mut out);
    }
    for t in &s.unresolved {
        writeln!(out, "unresolved (codim {}): {} {}", t.codim, format_q(&t.beta), sector_text(&p, &t.sector)).unwrap();
    }
    for w in &s.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    Ok(out)
}

fn mirror(t: &Truncated, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Entry {
        sector: String,
        beta: Vec<String>,
        z: i64,
        c: String,
    }
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        zero: bool,
        truncation: TruncationOut,
        coefficient: Vec<Entry>,
    }
    let p = load(&t.input)?;
    let trunc = truncation(t, p.rank, false)?;
    let mm = mirror_map(&i_series(&p, &trunc)?)?;
    if machine {
        let mut coefficient = Vec::new();
        for (sector, m) in &mm.sectors {
            for ((beta, z), c) in m {
                coefficient.push(Entry { sector: sector.to_string(), beta: strs(beta), z: *z, c: c.to_string() });
            }
        }
        return toml_out(&Out { command: "mirror-map", zero: mm.is_zero(), truncation: (&trunc).into(), coefficient });
    }
    if mm.is_zero() {
        return Ok("0\n".into());
    }
    let mut s = String::new();
    for (sector, m) in &mm.sectors {
        let terms: Vec<String> = m.iter().map(|((beta, z), c)| monomial(c, *z, &format_q(beta))).collect();
        writeln!(s, "({}) {}", terms.join(" + "), sector_text(&p, sector)).unwrap();
    }
    Ok(s)
}

fn extend(e: &ExtendArgs, machine: bool) -> Result<String> {
    let p = load(&e.input)?;
    let beta = rationals("class", &e.class)?;
    if beta.len() != p.rank {
        return Err(CliError::Input(format!("--class has {} entries, rank is {}", beta.len(), p.rank)));
    }
    let data = quasimap::presentation::sector_extension(&p, &beta, e.n)?;
    let mut ext = extend_by_sector(&p, &beta, e.n)?;
    if let Some(mu) = &e.mu {
        let mu: Vec<i64> = mu
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| CliError::Input(format!("--mu: `{x}` is not an integer"))))
            .collect::<Result<_>>()?;
        ext = extend_e_weights(&ext, &mu)?;
    }
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let mut s = String::new();
    if machine {
        writeln!(s, "# class = {}", tuple(&beta)).unwrap();
    } else {
        writeln!(s, "# extension of {} along {}", e.input.presentation, tuple(&beta)).unwrap();
    }
    writeln!(s, "# nu = [{}]", join(&data.nu_weights)).unwrap();
    writeln!(s, "# nu_prime = [{}]", join(&data.nu_prime)).unwrap();
    writeln!(s, "# r = {}", data.r_scale).unwrap();
    writeln!(s, "# N = {} (least admissible {})", data.n, data.default_n).unwrap();
    s.push_str(&to_toml(&ext));
    Ok(s)
}

fn period(a: &PeriodArgs, machine: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Entry {
        n: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        value: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        x_coefficients: Option<Vec<String>>,
    }
    #[derive(Serialize)]
    struct Out {
        command: &'static str,
        order: u64,
        source: &'static str,
        regularized: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        x: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        matches_mirror: Option<bool>,
        coefficient: Vec<Entry>,
    }
    let g: PeriodSeries = match a.source {
        Source::Closed => quantum_period(a.order),
        Source::Series => {
            let p = fixtures::load("delpezzo")?;
            quantum_period_from_series(&i_series(&p, &del_pezzo_truncation(a.order))?, a.order)?
        }
    };
    let shown = if a.regularize { regularize(&g) } else { g.clone() };
    let mismatch = if a.compare {
        let reg = regularize(&g);
        let cl = classical_period(&del_pezzo_mirror(), a.order);
        (0..=a.order).find(|&n| reg.coeff(n) != cl.coeff(n)).map(|n| (n, reg.coeff(n), cl.coeff(n)))
    } else {
        None
    };
    let x = a.x.as_deref().map(|x| rational("x", x)).transpose()?;
    let mut s = String::new();
    if machine {
        let coefficient = (0..=a.order)
            .map(|n| {
                let c = shown.coeff(n);
                match &x {
                    Some(x) => Entry { n, value: Some(c.eval(x).to_string()), x_coefficients: None },
                    None => Entry { n, value: None, x_coefficients: Some(strs(c.coeffs())) },
                }
            })
            .collect();
        s = toml_out(&Out {
            command: "period",
            order: a.order,
            source: match a.source {
                Source::Closed => "closed",
                Source::Series => "series",
            },
            regularized: a.regularize,
            x: x.as_ref().map(|x| x.to_string()),
            matches_mirror: a.compare.then_some(mismatch.is_none()),
            coefficient,
        })?;
    } else {
        for n in 0..=a.order {
            let c = shown.coeff(n);
            match &x {
                Some(x) => writeln!(s, "t^{n} : {}", c.eval(x)).unwrap(),
                None => writeln!(s, "t^{n} : {c}").unwrap(),
            }
        }
        if a.compare && mismatch.is_none() {
            writeln!(s, "agrees with the classical period of the mirror through t^{}", a.order).unwrap();
        }
    }
    if let Some((n, got, want)) = mismatch {
        print!("{s}");
        return Err(CliError::Mismatch(format!("t^{n}: regularized period {got}, classical period {want}")));
    }
    Ok(s)
}
