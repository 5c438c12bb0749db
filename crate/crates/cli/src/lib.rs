//! Batch harness: command definitions, run manifests and the verification certificate.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use favkit_core::curves::{check_table2_row, cremona_batch, parse_cremona, CremonaOutcome};
use favkit_core::f2_groups::{expected_corner_table, groups_certificate_with, Claim};
use favkit_core::field_lab::{amiable, SearchConfig};
use favkit_core::fixtures::{parse_table2, sha256_hex, table1, table2, Table2Row};
use favkit_core::honda_ext::{
    chi_table, conductor_classify, honda_certificate, honda_table, honda_table_csv, HondaParam,
};
use favkit_core::local_conductors::{fontaine_bound, kummer_conductor, KappaShape, LocalFieldProfile};
use favkit_core::resolvent::{favorability_report, pair_resolvent};
use favkit_core::{Error, FiniteField, IntPoly};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "favkit", version, about = "Favorable quintic fields, pair resolvents and their certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct BatchArgs {
    /// File with one polynomial `[a0,a1,...]` per line.
    pub input: Option<PathBuf>,
    /// Use the embedded table of favorable quintics instead of an input file.
    #[arg(long)]
    pub table1: bool,
    /// Restrict the embedded table to these row indices.
    #[arg(long, value_delimiter = ',')]
    pub rows: Vec<usize>,
    /// Restrict the embedded table to rows with N at most this.
    #[arg(long)]
    pub max_n: Option<u64>,
    /// File with one expectation per input line.
    #[arg(long)]
    pub expect: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Constant C of the factor-base bound C * log(|d|)^2.
    #[arg(long, default_value_t = 12.0)]
    pub grh_bound: f64,
    /// Always use the Minkowski bound.
    #[arg(long)]
    pub no_grh: bool,
    /// Per-field time limit; fields that run out are reported as incomplete.
    #[arg(long)]
    pub timeout_secs: Option<u64>,
    /// Seed of the relation search.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

impl SearchArgs {
    pub fn config(&self) -> SearchConfig {
        SearchConfig {
            grh: !self.no_grh,
            grh_constant: self.grh_bound,
            seed: self.seed,
            timeout: self.timeout_secs.map(Duration::from_secs),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Favorability reports for a batch of quintics.
    Favorable(BatchArgs),
    /// Amiability of the pair resolvents of a batch of quintics.
    Amiable {
        #[command(flatten)]
        batch: BatchArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Group, Honda, conductor and curve-table checks as one certificate.
    VerifyAll {
        /// Replacement corner table (`a: label,label,...` per line).
        #[arg(long)]
        corner_table: Option<PathBuf>,
        /// Replacement genus-2 table in the embedded CSV layout.
        #[arg(long)]
        table2: Option<PathBuf>,
    },
    /// Certificate for the F2 matrix groups.
    #[command(subcommand)]
    Groups(GroupsCmd),
    /// Honda systems and their conductor classification.
    #[command(subcommand)]
    Honda(HondaCmd),
    /// Match genus-2 curves against their favorable quintic fields.
    Curves {
        /// Replacement genus-2 table in the embedded CSV layout.
        #[arg(long)]
        table2: Option<PathBuf>,
        /// Other fields per curve that must fail to match.
        #[arg(long, default_value_t = 5)]
        decoys: usize,
        /// Seed for choosing the decoy fields.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Ray-class criterion for elliptic curves listed as `N class [a1,a2,a3,a4,a6]`.
    Cremona {
        /// Curve list, one curve per line.
        input: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum GroupsCmd {
    /// Check dimensions, corners, the Hasse diagram, involutions and stem subgroups.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum HondaCmd {
    /// Conductor exponent of parameters over F_p, written as digit strings such as 11000.
    Classify {
        /// Parameters s1..s5.
        params: Vec<String>,
        /// Residue characteristic.
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// The table over F2.
    Table,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub grh: bool,
    pub grh_constant: f64,
    pub timeout_secs: Option<u64>,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    Computed,
    Incomplete,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub item: String,
    pub status: Status,
    pub expected: Option<String>,
    pub computed: String,
    pub detail: Value,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Coverage {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub computed: usize,
    pub incomplete: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs_digest: String,
    pub config: Option<RunConfig>,
    pub verdicts: Vec<Verdict>,
    pub coverage: Coverage,
}

impl RunManifest {
    pub fn new(command: &str, inputs: &str, config: Option<RunConfig>, verdicts: Vec<Verdict>) -> Self {
        let mut c = Coverage { total: verdicts.len(), ..Default::default() };
        for v in &verdicts {
            match v.status {
                Status::Match => c.matched += 1,
                Status::Mismatch => c.mismatched += 1,
                Status::Computed => c.computed += 1,
                Status::Incomplete => c.incomplete += 1,
                Status::Error => c.errors += 1,
            }
        }
        RunManifest {
            command: command.into(),
            inputs_digest: sha256_hex(inputs.as_bytes()),
            config,
            verdicts,
            coverage: c,
        }
    }

    /// 0: all expectations met; 1: a mismatch or error; 2: incomplete items only.
    pub fn exit_code(&self) -> i32 {
        if self.coverage.mismatched > 0 || self.coverage.errors > 0 {
            1
        } else if self.coverage.incomplete > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(["item", "status", "expected", "computed"])?;
        for v in &self.verdicts {
            let status = serde_json::to_value(v.status)?;
            w.write_record([
                v.item.as_str(),
                status.as_str().unwrap_or(""),
                v.expected.as_deref().unwrap_or(""),
                v.computed.as_str(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

/// Run `f` on every item with a bounded pool; results keep the input order and a panic in one
/// item only affects that item.
pub fn fan_out<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<std::thread::Result<R>> {
    let next = AtomicUsize::new(0);
    let jobs = jobs.max(1).min(items.len().max(1));
    let mut slots: Vec<Option<std::thread::Result<R>>> = (0..items.len()).map(|_| None).collect();
    let done: Vec<Vec<(usize, std::thread::Result<R>)>> = std::thread::scope(|sc| {
        let hs: Vec<_> = (0..jobs)
            .map(|_| {
                sc.spawn(|| {
                    let mut out = vec![];
                    loop {
                        let i = next.fetch_add(1, Ordering::SeqCst);
                        if i >= items.len() {
                            break;
                        }
                        out.push((i, catch_unwind(AssertUnwindSafe(|| f(&items[i])))));
                    }
                    out
                })
            })
            .collect();
        hs.into_iter().map(|h| h.join().expect("worker")).collect()
    });
    for (i, r) in done.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|s| s.expect("every item ran")).collect()
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// A batch item with an optional expectation token.
#[derive(Clone, Debug)]
pub struct Item {
    pub name: String,
    pub poly: IntPoly,
    pub expect: Option<String>,
}

pub fn read_polys(text: &str) -> anyhow::Result<Vec<IntPoly>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| IntPoly::parse(l).with_context(|| format!("bad polynomial {l:?}")))
        .collect()
}

pub fn read_expect(text: &str) -> Vec<String> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from).collect()
}

/// Items for a batch command, with the raw input text used for the digest.
pub fn load_batch(b: &BatchArgs, amiability: bool) -> anyhow::Result<(Vec<Item>, String)> {
    let (mut items, mut raw) = if b.table1 {
        let rows: Vec<_> = table1()
            .into_iter()
            .filter(|r| b.rows.is_empty() || b.rows.contains(&r.index))
            .filter(|r| b.max_n.is_none_or(|m| r.n <= m))
            .collect();
        let raw = rows.iter().map(|r| format!("{} {}\n", r.index, r.f)).collect::<String>();
        let items: Vec<Item> = rows
            .into_iter()
            .map(|r| Item {
                name: format!("#{} N={}", r.index, r.n),
                poly: r.f,
                expect: Some(if amiability {
                    if r.alpha { "alpha" } else { "not-alpha" }.to_string()
                } else {
                    r.n.to_string()
                }),
            })
            .collect();
        (items, raw)
    } else if let Some(p) = &b.input {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let items =
            read_polys(&text)?.into_iter().map(|f| Item { name: f.to_string(), poly: f, expect: None }).collect();
        (items, text)
    } else {
        bail!("give an input file or --table1");
    };
    if let Some(p) = &b.expect {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let ex = read_expect(&text);
        if ex.len() != items.len() {
            bail!("{} expectations for {} items", ex.len(), items.len());
        }
        for (it, e) in items.iter_mut().zip(ex) {
            it.expect = Some(e);
        }
        raw.push_str(&text);
    }
    Ok((items, raw))
}

fn judge(expect: &Option<String>, accepts: impl Fn(&str) -> bool) -> Status {
    match expect {
        None => Status::Computed,
        Some(e) if accepts(e) => Status::Match,
        Some(_) => Status::Mismatch,
    }
}

fn panic_verdict(item: &Item) -> Verdict {
    Verdict {
        item: item.name.clone(),
        status: Status::Error,
        expected: item.expect.clone(),
        computed: String::new(),
        detail: json!({"error": "panic"}),
    }
}

/// Expectation tokens: `favorable`, `not-favorable`, or the conductor `N` of a favorable field.
pub fn favorable_verdict(item: &Item) -> Verdict {
    let rep = favorability_report(&item.poly);
    let computed = match (&rep.n, rep.favorable) {
        (Some(n), true) => format!("favorable N={n}"),
        _ => "not-favorable".to_string(),
    };
    let n = rep.n.as_ref().map(|x| x.to_string());
    let status = judge(&item.expect, |e| match e {
        "favorable" => rep.favorable,
        "not-favorable" => !rep.favorable,
        other => rep.favorable && n.as_deref() == Some(other),
    });
    Verdict {
        item: item.name.clone(),
        status,
        expected: item.expect.clone(),
        computed,
        detail: serde_json::to_value(&rep).unwrap_or(Value::Null),
    }
}

pub fn cmd_favorable(items: &[Item], jobs: usize) -> Vec<Verdict> {
    fan_out(items, jobs, favorable_verdict)
        .into_iter()
        .zip(items)
        .map(|(r, it)| r.unwrap_or_else(|_| panic_verdict(it)))
        .collect()
}

/// Expectation tokens: `alpha` or `not-alpha`.
pub fn amiable_verdict(item: &Item, cfg: &SearchConfig) -> Verdict {
    let start = Instant::now();
    let res = pair_resolvent(&item.poly).and_then(|k| amiable(&k.field, cfg).map(|r| (k, r)));
    let base = |status, computed: String, detail| Verdict {
        item: item.name.clone(),
        status,
        expected: item.expect.clone(),
        computed,
        detail,
    };
    match res {
        Ok((k, (flag, rk2, rk4, det))) => {
            let trail =
                favkit_core::honda_ext::ext_vanishing_decision(flag, rk2, rk4, det.conductor_rk4.map(|c| c == 4));
            let computed = if flag { "alpha" } else { "not-alpha" }.to_string();
            let status = judge(&item.expect, |e| e == computed);
            let grh = det.bound.as_ref().map(|b| b.grh_conditional);
            let detail = json!({
                "resolvent": k.g.to_string(),
                "disc": k.field.disc.to_string(),
                "signature": det.signature,
                "rk2": rk2,
                "rk4": rk4,
                "grh_conditional": grh,
                "details": det,
                "ext_trail": trail.map(|t| t.trail).map_err(|e| e.to_string()),
                "wall_ms": start.elapsed().as_millis(),
            });
            base(status, computed, detail)
        }
        Err(Error::Incomplete(msg)) => base(Status::Incomplete, "incomplete".into(), json!({"reason": msg})),
        Err(e) => base(Status::Error, String::new(), json!({"error": e.to_string()})),
    }
}

pub fn cmd_amiable(items: &[Item], cfg: &SearchConfig, jobs: usize) -> Vec<Verdict> {
    fan_out(items, jobs, |it| amiable_verdict(it, cfg))
        .into_iter()
        .zip(items)
        .map(|(r, it)| r.unwrap_or_else(|_| panic_verdict(it)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub sections: Vec<Section>,
    pub passed: bool,
    pub failing: Vec<String>,
}

impl Certificate {
    pub fn new(sections: Vec<Section>) -> Self {
        let failing: Vec<String> = sections
            .iter()
            .flat_map(|s| s.claims.iter().filter(|c| !c.passed).map(move |c| format!("{}: {}", s.name, c.name)))
            .collect();
        Certificate { passed: failing.is_empty(), failing, sections }
    }
}

fn claim(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Claim {
    Claim { name: name.into(), passed, detail: detail.into() }
}

/// Parses a corner table written as `a: l1,l2,...` lines.
pub fn parse_corner_table(text: &str) -> anyhow::Result<BTreeMap<u32, Vec<String>>> {
    let mut out = BTreeMap::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (a, rest) = line.split_once(':').with_context(|| format!("bad corner line {line:?}"))?;
        let labels = rest.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
        out.insert(a.trim().parse()?, labels);
    }
    Ok(out)
}

pub fn default_corner_table() -> BTreeMap<u32, Vec<String>> {
    expected_corner_table().into_iter().map(|(a, v)| (a, v.into_iter().map(String::from).collect())).collect()
}

pub fn conductor_claims() -> anyhow::Result<Vec<Claim>> {
    let k = LocalFieldProfile::new(2, 5, true)?;
    let odd = kummer_conductor(&k, KappaShape::ValuationPrimeToP)?;
    let unit = kummer_conductor(&k, KappaShape::OneUnit(5))?;
    let f2 = fontaine_bound(5, 5, 1, 2)?;
    let f3 = fontaine_bound(20, 20, 1, 3)?;
    Ok(vec![
        claim("conductor of F(sqrt(+-2))/F is 11", odd == 11, odd.to_string()),
        claim("conductor of F(i)/F is 6", unit == 6, unit.to_string()),
        claim("Fontaine bound for p = 2 is p^2 + 2", f2 == BigRational::from_integer(6.into()), f2.to_string()),
        claim("Fontaine bound for p = 3 is p^2 + 2", f3 == BigRational::from_integer(11.into()), f3.to_string()),
    ])
}

pub fn table2_claims(rows: &[Table2Row], decoys: usize, seed: u64, jobs: usize) -> Vec<Claim> {
    let mut claims: Vec<Claim> = fan_out(rows, jobs, |r| check_table2_row(r, decoys, seed))
        .into_iter()
        .zip(rows)
        .map(|(res, r)| match res {
            Ok(Ok(c)) => claim(
                format!("curve {} matches field {} and recovers N = {}", r.index, r.field, r.n),
                c.n_ok && c.matched && c.decoys_rejected,
                format!(
                    "N {:?}, matched {}, decoys rejected {}",
                    c.record.n.map(|x| x.to_string()),
                    c.matched,
                    c.decoys_rejected
                ),
            ),
            Ok(Err(e)) => claim(format!("curve {}", r.index), false, e.to_string()),
            Err(_) => claim(format!("curve {}", r.index), false, "panic"),
        })
        .collect();
    let mild: Vec<usize> = rows
        .iter()
        .filter(|r| favkit_core::curves::curve_report(&r.g).map(|c| c.mild_m.is_some()).unwrap_or(false))
        .map(|r| r.index)
        .collect();
    claims.push(claim("mild curves are exactly 25, 63, 64", mild == [25, 63, 64], format!("{mild:?}")));
    claims
}

pub fn cmd_verify_all(
    corners: &BTreeMap<u32, Vec<String>>,
    t2: &[Table2Row],
    jobs: usize,
) -> anyhow::Result<Certificate> {
    let groups = groups_certificate_with(corners)?;
    let honda = honda_certificate()?;
    let checksum = favkit_core::fixtures::verify_checksums()
        .into_iter()
        .map(|(n, ok)| claim(format!("{n} checksum"), ok, ""))
        .collect();
    Ok(Certificate::new(vec![
        Section { name: "fixtures".into(), claims: checksum },
        Section { name: "groups".into(), claims: groups.claims },
        Section { name: "honda".into(), claims: honda.claims },
        Section { name: "conductors".into(), claims: conductor_claims()? },
        Section { name: "table2".into(), claims: table2_claims(t2, 5, 0x5eed, jobs) },
    ]))
}

#[derive(Clone, Debug, Serialize)]
pub struct Classified {
    pub s: String,
    pub conductor: u64,
    pub tag: Value,
    pub chi: Option<[String; 3]>,
}

pub fn parse_param(s: &str, p: u64) -> anyhow::Result<HondaParam> {
    let k = FiniteField::new(p, 1)?;
    let digits: Vec<u64> = s
        .chars()
        .filter(|c| !matches!(c, '[' | ']' | ' ' | ','))
        .map(|c| c.to_digit(10).map(u64::from).context("digit expected"))
        .collect::<anyhow::Result<_>>()?;
    if digits.len() != 5 || digits.iter().any(|&d| d >= p) {
        bail!("{s:?} is not a parameter over F_{p}");
    }
    Ok(HondaParam::new(&k, digits.into_iter().map(|d| vec![d]).collect())?)
}

pub fn cmd_honda_classify(params: &[String], p: u64) -> anyhow::Result<Vec<Classified>> {
    params
        .iter()
        .map(|s| {
            let hp = parse_param(s, p)?;
            let c = conductor_classify(&hp, p)?;
            let chi = if p == 2 { Some(chi_table(&hp)?.labels()) } else { None };
            Ok(Classified { s: hp.to_string(), conductor: c.exponent, tag: serde_json::to_value(c.tag)?, chi })
        })
        .collect()
}

fn print_json<T: Serialize>(v: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn emit(m: &RunManifest, fmt: Format) -> anyhow::Result<i32> {
    match fmt {
        Format::Json => print_json(m)?,
        Format::Csv => print!("{}", m.to_csv()?),
    }
    for v in m.verdicts.iter().filter(|v| v.status == Status::Mismatch) {
        eprintln!("mismatch: {}: expected {:?}, computed {}", v.item, v.expected.as_deref().unwrap_or(""), v.computed);
    }
    Ok(m.exit_code())
}

fn certificate_exit(c: &Certificate) -> i32 {
    for f in &c.failing {
        eprintln!("failed claim: {f}");
    }
    if c.passed {
        0
    } else {
        1
    }
}

fn load_table2(path: &Option<PathBuf>) -> anyhow::Result<(Vec<Table2Row>, String)> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            Ok((parse_table2(&text)?, text))
        }
        None => Ok((table2(), favkit_core::fixtures::TABLE2_CSV.to_string())),
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Favorable(b) => {
            let (items, raw) = load_batch(&b, false)?;
            let v = cmd_favorable(&items, b.jobs.unwrap_or_else(default_jobs));
            emit(&RunManifest::new("favorable", &raw, None, v), cli.format)
        }
        Command::Amiable { batch, search } => {
            let (items, raw) = load_batch(&batch, true)?;
            let cfg = search.config();
            let rc = RunConfig {
                grh: cfg.grh,
                grh_constant: cfg.grh_constant,
                timeout_secs: search.timeout_secs,
                seed: cfg.seed,
            };
            let v = cmd_amiable(&items, &cfg, batch.jobs.unwrap_or_else(default_jobs));
            emit(&RunManifest::new("amiable", &raw, Some(rc), v), cli.format)
        }
        Command::VerifyAll { corner_table, table2 } => {
            let corners = match corner_table {
                Some(p) => parse_corner_table(&std::fs::read_to_string(p)?)?,
                None => default_corner_table(),
            };
            let (t2, _) = load_table2(&table2)?;
            let c = cmd_verify_all(&corners, &t2, default_jobs())?;
            print_json(&c)?;
            Ok(certificate_exit(&c))
        }
        Command::Groups(GroupsCmd::Verify) => {
            let c = groups_certificate_with(&default_corner_table())?;
            let cert = Certificate::new(vec![Section { name: "groups".into(), claims: c.claims.clone() }]);
            print_json(&json!({"certificate": c, "passed": cert.passed}))?;
            Ok(certificate_exit(&cert))
        }
        Command::Honda(HondaCmd::Classify { params, p }) => {
            print_json(&cmd_honda_classify(&params, p)?)?;
            Ok(0)
        }
        Command::Honda(HondaCmd::Table) => {
            let rows = honda_table()?;
            match cli.format {
                Format::Json => print_json(&rows)?,
                Format::Csv => print!("{}", honda_table_csv(&rows)?),
            }
            Ok(0)
        }
        Command::Curves { table2, decoys, seed } => {
            let (rows, _) = load_table2(&table2)?;
            let claims = table2_claims(&rows, decoys, seed, default_jobs());
            let cert = Certificate::new(vec![Section { name: "table2".into(), claims }]);
            print_json(&cert)?;
            Ok(certificate_exit(&cert))
        }
        Command::Cremona { input, search } => {
            let text = std::fs::read_to_string(&input)?;
            let curves = parse_cremona(&text)?;
            let cfg = search.config();
            let entries = cremona_batch(&curves, &cfg)?;
            let verdicts = entries
                .iter()
                .map(|e| Verdict {
                    item: format!("{} {}", e.curve.conductor, e.curve.label),
                    status: Status::Computed,
                    expected: None,
                    computed: match &e.outcome {
                        CremonaOutcome::Holds { .. } => "holds".into(),
                        CremonaOutcome::Fails { .. } => "fails".into(),
                        CremonaOutcome::NotApplicable { .. } => "not-applicable".into(),
                    },
                    detail: serde_json::to_value(e).unwrap_or(Value::Null),
                })
                .collect();
            let rc = RunConfig {
                grh: cfg.grh,
                grh_constant: cfg.grh_constant,
                timeout_secs: search.timeout_secs,
                seed: cfg.seed,
            };
            emit(&RunManifest::new("cremona", &text, Some(rc), verdicts), cli.format)
        }
    }
}
