use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use weylphi::elliptic::{d_c_classical, excellent_decomposition, validate_excellent, w_from_partition, ClassicalType, Variant};
use weylphi::fq::GroupKind;
use weylphi::partition::Partition;
use weylphi::phi::{elliptic_labels, phi_full};
use weylphi::unipotent::{is_distinguished, UnipotentLabel};
use weylphi::verify::{self, Options, Record, Status, Suite};
use weylphi::weyl::classes::ClassLabel;
use weylphi::weyl::{Family, WeylElement, WeylGroup};

const LABELS: &str = "\
Class labels:
  A        cycle type of the permutation, e.g. \"[3,1]\"
  B, C, D  signed cycle type as positive;negative lists, written \"[α];[β]\"
           or \"(α;β)\", e.g. \"[];[2,1]\", \"(1;2)\", \"(;2,2)\".  The two
           classes of W(D_n) inside a very even class are \"#1\" and \"#2\".
  G2..E8   characteristic polynomial of w on the reflection representation as
           dotted cyclotomic orders, e.g. \"2.2.6\"; a trailing ' or ''
           separates classes with the same polynomial.  The family may prefix
           the label, as in \"F4:2.2.6'\".

Environment:
  WEYLPHI_BUDGET  cap on the size of exhaustive enumerations (default 1000000)";

#[derive(Parser)]
#[command(name = "weylphi", version, about = "Weyl group classes, unipotent classes and the map Φ", after_help = LABELS)]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// One JSON object per line.
    #[arg(long, global = true)]
    json: bool,
    /// Comma-separated values with a header row.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// C, d_C and Φ(C) for one class or every class of W.
    #[command(after_help = LABELS)]
    Phi {
        /// A, B, C, D, G2, F4, E6, E7 or E8.
        #[arg(long = "type")]
        family: Family,
        /// Required for A to D.
        #[arg(long)]
        rank: Option<usize>,
        /// Characteristic of the base field (0 for characteristic zero).
        #[arg(long = "char", default_value_t = 0)]
        ch: u32,
        #[arg(long)]
        class: Option<String>,
        /// Only the elliptic classes.
        #[arg(long)]
        elliptic: bool,
    },
    /// Excellent decomposition of w_{p*}⁻¹ in W(B_n), W(C_n) or W(D_n).
    Excellent {
        #[arg(long = "type")]
        family: Family,
        #[arg(long)]
        rank: usize,
        /// Partition of the rank, e.g. "3,2,1".
        #[arg(long)]
        partition: Partition,
        /// a: one palindrome per part; b: parts paired (needed for D).
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Run verification suites; exits nonzero when a check fails.
    Verify {
        #[arg(long, value_enum, num_args = 1.., default_values_t = [SuiteArg::Jordan, SuiteArg::Identities, SuiteArg::Tables, SuiteArg::Fq, SuiteArg::Isotropy])]
        suite: Vec<SuiteArg>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict fq and isotropy to one group: sl3, sp4 or so5.
        #[arg(long)]
        group: Option<GroupKind>,
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Excellent,
    Jordan,
    Identities,
    Tables,
    Fq,
    Isotropy,
    Csmall,
    Canonical,
    Conjecture,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Excellent => Suite::Excellent,
            SuiteArg::Jordan => Suite::Jordan,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Fq => Suite::Fq,
            SuiteArg::Isotropy => Suite::Isotropy,
            SuiteArg::Csmall => Suite::Csmall,
            SuiteArg::Canonical => Suite::Canonical,
            SuiteArg::Conjecture => Suite::Conjecture,
        }
    }
}

type CliResult<T = ()> = Result<T, Box<dyn std::error::Error>>;

#[derive(Clone, Copy)]
enum Out {
    Text,
    Json,
    Csv,
}

/// Rows of string cells under fixed headers.
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn write(&self, out: Out, w: &mut impl Write) -> CliResult {
        match out {
            Out::Text => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| self.rows.iter().map(|r| r[i].chars().count()).chain([self.headers[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: Vec<&str>| {
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
                };
                writeln!(w, "{}", line(self.headers.clone()))?;
                for r in &self.rows {
                    writeln!(w, "{}", line(r.iter().map(String::as_str).collect()))?;
                }
            }
            Out::Json => {
                for r in &self.rows {
                    let obj: Map<String, Value> = self.headers.iter().zip(r).map(|(h, c)| (h.to_string(), Value::String(c.clone()))).collect();
                    writeln!(w, "{}", Value::Object(obj))?;
                }
            }
            Out::Csv => {
                let mut c = csv::Writer::from_writer(w);
                c.write_record(&self.headers)?;
                for r in &self.rows {
                    c.write_record(r)?;
                }
                c.flush()?;
            }
        }
        Ok(())
    }
}

fn group(family: Family, rank: Option<usize>) -> CliResult<WeylGroup> {
    let rank = match (family.fixed_rank(), rank) {
        (Some(r), None) => r,
        (Some(r), Some(k)) if r == k => r,
        (Some(r), Some(k)) => return Err(format!("{family} has rank {r}, not {k}").into()),
        (None, Some(k)) => k,
        (None, None) => return Err(format!("--rank is required for type {family}").into()),
    };
    Ok(WeylGroup::of(family, rank)?)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn cmd_phi(family: Family, rank: Option<usize>, ch: u32, class: Option<String>, elliptic: bool) -> CliResult<Table> {
    let g = group(family, rank)?;
    let labels = match class {
        Some(s) => vec![ClassLabel::parse(&s, family)?],
        None if elliptic => elliptic_labels(&g)?,
        None => g.class_labels()?,
    };
    let basic: BTreeSet<UnipotentLabel> = elliptic_labels(&g)?.iter().map(|l| phi_full(&g, l, ch)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for l in labels {
        let ell = g.is_elliptic(&l)?;
        if elliptic && !ell {
            continue;
        }
        let d = g.d_c(&l).map(|d| d.to_string()).unwrap_or_else(|_| "-".into());
        let (u, dist, is_basic) = match phi_full(&g, &l, ch) {
            Ok(u) => {
                let dist = is_distinguished(&u, family, ch).map(yes_no).unwrap_or_else(|_| "-".into());
                let b = yes_no(basic.contains(&u));
                (u.to_string(), dist, b)
            }
            Err(e) => (format!("unavailable: {e}"), "-".into(), "-".into()),
        };
        rows.push(vec![l.to_string(), yes_no(ell), d, u, dist, is_basic]);
    }
    Ok(Table { headers: vec!["class", "elliptic", "d_C", "phi", "distinguished", "basic"], rows })
}

fn cmd_excellent(family: Family, rank: usize, p: Partition, variant: Option<VariantArg>) -> CliResult<Table> {
    if p.size() as usize != rank {
        return Err(format!("{p} is not a partition of {rank}").into());
    }
    let ty = ClassicalType::from_family(family)?;
    let variant = match variant {
        Some(VariantArg::A) => Variant::A,
        Some(VariantArg::B) => Variant::B,
        None if ty == ClassicalType::D => Variant::B,
        None => Variant::A,
    };
    let g = WeylGroup::of(family, rank)?;
    let dec = excellent_decomposition(&p, ty, variant)?;
    let w = WeylElement::Perm(w_from_partition(&p, 0).inverse());
    let rep = validate_excellent(&dec, &w, &g)?;
    let d = d_c_classical(&p, ty)?;
    let ok = rep.passed() && rep.letters == d;
    Ok(Table {
        headers: vec!["type", "partition", "word", "length", "d_C", "valid"],
        rows: vec![vec![format!("{family}{rank}"), p.to_string(), dec.to_string(), rep.length.to_string(), d.to_string(), yes_no(ok)]],
    })
}

fn cmd_verify(suites: &[SuiteArg], opts: &Options, out: Out, w: &mut impl Write) -> CliResult<bool> {
    let mut ok = true;
    let mut all: Vec<Record> = Vec::new();
    for &s in suites {
        let suite: Suite = s.into();
        let start = Instant::now();
        let records = verify::run(suite, opts)?;
        let failed = records.iter().filter(|r| r.status == Status::Fail).count();
        eprintln!("{suite}: {} records, {failed} failed, {:.2}s", records.len(), start.elapsed().as_secs_f64());
        ok &= verify::all_pass(&records);
        all.extend(records);
    }
    match out {
        Out::Json => {
            for r in &all {
                writeln!(w, "{}", serde_json::to_string(r)?)?;
            }
        }
        _ => {
            let detail = |r: &Record| {
                r.counterexample.as_ref().or(r.witness.as_ref()).map(|v| v.to_string()).unwrap_or_default()
            };
            let t = Table {
                headers: vec!["suite", "case", "status", "detail"],
                rows: all
                    .iter()
                    .map(|r| {
                        let d = detail(r);
                        let d = if matches!(out, Out::Text) && d.chars().count() > 100 { format!("{}…", d.chars().take(100).collect::<String>()) } else { d };
                        vec![r.suite.clone(), r.case.clone(), r.status.to_string(), d]
                    })
                    .collect(),
            };
            t.write(out, w)?;
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = if cli.format.json {
        Out::Json
    } else if cli.format.csv {
        Out::Csv
    } else {
        Out::Text
    };
    let stdout = io::stdout();
    let mut w = stdout.lock();
    let result = match cli.command {
        Command::Phi { family, rank, ch, class, elliptic } => cmd_phi(family, rank, ch, class, elliptic).and_then(|t| t.write(out, &mut w)).map(|_| true),
        Command::Excellent { family, rank, partition, variant } => {
            cmd_excellent(family, rank, partition, variant).and_then(|t| t.write(out, &mut w)).map(|_| true)
        }
        Command::Verify { suite, max_n, group, q } => cmd_verify(&suite, &Options { max_n, group, q }, out, &mut w),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
