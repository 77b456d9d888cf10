//! Command-line interface: `classify`, `verify`, `orbit`, `enumerate` and
//! `report`.
//!
//! Exit codes: 0 success, 1 verification mismatch (or an internal
//! contradiction), 2 input error, 3 undecidable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::criteria::{self, classify, classify_datum, CriteriaError, Flag, Tri, Verdict};
use crate::families::{enumerate, FamilyKind, PairSpec};
use crate::pairdatum::{HRootSystem, MultRoot, RestrictedDatum};
use crate::report::{self, ReportLine, Summary};
use crate::rootsys::{self, RootSystemSpec, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

const GRAMMAR: &str = "\
Pair specs (whitespace-separated, family keyword first):
  upq F i j k l        (u(i+j,k+l;F), u(i,k;F)+u(j,l;F)), F in R C H
  glgl F p q           (gl(p+q,F), gl(p,F)+gl(q,F))
  somn m n             (o(m+n,C), o(m,C)+o(n,C))
  sostar p q           (o*(2p+2q), o*(2p)+o*(2q))
  ugl C|H|spR|ostar|R n
                       (u(n,n;F), gl(n,F)), (sp(n,R), gl(n,R)),
                       (o*(4n), gl(n,H)), (o(n,n), gl(n,R))
  oustar p q           (o*(2p+2q), u(p,q))
  sp R|C p q           (sp(p+q,F), sp(p,F)+sp(q,F))
  rank1 ROW[^c] [m | p q]
                       rank-one table row (I_R I_C I_H I_O SL_R SP_R F4_4 II
                       SL_C SP_C F4_C III SU_STAR E6_26 SL_C3 SU33 E6_2);
                       ^c selects the c-dual
  exc7 G/H             exceptional table row, e.g. exc7 e6(-14)/so(8,2)+iR
  e6so91               (e6(-26), so(9,1)+R)
  group FORM           (g'+g', diag g')
  riemannian FORM      (g, k) with k maximal compact
FORM: compact X n | so p q | su p q | sp p q | slR n | slC n

Exit codes: 0 success, 1 mismatch, 2 input error, 3 undecidable.";

#[derive(Debug, Parser)]
#[command(
    name = "realspher",
    version,
    about = "Real-spherical conditions (QP), (PP) and (BB) for reductive symmetric pairs",
    after_long_help = GRAMMAR
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a pair spec (or, with --datum, a bare restricted datum).
    Classify {
        /// The pair spec, e.g. `upq R 2 1 3 0`.
        spec: Vec<String>,
        /// JSON file with a restricted datum instead of a spec.
        #[arg(long, conflicts_with = "spec")]
        datum: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run every regression suite and the catalog comparison.
    Verify {
        /// Catalog file; defaults to the shipped catalog.
        #[arg(long, env = "REALSPHER_CATALOG")]
        catalog: Option<PathBuf>,
        /// Parameter bound for enumerated families.
        #[arg(long, default_value_t = 6)]
        bounds: u32,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Print the Weyl orbit size of a weight, or c(Δ) with --min.
    Orbit {
        /// Root system, e.g. `E8` or `A3`.
        system: String,
        /// Comma-separated weight in the system's ambient coordinates.
        #[arg(allow_hyphen_values = true)]
        weight: Option<String>,
        /// Print the minimum nonzero orbit size instead.
        #[arg(long)]
        min: bool,
    },
    /// List the canonical specs of a family with their verdicts.
    Enumerate {
        /// Family, e.g. `upq R`, `somn`, `rank1`.
        #[arg(required = true)]
        family: Vec<String>,
        #[arg(long, default_value_t = 3)]
        bounds: u32,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare the catalog's expected verdicts with computed ones.
    Report {
        #[arg(long, env = "REALSPHER_CATALOG")]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

/// JSON input for `classify --datum`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumInput {
    rank_a_h: usize,
    rank_a_g: usize,
    #[serde(default)]
    h_root_system: Option<String>,
    #[serde(default)]
    m_g: Option<u32>,
    roots: Vec<RootInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootInput {
    weight: String,
    m_plus: u32,
    m_minus: u32,
}

fn read_datum(path: &PathBuf) -> Result<RestrictedDatum, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let input: DatumInput = serde_json::from_str(&text).map_err(|e| format!("invalid datum JSON: {e}"))?;
    let roots = input
        .roots
        .iter()
        .map(|r| {
            let w: Weight = r.weight.parse().map_err(|e| format!("weight {:?}: {e}", r.weight))?;
            Ok(MultRoot::new(w, r.m_plus, r.m_minus))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let h = match input.h_root_system {
        Some(s) => match s.parse::<RootSystemSpec>() {
            Ok(spec) => HRootSystem::Declared(spec),
            Err(_) => HRootSystem::Other(s),
        },
        None => HRootSystem::Other("unspecified".into()),
    };
    RestrictedDatum::new(input.rank_a_h, input.rank_a_g, roots, h, input.m_g).map_err(|e| format!("invalid datum: {e}"))
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    spec: Option<String>,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_verdict(out: &mut dyn Write, spec: Option<String>, v: &Verdict, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&ClassifyOutput { spec, verdict: v }).expect("verdict serialises");
            writeln!(out, "{s}")
        }
        Format::Tsv => {
            if let Some(s) = spec {
                writeln!(out, "spec\t{s}")?;
            }
            for flag in Flag::ALL {
                writeln!(out, "{flag}\t{}", v.get(flag))?;
            }
            writeln!(out, "fm\t{}", yes_no(v.fm))?;
            writeln!(out, "bm\t{}", yes_no(v.bm))?;
            for p in &v.provenance {
                let flag = p.flag.map(|f| f.as_str()).unwrap_or("*");
                writeln!(
                    out,
                    "provenance\t{flag}\t{}\t{}",
                    p.rule_id,
                    p.citation.replace('\t', " ")
                )?;
            }
            for t in &v.tests {
                writeln!(out, "test\t{}\t{}\t{}", t.id, t.outcome, t.witness.replace('\t', " "))?;
            }
            Ok(())
        }
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    if Flag::ALL.iter().any(|f| v.get(*f) == Tri::Unknown) {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, String> {
    match path {
        Some(p) => Catalog::load(p).map_err(|e| e.to_string()),
        None => Ok(Catalog::shipped()),
    }
}

fn emit_report(out: &mut dyn Write, lines: &[ReportLine], format: Format) -> std::io::Result<i32> {
    let text = match format {
        Format::Tsv => report::to_tsv(lines),
        Format::Json => report::to_json(lines),
    };
    out.write_all(text.as_bytes())?;
    Ok(if Summary::of(lines).mismatch > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn run_command(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Classify { spec, datum, format } => {
            if let Some(path) = datum {
                return match read_datum(&path) {
                    Ok(d) => {
                        let v = classify_datum(&d);
                        print_verdict(out, None, &v, format)?;
                        Ok(verdict_exit(&v))
                    }
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        Ok(EXIT_INPUT)
                    }
                };
            }
            let text = spec.join(" ");
            let parsed: PairSpec = match text.parse() {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "error: cannot parse {text:?}: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            match classify(&parsed) {
                Ok(v) => {
                    print_verdict(out, Some(parsed.to_string()), &v, format)?;
                    Ok(verdict_exit(&v))
                }
                Err(e @ CriteriaError::ContradictionDetected { .. }) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_MISMATCH)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_INPUT)
                }
            }
        }
        Command::Verify {
            catalog,
            bounds,
            format,
        } => {
            let catalog = match load_catalog(&catalog) {
                Ok(c) => c,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let mut lines: Vec<ReportLine> = criteria::verify_suites(bounds)
                .into_iter()
                .flat_map(|s| s.lines)
                .collect();
            lines.extend(catalog.report());
            emit_report(out, &lines, format)
        }
        Command::Report { catalog, format } => match load_catalog(&catalog) {
            Ok(c) => emit_report(out, &c.report(), format),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_INPUT)
            }
        },
        Command::Orbit { system, weight, min } => {
            let spec: RootSystemSpec = match system.parse() {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let rs = match rootsys::cached(spec) {
                Ok(rs) => rs,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            if min {
                writeln!(out, "{}", rs.min_orbit_size())?;
                return Ok(EXIT_OK);
            }
            let Some(weight) = weight else {
                writeln!(err, "error: a weight is required unless --min is given")?;
                return Ok(EXIT_INPUT);
            };
            let result = weight
                .parse::<Weight>()
                .map_err(|e| e.to_string())
                .and_then(|w| rs.orbit_size(&w).map_err(|e| e.to_string()));
            match result {
                Ok(n) => {
                    writeln!(out, "{n}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_INPUT)
                }
            }
        }
        Command::Enumerate { family, bounds, format } => {
            let kind: FamilyKind = match family.join(" ").parse() {
                Ok(k) => k,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            #[derive(Serialize)]
            struct Row {
                spec: String,
                qp: Tri,
                pp: Tri,
                bb: Tri,
            }
            let mut rows = Vec::new();
            for spec in enumerate(kind, bounds) {
                match classify(&spec) {
                    Ok(v) => rows.push(Row {
                        spec: spec.to_string(),
                        qp: v.qp,
                        pp: v.pp,
                        bb: v.bb,
                    }),
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        return Ok(EXIT_MISMATCH);
                    }
                }
            }
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialise"))?,
                Format::Tsv => {
                    writeln!(out, "spec\tqp\tpp\tbb")?;
                    for r in &rows {
                        writeln!(out, "{}\t{}\t{}\t{}", r.spec, r.qp, r.pp, r.bb)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses arguments and runs a command, writing to the given streams.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match run_command(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["realspher"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(run_args(&["orbit", "E8", "--min"]), (0, "240\n".into(), String::new()));
        assert_eq!(run_args(&["orbit", "A3", "1,0,0,0"]).1, "4\n");
        assert_eq!(run_args(&["orbit", "B2", "0,0"]).1, "1\n");
        assert_eq!(run_args(&["orbit", "B2", "-1,0"]).1, "4\n");
        assert_eq!(run_args(&["orbit", "B2", "1,0,0"]).0, 2);
    }

    #[test]
    fn classify_examples() {
        let (code, out, _) = run_args(&["classify", "upq", "R", "2", "1", "3", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("qp\tyes\npp\tyes\nbb\tyes\n"), "{out}");
        let (code, out, _) = run_args(&["classify", "rank1 Iw_O"]);
        assert_eq!(code, 0);
        assert!(out.contains("qp\tyes\npp\tyes\n"), "{out}");
        let (code, out, _) = run_args(&["classify", "upq R 2 2 2 1"]);
        assert_eq!(code, 0);
        assert!(out.contains("qp\tno\n"), "{out}");
        let (code, _, err) = run_args(&["classify", "upq R 2 x"]);
        assert_eq!(code, 2);
        assert!(err.contains("token 4"), "{err}");
    }
}
