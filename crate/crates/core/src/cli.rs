//! The `qf` command line.
//!
//! Exit codes: 0 on success, 1 when the input fails a domain check (not a
//! quandle, not a cocycle, …), 2 on usage errors. Files named `-` or omitted
//! are read from stdin.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand};

use crate::cohomology::{cocycle_space, homology, CocycleTable, Theory};
use crate::constructions::{self, AbelianGroupSpec};
use crate::enumeration::{self, EnumerationOptions, Filter};
use crate::error::Error;
use crate::extensions::{abelian_extension, extract_cocycle};
use crate::group::FiniteGroup;
use crate::knots::{cocycle_invariant, colorings, parse_pd};
use crate::loops::{distributivity_flags, find_identity, moufang_check, validate_quasigroup, FiniteLoop};
use crate::quandle::{are_isomorphic, quandle_violations, Quandle};
use crate::table::CayleyTable;

#[derive(Parser, Debug)]
#[command(name = "qf", version, about = "Finite quandles, quasigroups and loops")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print a quandle table from a named family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Verify the quandle axioms and print structural flags.
    Check { file: Option<String> },
    /// Quandles of a given order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit order 9.
        #[arg(long)]
        allow_long: bool,
    },
    /// Alexander quandles of a given order up to isomorphism.
    EnumerateAlexander {
        order: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Decide isomorphism and print a witness map.
    Iso { first: String, second: String },
    /// Integral homology, or cocycles and cohomology with `--mod`.
    Cohomology {
        file: Option<String>,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Use the rack complex (homology only).
        #[arg(long)]
        rack: bool,
        /// Print a generating set of cocycles.
        #[arg(long)]
        basis: bool,
    },
    /// Abelian extension of a quandle by a 2-cocycle.
    Extend {
        quandle: String,
        cocycle: String,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Read a 2-cocycle off a covering `E -> X`.
    Extract {
        cover: String,
        base: String,
        /// Images of the elements of E, space or comma separated.
        #[arg(long)]
        map: String,
        /// Fiber coordinate of each element of E; searched for when absent.
        #[arg(long)]
        section: Option<String>,
    },
    /// State-sum invariant of a knot diagram.
    Invariant {
        #[arg(long)]
        knot: String,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: String,
        #[arg(long = "mod", default_value_t = 2)]
        modulus: u64,
    },
    /// Quasigroup, loop and Moufang checks.
    LoopCheck { file: Option<String> },
}

#[derive(Subcommand, Debug)]
enum Family {
    Trivial { n: usize },
    Dihedral { n: usize },
    /// `Z_q[T^{±1}]/(f)` for a monic `f`, coefficients from the constant term up.
    Alexander {
        q: usize,
        #[arg(allow_negative_numbers = true, required = true)]
        coeffs: Vec<i64>,
    },
    /// Conjugation quandle of the symmetric group `S_k`.
    Conjugation { k: usize },
    /// Core quandle of the cyclic group `Z_n`.
    Core { n: usize },
    /// Galkin quandle on `Z_3 × Z_n`.
    Galkin { n: usize, c1: usize, c2: usize },
    /// Coxeter quandle over `F_p`; the form is given as rows separated by `;`.
    Coxeter {
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// The Zassenhaus commutative Moufang loop of order 81 (a loop table).
    Zassenhaus,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs the command line with `argv[0]` the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn read_input(path: Option<&str>) -> std::result::Result<String, Failure> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{p}: {e}"))),
    }
}

fn read_quandle(path: Option<&str>) -> std::result::Result<Quandle, Failure> {
    Ok(Quandle::verify(CayleyTable::parse(&read_input(path)?)?)?)
}

fn numbers(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| Failure::Usage(format!("bad number '{w}'"))))
        .collect()
}

fn dispatch(cmd: Cmd, out: Out) -> std::result::Result<(), Failure> {
    match cmd {
        Cmd::Construct { family } => construct(family, out),
        Cmd::Check { file } => check(file.as_deref(), out),
        Cmd::Enumerate {
            order,
            filter,
            count_only,
            jobs,
            allow_long,
        } => {
            let opts = EnumerationOptions {
                jobs,
                allow_long,
                progress: false,
            };
            let r = enumeration::enumerate_quandles_with(order, filter, &opts)?;
            print_tables(&r.tables, count_only, out)
        }
        Cmd::EnumerateAlexander { order, count_only } => {
            let r = enumeration::enumerate_alexander(order)?;
            print_tables(&r.tables, count_only, out)
        }
        Cmd::Iso { first, second } => {
            let a = read_quandle(Some(&first))?;
            let b = read_quandle(Some(&second))?;
            match are_isomorphic(&a, &b) {
                Some(f) => {
                    writeln!(out, "isomorphic")?;
                    let maps: Vec<String> = f.images().iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
                    writeln!(out, "{}", maps.join(" "))?;
                }
                None => writeln!(out, "not isomorphic")?,
            }
            Ok(())
        }
        Cmd::Cohomology {
            file,
            degree,
            modulus,
            rack,
            basis,
        } => {
            let q = read_quandle(file.as_deref())?;
            match modulus {
                None => {
                    if basis {
                        return Err(Failure::Usage("--basis needs --mod".into()));
                    }
                    let theory = if rack { Theory::Rack } else { Theory::Quandle };
                    writeln!(out, "H_{degree} = {}", homology(&q, degree, theory)?)?;
                }
                Some(m) => {
                    if rack {
                        return Err(Failure::Usage("cocycle groups use the quandle complex; drop --rack".into()));
                    }
                    let s = cocycle_space(&q, degree, m)?;
                    let cyc = |v: &[u64]| {
                        if v.is_empty() {
                            "0".to_string()
                        } else {
                            v.iter().map(|d| format!("Z_{d}")).collect::<Vec<_>>().join(" + ")
                        }
                    };
                    writeln!(out, "Z^{degree} = {}", cyc(&s.cocycle_invariants()))?;
                    writeln!(out, "H^{degree} = {}", cyc(&s.cohomology))?;
                    if basis {
                        for (i, (g, o)) in s.cocycle_generators.iter().enumerate() {
                            writeln!(out, "# generator {i}, order {o}")?;
                            out.write_all(g.to_text().as_bytes())?;
                        }
                    }
                }
            }
            Ok(())
        }
        Cmd::Extend {
            quandle,
            cocycle,
            modulus,
        } => {
            let x = read_quandle(Some(&quandle))?;
            let phi = CocycleTable::parse(&read_input(Some(&cocycle))?, x.order(), modulus)?;
            let e = abelian_extension(&x, modulus, &phi)?;
            out.write_all(e.to_text().as_bytes())?;
            Ok(())
        }
        Cmd::Extract {
            cover,
            base,
            map,
            section,
        } => {
            let e = read_quandle(Some(&cover))?;
            let x = read_quandle(Some(&base))?;
            let p = numbers(&map)?;
            let s = section.as_deref().map(numbers).transpose()?;
            let phi = extract_cocycle(&e, &x, &p, s.as_deref())?;
            writeln!(out, "# modulus {}", phi.modulus)?;
            out.write_all(phi.to_text().as_bytes())?;
            Ok(())
        }
        Cmd::Invariant {
            knot,
            quandle,
            cocycle,
            modulus,
        } => {
            let k = parse_pd(&read_input(Some(&knot))?)?;
            let q = read_quandle(Some(&quandle))?;
            let phi = CocycleTable::parse(&read_input(Some(&cocycle))?, q.order(), modulus)?;
            let v = cocycle_invariant(&k, &q, &phi)?;
            writeln!(out, "{v}")?;
            writeln!(out, "colorings: {}", colorings(&k, &q).len())?;
            Ok(())
        }
        Cmd::LoopCheck { file } => loop_check(file.as_deref(), out),
    }
}

fn print_tables(tables: &[CayleyTable], count_only: bool, out: Out) -> std::result::Result<(), Failure> {
    if count_only {
        writeln!(out, "{}", tables.len())?;
    } else {
        for (i, t) in tables.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            out.write_all(t.to_text().as_bytes())?;
        }
    }
    Ok(())
}

fn construct(family: Family, out: Out) -> std::result::Result<(), Failure> {
    let table = match family {
        Family::Trivial { n } => constructions::trivial(n)?.into_table(),
        Family::Dihedral { n } => constructions::dihedral(n)?.into_table(),
        Family::Alexander { q, coeffs } => constructions::alexander_poly(q, &coeffs)?.into_table(),
        Family::Conjugation { k } => constructions::conjugation(&FiniteGroup::symmetric(k)?)?.into_table(),
        Family::Core { n } => constructions::core(&FiniteGroup::cyclic(n)?)?.into_table(),
        Family::Galkin { n, c1, c2 } => constructions::galkin(&AbelianGroupSpec::cyclic(n)?, c1, c2)?.into_table(),
        Family::Coxeter { p, form } => {
            let rows = form
                .split(';')
                .map(|r| {
                    r.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|w| !w.is_empty())
                        .map(|w| w.parse::<i64>().map_err(|_| Failure::Usage(format!("bad form entry '{w}'"))))
                        .collect::<std::result::Result<Vec<i64>, Failure>>()
                })
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            constructions::coxeter_fp(p, &rows)?.into_table()
        }
        Family::Zassenhaus => crate::loops::zassenhaus81().quasigroup().table().clone(),
    };
    out.write_all(table.to_text().as_bytes())?;
    Ok(())
}

fn check(path: Option<&str>, out: Out) -> std::result::Result<(), Failure> {
    let t = CayleyTable::parse(&read_input(path)?)?;
    let v = quandle_violations(&t);
    if !v.is_empty() {
        writeln!(out, "quandle: false")?;
        for x in &v {
            writeln!(out, "  {x}")?;
        }
        return Err(Failure::Domain("not a quandle".into()));
    }
    let q = Quandle::verify(t)?;
    let r = q.classify()?;
    writeln!(out, "quandle: true")?;
    writeln!(out, "order: {}", q.order())?;
    writeln!(out, "kei: {}", r.kei)?;
    writeln!(out, "latin: {}", r.latin)?;
    writeln!(out, "medial: {}", r.medial)?;
    writeln!(out, "connected: {}", r.connected)?;
    writeln!(out, "faithful: {}", r.faithful)?;
    match r.simple {
        Some(s) => writeln!(out, "simple: {s}")?,
        None => writeln!(out, "simple: unknown")?,
    }
    writeln!(out, "|Inn|: {}", r.inner_order)?;
    writeln!(out, "|Transv|: {}", r.transvection_order)?;
    writeln!(out, "columns: {}", q.column_cycles())?;
    Ok(())
}

fn witness(w: Option<[usize; 3]>) -> String {
    match w {
        None => "true".into(),
        Some([x, y, z]) => format!("false ({x}, {y}, {z})"),
    }
}

fn loop_check(path: Option<&str>, out: Out) -> std::result::Result<(), Failure> {
    let t = CayleyTable::parse(&read_input(path)?)?;
    let q = match validate_quasigroup(&t) {
        Ok(q) => q,
        Err(e) => {
            writeln!(out, "quasigroup: false")?;
            return Err(e.into());
        }
    };
    writeln!(out, "quasigroup: true")?;
    let d = distributivity_flags(&q);
    writeln!(out, "left distributive: {}", d.left)?;
    writeln!(out, "right distributive: {}", d.right)?;
    writeln!(out, "medial: {}", q.is_medial())?;
    writeln!(out, "commutative: {}", q.is_commutative())?;
    writeln!(out, "associative: {}", witness(q.associativity_witness()))?;
    match find_identity(&q) {
        None => writeln!(out, "loop: false")?,
        Some(e) => {
            writeln!(out, "loop: true (identity {e})")?;
            let l = FiniteLoop::from_quasigroup(q)?;
            let m = moufang_check(&l);
            writeln!(out, "moufang 1: {}", witness(m.id1))?;
            writeln!(out, "moufang 2: {}", witness(m.id2))?;
            writeln!(out, "moufang 3: {}", witness(m.id3))?;
            writeln!(out, "exponent: {}", l.exponent())?;
        }
    }
    Ok(())
}
