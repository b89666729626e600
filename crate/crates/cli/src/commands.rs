use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use quiverrank::{
    decompose, global_tensor, hom_space, limit, max_epi_sub, max_mono_quot, pushforward_rank, subquiver_rank,
    ClassRegistry, Error, Matrix, RankFn, Rational, Representation, Subquiver,
};

use crate::document::{dims_label, print_rep, Document};

type R = Representation<Rational>;

#[derive(Debug, Parser)]
#[command(name = "quiverrank", version, about = "Global tensor functor, rank functions and decompositions of quiver representations")]
pub struct Cli {
    /// Input file in the quiver language.
    pub file: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Delta,
    Nabla,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchurOp {
    Ext,
    Sym,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the file and summarize its contents.
    Check,
    /// Global rank, or the rank along a subquiver or through a quiver morphism.
    Rank {
        #[arg(long)]
        rep: String,
        /// Connected subquiver as `v1,v2|a,b`.
        #[arg(long, conflicts_with = "via")]
        sub: Option<String>,
        /// Name of a quiver morphism into the representation's quiver.
        #[arg(long)]
        via: Option<String>,
    },
    /// Maximal epimorphic subrepresentation, maximal monomorphic quotient and their image.
    Gamma {
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum)]
        show: Option<Show>,
    },
    /// Tensor product of two representations.
    Tensor {
        #[arg(long = "rep", required = true)]
        reps: Vec<String>,
        /// Decompose the product and cross-check it against the rank functions.
        #[arg(long)]
        decompose: bool,
    },
    /// Krull–Schmidt decomposition.
    Decompose {
        #[arg(long)]
        rep: String,
        /// Print every summand as a `rep` block.
        #[arg(long)]
        show: bool,
    },
    /// Basis of the space of morphisms between two representations.
    Hom {
        #[arg(long = "rep", required = true)]
        reps: Vec<String>,
    },
    /// Exterior or symmetric power.
    Schur {
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum)]
        op: SchurOp,
        #[arg(long)]
        k: usize,
    },
    /// Limit, colimit and the canonical map between them.
    Limits {
        #[arg(long)]
        rep: String,
    },
    /// Connected subquivers in canonical order.
    Subquivers {
        #[arg(long)]
        quiver: String,
    },
    /// Rank functions evaluated on each representation.
    Ringtable {
        #[arg(long, num_args = 1.., required = true)]
        reps: Vec<String>,
        /// One column per connected subquiver instead of the global rank alone.
        #[arg(long)]
        all_subquivers: bool,
        /// Add a pushforward column for each named quiver morphism.
        #[arg(long)]
        via: Vec<String>,
    },
}

/// Text and exit status of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn failure(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { stdout: String::new(), stderr, code }
    }
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

fn rep<'a>(doc: &'a Document, name: &str) -> Run<&'a R> {
    match doc.rep(name) {
        Some(e) => Ok(&e.rep),
        None => usage(format!("no representation named `{name}`")),
    }
}

fn quiver_name<'a>(doc: &'a Document, name: &str) -> &'a str {
    doc.rep(name).map_or("", |e| e.quiver.as_str())
}

fn pair<'a>(doc: &'a Document, names: &[String]) -> Run<(&'a R, &'a R)> {
    match names {
        [a, b] => Ok((rep(doc, a)?, rep(doc, b)?)),
        _ => usage(format!("expected exactly two --rep arguments, got {}", names.len())),
    }
}

fn parse_sub(v: &R, spec: &str) -> Run<Subquiver> {
    let spec = spec.trim().trim_start_matches('{').trim_end_matches('}');
    let (vs, arrs) = spec.split_once('|').unwrap_or((spec, ""));
    let names = |s: &str| -> Vec<String> {
        s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
    };
    let (vs, arrs) = (names(vs), names(arrs));
    let vs: Vec<&str> = vs.iter().map(String::as_str).collect();
    let arrs: Vec<&str> = arrs.iter().map(String::as_str).collect();
    Ok(Subquiver::from_names(v.quiver(), &vs, &arrs)?)
}

/// Runs a command against a parsed document.
pub fn run(command: &Command, doc: &Document) -> Outcome {
    match dispatch(command, doc) {
        Ok(text) => Outcome::ok(text),
        Err(Failure::Usage(msg)) => Outcome::failure(EXIT_USAGE, format!("error: {msg}")),
        Err(Failure::Math(Error::Undecided(msg))) => Outcome::failure(EXIT_UNDECIDED, format!("undecided: {msg}")),
        Err(Failure::Math(e)) => Outcome::failure(EXIT_MATH, format!("error: {e}")),
    }
}

fn dispatch(command: &Command, doc: &Document) -> Run<String> {
    match command {
        Command::Check => check(doc),
        Command::Rank { rep: name, sub, via } => {
            let v = rep(doc, name)?;
            let r = match (sub, via) {
                (Some(s), _) => subquiver_rank(v, &parse_sub(v, s)?)?,
                (None, Some(m)) => {
                    let Some(m) = doc.morphism(m) else {
                        return usage(format!("no morphism named `{m}`"));
                    };
                    pushforward_rank(&m.morphism, v)?
                }
                (None, None) => global_tensor(v)?.global_rank,
            };
            Ok(format!("{r}\n"))
        }
        Command::Gamma { rep: name, show } => gamma(doc, name, *show),
        Command::Tensor { reps, decompose } => tensor(doc, reps, *decompose),
        Command::Decompose { rep: name, show } => {
            let v = rep(doc, name)?;
            let d = decompose(v)?;
            let mut out = String::new();
            for (i, p) in d.parts.iter().enumerate() {
                if *show {
                    out.push_str(&print_rep(&format!("{name}_{}", i + 1), quiver_name(doc, name), p));
                } else {
                    writeln!(out, "{}", dims_label(p.dims())).unwrap();
                }
            }
            Ok(out)
        }
        Command::Hom { reps } => {
            let (v, w) = pair(doc, reps)?;
            let basis = hom_space(v, w)?;
            let q = v.quiver();
            let mut out = format!("dim {}\n", basis.len());
            for (i, f) in basis.iter().enumerate() {
                let comps: Vec<String> =
                    f.comps().iter().enumerate().map(|(x, m)| format!("{}={m}", q.vertex_name(x))).collect();
                writeln!(out, "f{}: {}", i + 1, comps.join(" ")).unwrap();
            }
            Ok(out)
        }
        Command::Schur { rep: name, op, k } => {
            let v = rep(doc, name)?;
            let (p, tag) = match op {
                SchurOp::Ext => (v.exterior(*k), "ext"),
                SchurOp::Sym => (v.symmetric(*k), "sym"),
            };
            Ok(print_rep(&format!("{name}_{tag}{k}"), quiver_name(doc, name), &p))
        }
        Command::Limits { rep: name } => {
            let l = limit(rep(doc, name)?)?;
            Ok(format!("lim {}\ncolim {}\neta rank {}\n", l.lim_dim, l.colim_dim, l.eta.rank()))
        }
        Command::Subquivers { quiver } => {
            let Some(q) = doc.quiver(quiver) else {
                return usage(format!("no quiver named `{quiver}`"));
            };
            let mut out = String::new();
            for s in q.connected_subquivers() {
                writeln!(out, "{}", s.label()).unwrap();
            }
            Ok(out)
        }
        Command::Ringtable { reps, all_subquivers, via } => ringtable(doc, reps, *all_subquivers, via),
    }
}

fn check(doc: &Document) -> Run<String> {
    let mut out = String::new();
    for (name, q) in &doc.quivers {
        q.validate()?;
        writeln!(out, "quiver {name}: {} vertices, {} arrows", q.num_vertices(), q.num_arrows()).unwrap();
    }
    for r in &doc.reps {
        writeln!(out, "rep {} over {}: {}", r.name, r.quiver, dims_label(r.rep.dims())).unwrap();
    }
    for m in &doc.morphisms {
        writeln!(out, "morphism {}: {} -> {}", m.name, m.source, m.target).unwrap();
    }
    Ok(out)
}

fn gamma(doc: &Document, name: &str, show: Option<Show>) -> Run<String> {
    let v = rep(doc, name)?;
    let qname = quiver_name(doc, name);
    let q = v.quiver();
    let witness_lines = |comps: &[Matrix<Rational>]| -> String {
        comps.iter().enumerate().map(|(x, m)| format!("# witness at {}: {m}\n", q.vertex_name(x))).collect()
    };
    Ok(match show {
        None => {
            let g = global_tensor(v)?;
            format!(
                "delta {}\nnabla {}\ngamma {}\nrank {}\n",
                dims_label(max_epi_sub(v).carrier.dims()),
                dims_label(max_mono_quot(v).carrier.dims()),
                dims_label(g.gamma.dims()),
                g.global_rank
            )
        }
        Some(Show::Delta) => {
            let d = max_epi_sub(v);
            print_rep(&format!("{name}_delta"), qname, &d.carrier) + &witness_lines(d.witness.comps())
        }
        Some(Show::Nabla) => {
            let n = max_mono_quot(v);
            print_rep(&format!("{name}_nabla"), qname, &n.carrier) + &witness_lines(n.witness.comps())
        }
        Some(Show::Gamma) => {
            let g = global_tensor(v)?;
            print_rep(&format!("{name}_gamma"), qname, &g.gamma) + &witness_lines(g.into_nabla.comps())
        }
    })
}

fn tensor(doc: &Document, names: &[String], split: bool) -> Run<String> {
    let (v, w) = pair(doc, names)?;
    let vw = v.tensor(w)?;
    let qname = quiver_name(doc, &names[0]);
    let label = format!("{}x{}", names[0], names[1]);
    if !split {
        return Ok(print_rep(&label, qname, &vw));
    }
    let d = decompose(&vw)?;
    let mut out = String::new();
    for p in &d.parts {
        writeln!(out, "{}", dims_label(p.dims())).unwrap();
    }
    // Each rank function is additive and multiplicative, so the summands must
    // account for r(V)·r(W) exactly.
    let mut fns: Vec<(String, RankFn)> = v
        .quiver()
        .connected_subquivers()
        .into_iter()
        .map(|s| (format!("r{}", s.label()), RankFn::Subquiver(s)))
        .collect();
    for m in doc.morphisms.iter().filter(|m| **m.morphism.target() == **v.quiver()) {
        fns.push((format!("{}_*r", m.name), RankFn::Pushforward(m.morphism.clone())));
    }
    let mut consistent = true;
    for (label, f) in &fns {
        let (rv, rw) = (f.eval(v)?, f.eval(w)?);
        let sum = d.parts.iter().map(|p| f.eval(p)).sum::<quiverrank::Result<usize>>()?;
        let ok = sum == rv * rw;
        consistent &= ok;
        writeln!(out, "check {label}: {sum} = {rv}*{rw} {}", if ok { "ok" } else { "MISMATCH" }).unwrap();
    }
    if !consistent {
        return Err(Failure::Math(Error::Dimension(format!("rank cross-check failed\n{out}"))));
    }
    Ok(out)
}

fn ringtable(doc: &Document, names: &[String], all_subquivers: bool, via: &[String]) -> Run<String> {
    let reps: Vec<&R> = names.iter().map(|n| rep(doc, n)).collect::<Run<_>>()?;
    let q = reps[0].quiver().clone();
    if reps.iter().any(|r| **r.quiver() != *q) {
        return Err(Failure::Math(Error::QuiverMismatch));
    }
    let reg = ClassRegistry::new(q.clone())?;
    let mut cols: Vec<(String, RankFn)> = if all_subquivers {
        reg.subquivers().iter().map(|s| (s.label(), RankFn::Subquiver(s.clone()))).collect()
    } else {
        vec![("r".into(), RankFn::Global)]
    };
    for m in via {
        let Some(e) = doc.morphism(m) else {
            return usage(format!("no morphism named `{m}`"));
        };
        cols.push((format!("{m}_*r"), RankFn::Pushforward(e.morphism.clone())));
    }
    let fns: Vec<RankFn> = cols.iter().map(|(_, f)| f.clone()).collect();
    let mut out = String::new();
    let header: Vec<&str> = cols.iter().map(|(l, _)| l.as_str()).collect();
    writeln!(out, "rep\t{}", header.join("\t")).unwrap();
    let mut table: Vec<i64> = Vec::new();
    for (name, v) in names.iter().zip(&reps) {
        let row = reg.rank_vector(&reg.ring_from(v)?, &fns)?;
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "{name}\t{}", cells.join("\t")).unwrap();
        table.extend(row);
    }
    let m = Matrix::<Rational>::from_ints(names.len(), cols.len(), &table);
    writeln!(out, "rank {}", m.rank()).unwrap();
    if m.is_square() {
        writeln!(out, "det {}", m.det()?).unwrap();
    }
    Ok(out)
}
