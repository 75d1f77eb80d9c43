use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use posetdim::dimension::{dm_dimension_oracle_with, ferrers_dimension_with};
use posetdim::extensions::find_nonseparating_extension_with;
use posetdim::generators::{
    binary_tree_with, obstruction_catalog_with, omega_eta_with, rado_with, random_poset_with,
};
use posetdim::incidence::{galois_lattice_with, initial_segments_with, macneille_with};
use posetdim::poset::lex_product_with;
use posetdim::{
    chain_factorization, conjugate, dm_dimension_with, find_embedding_with, is_separating, open_split, spectrum,
    spider_a, split, three_irreducible_b, width, FerrersCover, IncidenceStructure, LabeledLattice, Limits,
    LinearOrder, Poset,
};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::format::{emit_json, emit_poset, parse_document, parse_poset, Document, PosetDocument};
use crate::harness::{Harness, Suite};
use crate::hasse::export_hasse;

#[derive(Debug, Parser)]
#[command(name = "posetdim", version, about = "Order dimension, Galois lattices and separating extensions of finite posets")]
pub struct Cli {
    /// Size-cap profile: default or strict.
    #[arg(long, global = true, env = "POSETDIM_PROFILE", default_value = "default")]
    pub profile: String,
    /// Override the element cap of the chosen profile.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named family: chain N, antichain N, binary-tree D, omega-eta D,
    /// rado N, spider-a, three-irreducible-b, random N P SEED, catalog D NAME.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dushnik-Miller dimension with a realizer, or a variant.
    Dim(DimArgs),
    /// Galois lattice of an incidence structure (a poset file means its order relation).
    Galois { file: PathBuf },
    /// MacNeille completion.
    Macneille { file: PathBuf },
    /// Lattice of down-sets.
    Segments { file: PathBuf },
    /// Split (or open split) bipartite poset.
    Split {
        file: PathBuf,
        #[arg(long)]
        open: bool,
    },
    /// Reverse the order.
    Dual { file: PathBuf },
    /// Direct product, or lexicographic with --lex.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        lex: bool,
    },
    /// Find an order embedding of PATTERN into HOST.
    Embed { pattern: PathBuf, host: PathBuf },
    /// Non-separating linear extension, or the conjugate of one.
    Ext(ExtArgs),
    /// Prime ideals of a distributive lattice.
    Spectrum { file: PathBuf },
    /// Embed a distributive lattice into a product of chains.
    Factorize { file: PathBuf },
    /// Run a verification suite: identities, splits, galois, dilworth, theorem11, lemma24, bouchet.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Hasse diagram as DOT.
    Export {
        file: PathBuf,
        #[arg(long, required = true)]
        hasse: bool,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct DimKind {
    #[arg(long)]
    pub interval: bool,
    #[arg(long)]
    pub ferrers: bool,
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub kind: DimKind,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "mode")]
pub struct ExtMode {
    #[arg(long)]
    pub nonseparating: bool,
    /// A linear extension as element labels separated by spaces or commas.
    #[arg(long, value_name = "EXT")]
    pub conjugate: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub mode: ExtMode,
}

/// Text or JSON, chosen once per invocation.
struct Output {
    json: bool,
    text: String,
    value: Value,
}

impl Output {
    fn new(json: bool) -> Self {
        Output {
            json,
            text: String::new(),
            value: Value::Null,
        }
    }

    fn render(self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.value).expect("values serialise");
            s.push('\n');
            s
        } else {
            self.text
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_poset(path: &Path) -> CliResult<Poset> {
    parse_poset(&read(path)?)
}

fn load_relation(path: &Path) -> CliResult<IncidenceStructure> {
    Ok(match parse_document(&read(path)?)? {
        Document::Incidence(d) => d.to_incidence()?,
        Document::Poset(d) => IncidenceStructure::leq(&d.to_poset()?),
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().replace(|c: char| c.is_whitespace() || c == '#' || c == '<', "_"))
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "poset".into())
}

fn labels(p: &Poset, l: &LinearOrder) -> Vec<String> {
    l.labels(p).into_iter().map(String::from).collect()
}

fn poset_output(out: &mut Output, name: &str, p: &Poset) {
    out.text = emit_poset(name, p);
    out.value = serde_json::to_value(Document::Poset(PosetDocument::from_poset(name, p))).expect("documents serialise");
}

fn lattice_output(out: &mut Output, name: &str, lat: &LabeledLattice) {
    poset_output(out, name, &lat.poset);
}

fn cover_json(r: &IncidenceStructure, c: &FerrersCover) -> Value {
    Value::Array(
        c.relations
            .iter()
            .map(|rel| {
                Value::Array(
                    rel.pairs()
                        .into_iter()
                        .map(|(x, y)| json!([r.rows()[x], r.cols()[y]]))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn ferrers_output(out: &mut Output, kind: &str, r: &IncidenceStructure, limits: &Limits) -> CliResult<()> {
    let (k, cover) = ferrers_dimension_with(r, limits)?;
    let verified = cover.verify(r);
    out.value = json!({ "kind": kind, "dimension": k, "ferrers_cover": cover_json(r, &cover), "verified": verified });
    out.text = format!("{kind} {k}\n");
    for (i, rel) in cover.relations.iter().enumerate() {
        let pairs: Vec<String> = rel
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", r.rows()[x], r.cols()[y]))
            .collect();
        out.text.push_str(&format!("F{}: {}\n", i + 1, pairs.join(" ")));
    }
    out.text.push_str(&format!("verified {verified}\n"));
    if !verified {
        return Err(CliError::Verification("Ferrers cover does not intersect to the relation".into()));
    }
    Ok(())
}

fn cap(what: &'static str, size: usize, limit: usize) -> CliResult<()> {
    if size > limit {
        return Err(posetdim::Error::SizeLimitExceeded { what, size, limit }.into());
    }
    Ok(())
}

fn parse_count(params: &[String], i: usize, what: &str) -> CliResult<usize> {
    params
        .get(i)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {what}")))?
        .parse()
        .map_err(|_| CliError::Usage(format!("parameter {what} must be a non-negative integer")))
}

fn generate(family: &str, params: &[String], limits: &Limits) -> CliResult<(String, Poset)> {
    let arity = |k: usize| -> CliResult<()> {
        if params.len() != k {
            return Err(CliError::Usage(format!("`{family}` takes {k} parameter(s)")));
        }
        Ok(())
    };
    let p = match family {
        "chain" | "antichain" => {
            arity(1)?;
            let n = parse_count(params, 0, "N")?;
            cap("generated elements", n, limits.max_elements)?;
            if family == "chain" {
                Poset::chain(n)
            } else {
                Poset::antichain(n)
            }
        }
        "binary-tree" => {
            arity(1)?;
            binary_tree_with(parse_count(params, 0, "D")?, limits)?
        }
        "omega-eta" => {
            arity(1)?;
            omega_eta_with(parse_count(params, 0, "D")?, limits)?
        }
        "rado" => {
            arity(1)?;
            rado_with(parse_count(params, 0, "N")?, limits)?
        }
        "spider-a" => {
            arity(0)?;
            spider_a()
        }
        "three-irreducible-b" => {
            arity(0)?;
            three_irreducible_b()
        }
        "random" => {
            arity(3)?;
            let n = parse_count(params, 0, "N")?;
            let prob: f64 = params[1]
                .parse()
                .ok()
                .filter(|x: &f64| (0.0..=1.0).contains(x))
                .ok_or_else(|| CliError::Usage("parameter P must be a probability".into()))?;
            let seed: u64 = params[2]
                .parse()
                .map_err(|_| CliError::Usage("parameter SEED must be an unsigned integer".into()))?;
            random_poset_with(n, prob, seed, limits)?
        }
        "catalog" => {
            arity(2)?;
            let d = parse_count(params, 0, "D")?;
            let cat = obstruction_catalog_with(d, limits)?;
            let names: Vec<&str> = cat.iter().map(|(n, _)| n.as_str()).collect();
            let found = cat.iter().find(|(n, _)| n == &params[1]).map(|(_, p)| p.clone());
            found.ok_or_else(|| CliError::Usage(format!("unknown catalog entry (expected one of: {})", names.join(", "))))?
        }
        other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
    };
    let name = std::iter::once(family.to_string()).chain(params.iter().cloned()).collect::<Vec<_>>().join("_");
    Ok((name, p))
}

fn limits_for(cli: &Cli) -> CliResult<Limits> {
    let mut limits = Limits::profile(&cli.profile)
        .ok_or_else(|| CliError::Usage(format!("unknown profile `{}` (expected default or strict)", cli.profile)))?;
    if let Some(m) = cli.max_elements {
        limits.max_elements = m;
    }
    Ok(limits)
}

fn execute(cli: &Cli, out: &mut Output) -> CliResult<()> {
    let limits = limits_for(cli)?;
    match &cli.command {
        Command::Gen { family, params, output } => {
            let (name, p) = generate(family, params, &limits)?;
            poset_output(out, &name, &p);
            if let Some(path) = output {
                let body = if cli.json {
                    emit_json(&Document::Poset(PosetDocument::from_poset(&name, &p)))
                } else {
                    emit_poset(&name, &p)
                };
                std::fs::write(path, body).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                out.text = format!("wrote {} ({} elements)\n", path.display(), p.len());
                out.value = json!({ "written": path.display().to_string(), "elements": p.len() });
            }
        }
        Command::Dim(args) => {
            let k = &args.kind;
            if k.ferrers {
                let r = load_relation(&args.file)?;
                ferrers_output(out, "ferrers_dimension", &r, &limits)?;
            } else if k.interval {
                let p = load_poset(&args.file)?;
                ferrers_output(out, "interval_dimension", &IncidenceStructure::lt(&p), &limits)?;
            } else if k.oracle {
                let p = load_poset(&args.file)?;
                let d = dm_dimension_oracle_with(&p, &limits)?;
                out.text = format!("oracle_dimension {d}\n");
                out.value = json!({ "kind": "oracle_dimension", "dimension": d });
            } else {
                let p = load_poset(&args.file)?;
                let (d, r) = dm_dimension_with(&p, &limits)?;
                let verified = r.verify(&p);
                let exts: Vec<Vec<String>> = r.extensions.iter().map(|l| labels(&p, l)).collect();
                out.text = format!("dimension {d}\n");
                for (i, e) in exts.iter().enumerate() {
                    out.text.push_str(&format!("L{}: {}\n", i + 1, e.join(" ")));
                }
                out.text.push_str(&format!("verified {verified}\n"));
                out.value = json!({ "kind": "dimension", "dimension": d, "realizer": exts, "verified": verified });
                if !verified {
                    return Err(CliError::Verification("realizer does not intersect to the order".into()));
                }
            }
        }
        Command::Galois { file } => {
            let r = load_relation(file)?;
            lattice_output(out, &format!("gal_{}", stem(file)), &galois_lattice_with(&r, &limits)?);
        }
        Command::Macneille { file } => {
            let p = load_poset(file)?;
            lattice_output(out, &format!("macneille_{}", stem(file)), &macneille_with(&p, &limits)?);
        }
        Command::Segments { file } => {
            let p = load_poset(file)?;
            lattice_output(out, &format!("segments_{}", stem(file)), &initial_segments_with(&p, &limits)?);
        }
        Command::Split { file, open } => {
            let p = load_poset(file)?;
            cap("split elements", 2 * p.len(), limits.max_elements)?;
            let (name, q) = if *open {
                (format!("open_split_{}", stem(file)), open_split(&p))
            } else {
                (format!("split_{}", stem(file)), split(&p))
            };
            poset_output(out, &name, &q);
        }
        Command::Dual { file } => {
            let p = load_poset(file)?;
            poset_output(out, &format!("dual_{}", stem(file)), &p.dual());
        }
        Command::Product { a, b, lex } => {
            let (p, q) = (load_poset(a)?, load_poset(b)?);
            let prod = if *lex {
                lex_product_with(&[p, q], &limits)?
            } else {
                posetdim::poset::direct_product_with(&p, &q, &limits)?
            };
            poset_output(out, &format!("{}_x_{}", stem(a), stem(b)), &prod);
        }
        Command::Embed { pattern, host } => {
            let (p, h) = (load_poset(pattern)?, load_poset(host)?);
            match find_embedding_with(&p, &h, &limits)? {
                Some(m) => {
                    let verified = m.verify(&p, &h);
                    let pairs: Vec<(String, String)> = m
                        .label_pairs(&p, &h)
                        .into_iter()
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .collect();
                    out.text = pairs.iter().map(|(a, b)| format!("{a} -> {b}\n")).collect();
                    out.text.push_str(&format!("verified {verified}\n"));
                    out.value = json!({ "embedding": pairs, "verified": verified });
                    if !verified {
                        return Err(CliError::Verification("embedding witness fails".into()));
                    }
                }
                None => {
                    out.text = "no embedding\n".into();
                    out.value = json!({ "embedding": null });
                }
            }
        }
        Command::Ext(args) => {
            let p = load_poset(&args.file)?;
            if let Some(ext) = &args.mode.conjugate {
                let ls: Vec<&str> = ext.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
                let c = LinearOrder::from_labels(&p, &ls)?;
                match conjugate(&p, &c)? {
                    Some(c2) => {
                        let ls = labels(&p, &c2);
                        out.text = format!("conjugate {}\n", ls.join(" "));
                        out.value = json!({ "conjugate": ls });
                    }
                    None => {
                        return Err(CliError::Verification("reversed incomparable pairs do not form a linear order".into()))
                    }
                }
            } else {
                match find_nonseparating_extension_with(&p, &limits)? {
                    Some(l) => {
                        let verified = is_separating(&p, &l)?.is_none();
                        let ls = labels(&p, &l);
                        out.text = format!("nonseparating {}\nverified {verified}\n", ls.join(" "));
                        out.value = json!({ "extension": ls, "verified": verified });
                    }
                    None => {
                        out.text = "no non-separating extension\n".into();
                        out.value = json!({ "extension": null });
                    }
                }
            }
        }
        Command::Spectrum { file } => {
            let t = load_poset(file)?;
            let s = spectrum(&t)?;
            let ideals: Vec<Vec<String>> = s
                .ideals
                .iter()
                .map(|i| i.members.iter().map(|x| t.label(x).to_string()).collect())
                .collect();
            let w = width(&s.poset).width;
            let name = format!("spec_{}", stem(file));
            out.text = format!("prime_ideals {}\nwidth {w}\n{}", ideals.len(), emit_poset(&name, &s.poset));
            out.value = json!({
                "prime_ideals": ideals,
                "width": w,
                "poset": Document::Poset(PosetDocument::from_poset(&name, &s.poset)),
            });
        }
        Command::Factorize { file } => {
            let t = load_poset(file)?;
            let f = chain_factorization(&t)?;
            let verified = f.verify(&t);
            let chains: Vec<Vec<String>> = f.chains.iter().map(|c| c.iter().map(|&x| t.label(x).to_string()).collect()).collect();
            let coords: serde_json::Map<String, Value> = (0..t.len())
                .map(|x| (t.label(x).to_string(), json!(f.coordinates[x])))
                .collect();
            out.text = format!("chains {}\n", f.n);
            for (i, c) in chains.iter().enumerate() {
                out.text.push_str(&format!("C{}: {}\n", i + 1, c.join(" ")));
            }
            for x in 0..t.len() {
                let cs: Vec<String> = f.coordinates[x].iter().map(usize::to_string).collect();
                out.text.push_str(&format!("{} -> ({})\n", t.label(x), cs.join(",")));
            }
            out.text.push_str(&format!("verified {verified}\n"));
            out.value = json!({ "n": f.n, "chains": chains, "coordinates": coords, "verified": verified });
            if !verified {
                return Err(CliError::Verification("factorization is not a lattice embedding".into()));
            }
        }
        Command::Verify { suite, max_size, trials, seed } => {
            let suite: Suite = suite.parse()?;
            let harness = Harness {
                limits,
                mutate_dimension: false,
            };
            let rep = harness.run(suite, *max_size, *trials, *seed)?;
            out.text = format!(
                "suite {} instances {} passed {} failed {}\n",
                rep.suite,
                rep.instances,
                rep.passed,
                rep.failed()
            );
            for f in &rep.failures {
                out.text.push_str(&format!("FAIL {} {}\n{}", f.instance, f.identity, f.serialization));
            }
            out.value = serde_json::to_value(&rep).expect("reports serialise");
            if !rep.failures.is_empty() {
                return Err(CliError::Verification(format!("{} instance(s) failed", rep.failed())));
            }
        }
        Command::Export { file, .. } => {
            let p = load_poset(file)?;
            let dot = export_hasse(&stem(file), &p);
            out.value = json!({ "dot": dot });
            out.text = dot;
        }
    }
    Ok(())
}

/// Parses `argv` (including the program name), runs the command and writes its output.
/// Returns the process exit code.
pub fn run_command<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = Output::new(cli.json);
    let res = execute(&cli, &mut out);
    let code = match &res {
        Ok(()) => 0,
        Err(e) => e.exit_code(),
    };
    // Verification failures still print what was computed.
    if res.is_ok() || matches!(res, Err(CliError::Verification(_))) {
        let _ = stdout.write_all(out.render().as_bytes());
    }
    if let Err(e) = res {
        let _ = writeln!(stderr, "error: {e}");
    }
    code
}
