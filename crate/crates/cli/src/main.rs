use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ghilb::constellation::{distinguished_constellation, support_quiver, verify_quiver_rep};
use ghilb::groebner::{enumerate_fan, format_binomial, format_monomial, lattice_ideal, parse_monomial_list, GbBudget, MonomialIdeal};
use ghilb::hilbert_scheme::{
    chart_normality, chart_semigroup, check_normality, coherent_membership, enumerate_monomial_clusters,
    initial_cluster, is_g_cluster, universal_family, MembershipVerdict, NormalityOptions,
};
use ghilb::reproduce::{reproduce, ExampleReport, EXAMPLES};
use ghilb::{CharGroup, Error, GroupSpec, IntMatrix, RatVec, ThetaParam};

#[derive(Parser)]
#[command(name = "ghilb", version, about = "G-Hilbert schemes of finite abelian diagonal groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LatticeChoice {
    #[value(name = "M")]
    M,
    #[value(name = "ZA")]
    Za,
}

#[derive(Subcommand)]
enum Command {
    /// Character group, lattice and invariant factors.
    Info {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reduced degree-lex basis of the lattice ideal I_M.
    LatticeIdeal {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Monomial initial ideal in_w(I_M) and its standard monomials.
    Initial {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Distinguished θ-stable constellation at a weight.
    Constellation {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Whether a monomial G-cluster lies on the coherent component.
    Membership {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        /// Exit with status 1 when the cluster is off the component.
        #[arg(long)]
        assert_on: bool,
        #[arg(long)]
        json: bool,
    },
    /// All monomial G-clusters.
    Clusters {
        #[arg(long)]
        group: PathBuf,
        /// Also decide coherent-component membership for each.
        #[arg(long)]
        classify: bool,
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: usize,
        #[arg(long)]
        json: bool,
    },
    /// Monomial initial ideals over the positive orthant.
    Fan {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        max_cones: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Chart semigroup A_J at a weight, with its Hilbert basis.
    Chart {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "M")]
        lattice: LatticeChoice,
        #[arg(long)]
        json: bool,
    },
    /// Universal family above the chart at a weight.
    Family {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 2_000_000)]
        max_pairs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Normality scan over the fan, or over the charts at given weights.
    Normality {
        #[arg(long)]
        group: PathBuf,
        /// Semicolon-separated weight vectors (spot-check mode).
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "M")]
        lattice: LatticeChoice,
        #[arg(long)]
        max_cones: Option<usize>,
        #[arg(long)]
        assert_normal: bool,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the bundled worked examples.
    Reproduce {
        /// One of example-hard, example-reducible, example-nonnormal, or all.
        #[arg(default_value = "all")]
        example: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    /// Bad input: exit status 2.
    Input(String),
    /// A negative verdict the caller asked to assert: exit status 1.
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> Result<(GroupSpec, CharGroup), Failure> {
    let spec = GroupSpec::parse(&read(path)?)?;
    let chars = CharGroup::new(&spec);
    Ok((spec, chars))
}

fn weight(text: &str, n: usize) -> Result<RatVec, Failure> {
    let w = RatVec::parse_csv(text)?;
    if w.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: w.len(),
        }
        .into());
    }
    Ok(w)
}

fn json<T: Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Input(e.to_string()))
}

fn vec_text(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

fn info(group: &Path, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    #[derive(Serialize)]
    struct Info {
        n: usize,
        r: usize,
        names: Vec<String>,
        generator_orders: Vec<i64>,
        redundant_generators: bool,
        invariant_factors: Vec<String>,
        lattice_basis: Vec<Vec<String>>,
        lattice_index: String,
    }
    let i = Info {
        n: chars.n(),
        r: chars.r(),
        names: spec.variable_names(),
        generator_orders: chars.generator_orders().to_vec(),
        redundant_generators: chars.has_redundant_generators(),
        invariant_factors: chars.invariant_factors().iter().map(|x| x.to_string()).collect(),
        lattice_basis: matrix_rows(chars.lattice()),
        lattice_index: chars.lattice_index().to_string(),
    };
    if as_json {
        return json(&i);
    }
    let mut s = String::new();
    let _ = writeln!(s, "n = {}, |G| = {}", i.n, i.r);
    let _ = writeln!(s, "invariant factors: {}", i.invariant_factors.join(" "));
    let _ = writeln!(s, "generator orders: {:?}", i.generator_orders);
    if i.redundant_generators {
        let _ = writeln!(s, "note: some generators are redundant");
    }
    let _ = writeln!(s, "lattice M (index {}):", i.lattice_index);
    for row in &i.lattice_basis {
        let _ = writeln!(s, "  ({})", row.join(","));
    }
    Ok(s)
}

fn lattice_ideal_cmd(group: &Path, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let im = lattice_ideal(chars.lattice())?;
    let lines: Vec<String> = im.iter().map(|b| format_binomial(b, &names)).collect();
    if as_json {
        return json(&lines);
    }
    Ok(lines.iter().map(|l| l.clone() + "\n").collect())
}

fn initial(group: &Path, w: &str, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let w = weight(w, chars.n())?;
    let im = lattice_ideal(chars.lattice())?;
    let (cluster, _) = initial_cluster(&im, &chars, &w)?;
    #[derive(Serialize)]
    struct Initial {
        generators: Vec<String>,
        standard: Vec<(String, String)>,
    }
    let out = Initial {
        generators: cluster.ideal.min_gens().iter().map(|g| format_monomial(g, &names)).collect(),
        standard: cluster
            .std
            .iter()
            .enumerate()
            .map(|(k, m)| (chars.label(k), format_monomial(m, &names)))
            .collect(),
    };
    if as_json {
        return json(&out);
    }
    let mut s = format!("in_w(I_M) = {}\n", cluster.ideal.to_text(&names));
    for (label, m) in &out.standard {
        let _ = writeln!(s, "  {label}: {m}");
    }
    Ok(s)
}

fn constellation(group: &Path, theta: &str, w: &str, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let theta = ThetaParam::new(RatVec::parse_csv(theta)?)?;
    let w = weight(w, chars.n())?;
    let c = distinguished_constellation(&chars, &theta, &w)?;
    verify_quiver_rep(&chars, &c.rep)?;
    let q = support_quiver(&chars, &c.rep, c.unique_optimum)?;
    let reach = q.reachable_from(&[chars.trivial()]);
    if as_json {
        #[derive(Serialize)]
        struct Out<'a> {
            module: Vec<String>,
            v: Vec<String>,
            objective: String,
            unique_optimum: bool,
            arrows: &'a [(usize, usize)],
            acyclic: bool,
            reachable_from_trivial: Vec<bool>,
        }
        return json(&Out {
            module: c.rep.format(&chars, &names).lines().map(String::from).collect(),
            v: c.v.entries().iter().map(|x| x.to_string()).collect(),
            objective: c.objective.to_string(),
            unique_optimum: c.unique_optimum,
            arrows: &q.arrows,
            acyclic: q.find_cycle().is_none(),
            reachable_from_trivial: reach,
        });
    }
    let mut s = c.rep.format(&chars, &names);
    let _ = writeln!(s, "v = {}", c.v);
    let _ = writeln!(s, "objective = {}", c.objective);
    let _ = writeln!(
        s,
        "support quiver: {} arrows, {}, {} of {} vertices reachable from {}",
        q.len(),
        if q.find_cycle().is_none() { "acyclic" } else { "has cycles" },
        reach.iter().filter(|&&x| x).count(),
        chars.r(),
        chars.label(chars.trivial())
    );
    Ok(s)
}

fn load_cluster(chars: &CharGroup, names: &[String], ideal: &Path) -> Result<ghilb::hilbert_scheme::GCluster, Failure> {
    let j = MonomialIdeal::new(chars.n(), parse_monomial_list(&read(ideal)?, names)?)?;
    Ok(is_g_cluster(&j, chars)?)
}

fn membership(group: &Path, ideal: &Path, assert_on: bool, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let cluster = load_cluster(&chars, &names, ideal)?;
    let im = lattice_ideal(chars.lattice())?;
    let v = coherent_membership(&cluster, &chars, &im)?;
    let out = if as_json {
        json(&v)?
    } else {
        match &v {
            MembershipVerdict::OnCoherent { witness, .. } => {
                let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                format!("ON-COHERENT\nwitness w = ({})\n", w.join(","))
            }
            MembershipVerdict::OffComponent { .. } => {
                let mut s = String::from("OFF-COMPONENT\ncertificate:\n");
                for (p, c) in v.certificate_support() {
                    let _ = writeln!(s, "  {c} × {}", vec_text(&p));
                }
                s
            }
        }
    };
    if assert_on && !v.is_on() {
        print!("{out}");
        return Err(Failure::Negative);
    }
    Ok(out)
}

fn clusters(group: &Path, classify: bool, max_nodes: usize, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let all = enumerate_monomial_clusters(&chars, max_nodes)?;
    let im = if classify { Some(lattice_ideal(chars.lattice())?) } else { None };
    #[derive(Serialize)]
    struct Entry {
        ideal: String,
        coherent: Option<bool>,
    }
    let mut entries = Vec::new();
    for c in &all {
        let coherent = match &im {
            Some(im) => Some(coherent_membership(c, &chars, im)?.is_on()),
            None => None,
        };
        entries.push(Entry {
            ideal: c.to_text(&names),
            coherent,
        });
    }
    if as_json {
        return json(&entries);
    }
    let mut s = format!("{} monomial G-clusters\n", entries.len());
    for e in &entries {
        let tag = match e.coherent {
            Some(true) => "  [coherent]",
            Some(false) => "  [off-component]",
            None => "",
        };
        let _ = writeln!(s, "{}{tag}", e.ideal);
    }
    Ok(s)
}

fn fan(group: &Path, max_cones: Option<usize>, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let im = lattice_ideal(chars.lattice())?;
    let cones = enumerate_fan(&im, max_cones)?;
    #[derive(Serialize)]
    struct Entry {
        ideal: String,
        witness: Vec<String>,
        facets: Vec<Vec<i64>>,
    }
    let entries: Vec<Entry> = cones
        .iter()
        .map(|c| Entry {
            ideal: c.ideal.to_text(&names),
            witness: c.witness.entries().iter().map(|x| x.to_string()).collect(),
            facets: c.cone.facets.clone(),
        })
        .collect();
    if as_json {
        return json(&entries);
    }
    let mut s = format!("{} Gröbner cones\n", entries.len());
    for e in &entries {
        let _ = writeln!(s, "{}  at w = ({})", e.ideal, e.witness.join(","));
    }
    Ok(s)
}

fn za_lattice(gens: &[Vec<i64>], n: usize) -> IntMatrix {
    ghilb::exact::row_lattice_basis(&IntMatrix::from_rows_i64(n, gens))
}

fn chart(group: &Path, w: &str, lattice: LatticeChoice, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let w = weight(w, chars.n())?;
    let im = lattice_ideal(chars.lattice())?;
    let (cluster, _) = initial_cluster(&im, &chars, &w)?;
    let a = chart_semigroup(&cluster, &chars, &w)?;
    let gens = a.gens();
    let lat = match lattice {
        LatticeChoice::M => chars.lattice().clone(),
        LatticeChoice::Za => za_lattice(&gens, chars.n()),
    };
    let (hb, missing) = chart_normality(&gens, &lat, &w)?;
    #[derive(Serialize)]
    struct Out {
        #[serde(rename = "J")]
        j: String,
        gens: Vec<Vec<i64>>,
        hilbert_basis: Vec<Vec<i64>>,
        missing: Vec<Vec<i64>>,
        normal: bool,
    }
    let out = Out {
        j: cluster.to_text(&names),
        gens,
        hilbert_basis: hb,
        normal: missing.is_empty(),
        missing: missing.into_iter().map(|(v, _)| v).collect(),
    };
    if as_json {
        return json(&out);
    }
    let mut s = format!("J = {}\n{} semigroup generators:\n", out.j, out.gens.len());
    for g in &out.gens {
        let _ = writeln!(s, "  {}", vec_text(g));
    }
    let _ = writeln!(s, "Hilbert basis ({} vectors):", out.hilbert_basis.len());
    for g in &out.hilbert_basis {
        let _ = writeln!(s, "  {}", vec_text(g));
    }
    if out.normal {
        let _ = writeln!(s, "NORMAL");
    } else {
        let _ = writeln!(s, "NOT NORMAL");
        for m in &out.missing {
            let _ = writeln!(s, "  missing {}", vec_text(m));
        }
    }
    Ok(s)
}

fn family(group: &Path, w: &str, max_pairs: usize, as_json: bool) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let names = spec.variable_names();
    let w = weight(w, chars.n())?;
    let im = lattice_ideal(chars.lattice())?;
    let (cluster, _) = initial_cluster(&im, &chars, &w)?;
    let a = chart_semigroup(&cluster, &chars, &w)?;
    let budget = GbBudget {
        max_pairs,
        ..GbBudget::default()
    };
    let f = universal_family(&a, budget)?;
    let ynames: Vec<String> = (1..=f.binomials.len()).map(|i| format!("y{i}")).collect();
    let binomials: Vec<String> = f
        .binomials
        .iter()
        .zip(&ynames)
        .map(|((u, v), y)| {
            let trail = format_monomial(v, &names);
            if trail == "1" {
                format!("{} - {y}", format_monomial(u, &names))
            } else {
                format!("{} - {y}*{trail}", format_monomial(u, &names))
            }
        })
        .collect();
    let relations: Vec<String> = f.relations.iter().map(|b| format_binomial(b, &ynames)).collect();
    if as_json {
        #[derive(Serialize)]
        struct Out {
            binomials: Vec<String>,
            relations: Vec<String>,
        }
        return json(&Out { binomials, relations });
    }
    let mut s = String::from("family:\n");
    for b in &binomials {
        let _ = writeln!(s, "  {b}");
    }
    let _ = writeln!(s, "relations ({}):", relations.len());
    for r in &relations {
        let _ = writeln!(s, "  {r}");
    }
    Ok(s)
}

fn normality(
    group: &Path,
    weights: Option<&str>,
    lattice: LatticeChoice,
    max_cones: Option<usize>,
    assert_normal: bool,
    as_json: bool,
) -> Outcome {
    let (spec, chars) = load_group(group)?;
    let weights = match weights {
        Some(text) => Some(
            text.split(';')
                .filter(|t| !t.trim().is_empty())
                .map(|t| weight(t, chars.n()))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    let options = NormalityOptions {
        weights,
        max_cones,
        ..NormalityOptions::default()
    };
    let report = check_normality(&spec, &options)?;
    let normal = match lattice {
        LatticeChoice::M => report.overall_normal,
        LatticeChoice::Za => report.overall_normal_za,
    };
    let out = if as_json {
        json(&report)?
    } else {
        let mut s = String::new();
        for (k, c) in report.charts.iter().enumerate() {
            let (ok, missing) = match lattice {
                LatticeChoice::M => (c.normal, &c.missing),
                LatticeChoice::Za => (c.normal_za, &c.missing_za),
            };
            let _ = writeln!(
                s,
                "chart {k}: {} generators, w = ({}): {}",
                c.j.len(),
                c.witness_w.join(","),
                if ok { "normal" } else { "not normal" }
            );
            if !ok {
                let _ = writeln!(s, "  J = ⟨{}⟩", c.j.join(", "));
                for m in missing {
                    let _ = writeln!(s, "  missing vector {}", vec_text(m));
                }
            }
        }
        let _ = writeln!(s, "{}", if normal { "NORMAL" } else { "NOT NORMAL" });
        s
    };
    if assert_normal && !normal {
        print!("{out}");
        return Err(Failure::Negative);
    }
    Ok(out)
}

fn reproduce_cmd(example: &str, as_json: bool) -> Outcome {
    let ids: Vec<&str> = if example == "all" { EXAMPLES.to_vec() } else { vec![example] };
    let reports: Vec<ExampleReport> = ids.iter().map(|id| reproduce(id)).collect::<Result<_, _>>()?;
    let out = if as_json {
        json(&reports)?
    } else {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(s, "{} ({} ms): {}", r.id, r.elapsed_ms, if r.pass() { "PASS" } else { "FAIL" });
            for i in &r.items {
                let _ = writeln!(s, "  [{}] {}: {}", if i.pass { "PASS" } else { "FAIL" }, i.name, i.detail);
            }
        }
        s
    };
    if reports.iter().all(|r| r.pass()) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Negative)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Info { group, json } => info(&group, json),
        Command::LatticeIdeal { group, json } => lattice_ideal_cmd(&group, json),
        Command::Initial { group, weight, json } => initial(&group, &weight, json),
        Command::Constellation {
            group,
            theta,
            weight,
            json,
        } => constellation(&group, &theta, &weight, json),
        Command::Membership {
            group,
            ideal,
            assert_on,
            json,
        } => membership(&group, &ideal, assert_on, json),
        Command::Clusters {
            group,
            classify,
            max_nodes,
            json,
        } => clusters(&group, classify, max_nodes, json),
        Command::Fan { group, max_cones, json } => fan(&group, max_cones, json),
        Command::Chart {
            group,
            weight,
            lattice,
            json,
        } => chart(&group, &weight, lattice, json),
        Command::Family {
            group,
            weight,
            max_pairs,
            json,
        } => family(&group, &weight, max_pairs, json),
        Command::Normality {
            group,
            weights,
            lattice,
            max_cones,
            assert_normal,
            json,
        } => normality(&group, weights.as_deref(), lattice, max_cones, assert_normal, json),
        Command::Reproduce { example, json } => reproduce_cmd(&example, json),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
