use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use effalg::algebra::corpus;
use effalg::represent::{classify_simplex, decompose, theorem51_report, PivotOrder, SimplexClass};
use effalg::states::{
    criterion32, is_extremal, is_jauch_piron, is_state, parse_state, sigma_convex, state_system_properties,
    vertices, StateVector,
};
use effalg::structure::{
    center, check_divisible, check_general_comparability, check_interpolation, check_lattice, check_rdp,
    check_rdp_central_criterion, mv_construct,
};
use effalg::{EffectAlgebra, Error, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{
    input_error, load_algebra, mixture_weights, name_set, read, CliResult, Report, MIXTURES, SAMPLE_SEED,
};

#[derive(Parser)]
#[command(name = "ea", about = "Checks on finite effect-algebra tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the effect-algebra axioms
    Check { file: PathBuf },
    /// Print orthosupplements and the derived order
    Order { file: PathBuf },
    /// Riesz decomposition property
    Rdp { file: PathBuf },
    /// Whether every pair has a meet and a join
    Lattice { file: PathBuf },
    /// Build the MV-algebra structure when it exists
    Mv { file: PathBuf },
    /// Central elements
    Center { file: PathBuf },
    /// General comparability
    Gencomp { file: PathBuf },
    /// n-divisibility for every n up to --nmax (default: the table size)
    Divisible {
        file: PathBuf,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Vertices of the state space
    States { file: PathBuf },
    /// Whether a state file describes a state
    StateCheck { file: PathBuf, state: PathBuf },
    /// Extremality criterion through the sup over common lower bounds
    Crit32 { file: PathBuf, state: PathBuf },
    /// Jauch-Piron property of a state
    Jp { file: PathBuf, state: PathBuf },
    /// Write a state as a convex combination of vertices
    Decompose { file: PathBuf, state: PathBuf },
    /// The six equivalent conditions on an RDP algebra
    Classify { file: PathBuf },
    /// Run the property suite over a corpus
    Suite {
        #[arg(long, default_value = "standard")]
        corpus: String,
    },
}

pub(crate) fn main<I, T>(args: I) -> Result<CliResult<Report>, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok(dispatch(cli.command))
}

fn dispatch(command: Command) -> CliResult<Report> {
    let mut r = Report::new();
    match command {
        Command::Check { file } => {
            if let Some(e) = load_algebra(&file, &mut r)? {
                r.prop("axioms", true, None);
                r.value("elements", e.len());
            }
        }
        Command::Suite { corpus } => suite(&corpus, &mut r)?,
        command => {
            let file = match &command {
                Command::Order { file }
                | Command::Rdp { file }
                | Command::Lattice { file }
                | Command::Mv { file }
                | Command::Center { file }
                | Command::Gencomp { file }
                | Command::Divisible { file, .. }
                | Command::States { file }
                | Command::StateCheck { file, .. }
                | Command::Crit32 { file, .. }
                | Command::Jp { file, .. }
                | Command::Decompose { file, .. }
                | Command::Classify { file } => file.clone(),
                Command::Check { .. } | Command::Suite { .. } => unreachable!(),
            };
            if let Some(e) = load_algebra(&file, &mut r)? {
                on_algebra(command, &e, &mut r)?;
            }
        }
    }
    Ok(r)
}

fn on_algebra(command: Command, e: &EffectAlgebra, r: &mut Report) -> CliResult<()> {
    match command {
        Command::Order { .. } => {
            for a in e.elements() {
                r.value(&format!("ortho({})", e.name(a)), e.name(e.orthosupplement(a)));
            }
            for a in e.elements() {
                let up: Vec<_> = e.elements().filter(|&b| e.leq(a, b)).collect();
                r.value(&format!("up({})", e.name(a)), name_set(e, &up));
            }
        }
        Command::Rdp { .. } => {
            let c = check_rdp(e);
            r.prop("rdp", c.holds, c.witness_names(e));
            let i = check_interpolation(e);
            match i.witness_names(e) {
                None => r.info("interpolation", "holds"),
                Some(w) => r.info("interpolation", format!("fails witness={w}")),
            }
        }
        Command::Lattice { .. } => {
            let c = check_lattice(e);
            r.prop("lattice", c.holds, c.witness_names(e));
        }
        Command::Mv { .. } => match mv_construct(e) {
            Some(mv) => {
                r.prop("mv", true, None);
                for a in e.elements() {
                    for b in e.elements().filter(|b| b.index() >= a.index()) {
                        r.value(&format!("{}⊕{}", e.name(a), e.name(b)), e.name(mv.oplus(a, b)));
                    }
                }
            }
            None => {
                let lattice = check_lattice(e);
                let rdp = check_rdp(e);
                let witness = if !lattice.holds {
                    lattice.witness_names(e).map(|w| format!("lattice:{w}"))
                } else if !rdp.holds {
                    rdp.witness_names(e).map(|w| format!("rdp:{w}"))
                } else {
                    Some("axiom-check".into())
                };
                r.prop("mv", false, witness);
            }
        },
        Command::Center { .. } => {
            let c = center(e);
            r.value("center", name_set(e, &c.elements));
            r.prop("center_boolean", c.boolean_verified, None);
            if check_rdp(e).holds {
                let crit = check_rdp_central_criterion(e)?;
                r.prop("rdp_central_criterion", crit.holds, crit.witness_names(e));
            } else {
                r.info("rdp_central_criterion", "skipped: no RDP");
            }
        }
        Command::Gencomp { .. } => {
            let c = check_general_comparability(e);
            r.prop("general_comparability", c.holds, c.witness_names(e));
        }
        Command::Divisible { nmax, .. } => {
            let nmax = nmax.unwrap_or(e.len());
            let d = check_divisible(e, nmax);
            r.info("nmax", nmax);
            let first = d.entries.iter().find(|x| x.root.is_none());
            r.prop(
                "divisible",
                d.divisible,
                first.map(|x| format!("({},{})", e.name(x.element), x.n)),
            );
        }
        Command::States { .. } => {
            let p = vertices::<Rational>(e);
            r.value("vertices", p.vertices.len());
            r.value("affine_dimension", p.affine_dimension);
            for (i, v) in p.vertices.iter().enumerate() {
                r.plain(format!("vertex {i}: {}", v.render(e)));
            }
            let props = state_system_properties(e, &p.vertices);
            for (key, c) in [
                ("order_determining", &props.order_determining),
                ("separating", &props.separating),
            ] {
                match c.witness_names(e) {
                    None => r.info(key, "holds"),
                    Some(w) => r.info(key, format!("fails witness={w}")),
                }
            }
        }
        Command::StateCheck { state, .. } => {
            if let Some(s) = load_state(e, &state, r)? {
                r.value("extremal", is_extremal(e, &s));
            }
        }
        Command::Crit32 { state, .. } => {
            if let Some(s) = load_state(e, &state, r)? {
                let c = criterion32(e, &s);
                r.prop("criterion32", c.holds, c.witness_names(e));
                r.value("extremal", is_extremal(e, &s));
            }
        }
        Command::Jp { state, .. } => {
            if let Some(s) = load_state(e, &state, r)? {
                let c = is_jauch_piron(e, &s);
                r.prop("jauch_piron", c.holds, c.witness_names(e));
            }
        }
        Command::Decompose { state, .. } => {
            if let Some(s) = load_state(e, &state, r)? {
                let p = vertices::<Rational>(e);
                let mu = decompose(e, &p, &s, PivotOrder::Forward)?;
                for (i, w) in mu.support.iter().zip(&mu.weights) {
                    r.plain(format!("mu: vertex_{i} = {w}"));
                }
                let back = mu.barycenter(&p.vertices)?;
                r.prop("reconstruction", back == s, None);
            }
        }
        Command::Classify { .. } => classify(e, r)?,
        Command::Check { .. } | Command::Suite { .. } => unreachable!(),
    }
    Ok(())
}

/// Reads a state file. Values that contradict the state equations are
/// reported as `PROP is_state FAIL` and yield `None`.
fn load_state(e: &EffectAlgebra, path: &Path, r: &mut Report) -> CliResult<Option<StateVector<Rational>>> {
    let text = read(path)?;
    match parse_state::<Rational>(e, &text) {
        Ok(s) => {
            let ok = is_state(e, &s);
            r.prop("is_state", ok, None);
            Ok(ok.then_some(s))
        }
        Err(Error::Infeasible(msg)) => {
            r.prop("is_state", false, Some(msg.replace(' ', "_")));
            Ok(None)
        }
        Err(err) => Err(input_error(path)(err)),
    }
}

fn classify(e: &EffectAlgebra, r: &mut Report) -> CliResult<()> {
    if !check_rdp(e).holds {
        r.info("theorem", "skipped: hypothesis unmet (no RDP)");
        r.value("class", classify_simplex(&vertices::<Rational>(e)));
        return Ok(());
    }
    let t = theorem51_report::<Rational>(e)?;
    for (c, holds) in &t.rows {
        r.value(&format!("({})", c.roman()), format!("{}={holds}", c.key()));
    }
    r.value("class", t.class);
    if let SimplexClass::Simplex { bauer: true } = t.class {
        r.info("representing_measure", "unique for every state (Bauer simplex)");
    }
    let witness = (!t.agree).then(|| {
        let rows: Vec<String> = t.rows.iter().map(|(c, h)| format!("{}={h}", c.key())).collect();
        rows.join(",")
    });
    r.prop("conditions_agree", t.agree, witness);
    Ok(())
}

fn suite(spec: &str, r: &mut Report) -> CliResult<()> {
    let entries = corpus(spec)?;
    if entries.is_empty() {
        r.info("suite", "no algebras");
        return Ok(());
    }
    for (idx, entry) in entries.iter().enumerate() {
        let (label, e) = (&entry.label, &entry.algebra);
        let p = vertices::<Rational>(e);
        if p.vertices.is_empty() {
            r.info(label, "stateless");
        }
        let rdp = check_rdp(e).holds;
        if rdp {
            let t = theorem51_report::<Rational>(e)?;
            r.prop(&format!("{label}.theorem51"), t.agree, None);
            let bad = p.vertices.iter().position(|v| !criterion32(e, v).holds);
            r.prop(
                &format!("{label}.criterion32"),
                bad.is_none(),
                bad.map(|i| format!("vertex_{i}")),
            );
        } else {
            r.info(
                &format!("{label}.theorem51"),
                "skipped: hypothesis unmet (no RDP)",
            );
        }
        if p.vertices.is_empty() {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ idx as u64);
        let simplex = classify_simplex(&p).is_simplex();
        let mut jp_bad = None;
        let mut round_bad = None;
        let mut pivot_bad = None;
        for m in 0..MIXTURES {
            let w = mixture_weights(&mut rng, p.vertices.len());
            let s = sigma_convex(&p.vertices, &w)?;
            if rdp && jp_bad.is_none() && !is_jauch_piron(e, &s).holds {
                jp_bad = Some(m);
            }
            let fwd = decompose(e, &p, &s, PivotOrder::Forward)?;
            if round_bad.is_none() && fwd.barycenter(&p.vertices)? != s {
                round_bad = Some(m);
            }
            if simplex && pivot_bad.is_none() && decompose(e, &p, &s, PivotOrder::Reverse)? != fwd {
                pivot_bad = Some(m);
            }
        }
        let mix = |m: Option<usize>| m.map(|m| format!("mixture_{m}"));
        if rdp {
            r.prop(&format!("{label}.jauch_piron"), jp_bad.is_none(), mix(jp_bad));
        }
        r.prop(&format!("{label}.decompose"), round_bad.is_none(), mix(round_bad));
        if simplex {
            r.prop(
                &format!("{label}.pivot_order"),
                pivot_bad.is_none(),
                mix(pivot_bad),
            );
        }
    }
    Ok(())
}
