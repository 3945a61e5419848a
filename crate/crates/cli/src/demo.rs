use std::ffi::OsString;

use clap::{Parser, Subcommand};
use effalg::clans::{as_effect_algebra, b0_algebra, midpoint_demo, parity_family};
use effalg::represent::{
    aff_decompose, aff_min_membership, aff_state, sp_clan_witness, sp_state, RationalPair, StrictState,
};
use effalg::structure::{center, check_lattice, check_rdp};
use effalg::{Rational, Scalar};

use crate::{name_set, CliResult, Report};

#[derive(Parser)]
#[command(name = "demo", about = "Worked examples with exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hat map on the strictly ordered unit square fails to give a clan
    Ex31,
    /// Affine functions on [0,1]: decomposition of a point evaluation
    Aff,
    /// Two measures inducing one state on a midpoint clan
    Midpoint {
        #[arg(long, default_value_t = 4)]
        d: usize,
    },
    /// The clan of even-size indicators
    Parity {
        #[arg(long, default_value_t = 6)]
        n: usize,
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

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn dispatch(command: Command) -> CliResult<Report> {
    let mut r = Report::new();
    match command {
        Command::Ex31 => ex31(&mut r)?,
        Command::Aff => aff(&mut r)?,
        Command::Midpoint { d } => midpoint(d, &mut r)?,
        Command::Parity { n } => parity(n, &mut r)?,
    }
    Ok(r)
}

fn ex31(r: &mut Report) -> CliResult<()> {
    let a = RationalPair::new(q(3, 10), q(3, 10));
    let b = RationalPair::new(q(7, 10), q(2, 5));
    r.value("a", &a);
    r.value("b", &b);
    let w = sp_clan_witness(&a, &b)?;
    for (s, below) in StrictState::BOTH.into_iter().zip(w.below_complement) {
        let tag = match s {
            StrictState::S0 => "s0",
            StrictState::S1 => "s1",
        };
        let (sa, sb) = (sp_state(s, &a), sp_state(s, &b));
        r.value(&format!("{tag}(a)"), &sa);
        r.value(&format!("{tag}(b)"), &sb);
        r.prop(
            &format!("hat_a_below_1-hat_b@{tag}"),
            below,
            Some(format!("{sa}>{}", Rational::from_int(1) - sb.clone())),
        );
    }
    r.value("candidate", &w.candidate);
    let unit = RationalPair::new(q(1, 1), q(1, 1));
    r.prop(
        "hat_sum_in_image",
        w.candidate_is_element,
        Some(format!("{}_not_strictly_below_{unit}", w.candidate)),
    );
    r.info(
        "conclusion",
        if w.breaks_clan() {
            "hat image is not an effect-clan"
        } else {
            "no violation found"
        },
    );
    Ok(())
}

fn aff(r: &mut Report) -> CliResult<()> {
    let x = q(1, 3);
    let mu = aff_decompose(&x)?;
    r.value("x", &x);
    for (tag, w) in ["s0", "s1"].iter().zip(&mu.weights) {
        r.plain(format!("mu: {tag} = {w}"));
    }
    let f = RationalPair::new(q(1, 5), q(4, 5));
    let direct = aff_state(&x, &f)?;
    let via =
        mu.weights[0].clone() * aff_state(&q(0, 1), &f)? + mu.weights[1].clone() * aff_state(&q(1, 1), &f)?;
    r.value(&format!("s_x{f}"), &direct);
    r.value(&format!("mu-integral{f}"), &via);
    r.prop("reconstruction", direct == via, None);

    let id = RationalPair::new(q(0, 1), q(1, 1));
    let co = RationalPair::new(q(1, 1), q(0, 1));
    let m = aff_min_membership(&id, &co);
    r.value("meet(id,1-id)", &m.meet);
    r.prop(
        "pointwise_min_in_E",
        m.pointwise_min_affine,
        m.crossing.as_ref().map(|c| format!("kink_at_{c}")),
    );
    Ok(())
}

fn midpoint(d: usize, r: &mut Report) -> CliResult<()> {
    let m = midpoint_demo::<Rational>(d)?;
    r.value("d", d);
    r.value("members", m.family.len());
    r.prop("clan", m.clan, m.family.clan_violation());
    match m.rdp.witness_names(&m.algebra) {
        None => r.info("rdp", "holds"),
        Some(w) => r.info("rdp", format!("fails witness={w}")),
    }
    let sets: Vec<String> = m.b0.members.iter().map(|s| m.b0.render(s)).collect();
    r.value("b0", format!("[{}]", sets.join(",")));
    let everything: Vec<usize> = (0..m.family.points.len()).collect();
    r.prop("b0_trivial", m.b0.members == vec![vec![], everything], None);
    match m.non_measurable {
        Some(i) => r.value("non_measurable", &m.family.members[i].name),
        None => r.info("non_measurable", "none"),
    }
    r.prop("non_measurable_member_exists", m.non_measurable.is_some(), None);
    let half = q(1, 2);
    for f in &m.family.members {
        let v = &f.values;
        let mix = half.clone() * (v[0].clone() + v[1].clone());
        r.value(&f.name, format!("delta_c={} mean_ab={mix}", v[2]));
    }
    r.prop("measures_induce_same_state", m.integrals_agree, None);
    r.prop("evaluations_are_states", m.states_valid, None);
    r.prop("s_c_is_midpoint", m.midpoint, None);
    r.value("s_c_extremal", m.sc_extremal);
    Ok(())
}

fn parity(n: usize, r: &mut Report) -> CliResult<()> {
    let f = parity_family::<Rational>(n)?;
    let e = as_effect_algebra(&f)?;
    r.value("members", f.len());
    r.prop("clan", f.clan_violation().is_none(), None);
    let rdp = check_rdp(&e);
    r.prop("rdp", rdp.holds, rdp.witness_names(&e));
    let lattice = check_lattice(&e);
    r.prop("lattice", lattice.holds, lattice.witness_names(&e));
    let c = center(&e);
    r.value("center", name_set(&e, &c.elements));
    let b = b0_algebra(&f, &e);
    let sets: Vec<String> = b.members.iter().map(|s| b.render(s)).collect();
    r.value("b0", format!("[{}]", sets.join(",")));
    Ok(())
}
