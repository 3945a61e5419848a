use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use effalg::clans::{
    as_effect_algebra, b0_algebra, bk_verify, clan_closure, parse_family, s0_family, FunctionFamily,
    SetAlgebra, DEFAULT_CAP,
};
use effalg::states::{is_state, parse_state};
use effalg::structure::center;
use effalg::{EffectAlgebra, Error, Rational};

use crate::{input_error, read, CliResult, Report};

#[derive(Parser)]
#[command(name = "clan", about = "Effect-clans of [0,1]-valued functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Whether the listed functions already form a clan
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Sets whose indicator is a central member of the generated clan
    B0 {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Compare a state with the integral against its set measure
    Integrate {
        file: PathBuf,
        state: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
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

fn load(path: &Path) -> CliResult<FunctionFamily<Rational>> {
    parse_family(&read(path)?).map_err(input_error(path))
}

fn closure(family: &FunctionFamily<Rational>, cap: usize) -> CliResult<FunctionFamily<Rational>> {
    Ok(clan_closure(&family.points, &family.members, cap)?)
}

fn render_sets(b: &SetAlgebra, sets: &[Vec<usize>]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| b.render(s)).collect();
    format!("[{}]", parts.join(","))
}

fn dispatch(command: Command) -> CliResult<Report> {
    let mut r = Report::new();
    match command {
        Command::Check { file, cap } => {
            let listed = load(&file)?;
            r.value("listed", listed.len());
            let violation = listed.clan_violation();
            r.prop(
                "clan",
                violation.is_none(),
                violation.map(|v| v.replace(' ', "_")),
            );
            let closed = closure(&listed, cap)?;
            r.value("closure", closed.len());
            let e = as_effect_algebra(&closed)?;
            r.prop("axioms", true, None);
            match closed.bold_violation() {
                None => r.info("bold", "closed under truncated sums"),
                Some(v) => r.info("bold", format!("no: {v}")),
            }
            r.value("elements", e.len());
        }
        Command::B0 { file, cap } => {
            let closed = closure(&load(&file)?, cap)?;
            let e = as_effect_algebra(&closed)?;
            let b = b0_algebra(&closed, &e);
            r.value("closure", closed.len());
            r.value("b0", render_sets(&b, &b.members));
            r.value("atoms", render_sets(&b, &b.atoms));
            r.prop("b0_set_algebra", b.verified, None);
            r.value("s0", render_sets(&b, &s0_family(&closed)));
            r.info("center_size", center(&e).elements.len());
        }
        Command::Integrate { file, state, cap } => {
            let closed = closure(&load(&file)?, cap)?;
            let e = as_effect_algebra(&closed)?;
            integrate(&closed, &e, &state, &mut r)?;
        }
    }
    Ok(r)
}

fn integrate(f: &FunctionFamily<Rational>, e: &EffectAlgebra, path: &Path, r: &mut Report) -> CliResult<()> {
    let s = match parse_state::<Rational>(e, &read(path)?) {
        Ok(s) => s,
        Err(Error::Infeasible(msg)) => {
            r.prop("is_state", false, Some(msg.replace(' ', "_")));
            return Ok(());
        }
        Err(err) => return Err(input_error(path)(err)),
    };
    if !r.prop("is_state", is_state(e, &s), None) {
        return Ok(());
    }
    let b = b0_algebra(f, e);
    let report = bk_verify(f, e, &b, &s)?;
    for (set, mu) in report.measure.sets.iter().zip(&report.measure.values) {
        r.value(&format!("mu{}", b.render(set)), mu);
    }
    r.prop(
        "measure_additive",
        report.measure.additive && report.measure.normalised,
        None,
    );
    for row in &report.rows {
        let name = &f.members[row.member].name;
        match &row.integral {
            Some(i) => r.value(name, format!("s={} integral={i}", row.state_value)),
            None => r.info(name, format!("s={} not b0-measurable", row.state_value)),
        }
    }
    let bad = report.rows.iter().find(|row| row.agrees() == Some(false));
    r.prop(
        "integral_equals_state",
        report.holds,
        bad.map(|row| f.members[row.member].name.clone()),
    );
    let measurable: Vec<&str> = report
        .measurable_members()
        .iter()
        .map(|&i| f.members[i].name.as_str())
        .collect();
    r.value("measurable_members", format!("[{}]", measurable.join(",")));
    if report.all_measurable {
        r.info("measurable", "every member");
    }
    Ok(())
}
