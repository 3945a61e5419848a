use super::{
    as_effect_algebra, b0_algebra, bold_closure, clan_closure, FunctionFamily, FunctionTable, SetAlgebra,
};
use crate::algebra::{EffectAlgebra, Elem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::states::{is_extremal, is_state, StateVector};
use crate::structure::{check_lattice, check_rdp, Check};

/// The clan on `{a,b,c}` of all `(x, y, (x+y)/2)` with `x, y` multiples of
/// `1/d` and `x + y` an even multiple. `d` must be even, `2 <= d <= 16`.
pub fn midpoint_family<S: Scalar>(d: usize) -> Result<FunctionFamily<S>> {
    if d < 2 || d % 2 == 1 || d > 16 {
        return Err(Error::Precondition(format!("d = {d} must be even and in 2..=16")));
    }
    let den = d as i64;
    let mut gens = Vec::new();
    for i in 0..=den {
        for j in 0..=den {
            if (i + j) % 2 == 0 {
                let vals = vec![S::ratio(i, den), S::ratio(j, den), S::ratio(i + j, 2 * den)];
                gens.push(FunctionTable::new(String::new(), vals));
            }
        }
    }
    let points: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let family = clan_closure(&points, &gens, gens.len() + 1)?;
    if family.len() != gens.len() {
        return Err(Error::Infeasible(format!(
            "closure has {} members, expected {}",
            family.len(),
            gens.len()
        )));
    }
    Ok(family)
}

#[derive(Clone, Debug)]
pub struct MidpointReport<S> {
    pub d: usize,
    pub family: FunctionFamily<S>,
    pub algebra: EffectAlgebra,
    pub clan: bool,
    pub rdp: Check,
    pub lattice: Check,
    pub b0: SetAlgebra,
    /// Some member that is not constant on the atoms of `b0`.
    pub non_measurable: Option<usize>,
    /// `∫ f dδ_c = ∫ f d(δ_a+δ_b)/2` for every member.
    pub integrals_agree: bool,
    pub evaluation_states: [StateVector<S>; 3],
    /// All three evaluations are states.
    pub states_valid: bool,
    /// `s_c = (s_a + s_b)/2`.
    pub midpoint: bool,
    pub sc_extremal: bool,
}

pub fn midpoint_demo<S: Scalar>(d: usize) -> Result<MidpointReport<S>> {
    let family = midpoint_family::<S>(d)?;
    let algebra = as_effect_algebra(&family)?;
    let clan = family.clan_violation().is_none();
    let b0 = b0_algebra(&family, &algebra);
    let non_measurable = family
        .members
        .iter()
        .position(|f| !super::is_measurable(&f.values, &b0).unwrap_or(false));
    let half = S::ratio(1, 2);
    let integrals_agree = family.members.iter().all(|f| {
        let v = &f.values;
        v[2] == half.clone() * (v[0].clone() + v[1].clone())
    });
    let eval = |p: usize| StateVector::new(family.members.iter().map(|f| f.values[p].clone()).collect());
    let evaluation_states = [eval(0), eval(1), eval(2)];
    let states_valid = evaluation_states.iter().all(|s| is_state(&algebra, s));
    let midpoint = (0..family.len()).all(|i| {
        let e = Elem::new(i);
        evaluation_states[2].value(e).clone()
            == half.clone() * (evaluation_states[0].value(e).clone() + evaluation_states[1].value(e).clone())
    });
    let sc_extremal = is_extremal(&algebra, &evaluation_states[2]);
    Ok(MidpointReport {
        d,
        rdp: check_rdp(&algebra),
        lattice: check_lattice(&algebra),
        family,
        algebra,
        clan,
        b0,
        non_measurable,
        integrals_agree,
        evaluation_states,
        states_valid,
        midpoint,
        sc_extremal,
    })
}

/// The clan generated by characteristic functions of the even-size subsets
/// of `{1..n}`; `n` even, `2 <= n <= 12`.
pub fn parity_family<S: Scalar>(n: usize) -> Result<FunctionFamily<S>> {
    if n < 2 || n % 2 == 1 || n > 12 {
        return Err(Error::Precondition(format!("n = {n} must be even and in 2..=12")));
    }
    let points: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let gens: Vec<FunctionTable<S>> = (0u32..1 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| {
            let vals = (0..n)
                .map(|i| if m >> i & 1 == 1 { S::one() } else { S::zero() })
                .collect();
            FunctionTable::new(String::new(), vals)
        })
        .collect();
    clan_closure(&points, &gens, super::DEFAULT_CAP)
}

/// The Bold algebra generated by the singleton indicators and the constant
/// `1/den` on `points` points. With `den` at least 1 it is every function
/// with values in multiples of `1/den`.
pub fn powerset_grid_family<S: Scalar>(points: usize, den: usize, cap: usize) -> Result<FunctionFamily<S>> {
    if points == 0 || den == 0 {
        return Err(Error::Precondition("points and den must be positive".into()));
    }
    let names: Vec<String> = (1..=points).map(|i| format!("p{i}")).collect();
    let mut gens: Vec<FunctionTable<S>> = (0..points)
        .map(|p| {
            let vals = (0..points)
                .map(|i| if i == p { S::one() } else { S::zero() })
                .collect();
            FunctionTable::new(String::new(), vals)
        })
        .collect();
    gens.push(FunctionTable::new("u", vec![S::ratio(1, den as i64); points]));
    bold_closure(&names, &gens, cap)
}
