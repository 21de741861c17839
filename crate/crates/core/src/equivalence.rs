//! Bidirectional maps between the imposed-temperature and convective
//! problems, bounds on the front coefficient, and film-strength sweeps.
//!
//! A two-phase convective solution keeps its face at a constant
//! temperature, so the imposed-temperature problem with that face value has
//! the same front and the same fields. The reverse map recovers the film
//! coefficient from the face flux balance. Both directions are exact in
//! real arithmetic; the round-trip functions measure how closely the two
//! solved problems actually agree.

use serde::Serialize;

use crate::convective;
use crate::model::{self, BoundaryCondition, ProblemSpec};
use crate::neumann::{self, Regime, SimilaritySolution};
use crate::solver::RootTolerance;
use crate::special::erf;
use crate::Error;

/// Outcome of a round trip between the two problem forms.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    /// front coefficient of the imposed-temperature problem
    pub xi: f64,
    /// front coefficient of the convective problem
    pub lambda: f64,
    /// face temperature the convective solution maintains
    pub mapped_t0: f64,
    /// film coefficient recovered from the face flux balance
    pub mapped_h0: f64,
    /// upper bound on erf(xi sqrt(b)) built from the bulk temperature
    pub bulk_bound: f64,
    /// bulk-free bound, the infimum of `bulk_bound` over all bulk
    /// temperatures
    pub intrinsic_bound: f64,
    /// whether `bulk_bound` says anything beyond erf < 1
    pub bulk_bound_informative: bool,
    /// |lambda - xi|
    pub roundtrip_gap: f64,
    /// max |T_a - T_b| over the comparison grid, in degrees
    pub field_gap: f64,
}

/// Bounds on the front coefficient of an imposed-temperature problem,
/// packaged as bounds on erf(xi sqrt(b)).
#[derive(Debug, Clone, Serialize)]
pub struct XiBounds {
    /// bound using a bulk temperature below the face value; absent when no
    /// bulk temperature was supplied
    pub bulk_bound: Option<f64>,
    /// bound from the problem data alone
    pub intrinsic_bound: f64,
    /// true when `bulk_bound` < 1, i.e. it constrains erf at all
    pub bulk_bound_informative: Option<bool>,
}

/// Face temperature a two-phase convective solution maintains, from its
/// solved front coefficient. This is the imposed-temperature datum of the
/// equivalent problem; it sits strictly between the bulk and freezing
/// temperatures.
pub fn t0_from_convective(spec: &ProblemSpec, lambda: f64) -> Result<f64, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = spec.bc else {
        return Err(Error::Spec("face-temperature map needs a convective spec".into()));
    };
    if convective::classify_regime(spec)? == Regime::PureConduction {
        return Err(Error::Regime(
            "film below the freezing threshold has no equivalent imposed-temperature problem"
                .into(),
        ));
    }
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain(format!("front coefficient must be positive, got {lambda}")));
    }
    let groups = model::convective_groups(spec)?;
    let b2 = groups.b2.expect("convective groups carry b2");
    let film = b2 * erf(lambda * groups.b.sqrt());
    Ok(t_inf + (spec.material.t_f - t_inf) / (1.0 + film))
}

/// Film coefficient whose convective problem reproduces an
/// imposed-temperature solution, given a bulk temperature below the face
/// value. This is the face flux divided by the film temperature drop; the
/// result always clears the freezing threshold of the convective problem it
/// defines, and that is checked rather than assumed.
pub fn h0_from_dirichlet(spec: &ProblemSpec, t_inf: f64, xi: f64) -> Result<f64, Error> {
    let BoundaryCondition::Dirichlet { t_0 } = spec.bc else {
        return Err(Error::Spec("film-coefficient map needs an imposed-temperature spec".into()));
    };
    if !t_inf.is_finite() || t_inf >= t_0 {
        return Err(Error::Domain(format!(
            "bulk temperature must sit below the face value {t_0}, got {t_inf}"
        )));
    }
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::Domain(format!("front coefficient must be positive, got {xi}")));
    }
    let m = &spec.material;
    let b = m.alpha_l() / m.alpha_s();
    let h_0 = m.k_s * (m.t_f - t_0)
        / ((std::f64::consts::PI * m.alpha_s()).sqrt() * erf(xi * b.sqrt()) * (t_0 - t_inf));
    let mapped = ProblemSpec::new(
        *m,
        spec.t_i,
        BoundaryCondition::Convective { h_0, t_inf },
    )?;
    if convective::classify_regime(&mapped)? != Regime::TwoPhase {
        return Err(Error::Spec(
            "mapped film coefficient falls below the freezing threshold; the supplied front \
             coefficient does not solve this problem"
                .into(),
        ));
    }
    Ok(h_0)
}

/// Bounds on erf(xi sqrt(b)) for an imposed-temperature problem. The
/// bulk-free bound is `(k_s/k_l) sqrt(alpha_l/alpha_s) (T_f-T_0)/(T_i-T_f)`;
/// a bulk temperature `T_inf < T_0` scales it by `(T_i-T_inf)/(T_0-T_inf)`,
/// a factor strictly above 1 that grows with `T_inf` and tends to 1 as
/// `T_inf` drops, so the bulk-free value is the infimum.
pub fn xi_bounds(spec: &ProblemSpec, t_inf: Option<f64>) -> Result<XiBounds, Error> {
    let BoundaryCondition::Dirichlet { t_0 } = spec.bc else {
        return Err(Error::Spec("front bounds apply to imposed-temperature specs".into()));
    };
    let m = &spec.material;
    let intrinsic = (m.k_s / m.k_l) * (m.alpha_l() / m.alpha_s()).sqrt() * (m.t_f - t_0)
        / (spec.t_i - m.t_f);
    let (bulk, informative) = match t_inf {
        None => (None, None),
        Some(v) => {
            if !v.is_finite() || v >= t_0 {
                return Err(Error::Domain(format!(
                    "bulk temperature must sit below the face value {t_0}, got {v}"
                )));
            }
            let bound = intrinsic * (spec.t_i - v) / (t_0 - v);
            (Some(bound), Some(bound < 1.0))
        }
    };
    Ok(XiBounds { bulk_bound: bulk, intrinsic_bound: intrinsic, bulk_bound_informative: informative })
}

/// The limiting front coefficient for an ever-stronger film: the film pins
/// the face at the bulk temperature, so the limit is the
/// imposed-temperature coefficient with `T_0 = T_inf`.
pub fn lambda_supremum(spec: &ProblemSpec) -> Result<f64, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = spec.bc else {
        return Err(Error::Spec("limit coefficient needs a convective spec".into()));
    };
    let pinned = ProblemSpec::new(
        spec.material,
        spec.t_i,
        BoundaryCondition::Dirichlet { t_0: t_inf },
    )?;
    Ok(neumann::solve_dirichlet(&pinned, RootTolerance::default())?
        .front
        .expect("imposed-temperature solve always carries a front")
        .coeff)
}

/// One row of a film-strength sweep. Entries at or below the freezing
/// threshold carry a note instead of a coefficient.
#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub h_0: f64,
    pub lambda: Option<f64>,
    /// equivalent imposed-temperature datum, for solved entries
    pub t0_equiv: Option<f64>,
    pub note: Option<String>,
}

/// Solve the convective problem across a grid of film coefficients,
/// keeping material, initial and bulk temperatures from the template.
/// Unsolvable entries are flagged in place, never fatal; rows keep grid
/// order.
pub fn lambda_sweep(template: &ProblemSpec, h0_grid: &[f64]) -> Result<Vec<SweepEntry>, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = template.bc else {
        return Err(Error::Spec("sweep template must be convective".into()));
    };
    let mut rows = Vec::with_capacity(h0_grid.len());
    for &h_0 in h0_grid {
        let entry = sweep_entry(template, h_0, t_inf);
        rows.push(entry);
    }
    Ok(rows)
}

fn sweep_entry(template: &ProblemSpec, h_0: f64, t_inf: f64) -> SweepEntry {
    let spec = match ProblemSpec::new(
        template.material,
        template.t_i,
        BoundaryCondition::Convective { h_0, t_inf },
    ) {
        Ok(s) => s,
        Err(e) => {
            return SweepEntry { h_0, lambda: None, t0_equiv: None, note: Some(e.to_string()) }
        }
    };
    match convective::solve_convective(&spec, RootTolerance::default()) {
        Ok(sol) => match sol.front {
            Some(front) => {
                let t0 = t0_from_convective(&spec, front.coeff).ok();
                SweepEntry { h_0, lambda: Some(front.coeff), t0_equiv: t0, note: None }
            }
            None => SweepEntry {
                h_0,
                lambda: None,
                t0_equiv: None,
                note: Some("at or below the freezing threshold".into()),
            },
        },
        Err(e) => SweepEntry { h_0, lambda: None, t0_equiv: None, note: Some(e.to_string()) },
    }
}

/// Pointwise agreement of the two front maps under the face-value
/// substitution: at each x the convective map equals the
/// imposed-temperature map whose face datum is the value a film would
/// maintain if the front coefficient were x. Returns the max |gap| over
/// the sample points; it is pure rounding error, and it is the algebraic
/// reason the two problems share a front.
pub fn map_identity_gap(spec: &ProblemSpec, xs: &[f64]) -> Result<f64, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = spec.bc else {
        return Err(Error::Spec("map comparison starts from a convective spec".into()));
    };
    let groups_c = model::convective_groups(spec)?;
    let b2 = groups_c.b2.expect("convective groups carry b2");
    let mut gap = 0.0f64;
    for &x in xs {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::Domain(format!("map comparison needs x > 0, got {x}")));
        }
        let film = b2 * erf(x * groups_c.b.sqrt());
        let t_0 = t_inf + (spec.material.t_f - t_inf) / (1.0 + film);
        let pinned =
            ProblemSpec::new(spec.material, spec.t_i, BoundaryCondition::Dirichlet { t_0 })?;
        let groups_d = model::dirichlet_groups(&pinned)?;
        let g = neumann::front_map(x, &groups_d)?;
        let f = convective::front_map(x, &groups_c)?;
        gap = gap.max((g - f).abs());
    }
    Ok(gap)
}

/// Round trip starting from an imposed-temperature problem: solve it, map
/// to the equivalent convective problem with the given bulk temperature,
/// solve that, and measure every agreement the equivalence promises.
pub fn roundtrip_check(spec: &ProblemSpec, t_inf: f64) -> Result<EquivalenceReport, Error> {
    let BoundaryCondition::Dirichlet { .. } = spec.bc else {
        return Err(Error::Spec("round trip starts from an imposed-temperature spec".into()));
    };
    let sol1 = neumann::solve_dirichlet(spec, RootTolerance::default())?;
    let xi = sol1.front.expect("imposed-temperature solve always carries a front").coeff;
    let mapped_h0 = h0_from_dirichlet(spec, t_inf, xi)?;
    let spec2 = ProblemSpec::new(
        spec.material,
        spec.t_i,
        BoundaryCondition::Convective { h_0: mapped_h0, t_inf },
    )?;
    let sol2 = convective::solve_convective(&spec2, RootTolerance::default())?;
    let lambda = sol2
        .front
        .ok_or_else(|| Error::Regime("mapped convective problem failed to freeze".into()))?
        .coeff;
    let mapped_t0 = t0_from_convective(&spec2, lambda)?;
    finish_report(spec, t_inf, &sol1, &sol2, xi, lambda, mapped_t0, mapped_h0)
}

/// Round trip starting from a two-phase convective problem: solve it, pin
/// the face value as an imposed-temperature problem, solve that, and map
/// the film coefficient back.
pub fn roundtrip_check_reverse(spec: &ProblemSpec) -> Result<EquivalenceReport, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = spec.bc else {
        return Err(Error::Spec("reverse round trip starts from a convective spec".into()));
    };
    let sol2 = convective::solve_convective(spec, RootTolerance::default())?;
    let lambda = sol2
        .front
        .ok_or_else(|| {
            Error::Regime("film below the freezing threshold has no equivalent problem".into())
        })?
        .coeff;
    let mapped_t0 = t0_from_convective(spec, lambda)?;
    let spec1 = ProblemSpec::new(
        spec.material,
        spec.t_i,
        BoundaryCondition::Dirichlet { t_0: mapped_t0 },
    )?;
    let sol1 = neumann::solve_dirichlet(&spec1, RootTolerance::default())?;
    let xi = sol1.front.expect("imposed-temperature solve always carries a front").coeff;
    let mapped_h0 = h0_from_dirichlet(&spec1, t_inf, xi)?;
    finish_report(&spec1, t_inf, &sol1, &sol2, xi, lambda, mapped_t0, mapped_h0)
}

#[allow(clippy::too_many_arguments)]
fn finish_report(
    spec1: &ProblemSpec,
    t_inf: f64,
    sol1: &SimilaritySolution,
    sol2: &SimilaritySolution,
    xi: f64,
    lambda: f64,
    mapped_t0: f64,
    mapped_h0: f64,
) -> Result<EquivalenceReport, Error> {
    let bounds = xi_bounds(spec1, Some(t_inf))?;
    let bulk_bound = bounds.bulk_bound.expect("bulk temperature was supplied");
    let b = spec1.material.alpha_l() / spec1.material.alpha_s();
    let front_erf = erf(xi * b.sqrt());
    // negated so a NaN refuses rather than sliding through
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(front_erf < bulk_bound) {
        return Err(Error::Solver(format!(
            "front bound violated: erf at the front {front_erf} is not below {bulk_bound}"
        )));
    }
    Ok(EquivalenceReport {
        xi,
        lambda,
        mapped_t0,
        mapped_h0,
        bulk_bound,
        intrinsic_bound: bounds.intrinsic_bound,
        bulk_bound_informative: bulk_bound < 1.0,
        roundtrip_gap: (lambda - xi).abs(),
        field_gap: max_field_gap(sol1, sol2)?,
    })
}

/// Max absolute temperature difference between two two-phase solutions
/// over a 50 x 5 space-time grid reaching well past both fronts.
fn max_field_gap(a: &SimilaritySolution, b: &SimilaritySolution) -> Result<f64, Error> {
    let times = [900.0, 1800.0, 3600.0, 7200.0, 14400.0];
    let mut gap = 0.0f64;
    for &t in &times {
        let reach = 5.0 * a.front_position(t)?.max(b.front_position(t)?);
        for i in 0..50 {
            let x = reach * i as f64 / 49.0;
            let (va, _) = a.temperature(x, t)?;
            let (vb, _) = b.temperature(x, t)?;
            gap = gap.max((va - vb).abs());
        }
    }
    Ok(gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::MaterialProperties;

    fn water_ice() -> MaterialProperties {
        MaterialProperties {
            rho: 1000.0,
            c_s: 2100.0,
            c_l: 4200.0,
            k_s: 2.1,
            k_l: 0.6,
            latent_heat: 334_000.0,
            t_f: 0.0,
        }
    }

    fn dirichlet_spec() -> ProblemSpec {
        ProblemSpec::new(water_ice(), 10.0, BoundaryCondition::Dirichlet { t_0: -20.0 }).unwrap()
    }

    fn convective_spec(h_0: f64) -> ProblemSpec {
        ProblemSpec::new(
            water_ice(),
            10.0,
            BoundaryCondition::Convective { h_0, t_inf: -20.0 },
        )
        .unwrap()
    }

    fn assert_rel(value: f64, reference: f64, tol: f64, label: &str) {
        let rel = (value - reference).abs() / reference.abs().max(1e-300);
        assert!(rel <= tol, "{label}: {value:e} vs {reference:e}, rel {rel:e}");
    }

    #[test]
    fn film_coefficient_from_imposed_temperature() {
        // frozen: face flux over the film temperature drop at T_inf = -40
        let spec = dirichlet_spec();
        let xi = 0.59317033743379476;
        let h_0 = h0_from_dirichlet(&spec, -40.0, xi).unwrap();
        assert_rel(h_0, 4761.97165401829, 1e-12, "mapped h0");
        // the film drop shrinks as the bulk rises, so h0 grows
        assert!(h0_from_dirichlet(&spec, -21.0, xi).unwrap() > h_0);
        assert!(h0_from_dirichlet(&spec, -20.0 - 1e-9, xi).unwrap() > 1e13);
        // and decays toward zero for a very cold bulk
        assert!(h0_from_dirichlet(&spec, -1e9, xi).unwrap() < 1e-4);
        // domain errors
        assert!(matches!(h0_from_dirichlet(&spec, -20.0, xi), Err(Error::Domain(_))));
        assert!(matches!(h0_from_dirichlet(&spec, -10.0, xi), Err(Error::Domain(_))));
        assert!(matches!(h0_from_dirichlet(&spec, -40.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(
            h0_from_dirichlet(&convective_spec(1e4), -40.0, xi),
            Err(Error::Spec(_))
        ));
    }

    #[test]
    fn film_coefficient_threshold_is_checked() {
        // a front coefficient that is far too large for a strongly
        // superheated slab maps below the freezing threshold and is refused
        let spec =
            ProblemSpec::new(water_ice(), 1000.0, BoundaryCondition::Dirichlet { t_0: -20.0 })
                .unwrap();
        assert!(matches!(h0_from_dirichlet(&spec, -40.0, 3.0), Err(Error::Spec(_))));
    }

    #[test]
    fn face_temperature_from_convective() {
        let spec = convective_spec(1e4);
        // frozen: the face value the solved film maintains
        let t0 = t0_from_convective(&spec, 0.46567025197950688).unwrap();
        assert_rel(t0, -12.478674586598985, 1e-12, "mapped t0");
        assert!(t0 > -20.0 && t0 < 0.0);
        // a vanishing front coefficient means the face barely reaches
        // freezing; an enormous film pins it at the bulk value
        assert!((t0_from_convective(&spec, 1e-300).unwrap() - 0.0).abs() < 1e-12);
        let strong = convective_spec(1e12);
        let pinned = t0_from_convective(&strong, 0.59).unwrap();
        assert!((pinned + 20.0).abs() < 1e-6, "pinned face {pinned}");
        // errors
        assert!(matches!(t0_from_convective(&spec, -1.0), Err(Error::Domain(_))));
        assert!(matches!(t0_from_convective(&spec, f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(t0_from_convective(&dirichlet_spec(), 0.5), Err(Error::Spec(_))));
        let weak = convective_spec(100.0);
        assert!(matches!(t0_from_convective(&weak, 0.5), Err(Error::Regime(_))));
    }

    #[test]
    fn bounds_values_and_monotonicity() {
        let spec = dirichlet_spec();
        // frozen bound values
        let b = xi_bounds(&spec, Some(-40.0)).unwrap();
        assert_rel(b.intrinsic_bound, 2.6457513110645906, 1e-13, "intrinsic");
        assert_rel(b.bulk_bound.unwrap(), 6.6143782776614765, 1e-13, "bulk");
        assert_eq!(b.bulk_bound_informative, Some(false));
        // without a bulk temperature only the intrinsic bound exists
        let alone = xi_bounds(&spec, None).unwrap();
        assert!(alone.bulk_bound.is_none());
        assert!(alone.bulk_bound_informative.is_none());
        // the bulk bound grows with the bulk temperature and drops to the
        // intrinsic bound as the bulk plunges
        let mut prev = f64::INFINITY;
        for t_inf in [-1e3, -1e6, -1e9] {
            let v = xi_bounds(&spec, Some(t_inf)).unwrap().bulk_bound.unwrap();
            assert!(v < prev, "bound {v} not below {prev}");
            assert!(v > b.intrinsic_bound);
            prev = v;
        }
        assert!((prev - b.intrinsic_bound).abs() <= 1e-6);
        // solved front coefficient respects every bulk bound
        let xi = 0.59317033743379476;
        let front_erf = erf(xi * (1.0f64 / 7.0).sqrt());
        assert_rel(front_erf, 0.24880411130765995, 1e-13, "front erf");
        for t_inf in [-20.0 - 1e-6, -25.0, -100.0, -1e7] {
            let v = xi_bounds(&spec, Some(t_inf)).unwrap().bulk_bound.unwrap();
            assert!(front_erf < v, "erf {front_erf} not below bound {v} at {t_inf}");
        }
        // an informative bound arises for mild subcooling of a hot slab
        let mild =
            ProblemSpec::new(water_ice(), 30.0, BoundaryCondition::Dirichlet { t_0: -1.0 })
                .unwrap();
        let mb = xi_bounds(&mild, Some(-100.0)).unwrap();
        assert!(mb.bulk_bound.unwrap() < 1.0);
        assert_eq!(mb.bulk_bound_informative, Some(true));
        // errors
        assert!(matches!(xi_bounds(&spec, Some(-20.0)), Err(Error::Domain(_))));
        assert!(matches!(xi_bounds(&spec, Some(-10.0)), Err(Error::Domain(_))));
        assert!(matches!(xi_bounds(&convective_spec(1e4), None), Err(Error::Spec(_))));
    }

    #[test]
    fn forward_roundtrip() {
        let report = roundtrip_check(&dirichlet_spec(), -40.0).unwrap();
        assert_rel(report.xi, 0.59317033743379476, 1e-12, "xi");
        assert_rel(report.mapped_h0, 4761.97165401829, 1e-12, "mapped h0");
        assert!(report.roundtrip_gap <= 1e-10, "gap {}", report.roundtrip_gap);
        // the face value of the mapped problem recovers the original datum
        assert!((report.mapped_t0 + 20.0).abs() <= 1e-8, "t0 {}", report.mapped_t0);
        // fields agree to the documented scale, 1e-9 of (T_i - T_inf)
        assert!(report.field_gap <= 1e-9 * 50.0, "field gap {}", report.field_gap);
        assert!(!report.bulk_bound_informative);
    }

    #[test]
    fn reverse_roundtrip() {
        let report = roundtrip_check_reverse(&convective_spec(1e4)).unwrap();
        assert_rel(report.lambda, 0.46567025197950688, 1e-12, "lambda");
        assert_rel(report.mapped_t0, -12.478674586598985, 1e-12, "mapped t0");
        // the film coefficient comes back
        assert_rel(report.mapped_h0, 1e4, 1e-10, "recovered h0");
        assert!(report.roundtrip_gap <= 1e-10, "gap {}", report.roundtrip_gap);
        assert!(report.field_gap <= 1e-9 * 30.0, "field gap {}", report.field_gap);
        // a film that cannot freeze has no round trip
        assert!(matches!(
            roundtrip_check_reverse(&convective_spec(100.0)),
            Err(Error::Regime(_))
        ));
        assert!(matches!(roundtrip_check(&convective_spec(1e4), -40.0), Err(Error::Spec(_))));
        assert!(matches!(roundtrip_check_reverse(&dirichlet_spec()), Err(Error::Spec(_))));
    }

    #[test]
    fn map_identity_holds_pointwise() {
        let xs: Vec<f64> = (1..=60).map(|i| 0.05 * i as f64).collect();
        let gap = map_identity_gap(&convective_spec(1e4), &xs).unwrap();
        assert!(gap <= 1e-12, "identity gap {gap:e}");
        // the identity is algebraic, so it also holds below the threshold
        let weak = map_identity_gap(&convective_spec(100.0), &xs).unwrap();
        assert!(weak <= 1e-12, "sub-threshold identity gap {weak:e}");
        // errors
        assert!(matches!(map_identity_gap(&convective_spec(1e4), &[0.0]), Err(Error::Domain(_))));
        assert!(matches!(map_identity_gap(&dirichlet_spec(), &xs), Err(Error::Spec(_))));
    }

    #[test]
    fn sweep_is_monotone_and_flags_weak_entries() {
        let template = convective_spec(1e4);
        let crit = model::critical_h0(&template).unwrap();
        let grid: Vec<f64> =
            [0.5, 1.0, 1.001, 2.0, 10.0, 1e3, 1e6].iter().map(|m| m * crit).collect();
        let rows = lambda_sweep(&template, &grid).unwrap();
        assert_eq!(rows.len(), grid.len());
        // weak entries flagged in place
        assert!(rows[0].lambda.is_none() && rows[0].note.is_some());
        assert!(rows[1].lambda.is_none() && rows[1].note.is_some());
        // solved entries strictly increase and carry the face value
        let solved: Vec<f64> = rows[2..].iter().map(|r| r.lambda.unwrap()).collect();
        for pair in solved.windows(2) {
            assert!(pair[0] < pair[1], "not increasing: {pair:?}");
        }
        assert!(solved[0] < 0.05, "near-threshold coefficient {}", solved[0]);
        for row in &rows[2..] {
            let t0 = row.t0_equiv.unwrap();
            assert!(t0 > -20.0 && t0 < 0.0);
        }
        // face values drop toward the bulk as the film strengthens
        let t0s: Vec<f64> = rows[2..].iter().map(|r| r.t0_equiv.unwrap()).collect();
        for pair in t0s.windows(2) {
            assert!(pair[0] > pair[1], "face values not decreasing: {pair:?}");
        }
        // frozen points on the curve
        assert_rel(rows[5].lambda.unwrap(), 0.58998522633147792, 1e-11, "lambda(1e3 crit)");
        assert_rel(rows[6].lambda.unwrap(), 0.59316714438711997, 1e-11, "lambda(1e6 crit)");
        // the strong-film limit is the pinned-face coefficient
        let sup = lambda_supremum(&template).unwrap();
        assert_rel(sup, 0.59317033743379476, 1e-12, "supremum");
        for v in &solved {
            assert!(*v < sup);
        }
        assert!(sup - rows[6].lambda.unwrap() <= 1e-3);
        // invalid grid entries are flagged, not fatal
        let odd = lambda_sweep(&template, &[-5.0, f64::NAN, 2.0 * crit]).unwrap();
        assert!(odd[0].note.is_some() && odd[1].note.is_some());
        assert!(odd[2].lambda.is_some());
        // template must be convective
        assert!(matches!(lambda_sweep(&dirichlet_spec(), &grid), Err(Error::Spec(_))));
        assert!(matches!(lambda_supremum(&dirichlet_spec()), Err(Error::Spec(_))));
    }
}
