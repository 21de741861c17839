//! Fixtures and randomized spec generators shared by the integration suites.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use stefan_kit::{model, BoundaryCondition, MaterialProperties, ProblemSpec};

pub fn water_ice() -> MaterialProperties {
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

pub fn dirichlet_fixture() -> ProblemSpec {
    ProblemSpec::new(water_ice(), 10.0, BoundaryCondition::Dirichlet { t_0: -20.0 }).unwrap()
}

pub fn convective_fixture() -> ProblemSpec {
    ProblemSpec::new(
        water_ice(),
        10.0,
        BoundaryCondition::Convective { h_0: 1e4, t_inf: -20.0 },
    )
    .unwrap()
}

/// Random physically plausible material: conductivity drops and heat
/// capacity grows on melting, keeping the diffusivity ratio in [0.04, 1].
pub fn random_material(rng: &mut ChaCha8Rng) -> MaterialProperties {
    let k_s = rng.gen_range(0.5..40.0);
    let c_s = rng.gen_range(800.0..5000.0);
    MaterialProperties {
        rho: rng.gen_range(500.0..3000.0),
        c_s,
        c_l: c_s * rng.gen_range(1.0..2.5),
        k_s,
        k_l: k_s * rng.gen_range(0.1..1.0),
        latent_heat: rng.gen_range(5e4..5e5),
        t_f: rng.gen_range(-10.0..10.0),
    }
}

pub fn random_dirichlet(rng: &mut ChaCha8Rng) -> ProblemSpec {
    let m = random_material(rng);
    let t_i = m.t_f + rng.gen_range(0.5..30.0);
    let t_0 = m.t_f - rng.gen_range(0.5..40.0);
    ProblemSpec::new(m, t_i, BoundaryCondition::Dirichlet { t_0 }).unwrap()
}

/// Random convective spec with the film coefficient placed at a known
/// multiple of the freezing threshold (log10 of the multiple passed in).
pub fn random_convective(rng: &mut ChaCha8Rng, log_mult: f64) -> ProblemSpec {
    let m = random_material(rng);
    let t_i = m.t_f + rng.gen_range(0.5..30.0);
    let t_inf = m.t_f - rng.gen_range(0.5..40.0);
    let probe = ProblemSpec::new(m, t_i, BoundaryCondition::Convective { h_0: 1.0, t_inf }).unwrap();
    let crit = model::critical_h0(&probe).unwrap();
    let h_0 = crit * 10f64.powf(log_mult);
    ProblemSpec::new(m, t_i, BoundaryCondition::Convective { h_0, t_inf }).unwrap()
}
