//! Problem data: material constants, face conditions, JSON ingestion, and
//! the dimensionless groups the front equations are written in.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Material constants of one freezing substance, SI units throughout.
/// `_s` fields describe the solid phase, `_l` the liquid phase; density is
/// common to both (the model has no density jump).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaterialProperties {
    /// density, kg/m^3
    pub rho: f64,
    /// solid specific heat, J/(kg K)
    pub c_s: f64,
    /// liquid specific heat, J/(kg K)
    pub c_l: f64,
    /// solid conductivity, W/(m K)
    pub k_s: f64,
    /// liquid conductivity, W/(m K)
    pub k_l: f64,
    /// latent heat of fusion, J/kg
    pub latent_heat: f64,
    /// freezing temperature
    pub t_f: f64,
}

impl MaterialProperties {
    /// Solid thermal diffusivity k_s/(rho c_s), m^2/s.
    pub fn alpha_s(&self) -> f64 {
        self.k_s / (self.rho * self.c_s)
    }

    /// Liquid thermal diffusivity k_l/(rho c_l), m^2/s.
    pub fn alpha_l(&self) -> f64 {
        self.k_l / (self.rho * self.c_l)
    }

    fn validate(&self) -> Result<(), Error> {
        let positives = [
            (self.rho, "rho"),
            (self.c_s, "c_s"),
            (self.c_l, "c_l"),
            (self.k_s, "k_s"),
            (self.k_l, "k_l"),
            (self.latent_heat, "latent_heat"),
        ];
        for (v, name) in positives {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Material(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !self.t_f.is_finite() {
            return Err(Error::Material(format!("T_f must be finite, got {}", self.t_f)));
        }
        Ok(())
    }
}

/// Condition at the face x = 0.
///
/// The convective variant models a film whose coefficient decays like
/// `h_0/sqrt(t)`; that is the only decay law that keeps the problem
/// self-similar. The flux variant (`q_0/sqrt(t)` imposed) is accepted as
/// data and validated, but no solver consumes it here; the solved problems
/// report the flux coefficient their solution induces instead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum BoundaryCondition {
    /// imposed face temperature T_0 < T_f
    Dirichlet {
        t_0: f64,
    },
    /// heat exchange h_0/sqrt(t) * (T(0,t) - T_inf) with ambient T_inf < T_f;
    /// h_0 carries kg K^-1 s^(-5/2)
    Convective {
        h_0: f64,
        t_inf: f64,
    },
    /// imposed face heat flux q_0/sqrt(t), q_0 in kg s^(-5/2)
    Flux {
        q_0: f64,
    },
}

/// A complete problem statement: material, initial liquid temperature
/// `t_i >= T_f`, and a face condition. Build with [`ProblemSpec::new`] or
/// one of the JSON constructors so the data is validated once, up front.
///
/// `t_i = T_f` is the no-superheat limit: the liquid starts at the freezing
/// point, the liquid-side group `b3` vanishes, and any positive film
/// coefficient freezes the slab.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProblemSpec {
    pub material: MaterialProperties,
    /// initial (and far-field) liquid temperature
    pub t_i: f64,
    pub bc: BoundaryCondition,
}

impl ProblemSpec {
    pub fn new(
        material: MaterialProperties,
        t_i: f64,
        bc: BoundaryCondition,
    ) -> Result<Self, Error> {
        material.validate()?;
        if !t_i.is_finite() || t_i < material.t_f {
            return Err(Error::Spec(format!(
                "T_i must be finite and >= T_f = {}, got {t_i}",
                material.t_f
            )));
        }
        match bc {
            BoundaryCondition::Dirichlet { t_0 } => {
                if !t_0.is_finite() || t_0 >= material.t_f {
                    return Err(Error::Spec(format!(
                        "Dirichlet face temperature must be finite and < T_f = {}, got {t_0} \
                         (no solidification starts otherwise)",
                        material.t_f
                    )));
                }
            }
            BoundaryCondition::Convective { h_0, t_inf } => {
                if !h_0.is_finite() || h_0 <= 0.0 {
                    return Err(Error::Spec(format!("h_0 must be finite and > 0, got {h_0}")));
                }
                if !t_inf.is_finite() || t_inf >= material.t_f {
                    return Err(Error::Spec(format!(
                        "ambient T_inf must be finite and < T_f = {}, got {t_inf}",
                        material.t_f
                    )));
                }
            }
            BoundaryCondition::Flux { q_0 } => {
                if !q_0.is_finite() || q_0 <= 0.0 {
                    return Err(Error::Spec(format!("q_0 must be finite and > 0, got {q_0}")));
                }
            }
        }
        Ok(Self { material, t_i, bc })
    }

    /// Parse a flat JSON spec document. Keys: `rho`, `c_s`, `c_l`, `k_s`,
    /// `k_l`, `latent_heat`, `T_f`, `T_i`, plus exactly one face condition:
    /// `T_0`, or `h_0` with `T_inf`, or `q_0`. Unknown keys are rejected.
    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        let file: SpecFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.into_spec()
    }

    /// [`ProblemSpec::from_json_str`] applied to a file's contents.
    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    rho: f64,
    c_s: f64,
    c_l: f64,
    k_s: f64,
    k_l: f64,
    latent_heat: f64,
    #[serde(rename = "T_f")]
    t_f: f64,
    #[serde(rename = "T_i")]
    t_i: f64,
    #[serde(rename = "T_0")]
    t_0: Option<f64>,
    #[serde(rename = "h_0")]
    h_0: Option<f64>,
    #[serde(rename = "T_inf")]
    t_inf: Option<f64>,
    #[serde(rename = "q_0")]
    q_0: Option<f64>,
}

impl SpecFile {
    fn into_spec(self) -> Result<ProblemSpec, Error> {
        let material = MaterialProperties {
            rho: self.rho,
            c_s: self.c_s,
            c_l: self.c_l,
            k_s: self.k_s,
            k_l: self.k_l,
            latent_heat: self.latent_heat,
            t_f: self.t_f,
        };
        let bc = match (self.t_0, self.h_0, self.t_inf, self.q_0) {
            (Some(t_0), None, None, None) => BoundaryCondition::Dirichlet { t_0 },
            (None, Some(h_0), Some(t_inf), None) => BoundaryCondition::Convective { h_0, t_inf },
            (None, None, None, Some(q_0)) => BoundaryCondition::Flux { q_0 },
            (None, Some(_), None, None) | (None, None, Some(_), None) => {
                return Err(Error::Parse(
                    "convective condition needs both h_0 and T_inf".into(),
                ))
            }
            (None, None, None, None) => {
                return Err(Error::Parse(
                    "missing face condition: provide T_0, or h_0 with T_inf, or q_0".into(),
                ))
            }
            _ => {
                return Err(Error::Parse(
                    "conflicting face conditions: provide exactly one of T_0, (h_0, T_inf), q_0"
                        .into(),
                ))
            }
        };
        ProblemSpec::new(material, self.t_i, bc)
    }
}

/// Coefficients of the front equations. `b`, `b3`, `ste` exist for every
/// spec; `b4` only under an imposed face temperature; `b1`, `b2`, `biot`,
/// `theta_inf` only under a convective condition.
///
/// In the no-superheat limit `T_i = T_f`: `b3 = ste = 0` and `theta_inf`
/// is +inf (its defining ratio diverges).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DimensionlessGroups {
    /// diffusivity ratio alpha_l / alpha_s
    pub b: f64,
    /// liquid superheat group c_l (T_i - T_f) / (latent_heat sqrt(pi))
    pub b3: f64,
    /// Stefan number c_s (T_i - T_f) / latent_heat
    pub ste: f64,
    /// solid subcooling group k_s (T_f - T_0) / (rho latent_heat sqrt(pi alpha_s alpha_l))
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b4: Option<f64>,
    /// film strength h_0 (T_f - T_inf) / (rho latent_heat sqrt(alpha_l))
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b1: Option<f64>,
    /// film/conduction ratio (h_0 / k_s) sqrt(pi alpha_s)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b2: Option<f64>,
    /// Biot-like group h_0 sqrt(alpha_s) / k_s = b2 / sqrt(pi)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub biot: Option<f64>,
    /// ambient subcooling ratio (T_f - T_inf) / (T_i - T_f)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_inf: Option<f64>,
}

fn base_groups(spec: &ProblemSpec) -> DimensionlessGroups {
    let m = &spec.material;
    let superheat = spec.t_i - m.t_f;
    DimensionlessGroups {
        b: m.alpha_l() / m.alpha_s(),
        b3: m.c_l * superheat / (m.latent_heat * PI_SQRT),
        ste: m.c_s * superheat / m.latent_heat,
        b4: None,
        b1: None,
        b2: None,
        biot: None,
        theta_inf: None,
    }
}

const PI_SQRT: f64 = 1.772_453_850_905_516; // sqrt(pi)

/// Groups of the imposed-face-temperature problem. Errors unless the spec's
/// face condition is `Dirichlet`.
pub fn dirichlet_groups(spec: &ProblemSpec) -> Result<DimensionlessGroups, Error> {
    let BoundaryCondition::Dirichlet { t_0 } = spec.bc else {
        return Err(Error::Spec(
            "spec does not carry an imposed face temperature".into(),
        ));
    };
    let m = &spec.material;
    let mut g = base_groups(spec);
    g.b4 = Some(
        m.k_s * (m.t_f - t_0) / (m.rho * m.latent_heat * (PI * m.alpha_s() * m.alpha_l()).sqrt()),
    );
    Ok(g)
}

const PI: f64 = std::f64::consts::PI;

/// Groups of the convective problem. Errors unless the face condition is
/// `Convective`.
pub fn convective_groups(spec: &ProblemSpec) -> Result<DimensionlessGroups, Error> {
    let BoundaryCondition::Convective { h_0, t_inf } = spec.bc else {
        return Err(Error::Spec("spec does not carry a convective condition".into()));
    };
    let m = &spec.material;
    let mut g = base_groups(spec);
    let subcooling = m.t_f - t_inf;
    g.b1 = Some(h_0 * subcooling / (m.rho * m.latent_heat * m.alpha_l().sqrt()));
    g.b2 = Some(h_0 / m.k_s * (PI * m.alpha_s()).sqrt());
    g.biot = Some(h_0 * m.alpha_s().sqrt() / m.k_s);
    g.theta_inf = Some(subcooling / (spec.t_i - m.t_f));
    Ok(g)
}

/// Critical film coefficient: solidification occurs iff `h_0` exceeds
/// `(k_l / sqrt(pi alpha_l)) (T_i - T_f) / (T_f - T_inf)`. Zero in the
/// no-superheat limit `T_i = T_f` (any film freezes the slab then).
pub fn critical_h0(spec: &ProblemSpec) -> Result<f64, Error> {
    let BoundaryCondition::Convective { t_inf, .. } = spec.bc else {
        return Err(Error::Spec("critical film coefficient needs a convective spec".into()));
    };
    let m = &spec.material;
    Ok(m.k_l / (PI * m.alpha_l()).sqrt() * (spec.t_i - m.t_f) / (m.t_f - t_inf))
}
