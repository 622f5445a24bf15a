//! Named diagrams, representations and Seifert matrices that ship with the
//! library.

use crate::coloring::{torus_generator, Coloring, TorusError};
use crate::exact_algebra::{parse_fe, AlgebraError, Fe, Field, FieldRef, Involution, Q};
use crate::knot_diagram::{parse_pd, parse_xrl, DiagramError, KnotDiagram};
use crate::representation::{elliptic_sl2_rep, parse_rep_json, ArcRepresentation, RepError};
use crate::seifert_oracle::{parse_seifert, SeifertError, SeifertMatrix};

pub const TREFOIL_XRL: &str = include_str!("../data/trefoil.xrl");
pub const TREFOIL_PD: &str = include_str!("../data/trefoil.pd");
pub const FIG8_XRL: &str = include_str!("../data/fig8.xrl");
pub const FIG8_PD: &str = include_str!("../data/fig8.pd");
pub const K12A169_XRL: &str = include_str!("../data/12a169.xrl");
pub const CHI5_JSON: &str = include_str!("../data/chi5.json");
pub const TREFOIL_SEIFERT: &str = include_str!("../data/trefoil.seifert");
pub const FIG8_SEIFERT: &str = include_str!("../data/fig8.seifert");

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown builtin {0:?}; try `builtin list`")]
    Unknown(String),
    #[error("bad parameters for {0:?}: {1}")]
    Params(String, String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `(name, description)` for every builtin.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("trefoil", "right-handed trefoil, closure of sigma_1^3 (diagram)"),
        ("trefoil-pd", "trefoil from a PD code (diagram)"),
        ("fig8", "figure-eight knot (diagram)"),
        ("fig8-pd", "figure-eight knot from a PD code (diagram)"),
        ("torus:m,n", "torus knot T(m,n) with n strands and m braid factors (diagram)"),
        ("12a169", "the knot 12a169 (diagram)"),
        ("abelian", "abelianization t (representation)"),
        ("chi5", "3-dimensional induced representation over Q(zeta_5) for 12a169 (representation)"),
        ("fig8-adjoint:s,u", "adjoint of the figure-eight SL2 family; u is the root z of z^2+(s^2+s^-2-1)z+1 (representation)"),
        ("trefoil", "Seifert matrix [[-1,1],[0,-1]] (seifert)"),
        ("fig8", "Seifert matrix [[1,1],[0,-1]] (seifert)"),
    ]
}

fn pair(name: &str, args: &str) -> Result<(i64, i64), BuiltinError> {
    let bad = || BuiltinError::Params(name.into(), "expected two integers m,n".into());
    let (a, b) = args.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// A diagram, plus the representation it implies when the name names one.
pub fn diagram(name: &str) -> Result<(KnotDiagram, Option<String>), BuiltinError> {
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    let d = match head {
        "trefoil" => parse_xrl(TREFOIL_XRL)?.with_name("trefoil"),
        "trefoil-pd" => parse_pd(TREFOIL_PD)?.with_name("trefoil"),
        "fig8" => parse_xrl(FIG8_XRL)?.with_name("fig8"),
        "fig8-pd" => parse_pd(FIG8_PD)?.with_name("fig8"),
        "12a169" => parse_xrl(K12A169_XRL)?.with_name("12a169"),
        "torus" => {
            let (m, n) = pair(name, args)?;
            return Ok((torus_generator(m, n)?.diagram.with_name(&format!("T({m},{n})")), None));
        }
        "fig8-adjoint" => return Ok((parse_xrl(FIG8_XRL)?.with_name("fig8"), Some(name.to_string()))),
        _ => return Err(BuiltinError::Unknown(name.into())),
    };
    Ok((d, None))
}

/// The principal-arc generator when the diagram is a torus builtin.
pub fn torus_coloring(name: &str) -> Result<Option<Coloring>, BuiltinError> {
    match name.split_once(':') {
        Some(("torus", args)) => {
            let (m, n) = pair(name, args)?;
            Ok(Some(torus_generator(m, n)?.generator))
        }
        _ => Ok(None),
    }
}

/// The coefficient field of `fig8-adjoint:s,u`.
pub fn adjoint_field(s: &Q) -> Result<FieldRef, BuiltinError> {
    let c = s * s + (s * s).recip() - Q::from_integer(1.into());
    if c == Q::from_integer(1.into()) {
        return Ok(Field::cyclotomic_fixed(3));
    }
    let disc = &c * &c - Q::from_integer(4.into());
    let is_square = |x: &Q| {
        use num_traits::Signed;
        !x.is_negative() && {
            let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
            &n * &n == *x.numer() && &d * &d == *x.denom()
        }
    };
    if is_square(&disc) {
        return Err(BuiltinError::Params("fig8-adjoint".into(), format!("z^2+({c})z+1 is reducible")));
    }
    Ok(Field::from_modulus(&format!("Q[z]/(z^2+({c})z+1)"), vec![Q::from_integer(1.into()), c, Q::from_integer(1.into())], Involution::Identity)?)
}

/// A representation by name, for the diagram `d`.
pub fn representation(name: &str, d: &KnotDiagram) -> Result<ArcRepresentation, BuiltinError> {
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "abelian" => Ok(ArcRepresentation::abelian(d, &Field::rationals())),
        "chi5" => Ok(parse_rep_json(CHI5_JSON, d)?.2),
        "fig8-adjoint" => {
            let (s, u) = args.split_once(',').unwrap_or((args, "z"));
            let s = if s.trim().is_empty() { "1" } else { s.trim() };
            let sq: Q = s.parse().map_err(|_| BuiltinError::Params(name.into(), format!("s = {s:?} is not rational")))?;
            if sq == Q::from_integer(0.into()) {
                return Err(BuiltinError::Params(name.into(), "s must be nonzero".into()));
            }
            if !matches!(u.trim(), "z" | "u" | "zeta3" | "zeta_3") {
                return Err(BuiltinError::Params(name.into(), format!("u = {u:?}; u is always the generator z")));
            }
            let f = adjoint_field(&sq)?;
            let s_fe: Fe = parse_fe(&f, s)?;
            let rep = elliptic_sl2_rep(d, &s_fe, &Fe::gen(&f), ("A", "B"))?;
            rep.adjoint().ok_or_else(|| BuiltinError::Params(name.into(), "no SL2 data".into()))
        }
        _ => Err(BuiltinError::Unknown(name.into())),
    }
}

pub fn seifert(name: &str) -> Result<SeifertMatrix, BuiltinError> {
    match name {
        "trefoil" => Ok(parse_seifert(TREFOIL_SEIFERT)?),
        "fig8" => Ok(parse_seifert(FIG8_SEIFERT)?),
        _ => Err(BuiltinError::Unknown(name.into())),
    }
}
