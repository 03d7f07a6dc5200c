//! Resolution of the string specs accepted on the command line.

use std::path::Path;

use qcocycle::algebra::FiniteGroup;
use qcocycle::chain::{CochainTable, HomologyCoefficients};
use qcocycle::cocycle::{b1, b2, cup_product, psi_pullback, theta, transfer_d2p, ThetaVariant};
use qcocycle::knot::{builtin, parse_pd, KnotDiagram};
use qcocycle::quandle::{conj_quandle, dihedral_embedding, FiniteQuandle};
use qcocycle::{Error, Result};

fn number(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::InvalidParameter(format!("{what}: {s:?} is not a non-negative integer")))
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))
}

fn read_json(path: &str) -> Result<serde_json::Value> {
    serde_json::from_str(&read_file(path)?).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// `D6` (dihedral of order 6), `S3`, `Z5`.
pub fn group(spec: &str) -> Result<FiniteGroup> {
    let (kind, n) = spec.split_at(spec.len().min(1));
    let n = number(n, "group order")?;
    match kind {
        "D" if n % 2 == 0 => FiniteGroup::dihedral(n / 2),
        "S" => FiniteGroup::symmetric(n),
        "Z" => FiniteGroup::cyclic(n),
        _ => Err(Error::InvalidParameter(format!("unknown group {spec:?}; use D<2p>, S<n> or Z<n>"))),
    }
}

/// A quandle with the group data it came from, when there is some.
pub struct QuandleSpec {
    pub quandle: FiniteQuandle,
    /// (group, embedding of quandle elements into the group)
    pub group: Option<(FiniteGroup, Vec<usize>)>,
}

/// `dihedral:p`, `trivial:m`, `conj:GROUP:label`, `file:path`.
pub fn quandle(spec: &str) -> Result<QuandleSpec> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["dihedral", p] => {
            let p = number(p, "dihedral order")?;
            let group = FiniteGroup::dihedral(p).ok().map(|g| (g, dihedral_embedding(p)));
            Ok(QuandleSpec { quandle: FiniteQuandle::dihedral(p)?, group })
        }
        ["trivial", m] => Ok(QuandleSpec { quandle: FiniteQuandle::trivial(number(m, "trivial order")?)?, group: None }),
        ["conj", g, h] => {
            let g = group(g)?;
            let Some(h) = g.element_by_label(h) else {
                return Err(Error::InvalidParameter(format!("no element {h:?} in {}", g.name())));
            };
            let (q, ctx) = conj_quandle(&g, h)?;
            Ok(QuandleSpec { quandle: q, group: Some((g, ctx.elements)) })
        }
        ["file", ..] => {
            let q = FiniteQuandle::from_json(&read_json(&spec[5..])?)?;
            Ok(QuandleSpec { quandle: q, group: None })
        }
        _ => Err(Error::InvalidParameter(format!(
            "unknown quandle {spec:?}; use dihedral:p, trivial:m, conj:D6:h or file:PATH"
        ))),
    }
}

/// `theta:p`, `theta-odd:p`, `transfer-b1b2:p`, `zero`, `file:path`.
pub fn cocycle(spec: &str, q: &QuandleSpec) -> Result<CochainTable> {
    let parts: Vec<&str> = spec.split(':').collect();
    let m = q.quandle.order();
    let f = match parts.as_slice() {
        ["theta", p] => theta(number(p, "theta modulus")?, ThetaVariant::Double)?,
        ["theta-odd", p] => theta(number(p, "theta modulus")?, ThetaVariant::Single)?,
        ["transfer-b1b2", p] => {
            let p = number(p, "transfer modulus")?;
            let Some((g, emb)) = &q.group else {
                return Err(Error::InvalidParameter("transfer-b1b2 needs a dihedral or conj quandle".into()));
            };
            if g.order() != 2 * p || g.generator("h").is_none() {
                return Err(Error::InvalidParameter(format!("transfer-b1b2:{p} needs a quandle inside D{}", 2 * p)));
            }
            let tr = transfer_d2p(&cup_product(&b1(p)?, &b2(p)?)?.homogeneous()?, p)?;
            psi_pullback(&tr, g, &q.quandle, emb)?
        }
        ["zero"] => CochainTable::zero(
            qcocycle::chain::CochainDomain::Quandle,
            3,
            m,
            qcocycle::algebra::AbelianPresentation::cyclic(m.max(1) as u64),
        )?,
        ["file", ..] => CochainTable::from_json(&read_json(&spec[5..])?)?,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown cocycle {spec:?}; use theta:p, theta-odd:p, transfer-b1b2:p, zero or file:PATH"
            )))
        }
    };
    if f.base() != m {
        return Err(Error::InvalidParameter(format!(
            "cocycle {spec:?} is defined on {} elements but the quandle has {m}",
            f.base()
        )));
    }
    Ok(f)
}

/// `builtin:name`, `torus:p`, a bare built-in name, a file path, or inline PD text.
pub fn diagram(spec: &str) -> Result<KnotDiagram> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin(name);
    }
    if spec.starts_with("torus:") {
        return builtin(spec);
    }
    if Path::new(spec).is_file() {
        return parse_pd(&read_file(spec)?);
    }
    if qcocycle::knot::BUILTIN_NAMES.contains(&spec) {
        return builtin(spec);
    }
    parse_pd(spec)
}

/// `Z` or `F<p>`.
pub fn coefficients(spec: &str) -> Result<HomologyCoefficients> {
    match spec {
        "Z" | "z" => Ok(HomologyCoefficients::Integers),
        _ => match spec.strip_prefix('F').or_else(|| spec.strip_prefix('f')) {
            Some(p) => Ok(HomologyCoefficients::Field(number(p, "field order")? as u64)),
            None => Err(Error::InvalidParameter(format!("unknown coefficients {spec:?}; use Z or F<p>"))),
        },
    }
}

/// `p:q`.
pub fn lens(spec: &str) -> Result<(usize, i64)> {
    let Some((p, q)) = spec.split_once(':') else {
        return Err(Error::InvalidParameter(format!("lens spec {spec:?} must be p:q")));
    };
    let q: i64 = q.trim().parse().map_err(|_| Error::InvalidParameter(format!("lens q: {q:?} is not an integer")))?;
    Ok((number(p, "lens p")?, q))
}
